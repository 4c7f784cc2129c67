"""Shared fixtures: the session catalog (caches warm across tests) and the
acceptance-criteria summary printed at the end of the run."""

from __future__ import annotations

import pytest

from groupforms import catalog as _catalog

ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def record_criterion(name: str, ok: bool, note: str = "") -> None:
    ACCEPTANCE_RESULTS.append((name, "PASS" if ok else "FAIL", note))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, status, note in ACCEPTANCE_RESULTS:
            line = f"{status:4s}  {name}"
            if note:
                line += f"  [{note}]"
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def catalog120():
    return _catalog.catalog_groups(120)


@pytest.fixture(scope="session")
def g864():
    return _catalog.load_example864()


@pytest.fixture(scope="session")
def small_groups(catalog120):
    return [g for g in catalog120 if g.order <= 24]
