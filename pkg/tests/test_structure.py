"""Structure finders and the theorem/corollary/lemma checkers."""

from __future__ import annotations

import pytest

from groupforms import catalog, structure
from groupforms.formations import NILPOTENT, NILPOTENT_DERIVED
from groupforms.permgroup import GroupError


def test_primary_cyclic_subgroups():
    assert structure.primary_cyclic_subgroups(catalog.cyclic(1)) == []
    s3 = catalog.symmetric(3)
    got = structure.primary_cyclic_subgroups(s3)
    assert sorted(h.order for h in got) == [2, 2, 2, 3]
    c6 = catalog.cyclic(6)
    assert sorted(h.order for h in structure.primary_cyclic_subgroups(c6)) == [2, 3]


def test_carter_subgroups():
    q8 = catalog.dicyclic(2)
    assert [c.order for c in structure.carter_subgroups(q8)] == [8]
    s3 = catalog.symmetric(3)
    assert [c.order for c in structure.carter_subgroups(s3)] == [2, 2, 2]
    a4 = catalog.alternating(4)
    assert [c.order for c in structure.carter_subgroups(a4)] == [3, 3, 3, 3]
    assert structure.carter_subgroups(catalog.alternating(5)) == []


def test_minimal_non_f_and_schmidt():
    assert not structure.is_minimal_non_f(catalog.cyclic(6), NILPOTENT)
    assert structure.is_schmidt(catalog.symmetric(3))
    assert structure.is_schmidt(catalog.alternating(4))
    assert not structure.is_schmidt(catalog.symmetric(4))
    assert structure.is_schmidt(catalog.schmidt_2_4_5())
    assert structure.is_schmidt(catalog.schmidt_5_5_3())


def test_schmidt_shape(catalog120):
    # every recognized Schmidt group: two primes, a normal Sylow subgroup
    from groupforms.permgroup import normalizer, prime_divisors, sylow_subgroup

    found = 0
    for g in catalog120:
        if g.order > 100 or not structure.is_schmidt(g):
            continue
        found += 1
        primes = sorted(prime_divisors(g))
        assert len(primes) == 2
        assert any(
            normalizer(g, sylow_subgroup(g, p)).order == g.order for p in primes
        )
    assert found >= 5


def test_ef_group_examples():
    assert structure.is_ef_group(catalog.symmetric(3), NILPOTENT)
    assert structure.is_ef_group(catalog.alternating(4), NILPOTENT)
    assert not structure.is_ef_group(catalog.symmetric(4), NILPOTENT)
    assert not structure.is_ef_group(catalog.cyclic(6), NILPOTENT)  # lies in N


def test_theorem1_examples():
    v = structure.check_theorem1(catalog.symmetric(3), NILPOTENT)
    assert v.statements == {"S1": True, "S2": True, "S3": True}
    assert v.equivalence
    v = structure.check_theorem1(catalog.alternating(4), NILPOTENT)
    assert v.statements == {"S1": True, "S2": True, "S3": True}
    v = structure.check_theorem1(catalog.frobenius(5, 4), NILPOTENT)
    assert v.statements == {"S1": False, "S2": False, "S3": False}
    assert v.equivalence  # all-false is still equivalent


def test_theorem1_hypothesis_gates():
    v = structure.check_theorem1(catalog.cyclic(6), NILPOTENT)
    assert not v.hypothesis_ok
    v = structure.check_theorem1(catalog.alternating(5), NILPOTENT)
    assert not v.hypothesis_ok
    v = structure.check_theorem1(catalog.symmetric(4), NILPOTENT_DERIVED)
    assert v.hypothesis_ok  # S4 is soluble and outside NA
    assert "empirical" in v.hypothesis_status  # NA is not flagged superradical


def test_theorem2_examples():
    v = structure.check_theorem2(catalog.alternating(4), NILPOTENT)
    assert v.statements == {"left": True, "right": True}
    v = structure.check_theorem2(catalog.symmetric(3), NILPOTENT)
    assert v.statements == {"left": True, "right": True}
    v = structure.check_theorem2(catalog.special_linear_2_3(), NILPOTENT)
    assert v.statements == {"left": False, "right": False}
    assert v.equivalence


def test_corollary1_examples():
    v = structure.check_corollary1(catalog.symmetric(3), NILPOTENT)
    assert v.hypothesis_ok and v.equivalence
    assert v.details["carter_order"] == 2
    v = structure.check_corollary1(catalog.alternating(4), NILPOTENT)
    assert v.hypothesis_ok and v.equivalence
    assert v.details["carter_order"] == 3
    v = structure.check_corollary1(catalog.cyclic(5), NILPOTENT)
    assert not v.hypothesis_ok


def test_corollary2_examples():
    v = structure.check_corollary2(catalog.symmetric(3), NILPOTENT)
    assert v.hypothesis_ok and v.equivalence
    v = structure.check_corollary2(catalog.alternating(4), NILPOTENT)
    assert v.equivalence
    v = structure.check_corollary2(catalog.frobenius(5, 4), NILPOTENT)
    assert v.equivalence  # all three false for F20


def test_lemma_suite_report_shape(small_groups):
    rep = structure.check_lemma_suite(small_groups[:6], NILPOTENT, lemmas=("4", "5"))
    assert rep.summary()["fail"] == 0
    assert len(rep.checks) == 12


def test_verify_paper_example_order_gate():
    with pytest.raises(GroupError):
        structure.verify_paper_example(catalog.symmetric(4))


def test_theorem1_on_example864(g864):
    v = structure.check_theorem1(g864, NILPOTENT_DERIVED)
    assert v.hypothesis_ok
    assert "empirical" in v.hypothesis_status
    assert v.statements["S1"] is True
    # over all primary (prime-power) subgroups the subnormal-or-abnormal class
    # membership fails, matching the worked example's negative claim
    assert v.details["primary_sn_or_abnormal"] is False
    # the subnormal-or-self-normalizing membership fails on the same twelve
    # witnesses as the proper-Sylow-2-subgroup claim (see the example checker)
    assert v.details["primary_sn_or_selfnormalizing"] is False
    # no cyclic Sylow complement at order 864: S3 is honestly false here,
    # consistent with the formation not being superradical (empirical status)
    assert v.statements["S3"] is False
    assert "s2_skipped" in v.details
