"""Formations as membership predicates with declared closure flags.

Saturation and superradicality are trusted metadata, never computed; the
residual operation verifies its own postcondition and loudly rejects
predicates that fail to behave like formations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import lattice as _lattice
from . import reports
from .permgroup import (
    FiniteGroup,
    GroupError,
    GroupLike,
    SubgroupRef,
    _as_subgroup,
    derived_subgroup,
    is_abelian,
    is_nilpotent,
    is_soluble,
    quotient,
)


class FormationVerificationError(GroupError):
    """The residual postcondition failed: the predicate is not formation-closed."""


@dataclass(frozen=True)
class Formation:
    """A named isomorphism-invariant group class with declared closure flags."""

    name: str
    description: str
    membership: Callable[[SubgroupRef], bool]
    subgroup_closed: bool = False
    saturated: bool = False
    superradical: bool = False
    contains_nilpotents: bool = False

    def contains(self, G: GroupLike) -> bool:
        sub = _as_subgroup(G)
        cache = sub.parent._op_cache.setdefault("formation_member", {})
        key = (sub.members, self.name)
        got = cache.get(key)
        if got is None:
            got = bool(self.membership(sub))
            cache[key] = got
        return got

    def __repr__(self) -> str:
        return f"<Formation {self.name}>"


def contains(F: Formation, G: GroupLike) -> bool:
    return F.contains(G)


def _member_abelian(sub: SubgroupRef) -> bool:
    return is_abelian(sub)


def _member_nilpotent(sub: SubgroupRef) -> bool:
    return is_nilpotent(sub)


def _member_supersoluble(sub: SubgroupRef) -> bool:
    return _lattice.is_supersoluble(sub)


def _member_nilpotent_derived(sub: SubgroupRef) -> bool:
    return is_nilpotent(derived_subgroup(sub))


def _member_soluble(sub: SubgroupRef) -> bool:
    return is_soluble(sub)


ABELIAN = Formation(
    name="A",
    description="abelian groups",
    membership=_member_abelian,
    subgroup_closed=True,
    saturated=False,  # Q8/Phi(Q8) is abelian, Q8 is not
    superradical=False,
    contains_nilpotents=False,
)

NILPOTENT = Formation(
    name="N",
    description="nilpotent groups",
    membership=_member_nilpotent,
    subgroup_closed=True,
    saturated=True,
    superradical=True,
    contains_nilpotents=True,
)

SUPERSOLUBLE = Formation(
    name="U",
    description="supersoluble groups",
    membership=_member_supersoluble,
    subgroup_closed=True,
    saturated=True,
    superradical=False,
    contains_nilpotents=True,
)

NILPOTENT_DERIVED = Formation(
    name="NA",
    description="groups with nilpotent derived subgroup",
    membership=_member_nilpotent_derived,
    subgroup_closed=True,
    saturated=True,
    superradical=False,
    contains_nilpotents=True,
)

SOLUBLE = Formation(
    name="Sol",
    description="soluble groups",
    membership=_member_soluble,
    subgroup_closed=True,
    saturated=True,
    superradical=False,
    contains_nilpotents=True,
)

BUILT_IN: dict[str, Formation] = {
    F.name: F for F in (ABELIAN, NILPOTENT, SUPERSOLUBLE, NILPOTENT_DERIVED, SOLUBLE)
}


def formation_by_name(name: str) -> Formation:
    try:
        return BUILT_IN[name]
    except KeyError:
        raise GroupError(
            f"unknown formation {name!r}; available: {', '.join(sorted(BUILT_IN))}"
        ) from None


def quotient_in(F: Formation, K: SubgroupRef, N: SubgroupRef) -> bool:
    """Whether K/N lies in F, with the verdict cached per (K, N, F)."""
    parent = K.parent
    cache = parent._op_cache.setdefault("quotient_in", {})
    key = (K.members, N.members, F.name)
    got = cache.get(key)
    if got is None:
        hom = quotient(K, N)
        got = F.contains(hom.image)
        cache[key] = got
    return got


def residual(F: Formation, G: GroupLike) -> SubgroupRef:
    """Smallest normal subgroup with quotient in F, postcondition verified.

    Scans normal subgroups in ascending order; anything above a known member
    of the family is a member by quotient closure (trusted formation
    metadata), so only the genuinely new candidates build quotients. A final
    honest check of G/R guards against predicates that are not actually
    formation-closed.
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    cache = parent._op_cache.setdefault("residual", {})
    key = (sub.members, F.name)
    got = cache.get(key)
    if got is not None:
        return got
    normals = _lattice.normal_subgroups(sub)
    passes: list[SubgroupRef] = []
    for N in normals:  # ascending (order, members)
        if any(P.members <= N.members for P in passes):
            continue
        if quotient_in(F, sub, N):
            passes.append(N)
    if not passes:
        raise FormationVerificationError(
            f"{F.name}: no normal subgroup has quotient in the class "
            "(the trivial quotient should always qualify)"
        )
    members = sub.members
    for P in passes:
        members = members & P.members
    R = SubgroupRef(parent, members)
    if not quotient_in(F, sub, R):
        raise FormationVerificationError(
            f"{F.name} is not intersection-stable on this group: "
            "the intersection of qualifying kernels does not qualify"
        )
    # ascending scan + skip rule already guarantee nothing smaller qualifies
    cache[key] = R
    return R


def verify_formation_closure(
    F: Formation, catalog: Sequence[FiniteGroup]
) -> reports.VerdictReport:
    """Empirical guard for the declared closure flags over a catalog.

    Checks quotient closure, residual well-definedness (intersection
    stability), and subgroup closure where flagged. Violations land in the
    report rather than raising.
    """
    report = reports.VerdictReport(kind="formation-closure", formation=F.name)
    for G in catalog:
        gname = G.name or f"order{G.order}"
        normals = _lattice.normal_subgroups(G)
        in_f = F.contains(G)
        if in_f:
            bad = [
                N
                for N in normals
                if not quotient_in(F, G.as_subgroup(), N)
            ]
            if bad:
                report.add(
                    "quotient-closure",
                    reports.FAIL,
                    {"group": gname},
                    [reports.subgroup_witness(N) for N in bad],
                )
            else:
                report.add("quotient-closure", reports.PASS, {"group": gname})
        qualifying = [N for N in normals if quotient_in(F, G.as_subgroup(), N)]
        stable = True
        witnesses = []
        for i, N in enumerate(qualifying):
            for M in qualifying[i + 1 :]:
                meet = SubgroupRef(G, N.members & M.members)
                if not quotient_in(F, G.as_subgroup(), meet):
                    stable = False
                    witnesses.append(
                        {
                            "first": reports.subgroup_witness(N),
                            "second": reports.subgroup_witness(M),
                        }
                    )
        report.add(
            "residual-well-defined",
            reports.PASS if stable else reports.FAIL,
            {"group": gname},
            witnesses,
        )
        if F.subgroup_closed and in_f:
            bad_subs = []
            try:
                lat = _lattice.all_subgroups(G)
            except _lattice.LatticeBudgetError:
                report.add("subgroup-closure", reports.SKIP, {"group": gname, "reason": "budget"})
            else:
                for cls in lat.conjugacy_classes:
                    H = lat.nodes[cls[0]]
                    if not F.contains(H):
                        bad_subs.append(H)
                report.add(
                    "subgroup-closure",
                    reports.PASS if not bad_subs else reports.FAIL,
                    {"group": gname},
                    [reports.subgroup_witness(H) for H in bad_subs],
                )
    return report
