"""Test-side oracles, independent of the production search strategies."""

from __future__ import annotations

from groupforms import lattice as lat
from groupforms.formations import Formation, quotient_in
from groupforms.permgroup import FiniteGroup, SubgroupRef, core


def oracle_f_subnormal(G: FiniteGroup, H: SubgroupRef, F: Formation) -> bool:
    """Pruning-free chain search: depth-first over raw minimal-overgroup steps,
    testing each step quotient directly. Exponential-ish; small groups only."""
    whole = G.whole()
    dead: set[frozenset] = set()

    def ascend(K: SubgroupRef) -> bool:
        if K.members == whole:
            return True
        if K.members in dead:
            return False
        for L in lat.minimal_overgroups(G, K, within=whole):
            if quotient_in(F, L, core(L, K)) and ascend(L):
                return True
        dead.add(K.members)
        return False

    return ascend(H)


def oracle_f_abnormal(G: FiniteGroup, H: SubgroupRef, F: Formation) -> bool:
    """Direct quantifier scan over all pairs H <= K maximal-in L <= G."""
    whole = G.whole()
    for K in lat.interval(G, H):
        for L in lat.minimal_overgroups(G, K, within=whole):
            if quotient_in(F, L, core(L, K)):
                return False
    return True


def subgroup_refs(G: FiniteGroup) -> list[SubgroupRef]:
    return [SubgroupRef(G, s) for s in lat.subgroup_sets(G)]
