"""Subgroup enumeration: full lattices, normal subgroups, intervals.

Two tiers, per the order-864 workload: complete lattices are only built for
groups (or subgroups) whose order is within the lattice budget; everything a
chain predicate needs above a fixed subgroup H goes through minimal-overgroup
and interval enumeration, which stays feasible well past the budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .permgroup import (
    FiniteGroup,
    GroupBudgetError,
    GroupError,
    GroupLike,
    SubgroupRef,
    _as_subgroup,
    is_prime,
    prime_factorization,
)

DEFAULT_LATTICE_BUDGET = 400


class LatticeBudgetError(GroupBudgetError):
    """Full-lattice enumeration was requested beyond the configured budget."""


def subgroup_sets(G: GroupLike, lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> list[frozenset[int]]:
    """All subgroups of the (sub)group as member sets, canonically sorted.

    Join closure of the cyclic subgroups: every subgroup is the join of its
    cyclic subgroups, so iterating one-cyclic joins from the bottom reaches
    everything.
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    if sub.order > lattice_budget:
        raise LatticeBudgetError(
            f"subgroup enumeration for order {sub.order} exceeds lattice budget {lattice_budget}"
        )
    cache = parent._op_cache.setdefault("sub_sets", {})
    got = cache.get(sub.members)
    if got is not None:
        return got
    trivial = frozenset((parent.identity,))
    cyclics: dict[frozenset[int], int] = {}
    for x in sub.sorted_members:
        if x == parent.identity:
            continue
        c = parent.closure([x])
        if c not in cyclics:
            cyclics[c] = x
    found: set[frozenset[int]] = {trivial} | set(cyclics)
    work = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    cyclic_items = sorted(cyclics.items(), key=lambda kv: (len(kv[0]), kv[1]))
    while work:
        current = work.pop()
        gens = parent.greedy_generators(current)
        for cyc, seed in cyclic_items:
            if seed in current:
                continue
            join = parent.closure(list(gens) + [seed])
            if join not in found:
                found.add(join)
                work.append(join)
    result = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    cache[sub.members] = result
    return result


@dataclass(frozen=True)
class SubgroupLattice:
    """Complete subgroup lattice with maximality edges and conjugacy classes."""

    parent: FiniteGroup
    top: frozenset[int]
    nodes: tuple[SubgroupRef, ...]
    edges: tuple[tuple[int, int], ...]  # (i, j): node i is maximal in node j
    conjugacy_classes: tuple[tuple[int, ...], ...]

    def node_index(self, members: frozenset[int]) -> int:
        return self._by_members()[members]

    def _by_members(self) -> dict[frozenset[int], int]:
        cache = self.parent._op_cache.setdefault("lattice_index", {})
        got = cache.get(self.top)
        if got is None:
            got = {ref.members: i for i, ref in enumerate(self.nodes)}
            cache[self.top] = got
        return got

    def maximal_in(self, members: frozenset[int]) -> list[SubgroupRef]:
        j = self.node_index(members)
        return [self.nodes[i] for i, jj in self.edges if jj == j]


def all_subgroups(G: GroupLike, lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> SubgroupLattice:
    sub = _as_subgroup(G)
    parent = sub.parent
    cache = parent._op_cache.setdefault("lattice", {})
    got = cache.get(sub.members)
    if got is not None:
        return got
    sets = subgroup_sets(sub, lattice_budget)
    nodes = tuple(SubgroupRef(parent, s) for s in sets)
    by_members = {ref.members: i for i, ref in enumerate(nodes)}
    edges: list[tuple[int, int]] = []
    for i, ref in enumerate(nodes):
        for over in minimal_overgroups(sub, ref, within=sub.members):
            edges.append((i, by_members[over.members]))
    classes = _conjugacy_classes_of_sets(parent, [ref.members for ref in nodes], sub.members)
    lat = SubgroupLattice(
        parent=parent,
        top=sub.members,
        nodes=nodes,
        edges=tuple(sorted(edges)),
        conjugacy_classes=classes,
    )
    cache[sub.members] = lat
    return lat


def _conjugacy_classes_of_sets(
    parent: FiniteGroup, sets: list[frozenset[int]], ambient: frozenset[int]
) -> tuple[tuple[int, ...], ...]:
    index = {s: i for i, s in enumerate(sets)}
    seen = [False] * len(sets)
    classes = []
    gens = parent.greedy_generators(ambient)
    for i, s in enumerate(sets):
        if seen[i]:
            continue
        orbit = {i}
        work = [s]
        seen[i] = True
        while work:
            cur = work.pop()
            for g in gens:
                img = parent.conjugate_set(cur, g)
                j = index.get(img)
                if j is not None and not seen[j]:
                    seen[j] = True
                    orbit.add(j)
                    work.append(img)
        classes.append(tuple(sorted(orbit)))
    return tuple(classes)


def conjugacy_class_reps(lat: SubgroupLattice) -> list[SubgroupRef]:
    """One node per conjugacy class, the canonically least one."""
    return [lat.nodes[cls[0]] for cls in lat.conjugacy_classes]


def subgroup_orbit(parent: FiniteGroup, members: frozenset[int], under: frozenset[int]) -> list[frozenset[int]]:
    """Orbit of a subgroup under conjugation by a subgroup's elements."""
    gens = parent.greedy_generators(under)
    orbit = {members}
    work = [members]
    while work:
        cur = work.pop()
        for g in gens:
            img = parent.conjugate_set(cur, g)
            if img not in orbit:
                orbit.add(img)
                work.append(img)
    return sorted(orbit, key=lambda s: tuple(sorted(s)))


def orbit_reps_under(
    parent: FiniteGroup, sets: Iterable[frozenset[int]], under: frozenset[int]
) -> list[frozenset[int]]:
    """Orbit representatives (canonically least) of subgroup sets under conjugation."""
    remaining = set(sets)
    reps = []
    for s in sorted(remaining, key=lambda s: (len(s), tuple(sorted(s)))):
        if s not in remaining:
            continue
        reps.append(s)
        for img in subgroup_orbit(parent, s, under):
            remaining.discard(img)
    return reps


def normal_subgroups(G: GroupLike) -> list[SubgroupRef]:
    """All normal subgroups, via closure of conjugacy-class unions."""
    sub = _as_subgroup(G)
    parent = sub.parent
    cache = parent._op_cache.setdefault("normals", {})
    got = cache.get(sub.members)
    if got is not None:
        return got
    if sub.is_whole():
        classes = parent.conjugacy_classes()
    else:
        grp_gens = parent.greedy_generators(sub.members)
        seen = set()
        classes = []
        for x in sub.sorted_members:
            if x in seen:
                continue
            orbit = {x}
            work = [x]
            while work:
                y = work.pop()
                for g in grp_gens:
                    z = parent.conj(y, g)
                    if z not in orbit:
                        orbit.add(z)
                        work.append(z)
            seen |= orbit
            classes.append(tuple(sorted(orbit)))
    trivial = frozenset((parent.identity,))
    found = {trivial}
    work = [trivial]
    class_list = [c for c in classes if not (len(c) == 1 and c[0] == parent.identity)]
    while work:
        N = work.pop()
        n_gens = parent.greedy_generators(N)
        for cls in class_list:
            if cls[0] in N:
                continue
            bigger = parent.closure(list(n_gens) + list(cls))
            if bigger not in found:
                found.add(bigger)
                work.append(bigger)
    result = [SubgroupRef(parent, s) for s in sorted(found, key=lambda s: (len(s), tuple(sorted(s))))]
    cache[sub.members] = result
    return result


def minimal_overgroups(
    G: GroupLike, H: SubgroupRef, within: Optional[frozenset[int]] = None
) -> list[SubgroupRef]:
    """All K with H maximal in K (inside ``within``, default the whole group).

    Minimal elements of {<H, g> : g outside H}; one join per H-coset suffices.
    """
    sub = _as_subgroup(G)
    parent = sub.parent
    top = within if within is not None else sub.members
    if not H.members <= top:
        raise GroupError("H must be contained in the search space")
    cache = parent._op_cache.setdefault("min_over", {})
    key = (H.members, top)
    got = cache.get(key)
    if got is not None:
        return got
    h_gens = list(parent.greedy_generators(H.members))
    candidates: dict[frozenset[int], None] = {}
    covered: set[int] = set(H.members)
    t = parent._table
    for g in sorted(top):
        if g in covered:
            continue
        join = parent.closure(h_gens + [g])
        if join <= top:
            candidates.setdefault(join, None)
        # skip the rest of the coset H*g
        for h in H.members:
            covered.add(t[h][g])
    mins = []
    cand_list = sorted(candidates, key=lambda s: (len(s), tuple(sorted(s))))
    for s in cand_list:
        if not any(other < s for other in cand_list if len(other) < len(s)):
            mins.append(s)
    result = [SubgroupRef(parent, s) for s in mins]
    cache[key] = result
    return result


def interval(G: GroupLike, H: SubgroupRef) -> list[SubgroupRef]:
    """All subgroups L with H <= L <= G, via iterated minimal overgroups."""
    sub = _as_subgroup(G)
    parent = sub.parent
    if not H.members <= sub.members:
        raise GroupError("interval requires H <= G")
    cache = parent._op_cache.setdefault("interval", {})
    key = (H.members, sub.members)
    got = cache.get(key)
    if got is not None:
        return got
    found = {H.members}
    work = [H.members]
    while work:
        cur = work.pop()
        for over in minimal_overgroups(sub, SubgroupRef(parent, cur), within=sub.members):
            if over.members not in found:
                found.add(over.members)
                work.append(over.members)
    result = [SubgroupRef(parent, s) for s in sorted(found, key=lambda s: (len(s), tuple(sorted(s))))]
    cache[key] = result
    return result


def maximal_pairs_above(G: GroupLike, H: SubgroupRef) -> list[tuple[SubgroupRef, SubgroupRef]]:
    """All (K, L) with H <= K maximal in L <= G, in canonical order."""
    sub = _as_subgroup(G)
    out = []
    for K in interval(sub, H):
        for L in minimal_overgroups(sub, K, within=sub.members):
            out.append((K, L))
    return out


def maximal_subgroups(
    G: GroupLike, lattice_budget: int = DEFAULT_LATTICE_BUDGET
) -> list[SubgroupRef]:
    """Subgroups maximal in the (sub)group (full-lattice tier)."""
    sub = _as_subgroup(G)
    lat = all_subgroups(sub, lattice_budget)
    top_idx = lat.node_index(sub.members)
    return [lat.nodes[i] for i, j in lat.edges if j == top_idx]


def maximal_subgroups_containing(
    K: SubgroupRef,
    J: SubgroupRef,
    lattice_budget: int = DEFAULT_LATTICE_BUDGET,
) -> list[SubgroupRef]:
    """Maximal subgroups M of K with J <= M.

    Uses K's full lattice when affordable; otherwise enumerates the interval
    [J, K], whose maximal elements below K are exactly the wanted subgroups.
    """
    parent = K.parent
    if not J.members <= K.members:
        return []
    if K.order <= lattice_budget:
        return [M for M in maximal_subgroups(K, lattice_budget) if J.members <= M.members]
    nodes = interval(K, J)
    out = []
    for M in nodes:
        if M.members == K.members:
            continue
        if not any(
            M.members < other.members and other.members < K.members for other in nodes
        ):
            out.append(M)
    return sorted(out, key=lambda r: r.sort_key)


def frattini(G: GroupLike, lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> SubgroupRef:
    """Frattini subgroup: intersection of all maximal subgroups."""
    sub = _as_subgroup(G)
    parent = sub.parent
    if sub.order == 1:
        return sub
    mem = sub.members
    for M in maximal_subgroups(sub, lattice_budget):
        mem = mem & M.members
    return SubgroupRef(parent, mem)


def is_supersoluble(G: GroupLike, lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> bool:
    """Every maximal subgroup of prime index (Huppert's criterion)."""
    sub = _as_subgroup(G)
    if sub.order == 1:
        return True
    return all(
        is_prime(sub.order // M.order) for M in maximal_subgroups(sub, lattice_budget)
    )
