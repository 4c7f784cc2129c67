"""Subgroup lattices, intervals, minimal overgroups."""

from __future__ import annotations

import pytest

from groupforms import catalog
from groupforms import lattice as lat
from groupforms.permgroup import SubgroupRef, subgroup_generated
from groupforms.lattice import LatticeBudgetError


def test_all_subgroups_counts():
    assert len(lat.subgroup_sets(catalog.cyclic(7))) == 2
    assert len(lat.subgroup_sets(catalog.symmetric(3))) == 6
    assert len(lat.subgroup_sets(catalog.alternating(4))) == 10


def test_lattice_budget():
    with pytest.raises(LatticeBudgetError):
        lat.subgroup_sets(catalog.symmetric(3), lattice_budget=4)


def test_normal_subgroups():
    c12 = catalog.cyclic(12)
    assert len(lat.normal_subgroups(c12)) == len(lat.subgroup_sets(c12))
    s3 = catalog.symmetric(3)
    assert [n.order for n in lat.normal_subgroups(s3)] == [1, 3, 6]
    a4 = catalog.alternating(4)
    assert [n.order for n in lat.normal_subgroups(a4)] == [1, 4, 12]


def test_maximal_subgroups():
    assert [m.order for m in lat.maximal_subgroups(catalog.cyclic(5))] == [1]
    s3 = catalog.symmetric(3)
    assert sorted(m.order for m in lat.maximal_subgroups(s3)) == [2, 2, 2, 3]
    a4 = catalog.alternating(4)
    assert sorted(m.order for m in lat.maximal_subgroups(a4)) == [3, 3, 3, 3, 4]


def test_minimal_overgroups():
    s3 = catalog.symmetric(3)
    assert lat.minimal_overgroups(s3, s3.as_subgroup()) == []
    a3 = subgroup_generated(s3, [next(i for i in range(6) if s3.element_orders()[i] == 3)])
    overs = lat.minimal_overgroups(s3, a3)
    assert [o.order for o in overs] == [6]
    a4 = catalog.alternating(4)
    v4 = [SubgroupRef(a4, s) for s in lat.subgroup_sets(a4) if len(s) == 4][0]
    assert [o.order for o in lat.minimal_overgroups(a4, v4)] == [12]


def test_minimal_overgroups_incomparable(small_groups):
    for g in small_groups[:20]:
        for s in lat.subgroup_sets(g):
            overs = lat.minimal_overgroups(g, SubgroupRef(g, s))
            for i, a in enumerate(overs):
                assert s < a.members
                for b in overs[i + 1 :]:
                    assert not (a.members < b.members or b.members < a.members)


def test_interval():
    s3 = catalog.symmetric(3)
    assert [r.order for r in lat.interval(s3, s3.as_subgroup())] == [6]
    a3 = [SubgroupRef(s3, s) for s in lat.subgroup_sets(s3) if len(s) == 3][0]
    assert [r.order for r in lat.interval(s3, a3)] == [3, 6]
    c6 = catalog.cyclic(6)
    triv = SubgroupRef(c6, frozenset((c6.identity,)))
    assert len(lat.interval(c6, triv)) == 4


def test_interval_from_bottom_matches_all_subgroups(small_groups):
    for g in small_groups[:15]:
        triv = SubgroupRef(g, frozenset((g.identity,)))
        via_interval = {r.members for r in lat.interval(g, triv)}
        assert via_interval == set(lat.subgroup_sets(g))


def test_edges_have_no_intermediate(catalog120):
    checked = 0
    for g in catalog120:
        if g.order > 48:
            continue
        lattice = lat.all_subgroups(g)
        sets = [r.members for r in lattice.nodes]
        for i, j in lattice.edges:
            small, big = lattice.nodes[i].members, lattice.nodes[j].members
            assert small < big
            assert not any(small < m < big for m in sets)
            checked += 1
    assert checked > 500


def test_every_nontrivial_group_has_a_maximal(small_groups):
    for g in small_groups:
        if g.order > 1:
            assert len(lat.maximal_subgroups(g)) >= 1


def test_conjugate_nodes_have_equal_order(small_groups):
    for g in small_groups[:20]:
        lattice = lat.all_subgroups(g)
        for cls in lattice.conjugacy_classes:
            orders = {lattice.nodes[i].order for i in cls}
            assert len(orders) == 1


def test_supersolubility_criterion():
    assert lat.is_supersoluble(catalog.symmetric(3))
    assert not lat.is_supersoluble(catalog.symmetric(4))
    assert not lat.is_supersoluble(catalog.alternating(4))
    assert lat.is_supersoluble(catalog.cyclic(12))
