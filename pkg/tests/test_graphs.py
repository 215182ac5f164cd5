"""Graph constructors and structural checks."""

from __future__ import annotations

import random

import numpy as np
import pytest

from sqtanner import catalog
from sqtanner.errors import InvalidSpecError, SizeMismatchError, UnsupportedError
from sqtanner.graphs import (
    Edge,
    GroupTable,
    LabeledGraph,
    SchreierSpec,
    bipartite_double_cover,
    block_commutation_report,
    cayley_graph,
    commute_check,
    conjugate_component,
    cyclic_group,
    dihedral_group,
    inverse_pair_compat,
    overlap_check,
    quadripartite_pair,
    schreier_graph,
    spec_from_graph,
    two_factorization,
)


def cycle_spec(n: int) -> SchreierSpec:
    fwd = tuple((v + 1) % n for v in range(n))
    back = tuple((v - 1) % n for v in range(n))
    return SchreierSpec(n, (fwd, back), (1, 0))


def c5_matrix() -> np.ndarray:
    m = np.zeros((5, 5), dtype=np.int64)
    for i in range(5):
        m[i, (i + 1) % 5] = m[(i + 1) % 5, i] = 1
    return m


# -- Schreier construction ---------------------------------------------------


def test_five_cycle_from_spec():
    g = schreier_graph(cycle_spec(5))
    assert g.n == 5 and g.delta == 2 and len(g.edges) == 5
    assert np.array_equal(g.adjacency(), c5_matrix())
    # every edge carries the label pair {0, 1}: the two rotations invert each other
    for e in g.edges:
        assert {e.lu, e.lv} == {0, 1}


def test_identity_action_gives_half_loops():
    spec = SchreierSpec(3, (tuple(range(3)),), (0,))
    g = schreier_graph(spec)
    assert len(g.edges) == 3
    assert all(e.is_half_loop() for e in g.edges)
    assert np.array_equal(g.adjacency(), np.eye(3, dtype=np.int64))


def test_petersen_matches_printed_matrix():
    a = schreier_graph(catalog.petersen_spec())
    c5, c5p = catalog.cycle_blocks_c5()
    expected = np.block([[c5, np.eye(5, dtype=np.int64)], [np.eye(5, dtype=np.int64), c5p]])
    assert np.array_equal(a.adjacency(), expected)
    assert a.delta == 3 and a.is_connected()


def test_partner_matches_printed_matrix_and_is_disconnected():
    b = schreier_graph(catalog.petersen_partner_spec())
    c5, _ = catalog.cycle_blocks_c5()
    z = np.zeros((5, 5), dtype=np.int64)
    assert np.array_equal(b.adjacency(), np.block([[c5, z], [z, c5]]))
    assert len(b.components()) == 2


def test_spec_invariants_rejected():
    with pytest.raises(InvalidSpecError):
        SchreierSpec(3, ((0, 1, 1),), (0,))  # not a permutation
    with pytest.raises(InvalidSpecError):
        SchreierSpec(3, ((1, 2, 0), (2, 0, 1)), (0, 1))  # pairing does not invert


# -- Cayley constructors ------------------------------------------------------


def test_cayley_z5_left_is_five_cycle():
    spec = cayley_graph(cyclic_group(5), [1, 4], side="left")
    g = schreier_graph(spec)
    assert np.array_equal(g.adjacency(), c5_matrix())


def test_cayley_left_right_commute():
    g = cyclic_group(5)
    a = cayley_graph(g, [1, 4], side="left")
    b = cayley_graph(g, [2, 3], side="right")
    assert commute_check(a, b)


def test_cayley_dihedral_reflections_self_paired():
    d4 = dihedral_group(4)
    hand = [[d4.mul[a][b] for b in range(8)] for a in range(8)]
    # spot check the hand multiplication table: r s = s r^-1
    r, s = 1, 4
    assert hand[s][r] == d4.mul[(4 - 1) % 4][s]
    spec = cayley_graph(d4, [4, 6], side="left")
    assert spec.pairing == (0, 1)
    g = schreier_graph(spec)
    assert g.delta == 2
    for e in g.edges:
        assert e.lu == e.lv  # self-paired labels at both ends


def test_cayley_asymmetric_multiset_rejected():
    with pytest.raises(InvalidSpecError):
        cayley_graph(cyclic_group(5), [1, 2], side="left")


def test_cayley_duplicate_self_inverse_labels():
    z2 = cyclic_group(2)
    spec = cayley_graph(z2, [1, 1], side="left")
    assert spec.pairing == (0, 1)  # duplicates pair across equal slots
    g = schreier_graph(spec)
    assert g.delta == 2 and len(g.edges) == 2  # doubled edge


# -- commuting / overlap / inverse pairs --------------------------------------


def test_commute_check_petersen_pair():
    assert commute_check(catalog.petersen_spec(), catalog.petersen_partner_spec())


def test_commute_check_identity_always():
    ident = SchreierSpec(4, (tuple(range(4)),), (0,))
    assert commute_check(cycle_spec(4), ident)


def test_commute_check_noncommuting_transpositions():
    t1 = SchreierSpec(4, ((1, 0, 2, 3),), (0,))
    t2 = SchreierSpec(4, ((0, 2, 1, 3),), (0,))
    assert not commute_check(t1, t2)


def test_commute_check_size_mismatch():
    with pytest.raises(SizeMismatchError):
        commute_check(cycle_spec(4), cycle_spec(5))


def test_commuting_graphs_have_commuting_adjacency():
    a, b = catalog.petersen_pair()
    ma, mb = a.adjacency(), b.adjacency()
    assert np.array_equal(ma @ mb, mb @ ma)


def test_overlap_petersen_pair_nonempty():
    a, b = catalog.petersen_pair()
    pairs = overlap_check(a, b)
    assert pairs  # the outer cycle is shared
    assert (0, 1) in pairs


def test_overlap_disjoint_step_cycles_empty():
    g5 = cyclic_group(5)
    a = schreier_graph(cayley_graph(g5, [1, 4]))
    b = schreier_graph(cayley_graph(g5, [2, 3]))
    assert overlap_check(a, b) == []


def test_overlap_self_is_all_edges():
    g = schreier_graph(cycle_spec(5))
    assert overlap_check(g, g) == sorted(g.endpoint_pairs())


def test_inverse_pair_compat_cayley_graphs():
    g5 = cyclic_group(5)
    a = schreier_graph(cayley_graph(g5, [1, 4]))
    b = schreier_graph(cayley_graph(g5, [2, 3]))
    assert inverse_pair_compat(a, b)


def test_inverse_pair_compat_covered_petersen_pair():
    a, b = catalog.petersen_pair()
    assert inverse_pair_compat(bipartite_double_cover(a), bipartite_double_cover(b))


def test_inverse_pair_compat_detects_mismatched_component():
    # b: a 5-cycle with swapped-pair labels next to a doubled edge with
    # self-paired labels; a joins the two components, so the signatures clash
    cyc = cycle_spec(5)
    b_edges = [Edge(v, (v + 1) % 5, 0, 1) for v in range(5)]
    b_edges += [Edge(5, 6, 0, 0), Edge(5, 6, 1, 1)]
    b = LabeledGraph(7, 2, b_edges)
    a = schreier_graph(cycle_spec(7))
    assert not inverse_pair_compat(a, b)
    del cyc


# -- covers -------------------------------------------------------------------


def test_cover_of_petersen_is_desargues_shape():
    cover = bipartite_double_cover(schreier_graph(catalog.petersen_spec()))
    assert cover.n == 20 and cover.delta == 3
    assert cover.two_coloring() is not None
    assert not cover.has_self_loop()
    assert cover.is_connected()


def test_cover_of_half_loop_vertex():
    g = LabeledGraph(1, 1, [Edge(0, 0, 0, 0)])
    cover = bipartite_double_cover(g)
    assert cover.n == 2 and len(cover.edges) == 1
    assert cover.edges[0][:2] == (0, 1)


def test_cover_of_five_cycle_is_ten_cycle():
    cover = bipartite_double_cover(schreier_graph(cycle_spec(5)))
    assert cover.n == 10 and cover.is_connected()
    deg = cover.adjacency().sum(axis=0)
    assert set(deg.tolist()) == {2}


def test_cover_partition_orientation():
    cover = bipartite_double_cover(schreier_graph(cycle_spec(5)))
    assert cover.is_bipartite_on(cover.partition)
    assert all(cover.partition[e.u] == 0 and cover.partition[e.v] == 1 for e in cover.edges)


# -- quadripartite step --------------------------------------------------------


def test_quadripartite_z5_pair():
    g5 = cyclic_group(5)
    a = schreier_graph(cayley_graph(g5, [1, 4]))
    b = schreier_graph(cayley_graph(g5, [2, 3], side="right"))
    qa, qb = quadripartite_pair(a, b)
    assert commute_check(qa, qb)
    assert overlap_check(qa, qb) == []
    assert qa.is_bipartite_on(qa.partition)
    assert all(qb.partition[e.u] == qb.partition[e.v] for e in qb.edges)


def test_quadripartite_block_forms():
    a, b = catalog.petersen_pair()
    qa, qb = quadripartite_pair(a, b)
    ma, mb = a.adjacency(), b.adjacency()
    z = np.zeros_like(ma)
    assert np.array_equal(qa.adjacency(), np.block([[z, ma], [ma, z]]))
    assert np.array_equal(qb.adjacency(), np.block([[mb, z], [z, mb]]))


def test_quadripartite_identity_action_gives_loops_on_both_blocks():
    a = schreier_graph(cycle_spec(4))
    ident = schreier_graph(SchreierSpec(4, (tuple(range(4)),), (0,)))
    _, qb = quadripartite_pair(a, ident)
    assert all(e.is_loop() for e in qb.edges)
    assert {e.u for e in qb.edges} == set(range(8))


# -- two-factorization ---------------------------------------------------------


def as_multiset(g: LabeledGraph):
    from collections import Counter

    return Counter((min(e.u, e.v), max(e.u, e.v)) for e in g.edges)


def test_two_factorization_circulant():
    g7 = cyclic_group(7)
    g = schreier_graph(cayley_graph(g7, [1, 6, 2, 5]))
    spec = two_factorization(g)
    assert spec.delta == 4 and len(set(spec.perms)) <= 4
    assert as_multiset(schreier_graph(spec)) == as_multiset(g)


def test_two_factorization_cycle_is_one_rotation():
    g = schreier_graph(cycle_spec(6))
    spec = two_factorization(g)
    assert spec.delta == 2
    assert as_multiset(schreier_graph(spec)) == as_multiset(g)


def test_two_factorization_acts_per_component():
    c4 = cycle_spec(4)
    edges = list(schreier_graph(c4).edges)
    edges += [Edge(e.u + 4, e.v + 4, e.lu, e.lv) for e in schreier_graph(c4).edges]
    g = LabeledGraph(8, 2, edges)
    spec = two_factorization(g)
    assert as_multiset(schreier_graph(spec)) == as_multiset(g)
    for p in spec.perms:
        assert all((v < 4) == (p[v] < 4) for v in range(8))


def test_two_factorization_odd_degree_unsupported():
    g = schreier_graph(catalog.petersen_spec())
    with pytest.raises(UnsupportedError):
        two_factorization(g)


def test_two_factorization_random_circulants():
    rng = random.Random(11)
    for _ in range(10):
        m = rng.randrange(5, 13)
        s, t = rng.sample(range(1, m // 2 + 1), 2) if m // 2 >= 2 else (1, 1)
        labels = [s % m, (-s) % m, t % m, (-t) % m]
        try:
            spec = cayley_graph(cyclic_group(m), labels)
        except InvalidSpecError:
            continue
        g = schreier_graph(spec)
        if g.delta % 2:
            continue
        assert as_multiset(schreier_graph(two_factorization(g))) == as_multiset(g)


# -- block-matrix analysis -------------------------------------------------------


def test_block_commutation_petersen():
    a, b = catalog.petersen_pair()
    rep = block_commutation_report(a.adjacency(), b.adjacency(), split=5)
    assert rep.a2_b2_eq_b1_a2 and rep.a1_b1_commute and rep.a3_b2_commute
    assert rep.overall


def test_block_commutation_decoupled_case():
    c5 = c5_matrix()
    z = np.zeros_like(c5)
    ma = np.block([[c5, z], [z, c5]])
    mb = np.block([[c5, z], [z, c5]])
    rep = block_commutation_report(ma, mb, split=5)
    assert rep.overall


def test_block_commutation_perturbed_a2():
    c5 = c5_matrix()
    t = np.eye(5, dtype=np.int64)[[1, 0, 2, 3, 4]]  # transposition, not commuting with c5
    ma = np.block([[c5, t], [t.T, c5]])
    mb = np.block([[c5, np.zeros_like(c5)], [np.zeros_like(c5), c5]])
    rep = block_commutation_report(ma, mb, split=5)
    assert not rep.a2_b2_eq_b1_a2
    assert not rep.overall


def test_conjugate_component_identity_is_noop():
    a, b = catalog.petersen_pair()
    res = conjugate_component(a.adjacency(), list(range(5)), b.adjacency(), split=5)
    assert np.array_equal(res.matrix, a.adjacency())
    assert res.result_commutes_with_mb


def test_conjugate_component_rotation_keeps_commutation():
    a, b = catalog.petersen_pair()
    rot = [(i + 1) % 5 for i in range(5)]  # automorphism of both inner cycles
    res = conjugate_component(a.adjacency(), rot, b.adjacency(), split=5)
    ma2, mb = res.matrix, b.adjacency()
    assert res.conjugate_commutes_with_b2
    assert res.result_commutes_with_mb == bool(np.array_equal(ma2 @ mb, mb @ ma2))
    assert res.result_commutes_with_mb


def test_conjugate_component_breaking_permutation():
    a, b = catalog.petersen_pair()
    swap = [1, 0, 2, 3, 4]
    res = conjugate_component(a.adjacency(), swap, b.adjacency(), split=5)
    mb = b.adjacency()
    direct = bool(np.array_equal(res.matrix @ mb, mb @ res.matrix))
    assert res.result_commutes_with_mb == direct
    assert not direct


# -- Cayley-or-disconnected consistency (not a decision procedure) ---------------


def test_connected_commuting_builtin_pairs_are_cayley_by_construction():
    g5 = cyclic_group(5)
    a = cayley_graph(g5, [1, 4])
    b = cayley_graph(g5, [2, 3], side="right")
    ga, gb = schreier_graph(a), schreier_graph(b)
    assert ga.is_connected() and gb.is_connected()
    # both graphs carry a Cayley structure because they were built from one
    assert spec_from_graph(ga) is not None and spec_from_graph(gb) is not None


def test_petersen_partner_has_two_components():
    _, b = catalog.petersen_pair()
    assert len(b.components()) == 2


# -- group tables -----------------------------------------------------------------


def test_group_table_rejects_broken_tables():
    with pytest.raises(InvalidSpecError):
        GroupTable(2, ((0, 1), (1, 1)))


def test_dihedral_order_and_inverses():
    d6 = dihedral_group(6)
    assert d6.order == 12
    for x in range(12):
        assert d6.mul[x][d6.inv[x]] == d6.identity
