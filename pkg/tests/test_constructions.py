import json

import networkx as nx
import pytest

from rexlab.canon import is_isomorphic
from rexlab.constructions import (
    ConstructionRecipe,
    CyclePartition,
    DeficiencyPattern,
    Family,
    apex_witness,
    biregular_bipartite,
    blowup_cover,
    build,
    c5_blowup_regular,
    clique_minus_matching,
    cycle_rich,
    deficient_high_girth,
    g_family,
    high_girth_feasibility,
    high_girth_regular,
    k_regular_bipartite,
    manifest,
    regex_tree_closed_form,
    rex_paths_closed_form,
    theorem6_extremal,
    turan_graph,
)
from rexlab.constructions.families import (
    cycle_partitions,
    is_almost_star,
    is_star,
    path_free_case,
    path_free_feasible,
    triangles_g_family,
)
from rexlab.constructions.fields import GF, SUPPORTED_Q, gq_incidence_edges, pg2_incidence_edges
from rexlab.constructions.girth import (
    LIBRARY,
    _build_entry,
    deficient_vertices,
    generalized_petersen,
    moore_bound,
    petersen_graph,
)
from rexlab.errors import (
    BadParams,
    DichotomyViolated,
    Infeasible,
    InfeasibleDegrees,
    NoPartition,
    NotATree,
    OddOrder,
    ParityInfeasible,
    UnsupportedResidue,
)
from rexlab.graph import (
    Graph,
    bfs_distances,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    girth,
    is_bipartite,
    is_regular,
    path_graph,
    star_graph,
    uniform_blowup,
)
from rexlab.patterns import c5_partition, contains, copies, exists_homomorphism, to_networkx

K3 = complete_graph(3)


# ------------------------------------------------------------ families

def test_turan():
    t = turan_graph(9, 3)
    assert is_regular(t) == 6 and copies(K3, t) == 27
    assert is_isomorphic(turan_graph(4, 2), cycle_graph(4))
    assert copies(K3, turan_graph(6, 3)) == 8
    with pytest.raises(BadParams):
        turan_graph(3, 4)


def test_clique_minus_matching():
    assert copies(K3, clique_minus_matching(6)) == 8
    g4 = clique_minus_matching(4)
    assert is_isomorphic(g4, cycle_graph(4)) and copies(K3, g4) == 0
    assert copies(K3, clique_minus_matching(8)) == 32
    with pytest.raises(OddOrder):
        clique_minus_matching(7)


def test_g_family():
    members = g_family(8)
    assert len(members) == 1 and copies(K3, members[0][1]) == 7
    members = g_family(10)
    assert sorted(p.parts for p, _ in members) == [(5, 4), (9,)]
    assert {copies(K3, g) for _, g in members} == {30}
    assert len(g_family(12)) == 3
    with pytest.raises(NoPartition):
        g_family(4)
    with pytest.raises(BadParams):
        CyclePartition((3, 4))


def test_cycle_partitions():
    assert [p.parts for p in cycle_partitions(11)] == [(11,), (7, 4), (6, 5)]


def test_path_free_examples():
    g = theorem6_extremal(12, 7)
    assert is_isomorphic(g, disjoint_union([complete_graph(6)] * 2)) and copies(K3, g) == 40
    g = theorem6_extremal(11, 7)
    assert is_isomorphic(g, disjoint_union([complete_graph(5), clique_minus_matching(6)]))
    assert copies(K3, g) == 18
    g = theorem6_extremal(13, 8)
    assert copies(K3, g) == 15 and is_regular(g) == 4
    assert (rex_paths_closed_form(12, 7), rex_paths_closed_form(11, 7), rex_paths_closed_form(13, 8)) == (40, 18, 15)
    assert [path_free_case(12, 7), path_free_case(11, 7), path_free_case(13, 8)] == [1, 2, 3]


def test_path_free_all_partitions_agree():
    # case 3: any cycle partition of k-1 gives the same count
    counts = {copies(K3, theorem6_extremal(29, 10, p.parts)) for p in cycle_partitions(9)}
    assert counts == {rex_paths_closed_form(29, 10)}


def test_path_free_infeasible():
    assert not path_free_feasible(7, 7)
    with pytest.raises(BadParams):
        theorem6_extremal(7, 7)
    with pytest.raises(BadParams):
        path_free_case(10, 6)


def test_g_family_formula():
    for k in (8, 10, 12, 14):
        assert {copies(K3, g) for _, g in g_family(k)} == {triangles_g_family(k)}


def test_trees():
    assert regex_tree_closed_form(path_graph(7), 12) == 5
    assert regex_tree_closed_form(path_graph(7), 11) == 4
    assert regex_tree_closed_form(path_graph(8), 11) == 4
    assert is_star(star_graph(4)) and not is_star(path_graph(5))
    assert is_almost_star(path_graph(5)) and not is_almost_star(path_graph(6))
    # star with t even: t-2 regardless of n
    assert regex_tree_closed_form(star_graph(5), 13) == 4
    with pytest.raises(NotATree):
        regex_tree_closed_form(cycle_graph(5), 12)
    with pytest.raises(BadParams):
        regex_tree_closed_form(path_graph(7), 12, min_n=21)


def test_apex_witness():
    for n, r, tri in ((11, 4, 2), (16, 6, 6), (26, 10, 20)):
        g = apex_witness(n)
        assert is_regular(g) == r
        assert copies(K3, g) == tri
        assert not contains(K3, delete_vertex(g, n - 1))
    with pytest.raises(UnsupportedResidue):
        apex_witness(12)


# ------------------------------------------------------------ bipartite

def test_k_regular_bipartite():
    g = k_regular_bipartite(5, 3)
    assert g.order == 10 and is_regular(g) == 3 and is_bipartite(g)
    assert is_isomorphic(k_regular_bipartite(4, 4), complete_multipartite([4, 4]))
    assert k_regular_bipartite(4, 1).num_edges() == 4 and is_regular(k_regular_bipartite(4, 1)) == 1


def test_biregular():
    g = biregular_bipartite(4, 1, 2, 2)
    assert is_isomorphic(g, disjoint_union([star_graph(2)] * 2))
    g = biregular_bipartite(6, 2, 4, 3)
    assert g.num_edges() == 12
    assert [g.degree(v) for v in range(10)] == [2] * 6 + [3] * 4
    g = biregular_bipartite(3, 2, 2, 3)
    assert g.num_edges() == 6
    with pytest.raises(InfeasibleDegrees):
        biregular_bipartite(3, 2, 2, 2)


# ------------------------------------------------------------ fields / library

def test_field_axioms():
    for q in SUPPORTED_Q:
        f = GF(q)
        for a in range(q):
            assert f.add[a][0] == a and f.mul[a][1] == a
            assert f.add[a][f.neg[a]] == 0
            if a:
                assert f.mul[a][f.inv[a]] == 1
            for b in range(q):
                for c in range(q):
                    # distributivity
                    assert f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]]


@pytest.mark.parametrize("q", [2, 3, 4])
def test_incidence_graphs(q):
    n, edges = pg2_incidence_edges(q)
    g = Graph.from_edges(n, edges)
    assert n == 2 * (q * q + q + 1) and is_regular(g) == q + 1 and girth(g) == 6
    n, edges = gq_incidence_edges(q)
    g = Graph.from_edges(n, edges)
    assert is_regular(g) == q + 1 and girth(g) == 8


@pytest.mark.parametrize("entry", [e for e in LIBRARY if e.order <= 200], ids=lambda e: e.name)
def test_library_entries(entry):
    g = _build_entry(entry.name)
    assert g.order == entry.order and is_regular(g) == entry.degree
    assert girth(g) == entry.girth
    assert nx.is_connected(to_networkx(g))


def test_named_graphs():
    assert is_isomorphic(petersen_graph(), generalized_petersen(5, 2))
    assert nx.is_isomorphic(to_networkx(petersen_graph()), nx.petersen_graph())
    assert moore_bound(3, 5) == 10 and moore_bound(3, 6) == 14 and moore_bound(4, 5) == 17


# ------------------------------------------------------------ high girth

@pytest.mark.parametrize("n,r,g", [(10, 3, 5), (16, 3, 5), (12, 2, 6), (20, 3, 6), (24, 3, 7), (12, 3, 5)])
def test_high_girth_regular(n, r, g):
    out = high_girth_regular(n, r, g)
    assert out.order == n and is_regular(out) == r
    assert girth(out) >= g


def test_high_girth_cycle():
    assert is_isomorphic(high_girth_regular(9, 2, 7), cycle_graph(9))


def test_high_girth_infeasible():
    assert high_girth_feasibility(9, 3, 5) == "infeasible"
    assert high_girth_feasibility(10, 3, 5) == "constructive"
    with pytest.raises(Infeasible):
        high_girth_regular(12, 3, 7)  # below the Moore bound 22
    with pytest.raises(Infeasible):
        high_girth_regular(5, 2, 6)


def test_high_girth_seed_reproducible():
    a = high_girth_regular(12, 3, 5, seed=4)
    b = high_girth_regular(12, 3, 5, seed=4)
    assert a == b


def _check_deficient(out, n, r, g, i, dist):
    low = deficient_vertices(out, r)
    assert out.order == n and len(low) == i
    assert all(out.degree(v) in (r, r - 1) for v in range(n))
    gg = girth(out)
    assert gg is None or gg >= g
    for a in low:
        d = bfs_distances(out, a)
        for b in low:
            if a < b:
                assert d[b] is None or d[b] >= dist


@pytest.mark.parametrize("n,r,g,i,dist", [
    (10, 3, 5, 0, 1), (10, 3, 5, 2, 4), (20, 3, 5, 2, 4), (14, 3, 6, 2, 3),
    (169, 5, 7, 3, 4),
])
def test_deficient_high_girth(n, r, g, i, dist):
    out = deficient_high_girth(n, r, g, DeficiencyPattern(i, 1, dist))
    _check_deficient(out, n, r, g, i, dist)


def test_deficient_parity():
    with pytest.raises(ParityInfeasible):
        deficient_high_girth(10, 3, 5, DeficiencyPattern(1))
    with pytest.raises(BadParams):
        DeficiencyPattern(2, deficiency=2)


# ------------------------------------------------------------ blow-ups

@pytest.mark.parametrize("n,d,sizes", [(25, 10, [5] * 5), (5, 2, [1] * 5), (15, 6, [3] * 5)])
def test_c5_blowup_balanced(n, d, sizes):
    g = c5_blowup_regular(n, d)
    assert is_regular(g) == d and not contains(K3, g)
    assert [len(p) for p in g.parts] == sizes
    part = c5_partition(g)
    assert not part.leftover


def test_c5_blowup_complete_joins():
    g = c5_blowup_regular(25, 10)
    assert is_isomorphic(g, uniform_blowup(cycle_graph(5), 5))
    assert is_isomorphic(c5_blowup_regular(5, 2), cycle_graph(5))


def test_c5_blowup_unbalanced():
    g = c5_blowup_regular(11, 4)
    assert is_regular(g) == 4 and not contains(K3, g)
    with pytest.raises(Infeasible):
        c5_blowup_regular(10, 5)


@pytest.mark.parametrize("h,f,g,delta", [
    (path_graph(3), K3, 7, 2),
    (K3, complete_graph(4), 7, 2),
    (complete_graph(2), K3, 5, 1),
])
def test_blowup_cover(h, f, g, delta):
    out = blowup_cover(h, f, g)
    assert is_regular(out) == 2 * delta + 1
    # h sits on the first vertices
    for u, v in h.edges():
        assert out.has_edge(u, v)
    assert not exists_homomorphism(f, out)
    assert not contains(f, uniform_blowup(out, 2))


def test_blowup_cover_triangle_free_under_blowup():
    out = blowup_cover(path_graph(3), K3, 7)
    assert not contains(K3, uniform_blowup(out, 3))


def test_blowup_cover_rejects_hom():
    with pytest.raises(DichotomyViolated):
        blowup_cover(K3, cycle_graph(5), 7)
    with pytest.raises(BadParams):
        blowup_cover(Graph.from_edges(2, []), K3)


@pytest.mark.parametrize("m,ell,k,min_copies", [(3, 5, 3, 9), (5, 5, 3, 25), (3, 5, 4, 9)])
def test_cycle_rich(m, ell, k, min_copies):
    g = cycle_rich(m, ell, k)
    assert is_regular(g) == 2 * m
    assert not contains(cycle_graph(2 * k + 1), g)
    assert copies(cycle_graph(ell), g) >= min_copies


def test_cycle_rich_params():
    for args in ((3, 7, 3), (3, 4, 3), (4, 5, 3), (1, 5, 3)):
        with pytest.raises(BadParams):
            cycle_rich(*args)


# ------------------------------------------------------------ recipes

def test_recipe_round_trip():
    r = ConstructionRecipe("THEOREM6", {"n": 12, "k": 7})
    assert r.family is Family.THEOREM6
    assert ConstructionRecipe.loads(r.dumps()) == r
    assert json.loads(r.dumps()) == {"family": "THEOREM6", "params": {"k": 7, "n": 12}, "seed": None}


def test_recipe_errors():
    with pytest.raises(BadParams):
        ConstructionRecipe("NOPE", {})
    with pytest.raises(BadParams):
        ConstructionRecipe("TURAN", {"n": 4})
    with pytest.raises(BadParams):
        ConstructionRecipe.loads("{not json")


def test_build_and_manifest():
    r = ConstructionRecipe("G_FAMILY", {"k": 10})
    graphs = build(r)
    assert len(graphs) == 2
    for g in graphs:
        m = manifest(r, g)
        assert m["triangles"] == 30 and m["checks"]["closed_form"] == 30
    r = ConstructionRecipe("HIGH_GIRTH_REGULAR", {"n": 10, "r": 3, "g": 5}, seed=1)
    m = manifest(r, build(r)[0])
    assert m["girth"] >= 5 and m["degree"] == 3
    r = ConstructionRecipe("BLOWUP_COVER", {"h": "K2", "f": "K3", "g": 5})
    m = manifest(r, build(r)[0])
    assert m["checks"]["f_hom_free"] and m["degree"] == 3
    assert m["checks"]["gadget_girth"] == 5
