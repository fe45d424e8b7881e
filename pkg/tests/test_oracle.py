import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from minorcolor.engine import Coloring, compute_r, compute_s, defective_coloring, find_reduction
from minorcolor.graph import Graph, components, construct_sharp, gen_forest, gen_grid, gen_ktree, gen_random
from minorcolor.oracle import (
    MinorModel,
    OracleGuardError,
    check_minor_model,
    has_clique_minor,
    min_defect,
)

from test_graph import clique, graphs, path


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def brute_min_defect(g, p):
    verts = g.vertices()
    best = None
    for colours in itertools.product(range(p), repeat=len(verts)):
        parts = [{v for v, c in zip(verts, colours) if c == i} for i in range(p)]
        d = max(max(g.induced_degrees(x).values(), default=0) for x in parts)
        best = d if best is None else min(best, d)
    return 0 if best is None else best


def brute_has_clique_minor(g, k):
    """Try every map from vertices to {unused, 0..k-1}; independent of the search pruning."""
    verts = g.vertices()
    for labels in itertools.product(range(-1, k), repeat=len(verts)):
        sets = [frozenset(v for v, c in zip(verts, labels) if c == i) for i in range(k)]
        if not check_minor_model(g, MinorModel(tuple(sets)), k):
            return True
    return False


def has_k4_minor_by_reduction(g):
    """A graph has no K_4 minor iff deleting degree <= 1 vertices and
    suppressing degree-2 vertices (merging parallel edges) empties it."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices())
    h.add_edges_from(g.edges())
    changed = True
    while changed and h.number_of_nodes():
        changed = False
        for v in list(h.nodes):
            if h.degree(v) <= 1:
                h.remove_node(v)
                changed = True
            elif h.degree(v) == 2:
                a, b = h.neighbors(v)
                h.remove_node(v)
                h.add_edge(a, b)
                changed = True
    return h.number_of_nodes() > 0


# --- has_clique_minor ------------------------------------------------------


def test_clique_contains_itself():
    result = has_clique_minor(clique(4), 4)
    assert result.found
    assert sorted(map(sorted, result.model.branch_sets)) == [[0], [1], [2], [3]]


@pytest.mark.parametrize("seed", range(10))
def test_forests_have_no_triangle_minor(seed):
    assert has_clique_minor(gen_forest(40, seed), 3).status == "no"


def test_sharp_1_3_has_no_k4_minor():
    g = construct_sharp(1, 3)
    assert has_clique_minor(g, 4).status == "no"
    assert has_clique_minor(g, 3).found


def test_cycle_contracts_to_triangle():
    result = has_clique_minor(cycle(6), 3)
    assert result.found and not check_minor_model(cycle(6), result.model, 3)
    assert has_clique_minor(cycle(6), 4).status == "no"


def test_petersen_has_k5_minor():
    pet = nx.petersen_graph()
    g = Graph.from_edges(10, pet.edges())
    result = has_clique_minor(g, 5)
    assert result.found
    assert check_minor_model(g, result.model, 5) == []
    assert has_clique_minor(g, 6).status == "no"


def test_grid_minors():
    g = gen_grid(3, 3)
    assert has_clique_minor(g, 4).found
    assert has_clique_minor(g, 5).status == "no"


def test_k1_and_trivial_cases():
    assert has_clique_minor(Graph(1), 1).found
    assert has_clique_minor(Graph(0), 1).status == "no"
    assert has_clique_minor(path(3), 4).status == "no"
    with pytest.raises(ValueError):
        has_clique_minor(path(3), 0)


def test_timeout_is_reproducible():
    g = construct_sharp(1, 4)
    a = has_clique_minor(g, 5, budget=500)
    b = has_clique_minor(g, 5, budget=500)
    assert a.status == b.status == "timeout"
    assert a.expansions == b.expansions == 500


def test_tombstoned_vertices_ignored():
    g = clique(5)
    g.delete_vertex(2)
    result = has_clique_minor(g, 4)
    assert result.found and all(2 not in b for b in result.model.branch_sets)
    assert has_clique_minor(g, 5).status == "no"


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_search_agrees_with_brute_force(g):
    for k in (3, 4):
        result = has_clique_minor(g, k)
        assert result.found == brute_has_clique_minor(g, k)
        if result.found:
            assert check_minor_model(g, result.model, k) == []


def test_k4_minor_matches_series_parallel_reduction_on_atlas():
    for h in nx.graph_atlas_g():
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        assert has_clique_minor(g, 4).found == has_k4_minor_by_reduction(g)


def test_k3_minor_matches_cycle_detection_on_atlas():
    for h in nx.graph_atlas_g():
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        assert has_clique_minor(g, 3).found == (not nx.is_forest(h) if h.number_of_nodes() else False)


def test_check_minor_model_reports_problems():
    g = path(4)
    assert check_minor_model(g, MinorModel((frozenset({0}), frozenset({2}))), 2) == ["no edge between branch sets 0 and 1"]
    problems = check_minor_model(g, MinorModel((frozenset({0, 2}), frozenset({1}), frozenset())), 3)
    assert "branch set 0 is not connected" in problems and "branch set 2 is empty" in problems
    assert check_minor_model(g, MinorModel((frozenset({0, 1}), frozenset({1, 2}))), 2)


# --- min_defect ------------------------------------------------------------


def test_min_defect_single_part_is_max_degree():
    assert min_defect(path(3), 1) == 2
    g = gen_random(9, 0.5, 3)
    assert min_defect(g, 1) == g.max_degree()


def test_min_defect_c5():
    c5 = cycle(5)
    assert [min_defect(c5, p) for p in (1, 2, 3, 4)] == [2, 1, 0, 0]
    assert [brute_min_defect(c5, p) for p in (2, 3)] == [1, 0]


def test_min_defect_sharp_values():
    # frozen from the exhaustive search, cross-checked by brute_min_defect
    assert min_defect(construct_sharp(1, 2), 1) == 2
    assert min_defect(construct_sharp(2, 2), 1) == 3
    assert min_defect(construct_sharp(1, 3), 2) == 2
    assert brute_min_defect(construct_sharp(1, 3), 2) == 2


def test_min_defect_guard_and_errors():
    with pytest.raises(OracleGuardError):
        min_defect(gen_forest(15, 0), 2)
    assert min_defect(gen_forest(15, 0), 2, max_vertices=15) == 0
    with pytest.raises(ValueError):
        min_defect(path(3), 0)
    assert min_defect(Graph(0), 3) == 0


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_min_defect_matches_brute_force_and_is_monotone(g):
    values = [min_defect(g, p) for p in (1, 2, 3)]
    assert values == [brute_min_defect(g, p) for p in (1, 2, 3)]
    assert values[0] >= values[1] >= values[2]
    if g.num_vertices:
        chromatic = min(p for p in range(1, g.num_vertices + 1) if min_defect(g, p) == 0)
        assert all((min_defect(g, p) == 0) == (p >= chromatic) for p in range(1, 5))


@pytest.mark.parametrize("seed", range(30))
def test_engine_never_beats_oracle(seed):
    g = gen_random(1 + seed % 10, 0.45, seed)
    t = 2 + seed % 2
    result = defective_coloring(g, t)
    assert isinstance(result, Coloring)
    assert min_defect(g, t) <= result.partition.max_part_degree(g)


@pytest.mark.parametrize("s, t", [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)])
def test_removing_apex_leaves_copies(s, t):
    g = construct_sharp(s, t)
    prev = construct_sharp(s, t - 1)
    apex = g.n - 1
    g.delete_vertex(apex)
    comps = sorted(components(g), key=min)
    assert len(comps) == s + 1
    prev_h = nx.Graph(prev.edges())
    prev_h.add_nodes_from(range(prev.n))
    for comp in comps:
        sub = g.induced_subgraph(comp)
        h = nx.Graph(sub.edges())
        h.add_nodes_from(comp)
        assert nx.is_isomorphic(h, prev_h)


def test_ktree_minor_bounds():
    for k in (1, 2, 3):
        g = gen_ktree(8, k, seed=k)
        assert has_clique_minor(g, k + 1).found
        assert has_clique_minor(g, k + 2).status == "no"


def test_low_degree_lemma_for_t_up_to_5():
    # every non-null graph on <= 7 vertices without a K_{t+1} minor admits a peel step
    for h in nx.graph_atlas_g()[1:]:
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        for t in range(1, 6):
            result = has_clique_minor(g, t + 1)
            assert result.status != "timeout"
            if result.status == "no":
                s = compute_s(compute_r(t, 4.0), t)
                assert find_reduction(g, t, s) is not None, (g.edges(), t)
