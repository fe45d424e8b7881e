import pytest

from minorcolor.engine import compute_r
from minorcolor.extremal import (
    StableSetWitness,
    WitnessError,
    density_bound_holds,
    random_stable_witness,
    smallind_holds,
)
from minorcolor.graph import Graph, construct_sharp, gen_forest, gen_grid, gen_ktree

from test_graph import clique, path


def test_density_forest():
    g = gen_forest(80, seed=2)
    check = density_bound_holds(g, 2, 4)
    assert check.holds and check.lhs == g.m <= 79
    assert check.rhs == pytest.approx(compute_r(2, 4) * 80)


def test_density_t0_fails_on_k5():
    check = density_bound_holds(clique(5), 0, 4)
    assert (check.holds, check.lhs, check.rhs) == (False, 10, 0.0)


def test_density_null():
    check = density_bound_holds(Graph(0), 3, 1.0)
    assert (check.holds, check.lhs, check.rhs) == (True, 0, 0.0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_density_ktrees(k):
    for seed in range(10):
        assert density_bound_holds(gen_ktree(60, k, seed), k + 1, 4).holds


def test_smallind_empty_witness_is_density_bound():
    g = gen_grid(4, 4)
    check = smallind_holds(g, StableSetWitness(frozenset(), 4), 1.5)
    assert (check.lhs, check.rhs) == (g.m, 1.5 * 16)


def test_smallind_star():
    star = construct_sharp(2, 2)  # centre 3
    check = smallind_holds(star, StableSetWitness(frozenset({3}), 2), 1 / 3)
    assert (check.holds, check.lhs, check.rhs) == (True, 1, 1.0)
    assert not smallind_holds(star, StableSetWitness(frozenset({3}), 2), 0.3).holds


def test_smallind_precondition_errors():
    with pytest.raises(WitnessError, match="vertex 0: degree 1 < t=2") as info:
        smallind_holds(path(3), StableSetWitness(frozenset({0, 2}), 2), 1.5)
    assert info.value.vertex == 0
    with pytest.raises(WitnessError, match="not stable"):
        smallind_holds(clique(3), StableSetWitness(frozenset({0, 1}), 2), 3)


def test_smallind_counts_edges_outside_witness():
    # C_4 with A = {0, 2}: G - A is two isolated vertices, so lhs = 0 + 2
    c4 = gen_grid(2, 2)
    check = smallind_holds(c4, StableSetWitness(frozenset({0, 3}), 2), 1.0)
    assert (check.lhs, check.rhs) == (2, 2.0)


def test_witness_examples():
    assert random_stable_witness(Graph(5), 1, seed=0) is None
    star = construct_sharp(2, 2)
    for seed in range(5):
        assert random_stable_witness(star, 3, seed).A == {3}
    c4 = gen_grid(2, 2)  # cycle 0-1-3-2
    seen = {random_stable_witness(c4, 2, seed).A for seed in range(30)}
    assert seen == {frozenset({0, 3}), frozenset({1, 2})}


def test_witness_is_maximal_and_valid():
    g = gen_ktree(40, 2, seed=4)
    w = random_stable_witness(g, 3, seed=9)
    w.validate(g)
    eligible = {v for v in g.vertices() if g.degree(v) >= 3}
    for v in eligible - w.A:
        assert g.neighbors(v) & w.A
