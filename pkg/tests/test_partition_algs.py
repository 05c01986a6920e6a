from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from cliquepart.clique_solvers import GuardExceeded, clique_number, exact_opt
from cliquepart.generators import fixture, fixture_graph, random_graph, staircase, zigzag
from cliquepart.graph_core import CliquePartition, Graph, is_clique, validate_partition
from cliquepart.matching import max_matching
from cliquepart.partition_algs import (
    ALGORITHMS,
    TIE_RULES,
    all_executions,
    find_execution,
    greedy,
    greedy_edmonds,
    ordering_heuristic,
    replay,
    run_algorithm,
    smart_greedy,
    verify_bound,
)

from conftest import complete, cycle, graphs


def test_greedy_examples(p4, seven):
    p = greedy(p4)
    assert p.canonical() == ((1, 3), (2, 4)) and p.edge_count() == 2
    k3_k2 = Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (4, 5)])
    assert greedy(k3_k2).canonical() == ((1, 2, 3), (4, 5))
    p = greedy(seven)
    assert p.blocks[0] == {1, 4, 5}
    assert p.edge_count() == 4


def test_smart_greedy_examples(p4, seven):
    for tie in TIE_RULES:
        assert smart_greedy(p4, tie).edge_count() == 2
    p = smart_greedy(seven)
    assert p.blocks[0] == {1, 4, 5}
    assert p.edge_count() == 4 < exact_opt(seven)
    assert smart_greedy(complete(6)).edge_count() == 15


def test_greedy_edmonds_examples(seven):
    assert greedy_edmonds(cycle(5)).edge_count() == 2
    # after {1,4,5} the residual edges 3-7 and 6-7 share vertex 7
    p = greedy_edmonds(seven)
    assert p.canonical() == ((1, 4, 5), (2,), (3, 7), (6,))
    assert p.edge_count() == 4


def test_min_delta_tie_rule():
    # {3,5} cuts one edge, the lexicographically least {1,2} cuts two
    g = Graph.from_edges(5, [(1, 2), (2, 3), (2, 4), (3, 5)])
    assert greedy(g, "lexicographic").blocks[0] == {1, 2}
    assert greedy(g, "min_delta_then_lex").blocks[0] == {3, 5}
    # among the two one-cut ends of a path the earlier wins
    g = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
    assert greedy(g, "min_delta_then_lex").blocks[0] == {1, 2}


def test_branch_all_is_not_a_single_run(p4):
    with pytest.raises(ValueError):
        greedy(p4, "branch_all")
    with pytest.raises(ValueError):
        run_algorithm(p4, "nope")


@given(graphs(max_n=10))
def test_outputs_are_valid(g):
    for alg in ALGORITHMS:
        for tie in TIE_RULES:
            assert validate_partition(g, run_algorithm(g, alg, tie))


@given(graphs(max_n=10))
def test_blocks_are_maximum_cliques_in_turn(g):
    p = greedy(g)
    left = set(g.vertices)
    for b in p.blocks:
        rest = Graph.from_edges(g.n, [e for e in g.edges() if e[0] in left and e[1] in left])
        assert len(b) == clique_number(rest, sum(1 << v for v in left))
        left -= b


def test_all_executions_examples(p4, seven):
    assert all_executions(p4, "greedy").edge_counts == [1, 2]
    assert all_executions(p4, "greedy").worst.partition.canonical() == ((1,), (2, 3), (4,))
    assert all_executions(p4, "smart_greedy").edge_counts == [2]
    counts = all_executions(seven, "smart_greedy").edge_counts
    assert min(counts) < 5
    assert all_executions(seven, "greedy_edmonds").edge_counts == [4, 5]


def test_all_executions_guard():
    with pytest.raises(GuardExceeded):
        all_executions(Graph.from_edges(13, []), "greedy")


@settings(max_examples=60)
@given(graphs(max_n=8))
def test_all_executions_contains_single_runs(g):
    for alg in ALGORITHMS:
        counts = all_executions(g, alg).edge_counts
        for tie in TIE_RULES:
            assert run_algorithm(g, alg, tie).edge_count() in counts
        for o in all_executions(g, alg).outcomes:
            assert validate_partition(g, o.partition)


def test_find_execution(seven):
    p = find_execution(seven, "smart_greedy", 4)
    assert p is not None and p.edge_count() == 4
    assert find_execution(seven, "greedy", 6) is None


def test_replay(seven):
    p = replay(seven, "greedy", [{3, 4, 5}])
    assert p.edge_count() == 5
    with pytest.raises(ValueError):
        replay(seven, "greedy", [{1, 2}])
    with pytest.raises(ValueError):
        replay(seven, "greedy_edmonds", [{1, 4, 5}, {3, 7}])


def test_triangle_free_edmonds_is_optimal():
    for seed in range(40):
        g = random_graph(12, 0.3, seed)
        if clique_number(g) > 2:
            continue
        assert greedy_edmonds(g).edge_count() == len(max_matching(g)) == exact_opt(g)


# -- ordering heuristic ----------------------------------------------------------------


def test_ordering_heuristic_examples():
    p = ordering_heuristic(staircase(3), "index")
    assert p.canonical() == ((1, 2), (3, 4), (5, 6)) and p.edge_count() == 3
    p = ordering_heuristic(zigzag(3), "sequence")
    assert p.canonical() == ((1, 6), (2, 5), (3, 4)) and p.edge_count() == 3
    assert ordering_heuristic(list(range(1, 7))).edge_count() == 0


@pytest.mark.parametrize("k", range(1, 6))
def test_ordering_heuristic_failures(k):
    for name, order in (("staircase", "index"), ("zigzag", "sequence")):
        g = fixture_graph(name, k)
        from cliquepart.generators import fixture
        p = ordering_heuristic(fixture(name, k), order)
        assert validate_partition(g, p)
        assert p.edge_count() == k
        assert exact_opt(g) == comb(k + 1, 2)


# -- bound verification -------------------------------------------------------------


def test_verify_bound_examples(p4, seven):
    rep = verify_bound(complete(4), CliquePartition.of([{1, 2, 3, 4}], 4))
    assert rep.satisfied and rep.ratio == 1
    worst = all_executions(seven, "greedy_edmonds").worst.partition
    rep = verify_bound(seven, worst)
    assert rep.omega_prime == 3 and rep.bound == Fraction(3, 2)
    assert rep.opt_edges == 5 and rep.alg_edges == 4 and rep.satisfied
    worst = all_executions(p4, "greedy").worst.partition
    rep = verify_bound(p4, worst)
    assert rep.alg_edges == 1 and rep.two_approx and rep.deletion_two_approx


def test_verify_bound_rejects_invalid(p4):
    with pytest.raises(ValueError):
        verify_bound(p4, CliquePartition.of([{1, 2}, {3}, {4}], 4))


@settings(max_examples=60)
@given(graphs(max_n=9))
def test_bounds_hold_on_all_executions(g):
    opt = exact_opt(g)
    for alg in ALGORITHMS:
        for o in all_executions(g, alg).outcomes:
            rep = verify_bound(g, o.partition, opt)
            assert rep.two_approx and rep.deletion_two_approx
            if alg == "greedy_edmonds":
                assert rep.satisfied
