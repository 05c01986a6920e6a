import pytest
from hypothesis import given

from cliquepart.graph_core import (
    CliquePartition,
    Graph,
    GraphFormatError,
    InvalidPartitionError,
    cut_edges,
    deleted_edges,
    format_edge_list,
    is_clique,
    is_cluster_graph,
    parse_edge_list,
    partition_edges,
    remove_deleted,
    validate_partition,
)
from cliquepart.partition_algs import greedy

from conftest import complete, graphs, path


def test_graph_basics():
    g = Graph.from_edges(4, [(2, 1), (3, 2)])
    assert g.m == 2
    assert g.edges() == [(1, 2), (2, 3)]
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(1, 3)
    assert g.neighbors(2) == [1, 3]
    assert g.degree(4) == 0


@pytest.mark.parametrize("n, edges", [(3, [(1, 1)]), (3, [(1, 4)]), (-1, [])])
def test_from_edges_rejects(n, edges):
    with pytest.raises(ValueError):
        Graph.from_edges(n, edges)


def test_is_clique(p4):
    assert is_clique(complete(4), {1, 2, 3, 4})
    assert is_clique(p4, {1, 3})
    assert not is_clique(p4, {1, 2})
    assert is_clique(p4, set())


def test_is_cluster_graph(p4):
    k3_k2 = Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (4, 5)])
    assert is_cluster_graph(k3_k2)
    assert not is_cluster_graph(path(3))
    assert not is_cluster_graph(p4)


def test_partition_edges(seven):
    assert partition_edges(seven, CliquePartition.of([{3, 4, 5}, {1, 2}, {6, 7}], 7)) == 5
    assert partition_edges(seven, CliquePartition.of([{v} for v in range(1, 8)], 7)) == 0
    assert partition_edges(complete(4), CliquePartition.of([{1, 2, 3, 4}], 4)) == 6


def test_deleted_edges(seven, p4):
    assert deleted_edges(seven, CliquePartition.of([{3, 4, 5}, {1, 2}, {6, 7}], 7)) == 3
    assert deleted_edges(complete(4), CliquePartition.of([{1, 2, 3, 4}], 4)) == 0
    assert deleted_edges(p4, CliquePartition.of([{2, 3}, {1}, {4}], 4)) == 2


def test_invalid_partition_raises(p4):
    with pytest.raises(InvalidPartitionError):
        partition_edges(p4, CliquePartition.of([{1, 2}, {3}, {4}], 4))


def test_cut_edges(seven):
    assert len(cut_edges(seven, {1, 4, 5})) == 3
    assert len(cut_edges(seven, {3, 4, 5})) == 3
    assert cut_edges(seven, range(1, 8)) == frozenset()
    assert cut_edges(seven, {6}) == {(6, 7)}


def test_validate_partition():
    k3 = complete(3)
    assert validate_partition(k3, CliquePartition.of([{1, 2, 3}], 3))
    check = validate_partition(k3, CliquePartition.of([{1, 2}, {2, 3}], 3))
    assert not check and check.reason == "overlap"
    p3 = path(3)
    check = validate_partition(p3, CliquePartition.of([{1, 3}, {2}], 3))
    assert not check and check.reason == "not_clique"
    assert validate_partition(k3, CliquePartition.of([{1, 2}], 3)).reason == "uncovered"
    assert validate_partition(k3, CliquePartition.of([{1, 2, 3}], 4)).reason == "size_mismatch"
    assert validate_partition(k3, CliquePartition.of([{1, 2, 3, 4}], 3)).reason == "out_of_range"


@given(graphs())
def test_kept_plus_deleted_is_m(g):
    p = greedy(g)
    assert partition_edges(g, p) + deleted_edges(g, p) == g.m
    assert is_cluster_graph(remove_deleted(g, p))


@given(graphs())
def test_edge_list_round_trip(g):
    text = format_edge_list(g)
    assert parse_edge_list(text) == g
    assert format_edge_list(parse_edge_list(text)) == text


def test_parse_comments_and_blanks():
    g = parse_edge_list("# k3\n3 3\n\n1 2\n2 3  # last two\n1 3\n")
    assert g == complete(3)


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "a b\n",
    "3 2\n1 2\n",
    "3 1\n1 4\n",
    "3 1\n2 2\n",
    "3 2\n1 2\n2 1\n",
    "3 1\n1 2 3\n",
])
def test_parse_rejects(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)
