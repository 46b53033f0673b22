import pytest
from hypothesis import given, settings

from reconlab.graph import (
    Graph,
    GraphError,
    block_count_at,
    blocks,
    build_graph,
    component_count,
    degree,
    delete_vertex,
    edge_count,
    is_cutnode,
    is_eulerian,
    relabel,
)

from helpers import BOWTIE, K2_K1, K3, P3, P4, TWO_K1, TWO_K3, all_labeled, brute_blocks, graph_and_perm, graphs


def test_build_triangle():
    assert edge_count(K3) == 3
    assert K3.edges() == [(0, 1), (0, 2), (1, 2)]


def test_duplicate_edges_collapse():
    assert edge_count(build_graph(3, [(0, 1), (1, 0)])) == 1


@pytest.mark.parametrize(
    "n, edges, fragment",
    [(2, [(0, 0)], "self-loop"), (3, [(0, 3)], "(0, 3)"), (3, [(-1, 2)], "(-1, 2)")],
)
def test_build_errors(n, edges, fragment):
    with pytest.raises(GraphError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        build_graph(n, edges)


def test_build_rejects_empty():
    with pytest.raises(GraphError):
        build_graph(0, [])


def test_bits_and_mask_roundtrip():
    assert K3.bits == "111"
    assert P3.bits == "101"
    for G in all_labeled(4):
        assert Graph.from_mask(4, G.mask) == G
        assert Graph.from_bits(4, G.bits) == G


def test_delete_vertex_examples():
    assert delete_vertex(K3, 0) == build_graph(2, [(0, 1)])
    assert delete_vertex(P3, 1) == TWO_K1
    assert delete_vertex(P3, 0) == build_graph(2, [(0, 1)])
    # shift-down relabelling
    assert delete_vertex(P4, 1) == build_graph(3, [(1, 2)])


def test_delete_vertex_errors():
    with pytest.raises(GraphError):
        delete_vertex(build_graph(1, []), 0)
    with pytest.raises(GraphError):
        delete_vertex(K3, 3)


def test_degree_examples():
    assert [degree(K3, v) for v in range(3)] == [2, 2, 2]
    assert degree(P3, 1) == 2 and degree(P3, 0) == 1
    assert degree(build_graph(4, []), 2) == 0
    with pytest.raises(GraphError):
        degree(K3, 5)


def test_edge_count_examples():
    assert edge_count(K3) == 3
    assert edge_count(P4) == 3
    assert edge_count(delete_vertex(K3, 0)) + degree(K3, 0) == 3


def test_component_count_examples():
    assert component_count(K3) == 1
    assert component_count(TWO_K1) == 2
    assert component_count(K2_K1) == 2


def test_cutnode_examples():
    assert is_cutnode(P3, 1)
    assert not any(is_cutnode(K3, v) for v in range(3))
    assert not is_cutnode(K2_K1, 2)


def test_block_count_examples():
    assert block_count_at(P3, 1) == 2
    assert block_count_at(K3, 0) == 1
    bow_blocks = brute_blocks(BOWTIE)
    assert sum(2 in b for b in bow_blocks) == 2
    assert block_count_at(BOWTIE, 2) == 2
    assert block_count_at(K2_K1, 2) == 1


def test_eulerian_examples():
    assert is_eulerian(K3)
    assert not is_eulerian(P3)
    assert not is_eulerian(TWO_K3)


@pytest.mark.parametrize("n", range(2, 7))
def test_edge_identity_and_handshake_exhaustive(n):
    for G in all_labeled(n):
        E = edge_count(G)
        assert sum(degree(G, v) for v in range(n)) == 2 * E
        for i in range(n):
            assert E == edge_count(delete_vertex(G, i)) + degree(G, i)


@pytest.mark.parametrize("n", range(2, 7))
def test_cutnode_and_blocks_against_brute_force(n):
    for G in all_labeled(n):
        brute = brute_blocks(G)
        assert sorted(sorted(b) for b in blocks(G)) == sorted(sorted(b) for b in brute)
        c = component_count(G)
        for i in range(n):
            cut = component_count(delete_vertex(G, i)) > c
            assert is_cutnode(G, i) == cut
            bl = sum(i in b for b in brute) if cut else 1
            assert block_count_at(G, i) == bl


@settings(max_examples=200)
@given(graph_and_perm(min_n=2, max_n=8))
def test_delete_commutes_with_relabel(gp):
    G, perm = gp
    H = relabel(G, perm)
    for i in range(G.n):
        # vertex k != i of G - i sits at k - (k > i); it lands on perm[k] - (perm[k] > perm[i])
        induced = [0] * (G.n - 1)
        for k in range(G.n):
            if k == i:
                continue
            induced[k - (k > i)] = perm[k] - (perm[k] > perm[i])
        assert relabel(delete_vertex(G, i), induced) == delete_vertex(H, perm[i])


@given(graphs(max_n=8))
def test_symmetry_and_no_loops(G):
    for i in range(G.n):
        assert not G.adj[i] >> i & 1
        for j in range(G.n):
            assert G.has_edge(i, j) == G.has_edge(j, i)


def test_graph_is_immutable():
    with pytest.raises(AttributeError):
        K3.n = 4
