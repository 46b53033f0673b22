"""Shared graph fixtures, hypothesis strategies and brute-force oracles."""

from itertools import combinations, permutations

from hypothesis import strategies as st

from reconlab.graph import Graph, build_graph, relabel

K3 = build_graph(3, [(0, 1), (1, 2), (2, 0)])
P3 = build_graph(3, [(0, 1), (1, 2)])
P4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K2 = build_graph(2, [(0, 1)])
TWO_K1 = build_graph(2, [])
K2_K1 = build_graph(3, [(0, 1)])
TWO_K2 = build_graph(4, [(0, 1), (2, 3)])
C6 = build_graph(6, [(i, (i + 1) % 6) for i in range(6)])
TWO_K3 = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
BOWTIE = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def all_labeled(n):
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        yield Graph.from_mask(n, mask)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    return Graph.from_mask(n, draw(st.integers(0, (1 << m) - 1)))


@st.composite
def graph_and_perm(draw, min_n=1, max_n=8):
    G = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(G.n)))
    return G, tuple(perm)


def random_graph(rng, n, p=0.5):
    return build_graph(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def brute_min_bits(G):
    return min(relabel(G, p).bits for p in permutations(range(G.n)))


def brute_orbit(G):
    return {relabel(G, p).mask for p in permutations(range(G.n))}


def brute_blocks(G):
    """Maximal vertex sets of size >= 2 inducing a connected subgraph with no cutnode."""
    adj = G.adj

    def connected(vs):
        if not vs:
            return True
        reach = vs & -vs
        while True:
            grown = reach
            for v in range(G.n):
                if reach >> v & 1:
                    grown |= adj[v] & vs
            if grown == reach:
                return reach == vs
            reach = grown

    def nonseparable(vs):
        if bin(vs).count("1") < 2 or not connected(vs):
            return False
        return all(connected(vs & ~(1 << v)) for v in range(G.n) if vs >> v & 1)

    cands = [vs for vs in range(1 << G.n) if nonseparable(vs)]
    maximal = [s for s in cands if not any(s != t and s & t == s for t in cands)]
    return [frozenset(v for v in range(G.n) if s >> v & 1) for s in maximal]


def brute_paths(G, l):
    """Every unoriented l-path as a tuple of vertices, by permutation filtering."""
    out = set()
    for seq in permutations(range(G.n), l + 1):
        if all(G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            out.add(min(seq, seq[::-1]))
    return out
