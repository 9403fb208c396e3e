"""Shared strategies and brute-force oracles for the test suite.

The oracles here deliberately avoid the package's own algorithms so they
can cross-check them.
"""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from lconn.graph import Digraph, Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if connected:
        # a random spanning path keeps things connected
        order = draw(st.permutations(range(n)))
        edges += list(zip(order, order[1:]))
    return Graph.from_edges(n, edges)


@st.composite
def digraphs(draw, min_n: int = 1, max_n: int = 6, strong: bool = False) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs = [p for p, keep in zip(pairs, mask) if keep]
    if strong and n > 1:
        order = draw(st.permutations(range(n)))
        arcs += list(zip(order, order[1:] + order[:1]))
    return Digraph.from_arcs(n, arcs)


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def to_nx_digraph(d: Digraph) -> nx.DiGraph:
    h = nx.DiGraph()
    h.add_nodes_from(range(d.n))
    h.add_edges_from(d.arcs())
    return h


def nx_components_without(h: nx.Graph, removed) -> int:
    sub = h.subgraph([v for v in h if v not in removed])
    return nx.number_connected_components(sub)


def brute_kappa_l(g: Graph, l: int) -> int:
    """Smallest vertex set leaving >= l components or < l vertices, by networkx."""
    h = to_nx(g)
    for k in range(g.n + 1):
        for s in combinations(range(g.n), k):
            if g.n - k < l or nx_components_without(h, s) >= l:
                return k
    raise AssertionError("unreachable")


def brute_kappa_edge_l(g: Graph, l: int) -> int:
    """Fewest deleted edges leaving >= l components, over every kept-edge subset."""
    edges = g.edges()
    m = len(edges)
    best = None
    for kept in range(1 << m):
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = g.n
        size = 0
        for i, (a, b) in enumerate(edges):
            if kept >> i & 1:
                size += 1
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    comps -= 1
        if comps >= l and (best is None or m - size < best):
            best = m - size
    return best


def brute_toughness(g: Graph):
    from fractions import Fraction

    h = to_nx(g)
    best = None
    for k in range(1, g.n - 1):
        for s in combinations(range(g.n), k):
            c = nx_components_without(h, s)
            if c >= 2:
                val = Fraction(k, c)
                best = val if best is None or val < best else best
    return best


def brute_tree_packing(g: Graph) -> int:
    """Largest family of edge-disjoint spanning trees by exhaustive search (tiny graphs)."""
    h = to_nx(g)
    if not nx.is_connected(h):
        return 0
    trees = [frozenset(tuple(sorted(e)) for e in t.edges())
             for t in nx.SpanningTreeIterator(h)]
    best = 0

    def extend(start: int, used: frozenset, count: int) -> None:
        nonlocal best
        best = max(best, count)
        if count + (g.m - len(used)) // (g.n - 1) <= best:
            return
        for i in range(start, len(trees)):
            if not trees[i] & used:
                extend(i + 1, used | trees[i], count + 1)

    extend(0, frozenset(), 0)
    return best


def labelled_min_codes(n: int) -> list[int]:
    """Edge-set codes minimal over all vertex relabellings: one per isomorphism class."""
    pairs = list(combinations(range(n), 2))
    where = {p: k for k, p in enumerate(pairs)}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    for perm in permutations(range(n)):
        img = np.zeros_like(codes)
        for k, (i, j) in enumerate(pairs):
            a, b = sorted((perm[i], perm[j]))
            img |= ((codes >> k) & 1) << where[(a, b)]
        codes = codes[codes <= img]
    return [int(c) for c in codes]


def graph_from_code(n: int, code: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])
