"""Isomorphism-free generation of small graphs and strongly connected digraphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from ..canon import canonical_labelling, orbit_labels
from ..graph import Digraph, Graph, bits, popcount
from ..invariants import connectivity_profile, edge_connectivity_profile

GRAPH_CAP = 10
DIGRAPH_CAP = 5


class ScaleError(ValueError):
    pass


@dataclass(frozen=True)
class EnumFilter:
    n: int
    min_degree: int | None = None  # exact minimum degree
    require_connected: bool = True
    l: int | None = None
    kappa_l_equals: int | None = None
    kappa_edge_l_equals: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= GRAPH_CAP:
            raise ScaleError(f"graph enumeration is capped at n <= {GRAPH_CAP}")
        if (self.kappa_l_equals is not None or self.kappa_edge_l_equals is not None) and self.l is None:
            raise ValueError("l is required with a connectivity filter")

    def accepts(self, g: Graph) -> bool:
        if self.min_degree is not None and g.min_degree() != self.min_degree:
            return False
        if self.l is not None and self.l > g.n:
            return False
        if self.kappa_l_equals is not None and connectivity_profile(g)[self.l] != self.kappa_l_equals:
            return False
        if self.kappa_edge_l_equals is not None and edge_connectivity_profile(g)[self.l] != self.kappa_edge_l_equals:
            return False
        return True


def _reach(adj: tuple[int, ...], alive: int) -> int:
    seen = alive & -alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def _deletable(adj: tuple[int, ...], n: int, connected: bool) -> int:
    """Mask of vertices whose deletion keeps the graph connected (all if not required)."""
    full = (1 << n) - 1
    if not connected:
        return full
    out = 0
    for v in range(n):
        alive = full & ~(1 << v)
        if _reach(adj, alive) == alive:
            out |= 1 << v
    return out


def _cheap_invariant(adj: tuple[int, ...], v: int) -> tuple:
    deg = [popcount(r) for r in adj]
    return deg[v], tuple(sorted(deg[w] for w in bits(adj[v])))


def _subset_orbit_reps(n: int, gens: tuple[tuple[int, ...], ...]) -> list[int]:
    """One representative (the smallest) of each orbit of Aut on vertex subsets."""
    size = 1 << n
    if not gens:
        return list(range(size))
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        for s in range(size):
            img = 0
            for v in bits(s):
                img |= 1 << gen[v]
            a, b = find(s), find(img)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [s for s in range(size) if find(s) == s]


def _accept(adj: tuple[int, ...], n: int, connected: bool) -> bool:
    """Canonical deletion test: is the newest vertex (n - 1) the canonical one to delete?"""
    new = n - 1
    cand = _deletable(adj, n, connected)
    if not cand >> new & 1:
        return False
    invs = {v: _cheap_invariant(adj, v) for v in bits(cand)}
    top = max(invs.values())
    if invs[new] != top:
        return False
    tied = [v for v, inv in invs.items() if inv == top]
    if len(tied) == 1:
        return True
    lab = canonical_labelling(adj)
    pos = {v: i for i, v in enumerate(lab.order)}
    chosen = max(tied, key=pos.__getitem__)
    orb = orbit_labels(n, lab.generators)
    return orb[chosen] == orb[new]


@lru_cache(maxsize=None)
def _level(n: int, connected: bool) -> tuple[tuple[int, ...], ...]:
    """Adjacency rows of one graph per isomorphism class on n vertices."""
    if n == 1:
        return ((0,),)
    out = []
    for parent in _level(n - 1, connected):
        gens = canonical_labelling(parent).generators
        new_bit = 1 << (n - 1)
        for s in _subset_orbit_reps(n - 1, gens):
            if connected and s == 0:
                continue
            adj = tuple(r | new_bit if s >> v & 1 else r for v, r in enumerate(parent)) + (s,)
            if _accept(adj, n, connected):
                out.append(adj)
    return tuple(out)


def enumerate_graphs(n: int, connected: bool = True) -> list[Graph]:
    """One graph per isomorphism class by canonical augmentation.

    Each graph on k vertices is extended by a new vertex joined to one subset
    from every orbit of its automorphism group; a child is kept only when the
    new vertex lies in the orbit of the child's canonical deletion vertex
    (chosen among non-cut vertices when connectivity is required).
    """
    if not 1 <= n <= GRAPH_CAP:
        raise ScaleError(f"graph enumeration is capped at n <= {GRAPH_CAP}")
    return [Graph(n, adj) for adj in _level(n, connected)]


def enumerate_connected_graphs(flt: EnumFilter) -> Iterator[Graph]:
    for g in enumerate_graphs(flt.n, flt.require_connected):
        if flt.accepts(g):
            yield g


# -- digraphs -----------------------------------------------------------------

def _arc_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


@lru_cache(maxsize=None)
def _min_code_digraphs(n: int) -> tuple[int, ...]:
    """Arc-set codes that are minimal among all their relabellings.

    Exactly one code survives per isomorphism class.  The sweep covers all
    ``2**(n(n-1))`` labelled digraphs at once with numpy.
    """
    arcs = _arc_index(n)
    where = {a: k for k, a in enumerate(arcs)}
    codes = np.arange(1 << len(arcs), dtype=np.int64)
    ident = tuple(range(n))
    for perm in permutations(range(n)):
        if perm == ident:
            continue
        img = np.zeros_like(codes)
        for k, (i, j) in enumerate(arcs):
            img |= ((codes >> k) & 1) << where[(perm[i], perm[j])]
        codes = codes[codes <= img]
    return tuple(int(c) for c in codes)


def _digraph_from_code(n: int, code: int) -> Digraph:
    rows = [0] * n
    for k, (i, j) in enumerate(_arc_index(n)):
        if code >> k & 1:
            rows[i] |= 1 << j
    return Digraph(n, tuple(rows))


@lru_cache(maxsize=None)
def _strong_digraphs(n: int) -> tuple[Digraph, ...]:
    out = []
    for code in _min_code_digraphs(n):
        d = _digraph_from_code(n, code)
        if d.is_strongly_connected():
            out.append(d)
    return tuple(out)


def enumerate_strong_digraphs(n: int) -> list[Digraph]:
    """One strongly connected digraph per isomorphism class on n vertices."""
    if not 1 <= n <= DIGRAPH_CAP:
        raise ScaleError(f"digraph enumeration is capped at n <= {DIGRAPH_CAP}")
    return list(_strong_digraphs(n))
