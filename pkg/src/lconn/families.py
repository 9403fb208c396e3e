"""Constructors for the extremal graph and digraph families.

Every constructor validates its parameter tuple up front and raises
:class:`InfeasibleParameters` naming the inequality that fails.  The returned
:class:`FamilyInstance` carries the vertex partition of the construction; for
all families here that partition is equitable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import (
    Digraph,
    Graph,
    complete_digraph,
    complete_graph,
    digraph_join,
    digraph_union,
    disjoint_union,
    empty_graph,
    join,
)


class InfeasibleParameters(ValueError):
    pass


@dataclass(frozen=True)
class PartsSpec:
    hub: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.hub < 0:
            raise InfeasibleParameters("hub size must be nonnegative")
        if not self.parts:
            raise InfeasibleParameters("parts must be nonempty")
        if any(p < 1 for p in self.parts):
            raise InfeasibleParameters("every part needs at least one vertex")

    @property
    def order(self) -> int:
        return self.hub + sum(self.parts)


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph | Digraph
    partition: tuple[tuple[int, ...], ...]
    params: dict = field(default_factory=dict)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InfeasibleParameters(message)


def _blocks(*sizes: int) -> tuple[tuple[int, ...], ...]:
    out, start = [], 0
    for s in sizes:
        if s:
            out.append(tuple(range(start, start + s)))
        start += s
    return tuple(out)


def _union_cliques(parts: Sequence[int]) -> Graph:
    g = complete_graph(parts[0])
    for p in parts[1:]:
        g = disjoint_union(g, complete_graph(p))
    return g


def family_join_cliques(s: int, parts: Sequence[int]) -> FamilyInstance:
    """``K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})`` with partition hub, then each clique."""
    shape = PartsSpec(s, tuple(parts))
    body = _union_cliques(shape.parts)
    g = body if s == 0 else join(complete_graph(s), body)
    return FamilyInstance(g, _blocks(s, *shape.parts), {"s": s, "parts": list(shape.parts)})


def family_vertex(n: int, kappa_l: int, delta: int, l: int) -> FamilyInstance:
    """Maximiser of the spectral radius for given order, minimum degree and l-connectivity.

    For ``kappa_l > delta`` the graph is ``K_1 ∪ (K_kappa ∨ (K_{n-kappa-l+1} ∪ (l-2)K_1))``
    with the lone vertex joined to the ``delta`` lowest-indexed hub vertices.
    Otherwise it is ``K_kappa ∨ (K_{n-kappa-(l-1)(delta-kappa+1)} ∪ (l-1)K_{delta-kappa+1})``.
    """
    params = {"n": n, "kappa_l": kappa_l, "delta": delta, "l": l}
    _require(l >= 2, "l >= 2")
    _require(kappa_l >= 1, "kappa_l >= 1 (connected graphs)")
    _require(delta >= 1, "delta >= 1 (connected graphs)")
    _require(n >= kappa_l + l, "n >= kappa_l + l")
    if kappa_l > delta:
        _require(l >= 3, "kappa_2 <= delta always, so kappa_l > delta needs l >= 3")
        big = n - kappa_l - l + 1
        # vertex order: hub neighbours of u, other hub, u, big clique, singletons
        core = join(complete_graph(kappa_l), _union_cliques([big] + [1] * (l - 2)))
        g = disjoint_union(core, empty_graph(1))
        u = g.n - 1
        g = g.add_edges((u, h) for h in range(delta))
        perm = list(range(kappa_l)) + [kappa_l + 1 + i for i in range(core.n - kappa_l)] + [kappa_l]
        g = g.relabel(perm)
        part = _blocks(delta, kappa_l - delta, 1, big, l - 2)
        return FamilyInstance(g, part, params)
    small = delta - kappa_l + 1
    big = n - kappa_l - (l - 1) * small
    _require(big >= small, "n - kappa_l - (l-1)(delta-kappa_l+1) >= delta-kappa_l+1")
    inst = family_join_cliques(kappa_l, [big] + [small] * (l - 1))
    return FamilyInstance(inst.graph, inst.partition, params)


def family_vertex_small(n: int, kappa_l: int, delta: int, l: int) -> FamilyInstance:
    """Degenerate order ``n = kappa_l + l - 1``: ``K_1 ∪ K_{n-1}`` plus ``delta`` edges.

    The lone vertex is last and is joined to the ``delta`` lowest-indexed
    clique vertices.  Not used by the theorem harness.
    """
    params = {"n": n, "kappa_l": kappa_l, "delta": delta, "l": l}
    _require(n == kappa_l + l - 1, "n == kappa_l + l - 1")
    _require(1 <= delta <= n - 1, "1 <= delta <= n - 1")
    g = disjoint_union(complete_graph(n - 1), empty_graph(1))
    g = g.add_edges((n - 1, h) for h in range(delta))
    return FamilyInstance(g, _blocks(delta, n - 1 - delta, 1), params)


def family_edge(n: int, a: int, b: int) -> FamilyInstance:
    """``H^{a,b}_n``: ``K_{a-b+2} ∨ (K_1 ∪ K_{n-a-1})`` with ``b-2`` pendant edges on hub vertex 0."""
    params = {"n": n, "a": a, "b": b}
    _require(b >= 2, "b >= 2")
    _require(a >= b - 1, "a >= b - 1")
    _require(n >= a + 2, "n >= a + 2")
    hub = a - b + 2
    rest = n - a - 1
    core = join(complete_graph(hub), _union_cliques([1, rest]))
    g = disjoint_union(core, empty_graph(b - 2)) if b > 2 else core
    g = g.add_edges((0, core.n + i) for i in range(b - 2))
    part = _blocks(1, hub - 1, 1, rest, b - 2)
    return FamilyInstance(g, part, params)


def family_B(n: int, delta: int, kappa_prime: int) -> FamilyInstance:
    """``B^{k'}_{n,delta+1}``: ``K_{delta+1} ∪ K_{n-delta-1}`` plus ``k'`` edges from vertex 0."""
    params = {"n": n, "delta": delta, "kappa_prime": kappa_prime}
    _require(delta >= 0, "delta >= 0")
    _require(n - delta - 1 >= 1, "n >= delta + 2")
    _require(0 <= kappa_prime <= n - delta - 1, "0 <= kappa' <= n - delta - 1")
    g = disjoint_union(complete_graph(delta + 1), complete_graph(n - delta - 1))
    g = g.add_edges((0, delta + 1 + i) for i in range(kappa_prime))
    part = _blocks(1, delta, kappa_prime, n - delta - 1 - kappa_prime)
    return FamilyInstance(g, part, params)


def family_digraph(k: int, parts: Sequence[int]) -> FamilyInstance:
    """``K_k ∇ (K_{n_1} ∪ ... ∪ K_{n_l})`` plus every arc from block i to block j > i."""
    shape = PartsSpec(k, tuple(parts))
    _require(k >= 1, "k >= 1")
    _require(len(shape.parts) >= 2, "at least two parts (l >= 2)")
    body = complete_digraph(shape.parts[0])
    for p in shape.parts[1:]:
        body = digraph_union(body, complete_digraph(p))
    d = digraph_join(complete_digraph(k), body)
    rows = list(d.adj)
    blocks = _blocks(k, *shape.parts)
    for i, bi in enumerate(blocks[1:], start=1):
        later = 0
        for bj in blocks[i + 1:]:
            for v in bj:
                later |= 1 << v
        for v in bi:
            rows[v] |= later
    d = Digraph(d.n, tuple(rows))
    return FamilyInstance(d, blocks, {"k": k, "parts": list(shape.parts)})


def family_digraph_extremal(n: int, kappa_l: int, l: int) -> FamilyInstance:
    """``G^{kappa_l}_n``: hub ``kappa_l``, first part ``n-kappa_l-l+1``, the others singletons."""
    _require(l >= 2, "l >= 2")
    _require(kappa_l >= 1, "kappa_l >= 1")
    _require(n >= kappa_l + l, "n >= kappa_l + l")
    inst = family_digraph(kappa_l, [n - kappa_l - l + 1] + [1] * (l - 1))
    return FamilyInstance(inst.graph, inst.partition, {"n": n, "kappa_l": kappa_l, "l": l})
