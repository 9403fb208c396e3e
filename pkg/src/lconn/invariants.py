"""Exact connectivity-type invariants by exhaustive search over vertex subsets.

Everything here is exponential in ``n`` on purpose.  Per-graph tables over
all ``2**n`` vertex masks are built with numpy (component counts of every
induced subgraph, internal edge counts), after which each invariant is a
reduction over those tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .graph import Digraph, Graph, popcount, scc_count

MAX_EXHAUSTIVE_ORDER = 16
_NEG = -(1 << 30)


@lru_cache(maxsize=None)
def _masks(n: int) -> tuple[np.ndarray, np.ndarray]:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        pc += (masks >> v) & 1
    return masks, pc


@lru_cache(maxsize=None)
def _lowbit_pairs(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """All (M, T) with T a proper subset of M containing the lowest bit of M.

    Returned sorted by M, together with the distinct M values and the offsets
    of their runs, ready for ``np.maximum.reduceat``.
    """
    ms, ts = [], []
    for m in range(1, 1 << n):
        low = m & -m
        rest = m ^ low
        sub = rest
        while True:
            t = sub | low
            if t != m:
                ms.append(m)
                ts.append(t)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    marr = np.array(ms, dtype=np.int64)
    tarr = np.array(ts, dtype=np.int64)
    order = np.argsort(marr, kind="stable")
    marr, tarr = marr[order], tarr[order]
    uniq, starts = np.unique(marr, return_index=True)
    return marr, tarr, uniq, starts


def _check_size(g: Graph) -> None:
    if g.n > MAX_EXHAUSTIVE_ORDER:
        raise ValueError(f"exhaustive invariants are limited to n <= {MAX_EXHAUSTIVE_ORDER}")


def component_table(g: Graph) -> np.ndarray:
    """``c[alive]`` = number of components of the subgraph induced on ``alive``."""
    _check_size(g)
    n = g.n
    masks, _ = _masks(n)
    nb = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        lo, hi = 1 << v, 1 << (v + 1)
        nb[lo:hi] = nb[:lo] | g.adj[v]
    low = masks & -masks
    reach = low
    for _ in range(n):
        reach = masks & (reach | nb[reach])
    rest = masks & ~reach
    comps = np.zeros(1 << n, dtype=np.int64)
    for _ in range(n):
        comps = np.where(masks == 0, 0, 1 + comps[rest])
    return comps


def edge_table(g: Graph) -> np.ndarray:
    """``e[mask]`` = number of edges with both ends in ``mask``."""
    _check_size(g)
    masks, pc = _masks(g.n)
    twice = np.zeros(1 << g.n, dtype=np.int64)
    for v in range(g.n):
        twice += ((masks >> v) & 1) * pc[masks & g.adj[v]]
    return twice // 2


def max_components_by_size(g: Graph) -> list[int]:
    """``out[k]`` = most components left by deleting some k vertices (k < n)."""
    comps = component_table(g)
    masks, pc = _masks(g.n)
    full = (1 << g.n) - 1
    removed_size = pc[full ^ masks]
    keep = masks != 0
    out = np.zeros(g.n, dtype=np.int64)
    np.maximum.at(out, removed_size[keep], comps[keep])
    return [int(x) for x in out]


def connectivity_profile(g: Graph) -> dict[int, int]:
    """``{l: kappa_l(g)}`` for every ``2 <= l <= n``."""
    best = max_components_by_size(g)
    n = g.n
    prof = {}
    for l in range(2, n + 1):
        kappa = n - l + 1
        for k, c in enumerate(best[: n - l + 1]):
            if c >= l:
                kappa = k
                break
        prof[l] = kappa
    return prof


def l_connectivity(g: Graph, l: int) -> int:
    """Fewest vertices whose removal leaves at least ``l`` components or fewer than ``l`` vertices.

    Disconnected inputs are handled the same way (the empty set may already
    leave ``l`` components, giving 0).
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    if l > g.n:
        raise ValueError(f"l-connectivity needs n >= l (n={g.n}, l={l})")
    return connectivity_profile(g)[l]


def vertex_connectivity(g: Graph) -> int:
    if g.n == 1:
        return 0
    return l_connectivity(g, 2)


def toughness(g: Graph) -> Fraction:
    """Exact toughness ``min |S| / c(G - S)`` over cuts with ``c(G - S) >= 2``."""
    if g.is_complete():
        raise ValueError("toughness is undefined for complete graphs")
    best = max_components_by_size(g)
    return min(Fraction(k, c) for k, c in enumerate(best) if c >= 2)


def _partition_tables(g: Graph, upto: int) -> tuple[int, list[np.ndarray]]:
    """``f[k][M]`` = most internal edges over partitions of ``M`` into exactly k blocks."""
    e = edge_table(g)
    marr, tarr, uniq, starts = _lowbit_pairs(g.n)
    tables = [None, e]
    for k in range(2, upto + 1):
        prev = tables[-1]
        vals = np.where(prev[marr ^ tarr] > _NEG, e[tarr] + prev[marr ^ tarr], _NEG)
        f = np.full(1 << g.n, _NEG, dtype=np.int64)
        if len(vals):
            f[uniq] = np.maximum.reduceat(vals, starts)
        tables.append(f)
    return g.m, tables


def edge_connectivity_profile(g: Graph) -> dict[int, int]:
    """``{l: kappa'_l(g)}`` for every ``2 <= l <= n``."""
    _check_size(g)
    m, tables = _partition_tables(g, g.n)
    full = (1 << g.n) - 1
    return {l: m - int(tables[l][full]) for l in range(2, g.n + 1)}


def l_edge_connectivity(g: Graph, l: int) -> int:
    """Fewest edges whose deletion leaves at least ``l`` components.

    Computed as the minimum number of crossing edges over partitions of the
    vertex set into exactly ``l`` nonempty blocks.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    if l > g.n:
        raise ValueError(f"l-edge-connectivity needs n >= l (n={g.n}, l={l})")
    m, tables = _partition_tables(g, l)
    return m - int(tables[l][(1 << g.n) - 1])


def edge_connectivity(g: Graph) -> int:
    return l_edge_connectivity(g, 2)


def set_partitions(n: int) -> Iterator[list[int]]:
    """Partitions of ``range(n)`` as lists of block masks (restricted growth order)."""
    if n == 0:
        yield []
        return
    blocks: list[int] = []

    def rec(v: int) -> Iterator[list[int]]:
        if v == n:
            yield list(blocks)
            return
        for i in range(len(blocks)):
            blocks[i] |= 1 << v
            yield from rec(v + 1)
            blocks[i] &= ~(1 << v)
        blocks.append(1 << v)
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)


def tree_packing_number(g: Graph) -> int:
    """Maximum number of edge-disjoint spanning trees.

    Uses the partition formula: the minimum over vertex partitions ``P`` with
    at least two blocks of ``floor(crossing(P) / (|P| - 1))``.
    """
    if g.n < 2:
        raise ValueError("tree packing number needs n >= 2")
    if not g.is_connected():
        return 0
    e = edge_table(g)
    m = g.m
    best = None
    for part in set_partitions(g.n):
        if len(part) < 2:
            continue
        crossing = m - sum(int(e[b]) for b in part)
        val = crossing // (len(part) - 1)
        if best is None or val < best:
            best = val
    return best


def independence_number(g: Graph) -> int:
    """Maximum independent set size by bitmask branch and bound."""
    best = 0
    adj = g.adj

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rec(cand & ~adj[v] & ~low, size + 1)
        if adj[v] & cand:
            rec(cand & ~low, size)

    rec((1 << g.n) - 1, 0)
    return best


@dataclass
class InvariantRecord:
    kappa_l: dict[int, int] = field(default_factory=dict)
    kappa_edge_l: dict[int, int] = field(default_factory=dict)
    toughness: Fraction | None = None
    tau: int | None = None
    alpha: int = 0
    delta: int = 0


def invariant_record(g: Graph, ls: Iterable[int] | None = None) -> InvariantRecord:
    """Collect the invariants of ``g``; ``ls`` restricts the recorded l values."""
    wanted = list(range(2, g.n + 1)) if ls is None else [l for l in ls if 2 <= l <= g.n]
    kap = connectivity_profile(g) if g.n >= 2 else {}
    kape = edge_connectivity_profile(g) if g.n >= 2 else {}
    connected = g.is_connected()
    return InvariantRecord(
        kappa_l={l: kap[l] for l in wanted},
        kappa_edge_l={l: kape[l] for l in wanted},
        toughness=toughness(g) if connected and not g.is_complete() else None,
        tau=tree_packing_number(g) if g.n >= 2 else None,
        alpha=independence_number(g),
        delta=g.min_degree(),
    )



def digraph_connectivity_profile(d: Digraph) -> dict[int, int]:
    """``{l: kappa_l(d)}``: fewest vertices whose removal leaves at least ``l``
    strongly connected components or fewer than ``l`` vertices."""
    n = d.n
    full = (1 << n) - 1
    best = [0] * n
    for removed in range(full):
        k = popcount(removed)
        c = scc_count(d, removed)
        if c > best[k]:
            best[k] = c
    prof = {}
    for l in range(2, n + 1):
        prof[l] = next((k for k in range(n - l + 1) if best[k] >= l), n - l + 1)
    return prof


def digraph_l_connectivity(d: Digraph, l: int) -> int:
    if l < 2:
        raise ValueError("l must be at least 2")
    if l > d.n:
        raise ValueError(f"l-connectivity needs n >= l (n={d.n}, l={l})")
    return digraph_connectivity_profile(d)[l]
