"""Checks of the auxiliary lemmas on concrete instances.

Each check validates the lemma's hypotheses first and raises
:class:`HypothesisError` when they fail, so a ``False`` result always means
the conclusion itself was violated.  Strict inequalities need a margin
larger than the tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Callable

from ..canon import canonical_form
from ..families import family_digraph, family_edge, family_join_cliques
from ..graph import (
    Digraph,
    Graph,
    bits,
    complete_graph,
    condensation_order,
    decode_any,
    decode_digraph6,
    disjoint_union,
    empty_graph,
    encode,
    is_isomorphic,
    popcount,
    scc_count,
    vertex_set,
)
from ..spectral import (
    TIE_TOL,
    digraph_spectral_radius,
    nonnegative_spectral_radius,
    perron_vector,
    spectral_radius,
)

LEMMAS = ("L2.2", "L2.3", "L3.2", "L3.3", "L3.4", "L4.1", "L4.2", "L4.3", "L4.4")


class HypothesisError(ValueError):
    """The instance does not satisfy the lemma's hypotheses."""


@dataclass
class LemmaResult:
    lemma_id: str
    holds: bool
    witness: dict[str, Any] = field(default_factory=dict)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise HypothesisError(message)


def _graph(obj) -> Graph:
    g = decode_any(obj) if isinstance(obj, (str, bytes)) else obj
    _need(isinstance(g, Graph), "expected an undirected graph")
    return g


def _digraph(obj) -> Digraph:
    d = decode_digraph6(obj) if isinstance(obj, (str, bytes)) else obj
    _need(isinstance(d, Digraph), "expected a digraph")
    return d


def _int(instance: dict, key: str) -> int:
    _need(key in instance, f"instance needs {key!r}")
    return int(instance[key])


def _ints(instance: dict, key: str) -> list[int]:
    _need(key in instance, f"instance needs {key!r}")
    return [int(v) for v in instance[key]]


# -- vertex rotation ------------------------------------------------------------

def rotate(g: Graph, u: int, v: int, moved) -> Graph:
    """Replace each edge ``v w`` (``w`` in ``moved``) by ``u w``."""
    return g.remove_edges((v, w) for w in moved).add_edges((u, w) for w in moved)


def _l22(inst: dict, tol: float) -> LemmaResult:
    g = _graph(inst["graph"])
    u, v = _int(inst, "u"), _int(inst, "v")
    _need(0 <= u < g.n and 0 <= v < g.n and u != v, "u and v must be distinct vertices")
    _need(g.is_connected(), "graph must be connected")
    allowed = set(g.neighbors(v)) - set(g.neighbors(u)) - {u}
    moved = _ints(inst, "moved") if "moved" in inst else sorted(allowed)
    _need(bool(moved), "N(v) minus N[u] must be nonempty")
    _need(set(moved) <= allowed and len(set(moved)) == len(moved), "moved vertices must lie in N(v) minus N[u]")
    x = perron_vector(g)
    _need(x[u] >= x[v] - 1e-12, "Perron weight of u must be at least that of v")
    before = spectral_radius(g)
    h = rotate(g, u, v, moved)
    after = spectral_radius(h)
    return LemmaResult("L2.2", after - before > tol, {
        "rho_before": before, "rho_after": after, "x_u": float(x[u]), "x_v": float(x[v]),
        "moved": list(moved), "rotated": encode(h),
    })


# -- clique rebalancing ---------------------------------------------------------

def _l23(inst: dict, tol: float) -> LemmaResult:
    s, p = _int(inst, "s"), _int(inst, "p")
    parts = _ints(inst, "parts")
    t = len(parts)
    _need(s >= 1 and p >= 1, "s >= 1 and p >= 1")
    _need(t >= 1, "at least one clique")
    _need(all(a >= b for a, b in zip(parts, parts[1:])), "parts must be nonincreasing")
    _need(parts[-1] >= p, "every part must have at least p vertices")
    n = s + sum(parts)
    target = n - s - p * (t - 1)
    _need(parts[0] < target, "largest part must be below n - s - p(t-1)")
    left = spectral_radius(family_join_cliques(s, parts).graph)
    right = spectral_radius(family_join_cliques(s, [target] + [p] * (t - 1)).graph)
    return LemmaResult("L2.3", right - left > tol, {"rho_given": left, "rho_balanced": right, "n": n})


def valid_l23_tuples(max_s: int = 3, max_t: int = 3, max_p: int = 2, max_n: int = 10):
    """Every hypothesis-satisfying ``(s, parts, p)`` inside the given bounds."""
    out = []

    def parts_from(total_left: int, t_left: int, cap: int, p: int, prefix: list[int]):
        if t_left == 0:
            yield list(prefix)
            return
        for a in range(min(cap, total_left), p - 1, -1):
            yield from parts_from(total_left - a, t_left - 1, a, p, prefix + [a])

    for s in range(1, max_s + 1):
        for p in range(1, max_p + 1):
            for t in range(1, max_t + 1):
                for parts in parts_from(max_n - s, t, max_n, p, []):
                    n = s + sum(parts)
                    if parts[0] < n - s - p * (t - 1):
                        out.append((s, tuple(parts), p))
    return out


# -- digraph lemmas ---------------------------------------------------------------

def digraph_vertex_connectivity(d: Digraph) -> int:
    """Fewest vertices whose removal leaves a digraph that is not strongly connected
    (``n - 1`` for complete digraphs)."""
    for size in range(d.n - 1):
        for combo in combinations(range(d.n), size):
            if scc_count(d, vertex_set(combo)) > 1:
                return size
    return d.n - 1


def minimum_cuts(d: Digraph) -> list[int]:
    k = digraph_vertex_connectivity(d)
    return [vertex_set(c) for c in combinations(range(d.n), k) if scc_count(d, vertex_set(c)) > 1]


def ordering_holds(d: Digraph, cut: int) -> tuple[bool, list[list[int]]]:
    """Does the condensation order of ``d - cut`` put every tail of v at or before v's component?"""
    order = condensation_order(d, cut)
    position = {}
    for i, comp in enumerate(order):
        for v in bits(comp):
            position[v] = i
    ins = d.in_rows()
    ok = all(position[w] <= position[v] for v in position for w in bits(ins[v] & ~cut))
    return ok, [list(bits(c)) for c in order]


def _l32(inst: dict, tol: float) -> LemmaResult:
    d = _digraph(inst["digraph"])
    _need(d.is_strongly_connected(), "digraph must be strongly connected")
    k = digraph_vertex_connectivity(d)
    _need(k < d.n - 1, "complete digraphs have no vertex cut")
    if "cut" in inst:
        cut = vertex_set(_ints(inst, "cut"))
        _need(popcount(cut) == k and scc_count(d, cut) > 1, f"cut must be a {k}-vertex cut")
    else:
        cut = minimum_cuts(d)[0]
    ok, order = ordering_holds(d, cut)
    return LemmaResult("L3.2", ok, {"connectivity": k, "cut": list(bits(cut)), "ordering": order})


def _l33(inst: dict, tol: float) -> LemmaResult:
    d = _digraph(inst["digraph"])
    _need(d.is_strongly_connected(), "digraph must be strongly connected")
    arcs = [tuple(a) for a in inst.get("remove_arcs", [])]
    drop = vertex_set(int(v) for v in inst.get("remove_vertices", []))
    _need(all(d.has_arc(a, b) for a, b in arcs), "removed arcs must be arcs of the digraph")
    _need(bool(arcs) or bool(drop), "a proper subgraph needs at least one removed arc or vertex")
    _need(drop != (1 << d.n) - 1, "cannot remove every vertex")
    sub = d.remove_arcs(arcs).induced(((1 << d.n) - 1) & ~drop)
    before = digraph_spectral_radius(d)
    after = nonnegative_spectral_radius(sub)
    return LemmaResult("L3.3", before - after > tol, {"rho": before, "rho_subgraph": after, "subgraph": encode(sub)})


@lru_cache(maxsize=None)
def family_digraph_rho(k: int, parts: tuple[int, ...]) -> float:
    return digraph_spectral_radius(family_digraph(k, parts).graph)


def shift(parts, p: int, q: int) -> tuple[int, ...]:
    out = list(parts)
    out[q] += 1
    out[p] -= 1
    return tuple(out)


def _l34(inst: dict, tol: float) -> LemmaResult:
    k = _int(inst, "k")
    parts = tuple(_ints(inst, "parts"))
    p, q = _int(inst, "p"), _int(inst, "q")
    _need(k >= 1 and len(parts) >= 2, "k >= 1 and at least two parts")
    _need(all(x >= 1 for x in parts), "parts must be positive")
    _need(0 <= p < len(parts) and 0 <= q < len(parts) and p != q, "p and q must be distinct part indices")
    _need(parts[q] >= parts[p] >= 2, "need n_q >= n_p >= 2")
    moved = shift(parts, p, q)
    before, after = family_digraph_rho(k, parts), family_digraph_rho(k, moved)
    return LemmaResult("L3.4", after - before > tol, {"rho_before": before, "rho_after": after, "shifted": list(moved)})


# -- edge connectivity lemmas ------------------------------------------------------

def _l41(inst: dict, tol: float) -> LemmaResult:
    g = _graph(inst["graph"])
    _need(g.n == 1 or g.min_degree() > 0, "graph must have no isolated vertices")
    rho = spectral_radius(g)
    bound = (2 * g.m - g.n + 1) ** 0.5
    return LemmaResult("L4.1", rho <= bound + tol, {"rho": rho, "bound": bound, "n": g.n, "m": g.m})


def k_class_split(g: Graph, k: int, p: int) -> int | None:
    """Mask of ``p - 1`` independent vertices whose removal leaves a clique and which
    send exactly ``k`` edges into it, or ``None``."""
    n = g.n
    full = (1 << n) - 1
    for combo in combinations(range(n), p - 1):
        low = vertex_set(combo)
        if any(g.adj[v] & low for v in combo):
            continue
        rest = full & ~low
        if any((g.adj[v] | 1 << v) & rest != rest for v in bits(rest)):
            continue
        if sum(popcount(g.adj[v]) for v in combo) == k:
            return low
    return None


def in_k_class(g: Graph, k: int, p: int) -> bool:
    return g.is_connected() and k >= p - 1 and k_class_split(g, k, p) is not None


def k_class(n: int, k: int, p: int) -> list[Graph]:
    """Connected graphs from ``K_{n-p+1} ∪ (p-1)K_1`` plus ``k`` cross edges, up to isomorphism."""
    _need(p >= 2 and k >= p - 1 and n >= p, "need p >= 2, k >= p - 1 and n >= p")
    big = n - p + 1
    base = disjoint_union(complete_graph(big), empty_graph(p - 1))
    cross = [(a, b) for b in range(big, n) for a in range(big)]
    seen: dict[tuple, Graph] = {}
    for chosen in combinations(cross, k):
        if {b for _, b in chosen} != set(range(big, n)):
            continue
        g = base.add_edges(chosen)
        seen.setdefault(canonical_form(g), g)
    return [seen[key] for key in sorted(seen)]


def _k_hyp(n: int, k: int, p: int, upper: int) -> None:
    _need(n >= 2 * k + 2, "n >= 2k + 2")
    _need(2 <= p <= upper, f"2 <= p <= {'k + 1' if upper == k + 1 else 'k'}")


def _l42(inst: dict, tol: float) -> LemmaResult:
    g = _graph(inst["graph"])
    k, p = _int(inst, "k"), _int(inst, "p")
    _k_hyp(g.n, k, p, k + 1)
    _need(in_k_class(g, k, p), f"graph is not in the class K^{k}_(n,{p - 1})")
    rho = spectral_radius(g)
    lo, hi = g.n - p, g.n - p + 1
    return LemmaResult("L4.2", rho - lo > tol and hi - rho > tol, {"rho": rho, "lower": lo, "upper": hi})


def _l43(inst: dict, tol: float) -> LemmaResult:
    k, p = _int(inst, "k"), _int(inst, "p")
    target = None
    if "graph" in inst:
        target = _graph(inst["graph"])
        n = target.n
    else:
        n = _int(inst, "n")
    _k_hyp(n, k, p, k)
    h = family_edge(n, k, p).graph
    rho_h = spectral_radius(h)
    if target is not None:
        _need(in_k_class(target, k, p), f"graph is not in the class K^{k}_(n,{p - 1})")
        rho = spectral_radius(target)
        iso = is_isomorphic(target, h)
        ok = rho <= rho_h + tol and (iso or rho < rho_h - tol)
        return LemmaResult("L4.3", ok, {"rho": rho, "rho_extremal": rho_h, "isomorphic": iso})
    members = k_class(n, k, p)
    rhos = [spectral_radius(g) for g in members]
    best = max(rhos)
    top = [g for g, r in zip(members, rhos) if r >= best - tol]
    ok = best <= rho_h + tol and len(top) == 1 and is_isomorphic(top[0], h)
    return LemmaResult("L4.3", ok, {
        "class_size": len(members), "max_rho": best, "rho_extremal": rho_h,
        "argmax": sorted(encode(g) for g in top), "extremal": encode(h),
    })


def _l44(inst: dict, tol: float) -> LemmaResult:
    a, b = _int(inst, "a"), _int(inst, "b")
    _need(a >= b >= 1, "need a >= b >= 1")
    left = comb(a, 2) + comb(b, 2)
    right = comb(a + 1, 2) + comb(b - 1, 2)
    return LemmaResult("L4.4", left < right, {"left": left, "right": right})


_CHECKS: dict[str, Callable[[dict, float], LemmaResult]] = {
    "L2.2": _l22, "L2.3": _l23, "L3.2": _l32, "L3.3": _l33, "L3.4": _l34,
    "L4.1": _l41, "L4.2": _l42, "L4.3": _l43, "L4.4": _l44,
}


def check_lemma(lemma_id: str, instance: dict, tol: float = TIE_TOL) -> LemmaResult:
    if lemma_id not in _CHECKS:
        raise ValueError(f"unknown lemma {lemma_id!r}; expected one of {LEMMAS}")
    try:
        return _CHECKS[lemma_id](dict(instance), tol)
    except KeyError as exc:
        raise HypothesisError(f"instance needs {exc.args[0]!r}") from None
