"""Exhaustive verification of the three extremal theorems at small orders."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable

import numpy as np

from ..families import (
    InfeasibleParameters,
    family_digraph_extremal,
    family_edge,
    family_vertex,
)
from ..graph import Digraph, Graph, decode_graph6, encode, is_isomorphic
from ..invariants import (
    connectivity_profile,
    digraph_connectivity_profile,
    edge_connectivity_profile,
)
from ..spectral import TIE_TOL, digraph_spectral_radius, spectral_radii, spectral_radius
from .enumeration import GRAPH_CAP, DIGRAPH_CAP, ScaleError, enumerate_graphs, enumerate_strong_digraphs
from .report import COUNTEREXAMPLE, CONFIRMED, INFEASIBLE, Report

THEOREMS = ("T1.1", "T1.2", "T1.3")

REQUIRED = {
    "T1.1": ("n", "delta", "kappa_l", "l"),
    "T1.2": ("n", "kappa_l", "l"),
    "T1.3": ("n", "kappa_edge", "l"),
}


# -- cached per-order tables ----------------------------------------------------

@lru_cache(maxsize=None)
def graph_table(n: int) -> tuple[tuple[Graph, ...], np.ndarray]:
    graphs = tuple(enumerate_graphs(n, connected=True))
    return graphs, spectral_radii(graphs)


def _profile_row(code: str) -> tuple[dict[int, int], dict[int, int]]:
    g = decode_graph6(code)
    return connectivity_profile(g), edge_connectivity_profile(g)


@lru_cache(maxsize=None)
def _profiles(n: int, workers: int) -> tuple[tuple[dict, ...], tuple[dict, ...]]:
    graphs, _ = graph_table(n)
    if workers > 1 and len(graphs) > 256:
        codes = [str(g) for g in graphs]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_profile_row, codes, chunksize=256))
    else:
        rows = [(connectivity_profile(g), edge_connectivity_profile(g)) for g in graphs]
    return tuple(r[0] for r in rows), tuple(r[1] for r in rows)


def vertex_profiles(n: int, workers: int = 1) -> tuple[dict, ...]:
    return _profiles(n, 1 if workers <= 1 else workers)[0]


def edge_profiles(n: int, workers: int = 1) -> tuple[dict, ...]:
    return _profiles(n, 1 if workers <= 1 else workers)[1]


@lru_cache(maxsize=None)
def digraph_table(n: int) -> tuple[tuple[Digraph, ...], np.ndarray, tuple[dict, ...]]:
    ds = tuple(enumerate_strong_digraphs(n))
    rho = np.array([digraph_spectral_radius(d) for d in ds])
    profiles = tuple(digraph_connectivity_profile(d) for d in ds)
    return ds, rho, profiles


# -- the harness ---------------------------------------------------------------

def _check_params(theorem_id: str, params: dict) -> dict:
    if theorem_id not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem_id!r}; expected one of {THEOREMS}")
    missing = [k for k in REQUIRED[theorem_id] if k not in params]
    if missing:
        raise ValueError(f"{theorem_id} needs parameters {', '.join(missing)}")
    out = {k: int(params[k]) for k in REQUIRED[theorem_id]}
    if theorem_id == "T1.2":
        if not 1 <= out["n"] <= DIGRAPH_CAP:
            raise ScaleError(f"digraph verification is capped at n <= {DIGRAPH_CAP}")
    elif not 1 <= out["n"] <= GRAPH_CAP:
        raise ScaleError(f"graph verification is capped at n <= {GRAPH_CAP}")
    return out


def _hypothesis_failure(theorem_id: str, p: dict) -> str | None:
    n, l = p["n"], p["l"]
    if l < 2:
        return "l >= 2"
    if theorem_id == "T1.3":
        if p["kappa_edge"] < l - 1:
            return "kappa_edge >= l - 1"
        if n < 2 * p["kappa_edge"] + 2:
            return "n >= 2 kappa_edge + 2"
        return None
    if p["kappa_l"] < 1:
        return "kappa_l >= 1"
    if n < p["kappa_l"] + l:
        return "n >= kappa_l + l"
    return None


def _family(theorem_id: str, p: dict):
    if theorem_id == "T1.1":
        return family_vertex(p["n"], p["kappa_l"], p["delta"], p["l"]).graph
    if theorem_id == "T1.2":
        return family_digraph_extremal(p["n"], p["kappa_l"], p["l"]).graph
    return family_edge(p["n"], p["kappa_edge"], p["l"]).graph


def _class_rows(theorem_id: str, p: dict, workers: int):
    """Members of the hypothesis class as (object, rho, connectivity value, min degree)."""
    n, l = p["n"], p["l"]
    if theorem_id == "T1.2":
        ds, rho, profiles = digraph_table(n)
        return [(d, float(r), prof[l], None) for d, r, prof in zip(ds, rho, profiles)
                if prof[l] == p["kappa_l"]]
    graphs, rho = graph_table(n)
    if l > n:
        return []
    if theorem_id == "T1.1":
        profiles = vertex_profiles(n, workers)
        return [(g, float(r), prof[l], g.min_degree()) for g, r, prof in zip(graphs, rho, profiles)
                if prof[l] == p["kappa_l"] and g.min_degree() == p["delta"]]
    profiles = edge_profiles(n, workers)
    return [(g, float(r), prof[l], g.min_degree()) for g, r, prof in zip(graphs, rho, profiles)
            if prof[l] == p["kappa_edge"]]


def _family_membership(theorem_id: str, fam, p: dict) -> str | None:
    """Recompute the family member's invariants; return the mismatch, if any."""
    l = p["l"]
    if theorem_id == "T1.2":
        if not fam.is_strongly_connected():
            return "family digraph is not strongly connected"
        got = digraph_connectivity_profile(fam)[l]
        return None if got == p["kappa_l"] else f"family digraph has kappa_{l} = {got}"
    if not fam.is_connected():
        return "family graph is disconnected"
    if theorem_id == "T1.1":
        got, dmin = connectivity_profile(fam)[l], fam.min_degree()
        if got != p["kappa_l"] or dmin != p["delta"]:
            return f"family graph has kappa_{l} = {got}, delta = {dmin}"
        return None
    got = edge_connectivity_profile(fam)[l]
    return None if got == p["kappa_edge"] else f"family graph has kappa'_{l} = {got}"


def verify_theorem(theorem_id: str, params: dict, tol: float = TIE_TOL, workers: int = 1) -> Report:
    """Enumerate the hypothesis class and compare its spectral maximum with the family graph.

    For T1.1 and T1.3 every graph within ``tol`` of the maximum must be
    isomorphic to the family graph.  T1.2 asserts maximality only, so ties
    with other digraphs are listed in ``argmax_graphs`` without affecting the
    verdict.
    """
    start = time.perf_counter()
    p = _check_params(theorem_id, params)
    report = Report(theorem_id, p, INFEASIBLE)

    def done() -> Report:
        report.elapsed_s = round(time.perf_counter() - start, 6)
        return report

    failure = _hypothesis_failure(theorem_id, p)
    if failure:
        report.note = f"hypothesis fails: {failure}"
        return done()
    try:
        fam = _family(theorem_id, p)
    except InfeasibleParameters as exc:
        report.note = f"no extremal construction: {exc}"
        return done()

    rows = _class_rows(theorem_id, p, workers)
    report.class_size = len(rows)
    report.members = [(encode(obj), r, c, dl) for obj, r, c, dl in rows]
    rho_of: Callable = digraph_spectral_radius if theorem_id == "T1.2" else spectral_radius
    report.family_rho = float(rho_of(fam))
    report.family_graph = encode(fam)
    if not rows:
        report.note = "hypothesis class is empty"
        return done()

    best = max(r for _, r, _, _ in rows)
    report.extremal_rho = best
    top = [obj for obj, r, _, _ in rows if r >= best - tol]
    report.argmax_graphs = sorted(encode(obj) for obj in top)

    mismatch = _family_membership(theorem_id, fam, p)
    if mismatch:
        report.verdict = COUNTEREXAMPLE
        report.note = mismatch
        return done()
    if best > report.family_rho + tol:
        report.verdict = COUNTEREXAMPLE
        report.counterexample = report.argmax_graphs[0]
        report.note = "a class member beats the family graph"
        return done()
    if theorem_id != "T1.2":
        others = sorted(encode(g) for g in top if not is_isomorphic(g, fam))
        if others:
            report.verdict = COUNTEREXAMPLE
            report.counterexample = others[0]
            report.note = "a non-isomorphic class member ties the family graph"
            return done()
    report.verdict = CONFIRMED
    if theorem_id == "T1.2" and len(top) > 1:
        report.note = f"{len(top)} digraphs attain the maximum"
    return done()
