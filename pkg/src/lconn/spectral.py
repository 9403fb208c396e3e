"""Adjacency and Laplacian spectra, Perron vectors and digraph Perron roots.

Symmetric spectra come from a cyclic Jacobi eigensolver that works on a stack
of equally sized matrices at once, which is how the enumeration harness feeds
it thousands of small adjacency matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Digraph, Graph, bits, strongly_connected_components

TIE_TOL = 1e-9
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectralSummary:
    rho: float
    eigs: tuple[float, ...]  # descending
    lap: tuple[float, ...]  # ascending
    lambda_abs: float | None  # None for n = 1
    perron: tuple[float, ...] | None  # present iff connected


def jacobi_eigh(stack: np.ndarray, vectors: bool = False, max_sweeps: int = MAX_SWEEPS):
    """Eigen-decompose symmetric matrices by cyclic Jacobi rotations.

    ``stack`` is ``(n, n)`` or ``(batch, n, n)``.  Returns eigenvalues in
    ascending order (and, with ``vectors=True``, eigenvectors as columns).
    """
    a = np.array(stack, dtype=float)
    single = a.ndim == 2
    if single:
        a = a[None]
    batch, n, _ = a.shape
    v = np.broadcast_to(np.eye(n), a.shape).copy() if vectors else None
    scale = np.sqrt((a * a).sum(axis=(1, 2)))
    scale[scale == 0] = 1.0
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for _sweep in range(max_sweeps):
        off = np.sqrt((np.triu(a, 1) ** 2).sum(axis=(1, 2)))
        if np.all(off <= 1e-15 * scale):
            break
        for p, q in pairs:
            apq = a[:, p, q]
            if not np.any(apq):
                continue
            nz = apq != 0
            safe = np.where(nz, apq, 1.0)
            with np.errstate(over="ignore", divide="ignore"):
                theta = (a[:, q, q] - a[:, p, p]) / (2.0 * safe)
                # tiny apq gives theta = inf and hence t = 0: no rotation
                t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0] = 1.0
            t = np.where(nz, t, 0.0)
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            c3, s3 = c[:, None], s[:, None]
            colp, colq = a[:, :, p].copy(), a[:, :, q].copy()
            a[:, :, p] = c3 * colp - s3 * colq
            a[:, :, q] = s3 * colp + c3 * colq
            rowp, rowq = a[:, p, :].copy(), a[:, q, :].copy()
            a[:, p, :] = c3 * rowp - s3 * rowq
            a[:, q, :] = s3 * rowp + c3 * rowq
            a[:, p, q] = 0.0
            a[:, q, p] = 0.0
            if v is not None:
                vp, vq = v[:, :, p].copy(), v[:, :, q].copy()
                v[:, :, p] = c3 * vp - s3 * vq
                v[:, :, q] = s3 * vp + c3 * vq
    else:
        raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = np.diagonal(a, axis1=1, axis2=2).copy()
    idx = np.argsort(w, axis=1, kind="stable")
    w = np.take_along_axis(w, idx, axis=1)
    if v is not None:
        v = np.take_along_axis(v, idx[:, None, :], axis=2)
    if single:
        return (w[0], v[0]) if vectors else w[0]
    return (w, v) if vectors else w


def _adjacency(g: Graph) -> np.ndarray:
    return g.adjacency_matrix().astype(float)


def adjacency_spectrum(g: Graph) -> np.ndarray:
    """Adjacency eigenvalues, descending."""
    return jacobi_eigh(_adjacency(g))[::-1]


def laplacian_spectrum(g: Graph) -> np.ndarray:
    """Laplacian eigenvalues, ascending."""
    return jacobi_eigh(g.laplacian_matrix().astype(float))


def spectral_radius(g: Graph) -> float:
    return float(jacobi_eigh(_adjacency(g))[-1])


def spectral_radii(graphs: Sequence[Graph], chunk: int = 4096) -> np.ndarray:
    """Spectral radii of many graphs; graphs of equal order are solved together."""
    out = np.empty(len(graphs))
    by_order: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_order.setdefault(g.n, []).append(i)
    for n, idx in by_order.items():
        for start in range(0, len(idx), chunk):
            part = idx[start:start + chunk]
            mats = np.zeros((len(part), n, n))
            for k, i in enumerate(part):
                for u, row in enumerate(graphs[i].adj):
                    for w in bits(row):
                        mats[k, u, w] = 1.0
            out[part] = jacobi_eigh(mats)[:, -1]
    return out


def perron_vector(g: Graph) -> np.ndarray:
    """Unit positive eigenvector for the spectral radius of a connected graph."""
    if not g.is_connected():
        raise ValueError("Perron vector requires a connected graph")
    w, v = jacobi_eigh(_adjacency(g), vectors=True)
    x = v[:, -1]
    x = x if x.sum() > 0 else -x
    return x / np.linalg.norm(x)


def second_largest_abs(g: Graph) -> float:
    if g.n < 2:
        raise ValueError("second largest absolute eigenvalue needs n >= 2")
    eigs = adjacency_spectrum(g)
    return float(max(abs(eigs[1]), abs(eigs[-1])))


def symmetric_spectrum(g: Graph) -> SpectralSummary:
    w, v = jacobi_eigh(_adjacency(g), vectors=True)
    eigs = tuple(float(x) for x in w[::-1])
    lap = tuple(float(x) for x in laplacian_spectrum(g))
    lam = max(abs(eigs[1]), abs(eigs[-1])) if g.n > 1 else None
    perron = None
    if g.is_connected():
        x = v[:, -1]
        x = x if x.sum() > 0 else -x
        perron = tuple(float(t) for t in x / np.linalg.norm(x))
    return SpectralSummary(eigs[0], eigs, lap, lam, perron)


def hong_bound(n: int, m: int) -> float:
    """Upper bound ``sqrt(2m - n + 1)`` on the spectral radius of a connected graph."""
    radicand = 2 * m - n + 1
    if radicand < 0:
        raise ValueError(f"negative radicand 2m - n + 1 = {radicand}")
    return math.sqrt(radicand)


def perron_root(matrix: np.ndarray, rtol: float = 1e-12, max_iter: int = 10**6) -> tuple[float, np.ndarray]:
    """Perron root and vector of an irreducible nonnegative matrix.

    Power iteration runs on ``A + I`` (primitive whenever ``A`` is irreducible,
    so periodic digraphs still converge) from the all-ones vector.  It stops
    once the Collatz-Wielandt bracket ``min (Bx)_i/x_i <= rho <= max (Bx)_i/x_i``
    is narrower than ``rtol`` relative to its upper end.
    """
    a = np.asarray(matrix, dtype=float)
    n = a.shape[0]
    b = a + np.eye(n)
    x = np.ones(n)
    for _ in range(max_iter):
        y = b @ x
        ratios = y / x
        lo, hi = ratios.min(), ratios.max()
        if hi - lo <= rtol * hi:
            x = y / np.linalg.norm(y)
            return float((lo + hi) / 2 - 1.0), x
        x = y / y.max()
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def digraph_spectral_radius(d: Digraph) -> float:
    """Perron root of a strongly connected digraph."""
    if not d.is_strongly_connected():
        raise ValueError("digraph must be strongly connected")
    if d.n == 1:
        return 0.0
    return perron_root(d.adjacency_matrix())[0]


def nonnegative_spectral_radius(d: Digraph) -> float:
    """Spectral radius of any digraph: the largest Perron root over its SCCs."""
    best = 0.0
    for comp in strongly_connected_components(d):
        if comp & (comp - 1):
            best = max(best, perron_root(d.induced(comp).adjacency_matrix())[0])
    return best
