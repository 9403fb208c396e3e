"""Quotient matrices of partitioned matrices and the digraph-family characteristic polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .families import InfeasibleParameters, PartsSpec


@dataclass(frozen=True)
class QuotientResult:
    B: np.ndarray
    equitable: bool
    partition: tuple[tuple[int, ...], ...]


def quotient_matrix(M, partition: Sequence[Sequence[int]]) -> QuotientResult:
    """Average block row sums of ``M``; equitable iff each block has constant row sums.

    Integer matrices are tested exactly.
    """
    m = np.asarray(M)
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise ValueError("M must be square")
    blocks = tuple(tuple(int(v) for v in b) for b in partition)
    seen = sorted(v for b in blocks for v in b)
    if seen != list(range(n)) or any(len(b) == 0 for b in blocks):
        raise ValueError("partition must cover every index exactly once with nonempty blocks")
    k = len(blocks)
    sums = np.stack([m[:, list(b)].sum(axis=1) for b in blocks], axis=1)  # n x k
    quotient = np.zeros((k, k))
    equitable = True
    exact = np.issubdtype(m.dtype, np.integer)
    for i, bi in enumerate(blocks):
        rows = sums[list(bi)]
        quotient[i] = rows.mean(axis=0)
        if exact:
            equitable &= bool(np.all(rows == rows[0]))
        else:
            equitable &= bool(np.allclose(rows, rows[0], rtol=0, atol=1e-12))
    return QuotientResult(quotient, equitable, blocks)


@dataclass(frozen=True)
class Polynomial:
    """Monic polynomial, integer coefficients listed from the leading term down."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise ValueError("degree must be at least 1")
        if self.coeffs[0] != 1:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def _mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    size = max(len(p), len(q))
    p = [0] * (size - len(p)) + list(p)
    q = [0] * (size - len(q)) + list(q)
    return [a - b for a, b in zip(p, q)]


def digraph_family_charpoly(k: int, parts: Sequence[int]) -> Polynomial:
    """``(x+1) * (prod_i (x - (n_i - 1)) - k (x+1)^(l-1))`` expanded exactly."""
    shape = PartsSpec(k, tuple(parts))
    if k < 1:
        raise InfeasibleParameters("k >= 1")
    l = len(shape.parts)
    if l < 2:
        raise InfeasibleParameters("at least two parts (l >= 2)")
    prod = [1]
    for ni in shape.parts:
        prod = _mul(prod, [1, -(ni - 1)])
    binom = [k * comb(l - 1, i) for i in range(l)]  # k (x+1)^(l-1)
    return Polynomial(tuple(_mul([1, 1], _sub(prod, binom))))


def _poly_rem(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) >= len(q) and p:
        f = p[0] / q[0]
        for i in range(len(q)):
            p[i] -= f * q[i]
        p.pop(0)
    while p and p[0] == 0:
        p.pop(0)
    return p


def _derivative(p: list[Fraction]) -> list[Fraction]:
    deg = len(p) - 1
    return [c * (deg - i) for i, c in enumerate(p[:-1])]


def _poly_div(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    p = list(p)
    out = []
    while len(p) >= len(q):
        f = p[0] / q[0]
        out.append(f)
        for i in range(len(q)):
            p[i] -= f * q[i]
        p.pop(0)
    return out


def _squarefree(p: list[Fraction]) -> list[Fraction]:
    """``p / gcd(p, p')``: same real roots, all simple."""
    a, b = p, _derivative(p)
    while b:
        a, b = b, _poly_rem(a, b)
    return _poly_div(p, a) if len(a) > 1 else p


def _sturm_chain(coeffs: Sequence[int]) -> list[list[Fraction]]:
    p0 = _squarefree([Fraction(c) for c in coeffs])
    if len(p0) < 2:
        return [p0]
    chain = [p0, _derivative(p0)]
    while len(chain[-1]) > 1:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    vals = []
    for p in chain:
        acc = Fraction(0)
        for c in p:
            acc = acc * x + c
        if acc != 0:
            vals.append(acc > 0)
    return sum(1 for a, b in zip(vals, vals[1:]) if a != b)


def largest_real_root(p: Polynomial, tol: float = 1e-12) -> float:
    """Largest real root by bisection inside the Cauchy bracket ``±(1 + max|c_i|)``.

    Bisection is steered by exact Sturm root counts on ``(x, bound]`` so that
    clustered or repeated roots cannot hide the largest one.
    """
    bound = Fraction(1 + max(abs(c) for c in p.coeffs[1:]))
    chain = _sturm_chain(p.coeffs)
    at_top = _sign_changes(chain, bound)
    lo, hi = -bound, bound
    if _sign_changes(chain, lo) - at_top == 0:
        raise ValueError("no real root inside the Cauchy bracket")
    while hi - lo > Fraction(tol) / 4:
        mid = (lo + hi) / 2
        if _sign_changes(chain, mid) - at_top > 0:
            lo = mid  # a root lies in (mid, bound]
        else:
            hi = mid
    return float((lo + hi) / 2)
