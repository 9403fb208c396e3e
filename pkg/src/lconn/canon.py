"""Canonical labelling by colour refinement plus individualisation search.

The search tree is explored completely except for subtrees that an already
discovered automorphism maps onto an explored one.  Certificates are compared
lexicographically and the largest one wins, so the result depends only on the
isomorphism class of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Digraph, Graph, bits, popcount


@dataclass(frozen=True)
class Labelling:
    """Outcome of a canonical labelling run.

    ``order[i]`` is the original vertex placed at canonical position ``i``;
    ``certificate`` is the relabelled adjacency, equal for isomorphic inputs.
    """

    order: tuple[int, ...]
    certificate: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def orbits(self) -> list[int]:
        return orbit_labels(len(self.order), self.generators)


def orbit_labels(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Smallest vertex of each vertex's orbit under the generated group."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _refine(out: Sequence[int], inn: Sequence[int] | None, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                if inn is None:
                    sig = tuple(popcount(out[v] & cm) for cm in masks)
                else:
                    sig = tuple((popcount(out[v] & cm), popcount(inn[v] & cm)) for cm in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _certificate(out: Sequence[int], order: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    cert = []
    for v in order:
        row = 0
        for w in bits(out[v]):
            row |= 1 << pos[w]
        cert.append(row)
    return tuple(cert)


def canonical_labelling(
    out: Sequence[int],
    inn: Sequence[int] | None = None,
    colours: Sequence[int] | None = None,
) -> Labelling:
    """Canonically label the (di)graph given by out-neighbour masks.

    ``inn`` must be supplied for digraphs and left ``None`` for symmetric
    adjacency.  ``colours`` optionally assigns an initial vertex colour that
    isomorphisms must preserve.
    """
    n = len(out)
    if colours is None:
        start = [list(range(n))]
    else:
        by: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            by.setdefault(c, []).append(v)
        start = [by[c] for c in sorted(by)]

    best: list = [None, None]  # certificate, order
    gens: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        cert = _certificate(out, order)
        if best[0] is None or cert > best[0]:
            best[0], best[1] = cert, order
        elif cert == best[0]:
            perm = [0] * n
            for a, b in zip(order, best[1]):
                perm[a] = b
            perm_t = tuple(perm)
            if perm_t != tuple(range(n)) and perm_t not in gens:
                gens.append(perm_t)

    def search(cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(out, inn, cells)
        if len(cells) == n:
            leaf([c[0] for c in cells])
            return
        ti = min(range(len(cells)), key=lambda i: (len(cells[i]) == 1, len(cells[i]), i))
        target = cells[ti]
        tried: list[int] = []
        for w in target:
            if tried:
                fixing = [g for g in gens if all(g[p] == p for p in prefix)]
                if fixing:
                    orb = orbit_labels(n, fixing)
                    if any(orb[w] == orb[t] for t in tried):
                        continue
            tried.append(w)
            rest = [v for v in target if v != w]
            search(cells[:ti] + [[w], rest] + cells[ti + 1:], prefix + [w])

    search(start, [])
    return Labelling(tuple(best[1]), best[0], tuple(gens))


def canonical_form(g: Graph | Digraph) -> tuple:
    """Hashable invariant that is equal exactly for isomorphic inputs."""
    if isinstance(g, Digraph):
        lab = canonical_labelling(g.adj, g.in_rows())
        return ("D", g.n, lab.certificate)
    lab = canonical_labelling(g.adj)
    return ("G", g.n, lab.certificate)


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labelling(g.adj)
    return Graph(g.n, lab.certificate)


def automorphism_generators(g: Graph | Digraph) -> tuple[tuple[int, ...], ...]:
    inn = g.in_rows() if isinstance(g, Digraph) else None
    return canonical_labelling(g.adj, inn).generators
