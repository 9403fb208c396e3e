"""Bit-packed simple graphs and loopless digraphs on at most 64 vertices.

Vertex sets are plain ``int`` bit masks: bit ``v`` set means vertex ``v`` is a
member.  Adjacency rows use the same encoding, so ``g.adj[v]`` is the mask of
neighbours (out-neighbours for a :class:`Digraph`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_ORDER = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _full(n: int) -> int:
    return (1 << n) - 1


def _check_order(n: int) -> None:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"vertex count must be in 1..{MAX_ORDER}, got {n}")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj`` holds one neighbour mask per vertex."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = _full(self.n)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {w})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Graph:
        n = len(matrix)
        rows = tuple(vertex_set(j for j, a in enumerate(row) if a) for row in matrix)
        return cls(n, rows)

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    @property
    def vertices(self) -> int:
        return _full(self.n)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def laplacian_matrix(self) -> np.ndarray:
        a = self.adjacency_matrix()
        return np.diag(a.sum(axis=1)) - a

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return components(self, 0) == 1

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def induced(self, keep: int) -> Graph:
        """Subgraph induced on the vertex mask ``keep``, relabelled 0..k-1."""
        order = list(bits(keep))
        pos = {v: i for i, v in enumerate(order)}
        rows = tuple(vertex_set(pos[w] for w in bits(self.adj[v] & keep)) for v in order)
        return Graph(len(order), rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = vertex_set(perm[w] for w in bits(self.adj[v]))
        return Graph(self.n, tuple(rows))

    def __str__(self) -> str:
        return encode_graph6(self)


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph; ``adj[u]`` has bit ``v`` set iff arc ``uv`` exists."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = _full(self.n)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        rows = [0] * n
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj)

    @property
    def vertices(self) -> int:
        return _full(self.n)

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u])]

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def in_rows(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.arcs():
            rows[v] |= 1 << u
        return tuple(rows)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs():
            a[u, v] = 1
        return a

    def is_strongly_connected(self) -> bool:
        return scc_count(self, 0) == 1

    def remove_arcs(self, arcs: Iterable[tuple[int, int]]) -> Digraph:
        rows = list(self.adj)
        for u, v in arcs:
            rows[u] &= ~(1 << v)
        return Digraph(self.n, tuple(rows))

    def induced(self, keep: int) -> Digraph:
        order = list(bits(keep))
        pos = {v: i for i, v in enumerate(order)}
        rows = tuple(vertex_set(pos[w] for w in bits(self.adj[v] & keep)) for v in order)
        return Digraph(len(order), rows)

    def relabel(self, perm: Sequence[int]) -> Digraph:
        rows = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = vertex_set(perm[w] for w in bits(self.adj[v]))
        return Digraph(self.n, tuple(rows))

    def __str__(self) -> str:
        return encode_digraph6(self)


# -- named graphs -----------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = _full(n)
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complete_digraph(n: int) -> Digraph:
    full = _full(n)
    return Digraph(n, tuple(full & ~(1 << v) for v in range(n)))


def directed_cycle(n: int) -> Digraph:
    return Digraph.from_arcs(n, ((i, (i + 1) % n) for i in range(n)))


# -- composition ------------------------------------------------------------

def _shifted(rows: Sequence[int], by: int) -> list[int]:
    return [r << by for r in rows]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise ValueError(f"union would have {g.n + h.n} > {MAX_ORDER} vertices")
    return Graph(g.n + h.n, tuple(g.adj) + tuple(_shifted(h.adj, g.n)))


def join(g: Graph, h: Graph) -> Graph:
    """``g ∨ h``: disjoint union plus every edge between the two vertex sets."""
    if g.n + h.n > MAX_ORDER:
        raise ValueError(f"join would have {g.n + h.n} > {MAX_ORDER} vertices")
    right = _full(h.n) << g.n
    left = _full(g.n)
    rows = [r | right for r in g.adj] + [r | left for r in _shifted(h.adj, g.n)]
    return Graph(g.n + h.n, tuple(rows))


def digraph_union(d1: Digraph, d2: Digraph) -> Digraph:
    if d1.n + d2.n > MAX_ORDER:
        raise ValueError(f"union would have {d1.n + d2.n} > {MAX_ORDER} vertices")
    return Digraph(d1.n + d2.n, tuple(d1.adj) + tuple(_shifted(d2.adj, d1.n)))


def digraph_join(d1: Digraph, d2: Digraph) -> Digraph:
    """``d1 ∇ d2``: union plus both arcs ``uv`` and ``vu`` across the parts."""
    if d1.n + d2.n > MAX_ORDER:
        raise ValueError(f"join would have {d1.n + d2.n} > {MAX_ORDER} vertices")
    right = _full(d2.n) << d1.n
    left = _full(d1.n)
    rows = [r | right for r in d1.adj] + [r | left for r in _shifted(d2.adj, d1.n)]
    return Digraph(d1.n + d2.n, tuple(rows))


# -- connectivity -----------------------------------------------------------

def _check_removed(n: int, removed: int) -> int:
    full = _full(n)
    if removed & ~full:
        raise ValueError("removed set references vertices outside the graph")
    if removed == full:
        raise ValueError("cannot remove every vertex")
    return full & ~removed


def _component_count(adj: Sequence[int], alive: int) -> int:
    count = 0
    while alive:
        reach = alive & -alive
        frontier = reach
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & alive & ~reach
            reach |= frontier
        alive &= ~reach
        count += 1
    return count


def components(g: Graph, removed: int = 0) -> int:
    """Number of connected components of ``g`` minus the vertex mask ``removed``."""
    return _component_count(g.adj, _check_removed(g.n, removed))


def strongly_connected_components(d: Digraph, removed: int = 0) -> list[int]:
    """SCC masks of ``d - removed`` in reverse topological order (Tarjan).

    The first component returned has no arcs leaving it into a later one; i.e.
    reading the list backwards gives a topological order of the condensation.
    """
    alive = _check_removed(d.n, removed)
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack = 0
    stack: list[int] = []
    out: list[int] = []
    counter = 0
    for root in bits(alive):
        if root in index:
            continue
        work = [(root, iter(bits(d.adj[root] & alive)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack |= 1 << root
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack |= 1 << w
                    work.append((w, iter(bits(d.adj[w] & alive))))
                    advanced = True
                    break
                if on_stack >> w & 1:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = 0
                while True:
                    w = stack.pop()
                    on_stack &= ~(1 << w)
                    comp |= 1 << w
                    if w == v:
                        break
                out.append(comp)
    return out


def scc_count(d: Digraph, removed: int = 0) -> int:
    return len(strongly_connected_components(d, removed))


def condensation_order(d: Digraph, removed: int = 0) -> list[int]:
    """SCC masks of ``d - removed`` ordered so every arc goes forward."""
    return strongly_connected_components(d, removed)[::-1]


# -- isomorphism ------------------------------------------------------------

def is_isomorphic(g: Graph | Digraph, h: Graph | Digraph) -> bool:
    from .canon import canonical_form

    if type(g) is not type(h) or g.n != h.n or g.m != h.m:
        return False
    if isinstance(g, Graph) and sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# -- graph6 / sparse6 / digraph6 --------------------------------------------

class FormatError(ValueError):
    """Raised for malformed graph6, sparse6 or digraph6 text."""


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise FormatError("missing order header")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        raise FormatError("orders above 258047 are not supported")
    if len(data) < 4:
        raise FormatError("truncated order header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, data[4:]


def _pack(bitlist: list[int], pad: int = 0) -> str:
    while len(bitlist) % 6:
        bitlist.append(pad)
    out = []
    for i in range(0, len(bitlist), 6):
        v = 0
        for b in bitlist[i:i + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def _unpack(data: bytes) -> list[int]:
    out = []
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} outside the printable range 63..126")
        v = b - 63
        out.extend((v >> s) & 1 for s in range(5, -1, -1))
    return out


def _clean(text: str | bytes, header: str) -> bytes:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(header.encode()):
        text = text[len(header):]
    return text


def encode_graph6(g: Graph) -> str:
    body = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    return _encode_order(g.n) + _pack(body)


def decode_graph6(text: str | bytes) -> Graph:
    data = _clean(text, ">>graph6<<")
    if data[:1] in (b":", b";", b"&"):
        raise FormatError("not a graph6 line")
    n, rest = _decode_order(data)
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"order {n} outside 1..{MAX_ORDER}")
    need = n * (n - 1) // 2
    if len(rest) != (need + 5) // 6:
        raise FormatError(f"expected {(need + 5) // 6} data bytes, got {len(rest)}")
    stream = _unpack(rest)
    if any(stream[need:]):
        raise FormatError("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if stream[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def encode_digraph6(d: Digraph) -> str:
    body = [d.adj[i] >> j & 1 for i in range(d.n) for j in range(d.n)]
    return "&" + _encode_order(d.n) + _pack(body)


def decode_digraph6(text: str | bytes) -> Digraph:
    data = _clean(text, ">>digraph6<<")
    if data[:1] != b"&":
        raise FormatError("digraph6 lines start with '&'")
    n, rest = _decode_order(data[1:])
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"order {n} outside 1..{MAX_ORDER}")
    need = n * n
    if len(rest) != (need + 5) // 6:
        raise FormatError(f"expected {(need + 5) // 6} data bytes, got {len(rest)}")
    stream = _unpack(rest)
    if any(stream[need:]):
        raise FormatError("nonzero padding bits")
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if stream[i * n + j]:
                if i == j:
                    raise FormatError(f"loop at vertex {i}")
                rows[i] |= 1 << j
    return Digraph(n, tuple(rows))


def _sparse6_width(n: int) -> int:
    k = 1
    while 1 << k < n:
        k += 1
    return k


def encode_sparse6(g: Graph) -> str:
    n = g.n
    k = _sparse6_width(n)

    def enc(x: int) -> list[int]:
        return [(x >> (k - 1 - i)) & 1 for i in range(k)]

    stream: list[int] = []
    cur = 0
    for v, u in sorted((max(e), min(e)) for e in g.edges()):
        if v == cur:
            stream += [0] + enc(u)
        elif v == cur + 1:
            cur += 1
            stream += [1] + enc(u)
        else:
            cur = v
            stream += [1] + enc(v) + [0] + enc(u)
    if k < 6 and n == 1 << k and (-len(stream)) % 6 >= k and cur < n - 1:
        stream.append(0)
    return ":" + _encode_order(n) + _pack(stream, pad=1)


def decode_sparse6(text: str | bytes) -> Graph:
    data = _clean(text, ">>sparse6<<")
    if data[:1] != b":":
        raise FormatError("sparse6 lines start with ':'")
    n, rest = _decode_order(data[1:])
    if not 1 <= n <= MAX_ORDER:
        raise FormatError(f"order {n} outside 1..{MAX_ORDER}")
    k = _sparse6_width(n)
    stream = _unpack(rest)
    rows = [0] * n
    v = 0
    pos = 0
    while pos + 1 + k <= len(stream):
        b = stream[pos]
        x = 0
        for bit in stream[pos + 1:pos + 1 + k]:
            x = (x << 1) | bit
        pos += 1 + k
        if b:
            v += 1
        if x >= n or v >= n:
            break
        if x > v:
            v = x
        elif x != v:
            if rows[x] >> v & 1:
                raise FormatError("multigraph edges are not supported")
            rows[x] |= 1 << v
            rows[v] |= 1 << x
        else:
            raise FormatError(f"loop at vertex {x}")
    return Graph(n, tuple(rows))


def decode_any(line: str | bytes) -> Graph | Digraph:
    """Decode one graph6, sparse6 or digraph6 line by its leading character."""
    data = line.strip() if isinstance(line, bytes) else line.strip().encode("ascii")
    for header in (b">>graph6<<", b">>sparse6<<", b">>digraph6<<"):
        if data.startswith(header):
            data = data[len(header):]
    if data.startswith(b"&"):
        return decode_digraph6(data)
    if data.startswith(b":"):
        return decode_sparse6(data)
    return decode_graph6(data)


def encode(g: Graph | Digraph) -> str:
    return encode_digraph6(g) if isinstance(g, Digraph) else encode_graph6(g)


def all_subsets(mask: int, size: int) -> Iterator[int]:
    for combo in combinations(list(bits(mask)), size):
        yield vertex_set(combo)
