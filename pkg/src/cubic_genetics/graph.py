"""Validated simple connected cubic graphs and their text encodings."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    BadVertexId,
    MalformedEncoding,
    NotConnected,
    NotCubic,
    NotSimple,
    OddOrder,
)

Edge = tuple[int, int]

GRAPH6_HEADER = b">>graph6<<"


def edge_ref(u: int, v: int) -> Edge:
    """Normalise an unordered vertex pair to ``(min, max)``."""
    return (u, v) if u < v else (v, u)


class CubicGraph:
    """Immutable simple connected 3-regular graph on vertices ``0..n-1``.

    ``adj[v]`` is the ascending triple of neighbours of ``v``; ``edges`` is the
    sorted list of pairs ``(u, v)`` with ``u < v``. Instances are only built
    through :func:`from_edge_list` (or helpers that call it), so every
    instance satisfies all invariants.
    """

    __slots__ = ("n", "adj", "edges", "_edge_set", "_hash")

    def __init__(self, n: int, adj: tuple[tuple[int, int, int], ...], edges: tuple[Edge, ...]):
        self.n = n
        self.adj = adj
        self.edges = edges
        self._edge_set = frozenset(edges)
        self._hash = hash((n, adj))

    def has_edge(self, u: int, v: int) -> bool:
        return edge_ref(u, v) in self._edge_set

    def neighbors(self, v: int) -> tuple[int, int, int]:
        if not 0 <= v < self.n:
            raise BadVertexId(f"vertex {v} out of range for n={self.n}")
        return self.adj[v]

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CubicGraph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CubicGraph(n={self.n}, g6={to_graph6(self).decode()!r})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> CubicGraph:
    """Build and validate a cubic graph. Vertex ids are used as given."""
    if n < 4 or n % 2:
        raise OddOrder(f"vertex count must be even and >= 4, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise BadVertexId(f"vertex {x} out of range for n={n}")
        if u == v:
            raise NotSimple(f"loop at vertex {u}")
        if v in nbrs[u]:
            raise NotSimple(f"parallel edge {edge_ref(u, v)}")
        nbrs[u].add(v)
        nbrs[v].add(u)
        count += 1
    for v, s in enumerate(nbrs):
        if len(s) != 3:
            raise NotCubic(f"vertex {v} has degree {len(s)}")
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    if not _is_connected(adj):
        raise NotConnected("graph is not connected")
    edges = tuple(sorted((u, v) for u in range(n) for v in adj[u] if u < v))
    assert len(edges) == count == 3 * n // 2
    return CubicGraph(n, adj, edges)  # type: ignore[arg-type]


def _is_connected(adj) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def neighbors(g: CubicGraph, v: int) -> tuple[int, int, int]:
    return g.neighbors(v)


def relabel(g: CubicGraph, perm: Sequence[int]) -> CubicGraph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise BadVertexId("perm is not a permutation of the vertex set")
    return from_edge_list(g.n, ((perm[u], perm[v]) for u, v in g.edges))


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph6 encoding limited to n <= 258047")


def to_graph6(g: CubicGraph) -> bytes:
    """Headerless graph6 bytes for the current labelling of ``g``."""
    return _graph6_from_edges(g.n, g.edges)


def _graph6_from_edges(n: int, edges: Iterable[Edge]) -> bytes:
    nbits = n * (n - 1) // 2
    width = nbits + (-nbits) % 6
    bits = 0
    for u, v in edges:
        if u > v:
            u, v = v, u
        bits |= 1 << (width - 1 - (v * (v - 1) // 2 + u))
    out = bytearray(_encode_n(n))
    for shift in range(width - 6, -1, -6):
        out.append(((bits >> shift) & 63) + 63)
    return bytes(out)


def parse_graph6(text: bytes | str) -> CubicGraph:
    """Decode one graph6 line (optionally with the ``>>graph6<<`` header)."""
    n, edges = decode_graph6(text)
    return from_edge_list(n, edges)


def decode_graph6(text: bytes | str) -> tuple[int, list[Edge]]:
    """Decode graph6 to ``(n, edges)`` without any cubic validation."""
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise MalformedEncoding("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise MalformedEncoding("graph6 characters must lie in 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4 or data[1] == 126:
            raise MalformedEncoding("unsupported or truncated graph6 size prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != nbytes:
        raise MalformedEncoding(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    edges: list[Edge] = []
    k = 0
    bits = 0
    for c in body:
        bits = (bits << 6) | (c - 63)
    width = 6 * nbytes
    if width > nbits and bits & ((1 << (width - nbits)) - 1):
        raise MalformedEncoding("non-zero padding bits")
    for v in range(1, n):
        for u in range(v):
            if bits >> (width - 1 - k) & 1:
                edges.append((u, v))
            k += 1
    return n, edges


# ---------------------------------------------------------------------------
# plain edge-list text


def parse_edge_list_text(text: str) -> CubicGraph:
    """Parse ``"n\\nu v\\n..."``; ``#`` starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise MalformedEncoding("empty edge-list text")
    try:
        n = int(lines[0])
        pairs = []
        for line in lines[1:]:
            u, v = line.split()
            pairs.append((int(u), int(v)))
    except ValueError as exc:
        raise MalformedEncoding(f"bad edge-list line: {exc}") from None
    return from_edge_list(n, pairs)


def to_edge_list_text(g: CubicGraph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def read_graph(spec: str) -> CubicGraph:
    """Best-effort reader used by the CLI: graph6 first, then edge-list text."""
    s = spec.strip()
    if "\n" in s or " " in s:
        return parse_edge_list_text(s)
    return parse_graph6(s)
