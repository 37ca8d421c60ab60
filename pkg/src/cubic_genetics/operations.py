"""Breeding operations, parthenogenic operations and their inverses.

Labelling policy for every result: surviving vertices keep their relative
order and are compacted downwards; vertices created by an operation are
appended after them, in the order the construction introduces them. For the
two-parent operations the first parent's vertices precede the second's.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .analysis import Cracker, _components, bridges, cracker_sides
from .errors import (
    BadPairing,
    BridgeEdge,
    InvalidEdge,
    InvalidVertex,
    IsDiamondCase,
    NotA2Cracker,
    NotA3Cracker,
    NotABridge,
    NotACracker,
    NotADiamond,
    NotAParthBridge,
    NotAParthTriangle,
    NotOnBridge,
    Reducible1Cracker,
    Reducible2Cracker,
    WouldCreateMultiEdge,
)
from .graph import CubicGraph, Edge, edge_ref, from_edge_list

OPS = ("B1", "B2", "B3", "P1", "P2", "P3")
DIAMOND, BRIDGE, TRIANGLE = "diamond", "bridge", "triangle"


@dataclass(frozen=True)
class OpRecord:
    """One forward operation: ``op(parents, **params)`` yields the child."""

    op: str
    params: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"op": self.op, "params": _jsonable(self.params), "outputs": _jsonable(self.outputs)}

    @classmethod
    def from_json(cls, data: dict) -> "OpRecord":
        return cls(data["op"], _from_jsonable(data["params"]), _from_jsonable(data["outputs"]))


def _jsonable(d: dict) -> dict:
    def conv(x):
        if isinstance(x, (tuple, list)):
            return [conv(y) for y in x]
        return x

    return {k: conv(v) for k, v in d.items()}


def _from_jsonable(d: dict) -> dict:
    def conv(x):
        if isinstance(x, list):
            return tuple(conv(y) for y in x)
        return x

    return {k: conv(v) for k, v in d.items()}


@dataclass(frozen=True)
class ParthenogenicObject:
    """A diamond ``(v1, v2, v3, v4)`` with ports v1, v4; a bridge ``(v1, v2)``;
    or a triangle ``(a, v1, v2)`` whose apex ``a`` carries a 1-cracker."""

    kind: str
    vertices: tuple[int, ...]


# ---------------------------------------------------------------------------
# helpers


def _check_edge(g: CubicGraph, e: Sequence[int]) -> tuple[int, int]:
    try:
        u, v = int(e[0]), int(e[1])
    except (TypeError, ValueError, IndexError):
        raise InvalidEdge(f"not an edge reference: {e!r}") from None
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise InvalidEdge(f"{(u, v)} is not an edge of the graph")
    return u, v


def _check_vertex(g: CubicGraph, v: int) -> int:
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InvalidVertex(f"vertex {v!r} out of range for n={g.n}")
    return v


def _assemble(keep: Iterable[int], edges: Iterable[tuple], n_new: int = 0):
    """Build a graph from surviving old vertices plus ``n_new`` fresh ones.

    Edge endpoints are old ids (ints) or ``("new", i)``. Returns the graph and
    the old-to-new id map.
    """
    order = sorted(keep)
    remap = {v: i for i, v in enumerate(order)}
    base = len(order)

    def m(x):
        if isinstance(x, tuple):
            return base + x[1]
        return remap[x]

    g = from_edge_list(base + n_new, [(m(u), m(v)) for u, v in edges])
    return g, remap


def _other(g: CubicGraph, v: int, *exclude: int) -> list[int]:
    return [w for w in g.adj[v] if w not in exclude]


def _disjoint_union_edges(g1: CubicGraph, g2: CubicGraph) -> list[Edge]:
    s = g1.n
    return list(g1.edges) + [(u + s, v + s) for u, v in g2.edges]


# ---------------------------------------------------------------------------
# breeding


def breed1(g1: CubicGraph, g2: CubicGraph, e1, e2):
    """Join two graphs by a new bridge between subdivisions of ``e1`` and ``e2``.

    Returns ``(child, bridge, record)``.
    """
    a, b = _check_edge(g1, e1)
    c, d = _check_edge(g2, e2)
    s = g1.n
    v1, v2 = g1.n + g2.n, g1.n + g2.n + 1
    drop = {edge_ref(a, b), edge_ref(c + s, d + s)}
    edges = [e for e in _disjoint_union_edges(g1, g2) if e not in drop]
    edges += [(a, v1), (b, v1), (c + s, v2), (d + s, v2), (v1, v2)]
    child = from_edge_list(v2 + 1, edges)
    rec = OpRecord("B1", {"e1": (a, b), "e2": (c, d)}, {"e": (v1, v2)})
    return child, (v1, v2), rec


def breed2(g1: CubicGraph, g2: CubicGraph, e1, e2):
    """Cross-connect ``e1 = (a, b)`` and ``e2 = (c, d)`` as ``(a, c), (b, d)``.

    Edge orientation matters: it fixes which endpoints are paired.
    Returns ``(child, ((a, c), (b, d)), record)`` in child labels.
    """
    a, b = _check_edge(g1, e1)
    c, d = _check_edge(g2, e2)
    if edge_ref(a, b) in bridges(g1) or edge_ref(c, d) in bridges(g2):
        raise BridgeEdge("breed2 edges must not be 1-crackers")
    s = g1.n
    drop = {edge_ref(a, b), edge_ref(c + s, d + s)}
    edges = [e for e in _disjoint_union_edges(g1, g2) if e not in drop]
    edges += [(a, c + s), (b, d + s)]
    child = from_edge_list(g1.n + g2.n, edges)
    out = (edge_ref(a, c + s), edge_ref(b, d + s))
    rec = OpRecord("B2", {"e1": (a, b), "e2": (c, d)}, {"e3": out[0], "e4": out[1]})
    return child, out, rec


def breed3(g1: CubicGraph, g2: CubicGraph, v1: int, v2: int, pairing=None):
    """Delete ``v1`` and ``v2`` and match their neighbourhoods by ``pairing``.

    ``pairing`` is three ``(x, y)`` pairs with ``x`` a neighbour of ``v1`` in
    ``g1`` and ``y`` a neighbour of ``v2`` in ``g2``; default pairs the two
    ascending neighbour triples in order.
    Returns ``(child, (e1, e2, e3), record)``.
    """
    _check_vertex(g1, v1)
    _check_vertex(g2, v2)
    n1, n2 = g1.adj[v1], g2.adj[v2]
    if pairing is None:
        pairing = tuple(zip(n1, n2))
    try:
        pairing = tuple((int(x), int(y)) for x, y in pairing)
    except (TypeError, ValueError):
        raise BadPairing(f"malformed pairing {pairing!r}") from None
    if len(pairing) != 3 or sorted(x for x, _ in pairing) != list(n1) or sorted(
        y for _, y in pairing
    ) != list(n2):
        raise BadPairing(f"{pairing} is not a bijection between {n1} and {n2}")
    b1, b2 = set(bridges(g1)), set(bridges(g2))
    if any(edge_ref(v1, x) in b1 for x in n1) or any(edge_ref(v2, y) in b2 for y in n2):
        raise BridgeEdge("breed3 vertices must not be incident to 1-crackers")
    s = g1.n
    keep = [v for v in range(s) if v != v1] + [v + s for v in range(g2.n) if v != v2]
    edges = [e for e in _disjoint_union_edges(g1, g2) if v1 not in e and (v2 + s) not in e]
    cross = [(x, y + s) for x, y in pairing]
    child, remap = _assemble(keep, edges + cross)
    out = tuple(edge_ref(remap[x], remap[y]) for x, y in cross)
    rec = OpRecord(
        "B3",
        {"v1": v1, "v2": v2, "pairing": pairing},
        {"e1": out[0], "e2": out[1], "e3": out[2]},
    )
    return child, out, rec


# ---------------------------------------------------------------------------
# parthenogenesis


def parth1(g: CubicGraph, e1):
    """Replace the 1-cracker ``e1 = (a, b)`` by ``a - diamond - b``.

    Returns ``(child, (v1, v4), record)``.
    """
    a, b = _check_edge(g, e1)
    if edge_ref(a, b) not in bridges(g):
        raise NotABridge(f"{edge_ref(a, b)} is not a 1-cracker")
    n = g.n
    v1, v2, v3, v4 = n, n + 1, n + 2, n + 3
    edges = [e for e in g.edges if e != edge_ref(a, b)]
    edges += [(a, v1), (v1, v2), (v1, v3), (v2, v3), (v2, v4), (v3, v4), (v4, b)]
    child = from_edge_list(n + 4, edges)
    return child, (v1, v4), OpRecord("P1", {"e1": (a, b)}, {"v1": v1, "v4": v4})


def parth2(g: CubicGraph, c2):
    """Subdivide both edges of a 2-cracker and join the two new vertices.

    Returns ``(child, (v1, v2), record)``.
    """
    try:
        (a, b), (c, d) = c2
    except (TypeError, ValueError):
        raise NotA2Cracker(f"expected two edges, got {c2!r}") from None
    try:
        cracker_sides(g, [(a, b), (c, d)])
    except NotACracker as exc:
        raise NotA2Cracker(str(exc)) from None
    n = g.n
    v1, v2 = n, n + 1
    drop = {edge_ref(a, b), edge_ref(c, d)}
    edges = [e for e in g.edges if e not in drop]
    edges += [(a, v1), (b, v1), (c, v2), (d, v2), (v1, v2)]
    child = from_edge_list(n + 2, edges)
    rec = OpRecord("P2", {"e1": (a, b), "e2": (c, d)}, {"v1": v1, "v2": v2})
    return child, (v1, v2), rec


def parth3(g: CubicGraph, a: int, c: Optional[int] = None, d: Optional[int] = None):
    """Insert a triangle at ``a``, whose third edge ``(a, b)`` is a 1-cracker.

    ``c`` and ``d`` name the two neighbours moved onto the new vertices;
    by default they are the two neighbours other than the smallest ``b``
    with ``(a, b)`` a bridge. Returns ``(child, (a, v1, v2), record)``.
    """
    _check_vertex(g, a)
    br = set(bridges(g))
    if c is None or d is None:
        on = [w for w in g.adj[a] if edge_ref(a, w) in br]
        if not on:
            raise NotOnBridge(f"vertex {a} is not incident to a 1-cracker")
        c, d = _other(g, a, on[0])
    if c == d or c not in g.adj[a] or d not in g.adj[a]:
        raise InvalidVertex(f"{c}, {d} must be distinct neighbours of {a}")
    (b,) = _other(g, a, c, d)
    if edge_ref(a, b) not in br:
        raise NotOnBridge(f"({a}, {b}) is not a 1-cracker")
    n = g.n
    v1, v2 = n, n + 1
    drop = {edge_ref(a, c), edge_ref(a, d)}
    edges = [e for e in g.edges if e not in drop]
    edges += [(a, v1), (a, v2), (v1, v2), (v1, c), (v2, d)]
    child = from_edge_list(n + 2, edges)
    rec = OpRecord("P3", {"a": a, "c": c, "d": d}, {"a": a, "v1": v1, "v2": v2})
    return child, (a, v1, v2), rec


def apply_record(rec: OpRecord, parents: Sequence[CubicGraph]) -> CubicGraph:
    """Replay a recorded forward operation on its parent graph(s)."""
    p = rec.params
    if rec.op == "B1":
        return breed1(parents[0], parents[1], p["e1"], p["e2"])[0]
    if rec.op == "B2":
        return breed2(parents[0], parents[1], p["e1"], p["e2"])[0]
    if rec.op == "B3":
        return breed3(parents[0], parents[1], p["v1"], p["v2"], p["pairing"])[0]
    if rec.op == "P1":
        return parth1(parents[0], p["e1"])[0]
    if rec.op == "P2":
        return parth2(parents[0], (p["e1"], p["e2"]))[0]
    if rec.op == "P3":
        return parth3(parents[0], p["a"], p.get("c"), p.get("d"))[0]
    raise ValueError(f"unknown operation {rec.op!r}")


# ---------------------------------------------------------------------------
# irreducibility and inverse breeding


def _as_edges(c) -> tuple[Edge, ...]:
    if isinstance(c, Cracker):
        return c.edges
    if len(c) == 2 and all(isinstance(x, int) for x in c):
        return (tuple(c),)  # type: ignore[return-value]
    return tuple(tuple(e) for e in c)  # type: ignore[misc]


def _oriented(g: CubicGraph, edges: tuple[Edge, ...]):
    """Cracker endpoints split as (side-a ends, side-b ends), edge by edge."""
    side_a, side_b = cracker_sides(g, edges)
    xs, ys = [], []
    for u, v in edges:
        x, y = (u, v) if u in side_a else (v, u)
        xs.append(x)
        ys.append(y)
    return side_a, side_b, xs, ys


def is_irreducible(g: CubicGraph, c) -> bool:
    """Whether the inverse breeding operation is defined at cubic cracker ``c``."""
    edges = _as_edges(c)
    side_a, side_b, xs, ys = _oriented(g, edges)
    if len(edges) == 3:
        return True
    if len(edges) == 1:
        (x,), (y,) = xs, ys
        p, q = _other(g, x, y)
        r, s = _other(g, y, x)
        return not g.has_edge(p, q) and not g.has_edge(r, s)
    if len(edges) == 2:
        return not g.has_edge(xs[0], xs[1]) and not g.has_edge(ys[0], ys[1])
    raise NotACracker(f"{edges} is not a cubic cracker")


def inv_breed1(g: CubicGraph, bridge):
    """Split at an irreducible 1-cracker ``(v1, v2)``.

    Returns ``(g1, g2, e1, e2)`` with ``breed1(g1, g2, e1, e2)`` isomorphic
    to ``g``; ``g1`` comes from the side of the first listed endpoint.
    """
    try:
        v1, v2 = int(bridge[0]), int(bridge[1])
    except (TypeError, ValueError, IndexError):
        raise NotABridge(f"not an edge: {bridge!r}") from None
    if not (0 <= v1 < g.n and 0 <= v2 < g.n) or edge_ref(v1, v2) not in bridges(g):
        raise NotABridge(f"{(v1, v2)} is not a 1-cracker")
    a, b = _other(g, v1, v2)
    c, d = _other(g, v2, v1)
    if g.has_edge(a, b) or g.has_edge(c, d):
        raise Reducible1Cracker(f"1-cracker {edge_ref(v1, v2)} is reducible")
    comp = _components(g.n, g.adj, {edge_ref(v1, v2)})
    s1 = [v for v in range(g.n) if comp[v] == comp[v1] and v != v1]
    s2 = [v for v in range(g.n) if comp[v] == comp[v2] and v != v2]
    e_in1 = [e for e in g.edges if comp[e[0]] == comp[v1] and v1 not in e]
    e_in2 = [e for e in g.edges if comp[e[0]] == comp[v2] and v2 not in e]
    g1, m1 = _assemble(s1, e_in1 + [(a, b)])
    g2, m2 = _assemble(s2, e_in2 + [(c, d)])
    return g1, g2, (m1[a], m1[b]), (m2[c], m2[d])


def inv_breed2(g: CubicGraph, c2):
    """Split at an irreducible 2-cracker.

    Returns ``(g1, g2, e1, e2)`` oriented so that ``breed2`` pairs the
    endpoints back up the way they were.
    """
    edges = _as_edges(c2)
    if len(edges) != 2:
        raise NotA2Cracker(f"expected two edges, got {edges}")
    try:
        side_a, side_b, xs, ys = _oriented(g, edges)
    except NotACracker as exc:
        raise NotA2Cracker(str(exc)) from None
    if g.has_edge(xs[0], xs[1]) or g.has_edge(ys[0], ys[1]):
        raise Reducible2Cracker(f"2-cracker {edges} is reducible")
    cut = {edge_ref(u, v) for u, v in edges}
    ea = [e for e in g.edges if e not in cut and e[0] in side_a]
    eb = [e for e in g.edges if e not in cut and e[0] in side_b]
    g1, m1 = _assemble(side_a, ea + [(xs[0], xs[1])])
    g2, m2 = _assemble(side_b, eb + [(ys[0], ys[1])])
    return g1, g2, (m1[xs[0]], m1[xs[1]]), (m2[ys[0]], m2[ys[1]])


def inv_breed3(g: CubicGraph, c3):
    """Split at a 3-cracker, capping each side with a new star vertex.

    Returns ``(g1, g2, (s1, s2, pairing))``; ``breed3(g1, g2, s1, s2, pairing)``
    is isomorphic to ``g``.
    """
    edges = _as_edges(c3)
    if len(edges) != 3:
        raise NotA3Cracker(f"expected three edges, got {edges}")
    try:
        side_a, side_b, xs, ys = _oriented(g, edges)
    except NotACracker as exc:
        raise NotA3Cracker(str(exc)) from None
    cut = {edge_ref(u, v) for u, v in edges}
    star = ("new", 0)
    ea = [e for e in g.edges if e not in cut and e[0] in side_a]
    eb = [e for e in g.edges if e not in cut and e[0] in side_b]
    g1, m1 = _assemble(side_a, ea + [(x, star) for x in xs], n_new=1)
    g2, m2 = _assemble(side_b, eb + [(y, star) for y in ys], n_new=1)
    pairing = tuple((m1[x], m2[y]) for x, y in zip(xs, ys))
    return g1, g2, (g1.n - 1, g2.n - 1, pairing)


# ---------------------------------------------------------------------------
# parthenogenic objects and inverse parthenogenesis


def _diamond_ports(g: CubicGraph, core: tuple[int, int]):
    """For an edge ``(x, y)`` with exactly two common, non-adjacent neighbours
    ``p < q``, return ``(p, q)``."""
    x, y = core
    common = sorted(set(g.adj[x]) & set(g.adj[y]))
    if len(common) != 2 or g.has_edge(*common):
        return None
    return common[0], common[1]


def _diamond_at(g: CubicGraph, br: set[Edge], verts) -> Optional[tuple[int, int]]:
    """Outer neighbours ``(a, b)`` if ``verts`` is a diamond between bridges."""
    if len(verts) != 4:
        return None
    v1, v2, v3, v4 = verts
    if not g.has_edge(v2, v3) or _diamond_ports(g, (v2, v3)) != tuple(sorted((v1, v4))):
        return None
    (a,) = _other(g, v1, v2, v3)
    (b,) = _other(g, v4, v2, v3)
    if edge_ref(a, v1) not in br or edge_ref(b, v4) not in br:
        return None
    return a, b


def _parth_bridge_at(g: CubicGraph, verts):
    """Outer neighbour pairs if ``(v1, v2)`` is a parthenogenic bridge."""
    if len(verts) != 2 or not g.has_edge(*verts):
        return None
    v1, v2 = verts
    a, b = _other(g, v1, v2)
    c, d = _other(g, v2, v1)
    if len({a, b, c, d}) != 4:
        return None
    return (a, b), (c, d)


def _bridge_object_splits(g: CubicGraph, v1: int, v2: int, ab, cd) -> bool:
    cut = {edge_ref(v1, w) for w in g.adj[v1]} | {edge_ref(v2, w) for w in g.adj[v2]}
    comp = _components(g.n, g.adj, cut)
    rest = {comp[v] for v in range(g.n) if v not in (v1, v2)}
    if len(rest) != 2:
        return False
    (a, b), (c, d) = ab, cd
    return comp[a] != comp[b] and comp[c] != comp[d]


def _triangle_at(g: CubicGraph, br: set[Edge], verts):
    """Outer neighbours ``(c, d)`` of a triangle ``(a, v1, v2)`` whose apex is
    on a 1-cracker; ``c == d`` signals the diamond configuration."""
    if len(verts) != 3:
        return None
    a, v1, v2 = verts
    if not (g.has_edge(a, v1) and g.has_edge(a, v2) and g.has_edge(v1, v2)):
        return None
    (b,) = _other(g, a, v1, v2)
    if edge_ref(a, b) not in br:
        return None
    (c,) = _other(g, v1, a, v2)
    (d,) = _other(g, v2, a, v1)
    return c, d


def find_parthenogenic_objects(g: CubicGraph) -> list[ParthenogenicObject]:
    """Diamonds, then bridges, then triangles; each kind in vertex order."""
    br = set(bridges(g))
    diamonds, pbridges, triangles = set(), [], set()
    for x, y in g.edges:
        ports = _diamond_ports(g, (x, y))
        if ports is not None:
            verts = (ports[0], x, y, ports[1])
            if _diamond_at(g, br, verts) is not None:
                diamonds.add(verts)
        pat = _parth_bridge_at(g, (x, y))
        if pat is not None and _bridge_object_splits(g, x, y, *pat):
            pbridges.append((x, y))
    for a, b in br:
        for apex in (a, b):
            other = b if apex == a else a
            v1, v2 = _other(g, apex, other)
            cd = _triangle_at(g, br, (apex, v1, v2))
            if cd is not None and cd[0] != cd[1]:
                triangles.add((apex, v1, v2))
    return (
        [ParthenogenicObject(DIAMOND, v) for v in sorted(diamonds)]
        + [ParthenogenicObject(BRIDGE, v) for v in sorted(pbridges)]
        + [ParthenogenicObject(TRIANGLE, v) for v in sorted(triangles)]
    )


def _object_vertices(obj, kind: str) -> tuple[int, ...]:
    if isinstance(obj, ParthenogenicObject):
        if obj.kind != kind:
            return ()
        return obj.vertices
    return tuple(int(x) for x in obj)


def inv_parth1(g: CubicGraph, d):
    """Remove a diamond and rejoin its outer neighbours.

    Returns ``(g1, (a, b))`` where ``(a, b)`` is the restored 1-cracker.
    """
    verts = _object_vertices(d, DIAMOND)
    ab = _diamond_at(g, set(bridges(g)), verts) if verts else None
    if ab is None:
        raise NotADiamond(f"{d!r} is not a parthenogenic diamond of the graph")
    a, b = ab
    gone = set(verts)
    edges = [e for e in g.edges if e[0] not in gone and e[1] not in gone] + [(a, b)]
    g1, m = _assemble([v for v in range(g.n) if v not in gone], edges)
    return g1, (m[a], m[b])


def inv_parth2(g: CubicGraph, b):
    """Remove a parthenogenic bridge ``(v1, v2)``, closing up both sides.

    Returns ``(g1, ((a, b), (c, d)))``: the restored 2-cracker, with
    ``(a, b)`` the former neighbours of ``v1``.
    """
    verts = _object_vertices(b, BRIDGE)
    pat = _parth_bridge_at(g, verts) if verts else None
    if pat is None:
        raise NotAParthBridge(f"{b!r} is not a parthenogenic bridge of the graph")
    v1, v2 = verts
    (p, q), (r, s) = pat
    if g.has_edge(p, q) or g.has_edge(r, s):
        raise WouldCreateMultiEdge(f"removing {verts} would duplicate an edge")
    if not _bridge_object_splits(g, v1, v2, (p, q), (r, s)):
        raise NotAParthBridge(f"{verts} does not sit on a 2-cracker")
    edges = [e for e in g.edges if v1 not in e and v2 not in e] + [(p, q), (r, s)]
    g1, m = _assemble([v for v in range(g.n) if v not in (v1, v2)], edges)
    return g1, ((m[p], m[q]), (m[r], m[s]))


def inv_parth3(g: CubicGraph, t):
    """Remove a parthenogenic triangle ``(a, v1, v2)``.

    Returns ``(g1, a, (c, d))``: the apex and the two neighbours it was
    reattached to, in ``g1`` labels (``parth3(g1, a, c, d)`` replays it).
    """
    verts = _object_vertices(t, TRIANGLE)
    cd = _triangle_at(g, set(bridges(g)), verts) if verts else None
    if cd is None:
        raise NotAParthTriangle(f"{t!r} is not a parthenogenic triangle of the graph")
    a, v1, v2 = verts
    c, d = cd
    if c == d:
        raise IsDiamondCase(f"triangle {verts} closes into a diamond at {c}")
    if g.has_edge(a, c) or g.has_edge(a, d):
        raise WouldCreateMultiEdge(f"removing {verts} would duplicate an edge")
    edges = [e for e in g.edges if v1 not in e and v2 not in e] + [(a, c), (a, d)]
    g1, m = _assemble([v for v in range(g.n) if v not in (v1, v2)], edges)
    return g1, m[a], (m[c], m[d])
