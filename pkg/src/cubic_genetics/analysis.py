"""Structural analysis of cubic graphs.

Crackers are independent edge cuts (no two edges share a vertex) that are
minimal, i.e. bonds. A cut is a bond exactly when removing it leaves two
components with every cut edge running between them, which is how minimality
is checked here.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .errors import NotACracker
from .graph import CubicGraph, Edge, edge_ref

GENE = "gene"
DESCENDANT = "descendant"


@dataclass(frozen=True)
class Cracker:
    edges: tuple[Edge, ...]
    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Classification:
    kind: str
    cyclic_connectivity: Optional[int]
    smallest_cubic_cracker: Optional[int]
    girth: int
    hamiltonian: bool
    mutant: bool
    snark_mutant: Optional[bool]

    def to_json(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------------------
# connectivity helpers


def _components(n: int, adj, removed: frozenset[Edge] | set[Edge]) -> list[int]:
    """Component label per vertex after deleting ``removed``."""
    comp = [-1] * n
    c = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if comp[w] < 0 and edge_ref(u, w) not in removed:
                    comp[w] = c
                    stack.append(w)
        c += 1
    return comp


def _bridges(n: int, adj, removed: frozenset[Edge] | set[Edge] = frozenset()) -> list[Edge]:
    """Bridges of ``G - removed`` (iterative lowpoint DFS, all components)."""
    disc = [-1] * n
    low = [0] * n
    out: list[Edge] = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent or edge_ref(u, w) in removed:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < low[u]:
                    low[u] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                if low[u] < low[parent]:
                    low[parent] = low[u]
                if low[u] > disc[parent]:
                    out.append(edge_ref(parent, u))
    return sorted(out)


def _independent(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def _bond_sides(g: CubicGraph, edges: tuple[Edge, ...]) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    removed = set(edges)
    comp = _components(g.n, g.adj, removed)
    if max(comp) != 1:
        return None
    if any(comp[u] == comp[v] for u, v in edges):
        return None
    first = min(u for u, _ in edges)
    a = comp[first]
    side_a = frozenset(v for v in range(g.n) if comp[v] == a)
    side_b = frozenset(v for v in range(g.n) if comp[v] != a)
    return side_a, side_b


def _make_cracker(g: CubicGraph, edges: Iterable[Edge]) -> Cracker:
    es = tuple(sorted(edge_ref(u, v) for u, v in edges))
    sides = _bond_sides(g, es)
    assert sides is not None
    return Cracker(es, *sides)


# ---------------------------------------------------------------------------
# public API


def bridges(g: CubicGraph) -> list[Edge]:
    return _bridges(g.n, g.adj)


def cracker_sides(g: CubicGraph, edges: Iterable[Iterable[int]]) -> tuple[frozenset[int], frozenset[int]]:
    """Vertex sets of the two components left by removing a cracker.

    ``side_a`` is the component holding the smallest cracker endpoint.
    """
    es = []
    for e in edges:
        u, v = e
        if not g.has_edge(u, v):
            raise NotACracker(f"{(u, v)} is not an edge")
        es.append(edge_ref(u, v))
    es_t = tuple(sorted(set(es)))
    if not es_t or len(es_t) != len(es):
        raise NotACracker("empty or repeated edge set")
    if not _independent(es_t):
        raise NotACracker(f"edges {es_t} are not pairwise non-adjacent")
    sides = _bond_sides(g, es_t)
    if sides is None:
        raise NotACracker(f"edges {es_t} do not form a minimal cut")
    return sides


def is_cracker(g: CubicGraph, edges) -> bool:
    try:
        cracker_sides(g, edges)
    except NotACracker:
        return False
    return True


def enumerate_cubic_crackers(g: CubicGraph) -> list[Cracker]:
    """All crackers of size 1, 2 and 3, ordered by size then edge list."""
    n, adj = g.n, g.adj
    one = bridges(g)
    one_set = set(one)
    out = [_make_cracker(g, [e]) for e in one]

    def disjoint(e: Edge, f: Edge) -> bool:
        return e[0] not in f and e[1] not in f

    # 2-crackers: e1 non-bridge, e2 a bridge of G - e1
    two: list[tuple[Edge, Edge]] = []
    for e1 in g.edges:
        if e1 in one_set:
            continue
        for e2 in _bridges(n, adj, {e1}):
            if e2 > e1 and e2 not in one_set and disjoint(e1, e2):
                two.append((e1, e2))
    two_set = set(two)
    out.extend(_make_cracker(g, c) for c in two)

    # 3-crackers: (e1, e2) independent with G - {e1, e2} connected, e3 a bridge of it
    three: list[tuple[Edge, Edge, Edge]] = []
    free = [e for e in g.edges if e not in one_set]
    for i, e1 in enumerate(free):
        for e2 in free[i + 1:]:
            if not disjoint(e1, e2) or (e1, e2) in two_set:
                continue
            for e3 in _bridges(n, adj, {e1, e2}):
                if (
                    e3 > e2
                    and e3 not in one_set
                    and disjoint(e1, e3)
                    and disjoint(e2, e3)
                    and (e1, e3) not in two_set
                    and (e2, e3) not in two_set
                ):
                    three.append((e1, e2, e3))
    out.extend(_make_cracker(g, c) for c in three)
    return out


def _independent_sets(edges: tuple[Edge, ...], k: int) -> Iterator[tuple[Edge, ...]]:
    def rec(start: int, chosen: list[Edge], used: set[int]):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            chosen.append(edges[i])
            used.add(u)
            used.add(v)
            yield from rec(i + 1, chosen, used)
            chosen.pop()
            used.discard(u)
            used.discard(v)

    yield from rec(0, [], set())


def enumerate_crackers(g: CubicGraph, k: int) -> list[Cracker]:
    """All crackers of exactly ``k`` edges by direct search (any ``k``)."""
    out = []
    for es in _independent_sets(g.edges, k):
        sides = _bond_sides(g, es)
        if sides is not None:
            out.append(Cracker(es, *sides))
    return out


def cyclic_edge_connectivity(g: CubicGraph) -> Optional[int]:
    """Size of the smallest cracker, or ``None`` when there is none.

    Level ``k`` extends every independent ``(k-1)``-set ``R`` by a bridge of
    ``G - R``. When levels below ``k`` found nothing, every such ``R`` keeps
    the graph connected, so the first hit is a cracker.
    """
    n, adj, edges = g.n, g.adj, g.edges
    for k in range(1, n // 2 + 1):
        any_set = False
        for rest in _independent_sets(edges, k - 1):
            any_set = True
            used = {x for e in rest for x in e}
            for e in _bridges(n, adj, set(rest)):
                if e[0] not in used and e[1] not in used:
                    return k
        if not any_set:
            break
    return None


def smallest_cracker(g: CubicGraph) -> Optional[Cracker]:
    k = cyclic_edge_connectivity(g)
    if k is None:
        return None
    return enumerate_crackers(g, k)[0]


def girth(g: CubicGraph) -> int:
    n, adj = g.n, g.adj
    best = n + 1
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = [s]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_hamiltonian(g: CubicGraph) -> tuple[bool, Optional[list[int]]]:
    """Search for a Hamiltonian cycle; returns ``(found, cycle or None)``.

    Depth-first path extension from vertex 0. Whenever a vertex becomes an
    interior path vertex, each unvisited neighbour must keep at least two
    usable neighbours (unvisited, the path end, or vertex 0).
    """
    n, adj = g.n, g.adj
    if bridges(g):
        return False, None
    visited = [False] * n
    visited[0] = True
    path = [0]

    def usable(x: int, end: int) -> int:
        return sum(1 for y in adj[x] if not visited[y] or y == end or y == 0)

    def extend(u: int) -> bool:
        if len(path) == n:
            return 0 in adj[u]
        for w in adj[u]:
            if visited[w]:
                continue
            visited[w] = True
            path.append(w)
            ok = True
            for x in adj[u]:
                if not visited[x] and usable(x, w) < 2:
                    ok = False
                    break
            if ok and extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    if extend(0):
        return True, list(path)
    return False, None


def check_hamiltonian_cycle(g: CubicGraph, cycle: list[int]) -> bool:
    if sorted(cycle) != list(range(g.n)):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % g.n]) for i in range(g.n))


def is_tait_colorable(g: CubicGraph) -> tuple[bool, Optional[dict[Edge, int]]]:
    """Proper 3-edge-colouring by backtracking, edges taken in BFS order."""
    n, adj = g.n, g.adj
    order: list[Edge] = []
    seen_e: set[Edge] = set()
    seen_v = [False] * n
    seen_v[0] = True
    queue = [0]
    for u in queue:
        for w in adj[u]:
            e = edge_ref(u, w)
            if e not in seen_e:
                seen_e.add(e)
                order.append(e)
            if not seen_v[w]:
                seen_v[w] = True
                queue.append(w)
    color: dict[Edge, int] = {}
    at = [set() for _ in range(n)]

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        u, v = order[i]
        choices = (i,) if i < 3 else range(3)
        for c in choices:
            if c in at[u] or c in at[v]:
                continue
            color[(u, v)] = c
            at[u].add(c)
            at[v].add(c)
            if rec(i + 1):
                return True
            at[u].discard(c)
            at[v].discard(c)
            del color[(u, v)]
        return False

    if rec(0):
        return True, dict(color)
    return False, None


def check_tait_coloring(g: CubicGraph, coloring: dict[Edge, int]) -> bool:
    if set(coloring) != set(g.edges):
        return False
    for v in range(g.n):
        if sorted(coloring[edge_ref(v, w)] for w in g.adj[v]) != [0, 1, 2]:
            return False
    return True


def classify(g: CubicGraph) -> Classification:
    crackers = enumerate_cubic_crackers(g)
    smallest = crackers[0].size if crackers else None
    cyc = smallest if smallest is not None else cyclic_edge_connectivity(g)
    gir = girth(g)
    ham, _ = is_hamiltonian(g)
    gene = smallest is None
    mutant = gene and not ham
    snark = None
    if mutant:
        snark = gir >= 5 and not is_tait_colorable(g)[0]
    return Classification(
        kind=GENE if gene else DESCENDANT,
        cyclic_connectivity=cyc,
        smallest_cubic_cracker=smallest,
        girth=gir,
        hamiltonian=ham,
        mutant=mutant,
        snark_mutant=snark,
    )


def is_gene(g: CubicGraph) -> bool:
    return not enumerate_cubic_crackers(g)
