"""Independent reference computations for the test suite.

Nothing here imports the enumerator, the canonical labelling or the
analysis routines; each oracle works straight from an edge list.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial

import numpy as np


# ---------------------------------------------------------------------------
# labelled counting


@lru_cache(maxsize=None)
def _complete(x1: int, x2: int, x3: int) -> int:
    """Ways to finish a labelled simple graph whose open vertices need
    1, 2 or 3 more edges (``x1``, ``x2``, ``x3`` of each)."""
    if x1 == x2 == x3 == 0:
        return 1
    # fix one vertex of the highest open class and choose all its partners
    if x3:
        r, c = 3, (x1, x2, x3 - 1)
    elif x2:
        r, c = 2, (x1, x2 - 1, x3)
    else:
        r, c = 1, (x1 - 1, x2, x3)
    y1, y2, y3 = c
    total = 0
    for k3 in range(min(r, y3) + 1):
        for k2 in range(min(r - k3, y2) + 1):
            k1 = r - k3 - k2
            if k1 > y1:
                continue
            ways = comb(y1, k1) * comb(y2, k2) * comb(y3, k3)
            # partners drop one class: 3->2, 2->1, 1->done
            total += ways * _complete(y1 - k1 + k2, y2 - k2 + k3, y3 - k3)
    return total


def labelled_cubic(n: int) -> int:
    """Labelled simple 3-regular graphs on ``n`` vertices (connected or not)."""
    if n == 0:
        return 1
    if n % 2:
        return 0
    return _complete(0, 0, n)


@lru_cache(maxsize=None)
def labelled_connected_cubic(n: int) -> int:
    """Connected ones, peeling off the component of vertex 1."""
    if n == 0:
        return 0
    total = labelled_cubic(n)
    for k in range(1, n):
        total -= comb(n - 1, k - 1) * labelled_connected_cubic(k) * labelled_cubic(n - k)
    return total


def automorphism_count(n: int, edges) -> int:
    """Count adjacency-preserving permutations by extending a BFS order."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    order, anchor = [0], {0: None}
    for u in order:
        for w in sorted(adj[u]):
            if w not in anchor:
                anchor[w] = u
                order.append(w)
    count = 0
    image = {}
    used = set()

    def rec(i: int) -> None:
        nonlocal count
        if i == n:
            count += 1
            return
        v = order[i]
        cands = range(n) if anchor[v] is None else adj[image[anchor[v]]]
        for w in cands:
            if w in used:
                continue
            if all((image[x] in adj[w]) == (x in adj[v]) for x in image):
                image[v] = w
                used.add(w)
                rec(i + 1)
                used.discard(w)
                del image[v]

    rec(0)
    return count


def orbit_sum(n: int, edge_lists) -> int:
    """``sum n!/|Aut(G)|`` over a list of graphs (edge lists)."""
    return sum(factorial(n) // automorphism_count(n, e) for e in edge_lists)


def labelled_cubic_graphs(n: int):
    """Every labelled simple 3-regular graph on ``n`` vertices (small n)."""
    deg = [0] * n
    chosen = []

    def rec(v: int):
        if v == n:
            yield list(chosen)
            return
        need = 3 - deg[v]
        cands = [w for w in range(v + 1, n) if deg[w] < 3]
        for ws in combinations(cands, need):
            for w in ws:
                deg[w] += 1
                chosen.append((v, w))
            deg[v] = 3
            yield from rec(v + 1)
            deg[v] = 3 - need
            for w in ws:
                deg[w] -= 1
                chosen.pop()

    if n % 2 == 0 and n >= 4:
        yield from rec(0)


def connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# ---------------------------------------------------------------------------
# isomorphism


def brute_isomorphic(n: int, e1, e2) -> bool:
    """Try every vertex bijection."""
    s1 = {frozenset(e) for e in e1}
    s2 = {frozenset(e) for e in e2}
    if len(s1) != len(s2):
        return False
    for p in permutations(range(n)):
        if all(frozenset((p[u], p[v])) in s2 for u, v in e1):
            return True
    return False


# ---------------------------------------------------------------------------
# crackers, girth, cycles, colourings


def _components_after(n: int, edges, removed) -> int:
    keep = [e for e in edges if e not in removed]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in keep:
        parent[find(u)] = find(v)
    return len({find(x) for x in range(n)})


def brute_crackers(n: int, edges, max_k: int = 3):
    """Crackers straight from the definition: pairwise non-adjacent edges
    whose removal disconnects while no proper subset does."""
    edges = sorted(tuple(sorted(e)) for e in edges)
    out = []
    for k in range(1, max_k + 1):
        for combo in combinations(edges, k):
            ends = [x for e in combo for x in e]
            if len(set(ends)) != 2 * k:
                continue
            if _components_after(n, edges, set(combo)) < 2:
                continue
            if any(
                _components_after(n, edges, set(sub)) > 1
                for j in range(1, k)
                for sub in combinations(combo, j)
            ):
                continue
            out.append(combo)
    return out


def brute_girth(n: int, edges) -> int:
    """Shortest cycle by trying every vertex sequence up to length n."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for length in range(3, n + 1):
        for start in range(n):
            # simple paths from start of the given length returning to start
            stack = [(start, (start,))]
            while stack:
                u, path = stack.pop()
                if len(path) == length:
                    if start in adj[u]:
                        return length
                    continue
                for w in adj[u]:
                    if w > start and w not in path:
                        stack.append((w, path + (w,)))
    return 0


def brute_hamiltonian(n: int, edges) -> bool:
    """Exhaustive search over vertex orders starting at 0 (rejecting an
    order at its first non-adjacent consecutive pair)."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def rec(path, seen):
        if len(path) == n:
            return 0 in adj[path[-1]]
        for w in range(n):
            if w not in seen and w in adj[path[-1]]:
                seen.add(w)
                path.append(w)
                if rec(path, seen):
                    return True
                path.pop()
                seen.discard(w)
        return False

    return rec([0], {0})


def brute_tait(n: int, edges, chunk: int = 3**11) -> bool:
    """Scan every edge colouring in vectorised chunks.

    Colour names are interchangeable, so the three edges at vertex 0 are
    pinned to 0, 1, 2 and the remaining ``3**(m - 3)`` assignments are
    all tried.
    """
    edges = [tuple(e) for e in edges]
    pinned = [i for i, e in enumerate(edges) if 0 in e]
    free = [i for i in range(len(edges)) if i not in pinned]
    inc = [[i for i, e in enumerate(edges) if v in e] for v in range(n)]
    total = 3 ** len(free)
    powers = np.array([3**i for i in range(len(free))], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((len(idx), len(edges)), dtype=np.int64)
        digits[:, free] = (idx[:, None] // powers[None, :]) % 3
        digits[:, pinned] = np.arange(3)
        mask = np.ones(len(idx), dtype=bool)
        for a, b, c in inc:
            seen = (1 << digits[:, a]) | (1 << digits[:, b]) | (1 << digits[:, c])
            mask &= seen == 7
        if mask.any():
            return True
    return False
