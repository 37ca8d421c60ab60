"""Canonical labelling, isomorphism testing and gene multisets.

The canonical code of a graph is the graph6 encoding of the relabelling whose
upper-triangle adjacency bit string is lexicographically smallest among the
leaves of an individualisation-refinement search tree. Refinement is the
usual equitable-partition colour refinement, seeded with per-vertex triangle
and 4-cycle counts (all degrees are 3, so degree carries no information).
Automorphisms discovered at equal leaves prune sibling branches.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import CubicGraph, _graph6_from_edges, relabel

CanonicalCode = bytes


def _cycle_profile(adj) -> list[tuple[int, int]]:
    n = len(adj)
    prof = []
    for v in range(n):
        nb = adj[v]
        tri = 0
        quad = 0
        for i in range(3):
            a = nb[i]
            for j in range(i + 1, 3):
                b = nb[j]
                if b in adj[a]:
                    tri += 1
                common = set(adj[a]).intersection(adj[b])
                common.discard(v)
                quad += len(common)
        prof.append((tri, quad))
    return prof


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    """Split cells until equitable. Cell order is label-invariant."""
    while True:
        cell_of = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        new_cells: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                a, b, c = adj[v]
                sig = tuple(sorted((cell_of[a], cell_of[b], cell_of[c])))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                split = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not split:
            return cells


def _certificate(edges, lab, width) -> int:
    bits = 0
    for u, v in edges:
        i, j = lab[u], lab[v]
        if i > j:
            i, j = j, i
        bits |= 1 << (width - 1 - (j * (j - 1) // 2 + i))
    return bits


def _orbit_rep(parent: dict[int, int], x: int) -> int:
    while parent.get(x, x) != x:
        x = parent[x]
    return x


def canonical_labeling(g: CubicGraph) -> list[int]:
    """Return ``lab`` with ``lab[v]`` = canonical position of vertex ``v``."""
    return list(_canon(g)[0])


def _canon(g: CubicGraph) -> tuple[tuple[int, ...], int]:
    return _canon_cached(g)


@lru_cache(maxsize=1 << 16)
def _canon_cached(g: CubicGraph) -> tuple[tuple[int, ...], int]:
    n, adj, edges = g.n, g.adj, g.edges
    nbits = n * (n - 1) // 2
    width = nbits + (-nbits) % 6

    prof = _cycle_profile(adj)
    by_prof: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        by_prof.setdefault(prof[v], []).append(v)
    root = _refine(adj, [by_prof[k] for k in sorted(by_prof)])

    best_cert: int | None = None
    best_lab: list[int] | None = None
    autos: list[list[int]] = []

    def search(cells: list[list[int]], path: list[int]) -> None:
        nonlocal best_cert, best_lab
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            lab = [0] * n
            for pos, cell in enumerate(cells):
                lab[cell[0]] = pos
            cert = _certificate(edges, lab, width)
            if best_cert is None or cert < best_cert:
                best_cert, best_lab = cert, lab
            elif cert == best_cert:
                inv = [0] * n
                for v in range(n):
                    inv[best_lab[v]] = v
                autos.append([inv[lab[v]] for v in range(n)])
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored:
                parent: dict[int, int] = {}
                for perm in autos:
                    if all(perm[p] == p for p in path):
                        for x in range(n):
                            rx, ry = _orbit_rep(parent, x), _orbit_rep(parent, perm[x])
                            if rx != ry:
                                parent[max(rx, ry)] = min(rx, ry)
                rv = _orbit_rep(parent, v)
                if any(_orbit_rep(parent, u) == rv for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, child), path + [v])

    search(root, [])
    assert best_lab is not None and best_cert is not None
    return tuple(best_lab), best_cert


def canonical_form(g: CubicGraph) -> CanonicalCode:
    """graph6 bytes of the canonical relabelling of ``g``."""
    lab, _ = _canon(g)
    return _graph6_from_edges(g.n, ((lab[u], lab[v]) for u, v in g.edges))


def canonical_graph(g: CubicGraph) -> CubicGraph:
    return relabel(g, _canon(g)[0])


def is_isomorphic(g1: CubicGraph, g2: CubicGraph) -> bool:
    if g1.n != g2.n:
        return False
    return canonical_form(g1) == canonical_form(g2)


@dataclass(frozen=True)
class GeneMultiset:
    """Sorted ``(canonical code, multiplicity)`` pairs."""

    entries: tuple[tuple[bytes, int], ...] = ()

    @classmethod
    def from_codes(cls, codes: Iterable[bytes]) -> "GeneMultiset":
        return cls(tuple(sorted(Counter(codes).items())))

    @classmethod
    def from_graphs(cls, graphs: Iterable[CubicGraph]) -> "GeneMultiset":
        return cls.from_codes(canonical_form(g) for g in graphs)

    def __add__(self, other: "GeneMultiset") -> "GeneMultiset":
        c = Counter(dict(self.entries))
        c.update(dict(other.entries))
        return GeneMultiset(tuple(sorted(c.items())))

    @property
    def total(self) -> int:
        return sum(k for _, k in self.entries)

    def codes(self) -> list[bytes]:
        return [code for code, k in self.entries for _ in range(k)]

    def to_json(self) -> list[dict]:
        return [{"g6": code.decode("ascii"), "count": k} for code, k in self.entries]

    @classmethod
    def from_json(cls, data) -> "GeneMultiset":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(sorted((d["g6"].encode("ascii"), int(d["count"])) for d in data)))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{c.decode()}:{k}" for c, k in self.entries) + "}"


def multiset_equal(a: GeneMultiset, b: GeneMultiset) -> bool:
    return a.entries == b.entries
