"""Decomposition of descendants into ancestor genes.

``decompose`` follows one deterministic pathway and records it as a
:class:`FamilyTree`. ``all_decompositions`` explores every admissible inverse
operation at every step and reports the distinct gene multisets reached,
which is what the unique-ancestor check compares.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .analysis import Cracker, enumerate_cubic_crackers
from .canon import GeneMultiset, canonical_form, canonical_labeling
from .errors import (
    BudgetExceeded,
    CubicGraphError,
    NotADescendant,
    ReplayMismatch,
)
from .graph import CubicGraph, parse_graph6, relabel, to_graph6
from .operations import (
    BRIDGE,
    DIAMOND,
    TRIANGLE,
    OpRecord,
    ParthenogenicObject,
    apply_record,
    breed1,
    breed2,
    breed3,
    find_parthenogenic_objects,
    inv_breed1,
    inv_breed2,
    inv_breed3,
    inv_parth1,
    inv_parth2,
    inv_parth3,
    is_irreducible,
    parth1,
    parth2,
    parth3,
)

Site = Union[Cracker, ParthenogenicObject]

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class DecompositionStep:
    site: Site
    inverse_op: str
    parents: tuple[CubicGraph, ...]
    record: OpRecord


@dataclass(frozen=True)
class Link:
    child: int
    parents: tuple[int, ...]
    record: OpRecord


@dataclass
class FamilyTree:
    """Node 0 is the decomposed graph; every link rebuilds a child from its
    parents with a forward operation."""

    nodes: list[CubicGraph]
    links: list[Link] = field(default_factory=list)

    @property
    def root(self) -> CubicGraph:
        return self.nodes[0]

    @property
    def leaves(self) -> list[int]:
        children = {ln.child for ln in self.links}
        return [i for i in range(len(self.nodes)) if i not in children]

    def link_for(self, child: int) -> Optional[Link]:
        for ln in self.links:
            if ln.child == child:
                return ln
        return None

    def genes(self) -> GeneMultiset:
        return GeneMultiset.from_graphs(self.nodes[i] for i in self.leaves)

    def to_json(self) -> dict:
        return {
            "nodes": [to_graph6(g).decode("ascii") for g in self.nodes],
            "links": [
                {"child": ln.child, "parents": list(ln.parents), "record": ln.record.to_json()}
                for ln in self.links
            ],
            "leaves": self.leaves,
        }

    @classmethod
    def from_json(cls, data) -> "FamilyTree":
        if isinstance(data, str):
            data = json.loads(data)
        nodes = [parse_graph6(s) for s in data["nodes"]]
        links = [
            Link(d["child"], tuple(d["parents"]), OpRecord.from_json(d["record"]))
            for d in data["links"]
        ]
        return cls(nodes, links)


# ---------------------------------------------------------------------------
# single steps


def apply_inverse(g: CubicGraph, site: Site) -> DecompositionStep:
    """Run the inverse operation matching ``site`` and record the forward op.

    Raises the operation's domain error when the site does not admit it.
    """
    if isinstance(site, Cracker):
        if site.size == 1:
            g1, g2, e1, e2 = inv_breed1(g, site.edges[0])
            _, _, rec = breed1(g1, g2, e1, e2)
            return DecompositionStep(site, "B1", (g1, g2), rec)
        if site.size == 2:
            g1, g2, e1, e2 = inv_breed2(g, site.edges)
            _, _, rec = breed2(g1, g2, e1, e2)
            return DecompositionStep(site, "B2", (g1, g2), rec)
        g1, g2, (s1, s2, pairing) = inv_breed3(g, site.edges)
        _, _, rec = breed3(g1, g2, s1, s2, pairing)
        return DecompositionStep(site, "B3", (g1, g2), rec)
    if site.kind == DIAMOND:
        g1, e = inv_parth1(g, site)
        _, _, rec = parth1(g1, e)
        return DecompositionStep(site, "P1", (g1,), rec)
    if site.kind == BRIDGE:
        g1, c2 = inv_parth2(g, site)
        _, _, rec = parth2(g1, c2)
        return DecompositionStep(site, "P2", (g1,), rec)
    g1, a, (c, d) = inv_parth3(g, site)
    _, _, rec = parth3(g1, a, c, d)
    return DecompositionStep(site, "P3", (g1,), rec)


def _reduction_site(g: CubicGraph, cracker: Cracker) -> ParthenogenicObject:
    """Parthenogenic object exposed by a reducible 1- or 2-cracker."""
    adj = g.adj
    if cracker.size == 1:
        x, y = cracker.edges[0]
        for a, b in ((x, y), (y, x)):
            c, d = (w for w in adj[a] if w != b)
            if g.has_edge(c, d):
                (e,) = (w for w in adj[c] if w not in (a, d))
                (f,) = (w for w in adj[d] if w not in (a, c))
                if e == f:
                    lo, hi = sorted((a, e))
                    return ParthenogenicObject(DIAMOND, (lo, c, d, hi))
                return ParthenogenicObject(TRIANGLE, (a, c, d))
    else:
        (x1, y1), (x2, y2) = [
            (u, v) if u in cracker.side_a else (v, u) for u, v in cracker.edges
        ]
        for a, c, b, d in ((x1, x2, y1, y2), (y1, y2, x1, x2)):
            if g.has_edge(a, c):
                (e,) = (w for w in adj[a] if w not in (b, c))
                (f,) = (w for w in adj[c] if w not in (d, a))
                if e == f:
                    v1, v2 = sorted((a, c))
                    return ParthenogenicObject(TRIANGLE, (e, v1, v2))
                return ParthenogenicObject(BRIDGE, tuple(sorted((a, c))))
    raise AssertionError(f"cracker {cracker.edges} is not reducible")


def decompose_step(g: CubicGraph) -> DecompositionStep:
    """One deterministic inverse operation on a descendant.

    The first irreducible cubic cracker (size, then edge order) is split by
    inverse breeding. If every cracker is reducible, the first one is used to
    locate a diamond, triangle or parthenogenic bridge to strip instead.
    """
    crackers = enumerate_cubic_crackers(g)
    if not crackers:
        raise NotADescendant("graph has no cubic cracker")
    for c in crackers:
        if is_irreducible(g, c):
            return apply_inverse(g, c)
    return apply_inverse(g, _reduction_site(g, crackers[0]))


def _measure(graphs) -> int:
    return sum(h.n - 3 for h in graphs)


def decompose(g: CubicGraph) -> FamilyTree:
    tree = FamilyTree([g])
    frontier = [0]
    while frontier:
        nxt = []
        for idx in frontier:
            h = tree.nodes[idx]
            if not enumerate_cubic_crackers(h):
                continue
            step = decompose_step(h)
            assert _measure(step.parents) < _measure([h])
            ids = []
            for p in step.parents:
                tree.nodes.append(p)
                ids.append(len(tree.nodes) - 1)
            tree.links.append(Link(idx, tuple(ids), step.record))
            nxt.extend(ids)
        frontier = nxt
    return tree


def ancestor_genes(g: CubicGraph) -> GeneMultiset:
    return decompose(g).genes()


def _align(built: CubicGraph, target: CubicGraph) -> CubicGraph:
    """Relabel ``built`` onto ``target``'s labelling (they must be isomorphic)."""
    if built.n != target.n or canonical_form(built) != canonical_form(target):
        raise ReplayMismatch("replayed graph is not isomorphic to the recorded node")
    lab_b = canonical_labeling(built)
    lab_t = canonical_labeling(target)
    inv_t = [0] * target.n
    for v, pos in enumerate(lab_t):
        inv_t[pos] = v
    return relabel(built, [inv_t[lab_b[v]] for v in range(built.n)])


def recompose(t: FamilyTree) -> CubicGraph:
    """Replay every link from the leaves up; returns a graph isomorphic to
    the root."""
    built: dict[int, CubicGraph] = {}

    def build(i: int) -> CubicGraph:
        if i in built:
            return built[i]
        ln = t.link_for(i)
        if ln is None:
            out = t.nodes[i]
        else:
            parents = [_align(build(p), t.nodes[p]) for p in ln.parents]
            try:
                out = apply_record(ln.record, parents)
            except CubicGraphError as exc:
                raise ReplayMismatch(f"link into node {i}: {type(exc).__name__}: {exc}") from exc
        built[i] = out
        return out

    out = build(0)
    if canonical_form(out) != canonical_form(t.nodes[0]):
        raise ReplayMismatch("recomposed graph differs from the root")
    return out


# ---------------------------------------------------------------------------
# exhaustive exploration


def admissible_steps(g: CubicGraph) -> list[DecompositionStep]:
    """Every inverse operation that applies anywhere in ``g``."""
    steps = []
    for c in enumerate_cubic_crackers(g):
        if is_irreducible(g, c):
            steps.append(apply_inverse(g, c))
    for obj in find_parthenogenic_objects(g):
        try:
            steps.append(apply_inverse(g, obj))
        except CubicGraphError:
            continue
    return steps


@dataclass(frozen=True)
class ConjectureEvidence:
    multisets: tuple[GeneMultiset, ...]
    pathways: int
    states: int
    exhaustive: bool = True

    def to_json(self) -> dict:
        return {
            "multisets": [m.to_json() for m in self.multisets],
            "pathways": self.pathways,
            "states": self.states,
            "exhaustive": self.exhaustive,
        }


def _explore(g: CubicGraph, budget: int) -> ConjectureEvidence:
    memo: dict[bytes, tuple[frozenset, int]] = {}
    states = 0
    root_acc: set[GeneMultiset] = set()

    def visit(h: CubicGraph, acc: Optional[set] = None) -> tuple[frozenset, int]:
        nonlocal states
        code = canonical_form(h)
        if code in memo:
            return memo[code]
        states += 1
        if states > budget:
            raise BudgetExceeded(f"more than {budget} states expanded")
        steps = admissible_steps(h)
        if not steps:
            if enumerate_cubic_crackers(h):
                raise AssertionError(f"descendant {to_graph6(h)!r} admits no inverse operation")
            result = (frozenset([GeneMultiset.from_codes([code])]), 1)
            memo[code] = result
            return result
        found: set[GeneMultiset] = set() if acc is None else acc
        paths = 0
        for step in steps:
            partial = [GeneMultiset()]
            count = 1
            for p in step.parents:
                sub, k = visit(p)
                partial = [x + y for x in partial for y in sub]
                count *= k
            found.update(partial)
            paths += count
        result = (frozenset(found), paths)
        memo[code] = result
        return result

    try:
        found, paths = visit(g, root_acc)
    except BudgetExceeded as exc:
        ev = ConjectureEvidence(tuple(sorted(root_acc, key=lambda m: m.entries)), 0, states, False)
        raise BudgetExceeded(str(exc), partial=ev) from None
    return ConjectureEvidence(tuple(sorted(found, key=lambda m: m.entries)), paths, states)


def all_decompositions(g: CubicGraph, budget: int = DEFAULT_BUDGET) -> frozenset[GeneMultiset]:
    """Distinct ancestor-gene multisets over every decomposition pathway.

    Raises :class:`BudgetExceeded` (``partial`` holds a non-exhaustive
    :class:`ConjectureEvidence`) when more than ``budget`` distinct graphs
    would need expanding.
    """
    return frozenset(_explore(g, budget).multisets)


def verify_conjecture(g: CubicGraph, budget: int = DEFAULT_BUDGET) -> tuple[bool, ConjectureEvidence]:
    ev = _explore(g, budget)
    return len(ev.multisets) == 1, ev


# ---------------------------------------------------------------------------
# DOT export


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_tree_dot(t: FamilyTree) -> str:
    """Genes as boxes labelled with their canonical graph6, descendants as
    ellipses; arrows run parent -> child, labelled with the operation."""
    leaves = set(t.leaves)
    lines = ["digraph family_tree {", "  rankdir=BT;"]
    for i, g in enumerate(t.nodes):
        if i in leaves:
            label = canonical_form(g).decode("ascii")
            lines.append(f"  n{i} [shape=box, label={_dot_quote(label)}];")
        else:
            label = f"n={g.n}\\n" + to_graph6(g).decode("ascii").replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  n{i} [shape=ellipse, label="{label}"];')
    for ln in t.links:
        for p in ln.parents:
            lines.append(f"  n{p} -> n{ln.child} [label={_dot_quote(ln.record.op)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
