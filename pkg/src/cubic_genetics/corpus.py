"""Exhaustive enumeration, batch classification and non-Hamiltonian statistics.

Connected cubic graphs on ``n`` vertices are generated from smaller ones by
three growth moves, with isomorph rejection on canonical codes:

* edge insertion: subdivide two distinct edges and join the new vertices;
* diamond insertion: replace an edge by a K4-minus-an-edge gadget;
* bridge join: ``breed1`` of two smaller connected cubic graphs.

Edge insertion alone misses graphs such as diamond necklaces and bridged
pairs; the other two moves cover them. Completeness is checked in the test
suite against labelled counts derived independently of this module.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_UP, Decimal
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence, Union

from .analysis import bridges, classify, enumerate_cubic_crackers, girth, is_hamiltonian
from .canon import canonical_form
from .errors import BudgetExceeded, CubicGraphError, SizeCeiling
from .genealogy import DEFAULT_BUDGET, ancestor_genes, verify_conjecture
from .graph import CubicGraph, edge_ref, from_edge_list, parse_graph6
from .named import K4
from .operations import breed1

DEFAULT_CEILING = 16
EXTENDED_CEILING = 18
THREADS_ENV = "CUBIC_GENETICS_THREADS"


# ---------------------------------------------------------------------------
# enumeration


def _edge_insertions(g: CubicGraph) -> Iterator[CubicGraph]:
    n = g.n
    s, t = n, n + 1
    for e, f in combinations(g.edges, 2):
        edges = [x for x in g.edges if x != e and x != f]
        edges += [(e[0], s), (s, e[1]), (f[0], t), (t, f[1]), (s, t)]
        yield from_edge_list(n + 2, edges)


def _diamond_insertions(g: CubicGraph) -> Iterator[CubicGraph]:
    n = g.n
    v1, v2, v3, v4 = n, n + 1, n + 2, n + 3
    for a, b in g.edges:
        edges = [x for x in g.edges if x != (a, b)]
        edges += [(a, v1), (v1, v2), (v1, v3), (v2, v3), (v2, v4), (v3, v4), (v4, b)]
        yield from_edge_list(n + 4, edges)


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[bytes, ...]:
    if n < 4 or n % 2:
        return ()
    if n == 4:
        return (canonical_form(K4),)
    found: set[bytes] = set()
    for code in _codes(n - 2):
        for h in _edge_insertions(parse_graph6(code)):
            found.add(canonical_form(h))
    for code in _codes(n - 4):
        for h in _diamond_insertions(parse_graph6(code)):
            found.add(canonical_form(h))
    for n1 in range(4, (n - 2) // 2 + 1, 2):
        n2 = n - 2 - n1
        for c1 in _codes(n1):
            g1 = parse_graph6(c1)
            for c2 in _codes(n2):
                if n1 == n2 and c2 < c1:
                    continue
                g2 = parse_graph6(c2)
                for e1 in g1.edges:
                    for e2 in g2.edges:
                        found.add(canonical_form(breed1(g1, g2, e1, e2)[0]))
    return tuple(sorted(found))


def enumerate_cubic(n: int, ceiling: int = DEFAULT_CEILING, girth_min: int = 3) -> Iterator[CubicGraph]:
    """One canonically labelled representative per isomorphism class of
    connected cubic graphs on ``n`` vertices, in ascending code order."""
    if n > ceiling:
        raise SizeCeiling(f"n={n} exceeds the enumeration ceiling {ceiling}")
    if n < 4 or n % 2:
        raise SizeCeiling(f"n must be even and >= 4, got {n}")
    for code in _codes(n):
        g = parse_graph6(code)
        if girth_min <= 3 or girth(g) >= girth_min:
            yield g


def count_cubic(n: int, ceiling: int = DEFAULT_CEILING) -> int:
    return sum(1 for _ in enumerate_cubic(n, ceiling))


# ---------------------------------------------------------------------------
# statistics


def _pct(num: int, den: int) -> float:
    if den == 0:
        return 0.0
    q = Decimal(100 * num) / Decimal(den)
    return float(q.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class StatsRecord:
    n: int
    total: int
    nh: int
    nh1: int
    nh2plus: int
    nh4plus: int
    pct_nh1: float
    pct_nh2plus: float
    pct_nh4plus: float
    pct_ratio: float

    CSV_HEADER = "n,total,nh,nh1,nh2plus,nh4plus,NH1%,NH2+%,NH4+%,NH4+/NH2+%"

    @classmethod
    def from_counts(cls, n: int, total: int, nh: int, nh1: int, nh4plus: int) -> "StatsRecord":
        nh2 = nh - nh1
        return cls(
            n, total, nh, nh1, nh2, nh4plus,
            _pct(nh1, nh), _pct(nh2, nh), _pct(nh4plus, nh), _pct(nh4plus, nh2),
        )

    def csv_row(self) -> str:
        return (
            f"{self.n},{self.total},{self.nh},{self.nh1},{self.nh2plus},{self.nh4plus},"
            f"{self.pct_nh1:.2f},{self.pct_nh2plus:.2f},{self.pct_nh4plus:.2f},{self.pct_ratio:.2f}"
        )

    def to_json(self) -> dict:
        return asdict(self)


def _nh_kind(g: CubicGraph) -> Optional[str]:
    """``None`` if Hamiltonian, else 'bridge', 'mutant' or 'other'."""
    if bridges(g):
        return "bridge"
    if is_hamiltonian(g)[0]:
        return None
    return "other" if enumerate_cubic_crackers(g) else "mutant"


def table1_stats(n: int, ceiling: int = DEFAULT_CEILING, workers: Optional[int] = None) -> StatsRecord:
    graphs = list(enumerate_cubic(n, ceiling))
    kinds = _map(_nh_kind_code, [canonical_form(g) for g in graphs], workers)
    nh = sum(1 for k in kinds if k is not None)
    nh1 = kinds.count("bridge")
    mutants = kinds.count("mutant")
    return StatsRecord.from_counts(n, len(graphs), nh, nh1, mutants)


def _nh_kind_code(code: bytes) -> Optional[str]:
    return _nh_kind(parse_graph6(code))


def mutants(n: int, ceiling: int = DEFAULT_CEILING) -> list[CubicGraph]:
    return [g for g in enumerate_cubic(n, ceiling) if _nh_kind(g) == "mutant"]


# ---------------------------------------------------------------------------
# file ingestion


def ingest_graph6(
    path: Union[str, Path],
    skip_errors: bool = False,
    errors: Optional[list] = None,
) -> Iterator[CubicGraph]:
    """Yield graphs from a file of LF-separated graph6 lines.

    Failures carry the 1-based line number in the message. With
    ``skip_errors`` bad lines are skipped and ``(line, exception)`` pairs
    are appended to ``errors`` when given.
    """
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield parse_graph6(line)
            except CubicGraphError as exc:
                tagged = type(exc)(f"line {lineno}: {exc}")
                if not skip_errors:
                    raise tagged from None
                if errors is not None:
                    errors.append((lineno, tagged))


# ---------------------------------------------------------------------------
# batch runs

TASKS = ("classify", "decompose", "verify")


def _workers(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _map(fn, items: Sequence, workers: Optional[int]) -> list:
    w = _workers(workers)
    if w == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, items, chunksize=8))


def result_row(code: bytes, tasks: Sequence[str] = ("classify",), budget: int = DEFAULT_BUDGET) -> dict:
    """One JSONL row for the graph with canonical code ``code``."""
    g = parse_graph6(code)
    c = classify(g)
    row = {
        "g6": code.decode("ascii"),
        "n": g.n,
        "kind": c.kind,
        "cyc": c.cyclic_connectivity,
        "girth": c.girth,
        "ham": c.hamiltonian,
        "mutant": c.mutant,
        "snark": c.snark_mutant,
        "genes": None,
        "conjecture": None,
    }
    if "verify" in tasks:
        try:
            unique, ev = verify_conjecture(g, budget)
        except BudgetExceeded:
            row["conjecture"] = "inconclusive"
        else:
            row["conjecture"] = "unique" if unique else "violated"
            if unique:
                row["genes"] = ev.multisets[0].to_json()
    if "decompose" in tasks and row["genes"] is None:
        row["genes"] = ancestor_genes(g).to_json()
    return row


def _row_job(args) -> str:
    code, tasks, budget = args
    return json.dumps(result_row(code, tasks, budget), separators=(",", ":"))


def _source_graphs(source, ceiling: int, girth_min: int) -> Iterator[CubicGraph]:
    if isinstance(source, int):
        yield from enumerate_cubic(source, ceiling, girth_min)
    elif isinstance(source, (str, Path)):
        yield from ingest_graph6(source)
    else:
        for item in source:
            if isinstance(item, int):
                yield from enumerate_cubic(item, ceiling, girth_min)
            else:
                yield item


def _read_existing(out: Path) -> list[dict]:
    """Rows already on disk; a torn trailing line is truncated away."""
    if not out.exists():
        return []
    data = out.read_bytes()
    keep = data[: data.rfind(b"\n") + 1]
    if len(keep) != len(data):
        out.write_bytes(keep)
    return [json.loads(line) for line in keep.splitlines() if line.strip()]


def batch_run(
    source,
    tasks: Sequence[str] = ("classify",),
    out: Union[str, Path] = "results.jsonl",
    budget: int = DEFAULT_BUDGET,
    ceiling: int = DEFAULT_CEILING,
    girth_min: int = 3,
    workers: Optional[int] = None,
) -> dict:
    """Write one JSONL row per input graph, resuming from rows already in ``out``.

    ``source`` is an ``n`` (enumerate), a list of ``n`` values and/or graphs,
    or a path to a graph6 file.
    """
    bad = [t for t in tasks if t not in TASKS]
    if bad:
        raise ValueError(f"unknown tasks {bad}")
    start = time.perf_counter()
    out = Path(out)
    existing = _read_existing(out)
    done = {r["g6"] for r in existing}
    codes = []
    seen = set(done)
    for g in _source_graphs(source, ceiling, girth_min):
        code = canonical_form(g)
        if code.decode("ascii") in seen:
            continue
        seen.add(code.decode("ascii"))
        codes.append(code)
    new_rows: list[dict] = []
    with open(out, "a", encoding="ascii") as fh:
        w = _workers(workers)
        jobs = [(c, tuple(tasks), budget) for c in codes]
        if w == 1:
            lines: Iterable[str] = map(_row_job, jobs)
            for line in lines:
                fh.write(line + "\n")
                fh.flush()
                new_rows.append(json.loads(line))
        else:
            with ProcessPoolExecutor(max_workers=w) as pool:
                for line in pool.map(_row_job, jobs, chunksize=4):
                    fh.write(line + "\n")
                    fh.flush()
                    new_rows.append(json.loads(line))
    rows = existing + new_rows
    return {
        "rows": len(rows),
        "new": len(new_rows),
        "resumed": len(existing),
        "mutants": [r["g6"] for r in rows if r["mutant"]],
        "violations": [r["g6"] for r in rows if r["conjecture"] == "violated"],
        "inconclusive": [r["g6"] for r in rows if r["conjecture"] == "inconclusive"],
        "wall_time": round(time.perf_counter() - start, 3),
    }
