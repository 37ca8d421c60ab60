"""Command-line front end.

Every subcommand is a thin adapter over a library call. Output is JSON
when stdout is not a terminal and a plain ``key: value`` listing when it
is; ``--format`` overrides the choice. Files are written atomically.

Exit status: 0 on success, 2 on usage errors, 1 on domain or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Iterable, Optional

from .analysis import (
    bridges,
    classify,
    cyclic_edge_connectivity,
    enumerate_crackers,
    enumerate_cubic_crackers,
)
from .corpus import DEFAULT_CEILING, StatsRecord, batch_run, enumerate_cubic, ingest_graph6, table1_stats
from .errors import BudgetExceeded, CubicGraphError
from .genealogy import DEFAULT_BUDGET, decompose, render_tree_dot, verify_conjecture
from .graph import CubicGraph, parse_edge_list_text, read_graph, to_graph6
from .operations import breed1, breed2, breed3, is_irreducible, parth1, parth2, parth3

FORMATS = ("auto", "json", "table")


class UsageError(Exception):
    """Bad flag combination detected after argparse has run."""


# ---------------------------------------------------------------------------
# I/O helpers


def write_atomic(path: str | Path, text: str) -> None:
    """Write ``text`` next to ``path`` and rename it into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def _g6(g: CubicGraph) -> str:
    return to_graph6(g).decode("ascii")


def _read_file(path: str) -> list[CubicGraph]:
    text = Path(path).read_bytes().decode("ascii", errors="replace")
    if any(" " in line for line in text.splitlines()):
        return [parse_edge_list_text(text)]
    return list(ingest_graph6(path))


def _inputs(args) -> list[CubicGraph]:
    given = [x for x in ("g6", "file", "n") if getattr(args, x, None) is not None]
    if len(given) != 1:
        flags = ", ".join("--" + x for x in ("g6", "file", "n") if hasattr(args, x))
        raise UsageError(f"exactly one of {flags} is required")
    if args.g6 is not None:
        return [read_graph(args.g6)]
    if args.file is not None:
        return _read_file(args.file)
    return list(enumerate_cubic(args.n, args.max_n))


def _fmt(args, default_piped: str = "json") -> str:
    if args.format != "auto":
        return args.format
    return "table" if sys.stdout.isatty() else default_piped


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def _scalar(v) -> str:
    return v if isinstance(v, str) else json.dumps(v)


def _table(obj, indent: str = "") -> list[str]:
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.extend(_table(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.append(f"{indent}  - " + ", ".join(f"{a}={_scalar(b)}" for a, b in item.items()))
        else:
            lines.append(f"{indent}{k}: {_scalar(v)}")
    return lines


def _emit(objs: Iterable[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    objs = list(objs)
    for i, obj in enumerate(objs):
        if fmt == "table":
            if i:
                out.write("\n")
            out.write("\n".join(_table(obj)) + "\n")
        else:
            out.write(_dump(obj) + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    rows = []
    for g in _inputs(args):
        rows.append({"g6": _g6(g), "n": g.n, **classify(g).to_json()})
    _emit(rows, _fmt(args))
    return 0


def _cracker_json(g: CubicGraph, c) -> dict:
    small = min(c.side_a, c.side_b, key=lambda s: (len(s), sorted(s)))
    out = {"size": c.size, "edges": [list(e) for e in c.edges], "side": sorted(small)}
    if c.size <= 3:
        out["irreducible"] = is_irreducible(g, c)
    return out


def cmd_crackers(args) -> int:
    rows = []
    for g in _inputs(args):
        found = list(enumerate_cubic_crackers(g))
        cyc = cyclic_edge_connectivity(g)
        if args.all_k and cyc is not None:
            for k in range(4, cyc + 1):
                found.extend(enumerate_crackers(g, k))
        rows.append(
            {
                "g6": _g6(g),
                "cyclic_connectivity": cyc,
                "crackers": [_cracker_json(g, c) for c in found],
            }
        )
    _emit(rows, _fmt(args))
    return 0


def _parse_site(text: Optional[str]) -> list[tuple[int, ...]]:
    """``"0-1,2-3"`` -> ``[(0, 1), (2, 3)]``; ``"4"`` -> ``[(4,)]``;
    pairs for a B3 pairing are written ``x:y``."""
    if text is None:
        return []
    items = []
    for part in text.split(","):
        part = part.strip()
        sep = "-" if "-" in part else ":" if ":" in part else None
        try:
            items.append(tuple(int(x) for x in part.split(sep)) if sep else (int(part),))
        except ValueError:
            raise UsageError(f"cannot parse site component {part!r}") from None
    return items


def _default_site(op: str, left: CubicGraph, right: Optional[CubicGraph]) -> list[tuple[int, ...]]:
    if op == "b1":
        return [left.edges[0], right.edges[0]]
    if op == "b2":
        bl, br = set(bridges(left)), set(bridges(right))
        el = next((e for e in left.edges if e not in bl), left.edges[0])
        er = next((e for e in right.edges if e not in br), right.edges[0])
        return [el, er]
    if op == "b3":
        return [(0,), (0,)]
    if op == "p1":
        b = bridges(left)
        return [b[0] if b else left.edges[0]]
    if op == "p2":
        two = [c for c in enumerate_cubic_crackers(left) if c.size == 2]
        return list(two[0].edges) if two else []
    if op == "p3":
        b = bridges(left)
        return [(b[0][0],)] if b else [(0,)]
    raise UsageError(f"unknown op {op}")


def cmd_breed(args) -> int:
    op = args.op
    left = read_graph(args.left)
    two = op in ("b1", "b2", "b3")
    if two and args.right is None:
        raise UsageError(f"--op {op} needs --right")
    if not two and args.right is not None:
        raise UsageError(f"--op {op} takes a single parent; drop --right")
    right = read_graph(args.right) if two else None
    site = _parse_site(args.site) or _default_site(op, left, right)

    def need(k, shape):
        if len(site) < k:
            raise UsageError(f"--site for {op} must look like {shape}")

    if op == "b1":
        need(2, "a-b,c-d")
        child, _, rec = breed1(left, right, site[0], site[1])
    elif op == "b2":
        need(2, "a-b,c-d")
        child, _, rec = breed2(left, right, site[0], site[1])
    elif op == "b3":
        need(2, "v1,v2[,x:y,x:y,x:y]")
        pairing = site[2:] or None
        child, _, rec = breed3(left, right, site[0][0], site[1][0], pairing)
    elif op == "p1":
        need(1, "a-b")
        child, _, rec = parth1(left, site[0])
    elif op == "p2":
        need(2, "a-b,c-d")
        child, _, rec = parth2(left, (site[0], site[1]))
    else:
        need(1, "a[,c,d]")
        c, d = (site[1][0], site[2][0]) if len(site) >= 3 else (None, None)
        child, _, rec = parth3(left, site[0][0], c, d)
    row = {"op": rec.op, "child": _g6(child), "n": child.n, "record": rec.to_json()}
    _emit([row], _fmt(args))
    return 0


def cmd_decompose(args) -> int:
    rows = []
    graphs = _inputs(args)
    if (args.dot or args.json) and len(graphs) != 1:
        raise UsageError("--dot/--json need a single input graph")
    for g in graphs:
        t = decompose(g)
        if args.dot:
            write_atomic(args.dot, render_tree_dot(t))
        if args.json:
            write_atomic(args.json, json.dumps(t.to_json(), indent=2) + "\n")
        rows.append(
            {
                "g6": _g6(g),
                "genes": t.genes().to_json(),
                "nodes": len(t.nodes),
                "steps": len(t.links),
                "tree": t.to_json(),
            }
        )
    _emit(rows, _fmt(args))
    return 0


def cmd_verify(args) -> int:
    if args.out:
        if args.file is not None:
            source = args.file
        elif args.n is not None:
            source = args.n
        elif args.g6 is not None:
            source = [read_graph(args.g6)]
        else:
            raise UsageError("exactly one of --g6, --file, --n is required")
        summary = batch_run(
            source, ("classify", "verify"), args.out, budget=args.budget, ceiling=args.max_n
        )
        _emit([summary], _fmt(args))
        return 0
    rows = []
    for g in _inputs(args):
        row = {"g6": _g6(g), "n": g.n}
        try:
            unique, ev = verify_conjecture(g, args.budget)
        except BudgetExceeded:
            row["conjecture"] = "inconclusive"
        else:
            row["conjecture"] = "unique" if unique else "violated"
            row.update(ev.to_json())
        rows.append(row)
    _emit(rows, _fmt(args))
    return 0


def cmd_stats(args) -> int:
    rec = table1_stats(args.n, args.max_n)
    csv_text = StatsRecord.CSV_HEADER + "\n" + rec.csv_row() + "\n"
    if args.csv:
        write_atomic(args.csv, csv_text)
    fmt = _fmt(args, default_piped="csv")
    if fmt == "csv":
        sys.stdout.write(csv_text)
    else:
        _emit([rec.to_json()], fmt)
    return 0


def cmd_enumerate(args) -> int:
    codes = [_g6(g) for g in enumerate_cubic(args.n, args.max_n, args.girth_min)]
    text = "".join(c + "\n" for c in codes)
    if args.out:
        write_atomic(args.out, text)
        _emit([{"n": args.n, "girth_min": args.girth_min, "count": len(codes), "out": args.out}], _fmt(args))
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubic-genetics",
        description="Crackers, breeding operations and gene decompositions of cubic graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_, formats=FORMATS):
        sp = sub.add_parser(name, help=help_, description=help_)
        sp.add_argument("--format", choices=formats, default="auto", help="output format (default: table on a terminal, JSON otherwise)")
        sp.set_defaults(func=fn)
        return sp

    def source(sp, n=False):
        sp.add_argument("--g6", metavar="S", help="graph6 string (or edge-list text)")
        sp.add_argument("--file", metavar="P", help="file of graph6 lines or one edge-list graph")
        if n:
            sp.add_argument("--n", type=int, metavar="K", help="every connected cubic graph on K vertices")
        sp.add_argument("--max-n", type=int, default=DEFAULT_CEILING, metavar="M", help=f"enumeration ceiling (default {DEFAULT_CEILING})")

    sp = add("classify", cmd_classify, "gene/descendant status, connectivity, girth, Hamiltonicity, mutant flags")
    source(sp)

    sp = add("crackers", cmd_crackers, "list 1-, 2- and 3-crackers")
    source(sp)
    sp.add_argument("--all-k", action="store_true", help="also list crackers up to the cyclic edge connectivity")

    sp = add("breed", cmd_breed, "apply one breeding or parthenogenesis operation")
    sp.add_argument("--op", required=True, choices=("b1", "b2", "b3", "p1", "p2", "p3"))
    sp.add_argument("--left", required=True, metavar="S", help="first (or only) parent, graph6")
    sp.add_argument("--right", metavar="S", help="second parent for b1/b2/b3")
    sp.add_argument(
        "--site",
        metavar="SITE",
        help="edges a-b, vertices v, pairing pairs x:y, comma separated (default: first valid site)",
    )

    sp = add("decompose", cmd_decompose, "reduce a graph to its ancestor genes")
    source(sp)
    sp.add_argument("--dot", metavar="P", help="write the family tree as DOT")
    sp.add_argument("--json", metavar="P", help="write the family tree as JSON")

    sp = add("verify", cmd_verify, "check that every decomposition pathway yields the same genes")
    source(sp, n=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="M", help="state budget per graph")
    sp.add_argument("--out", metavar="P", help="append resumable JSONL rows here and print a summary")

    sp = add("stats", cmd_stats, "non-Hamiltonian distribution for all graphs on n vertices", FORMATS + ("csv",))
    sp.add_argument("--n", type=int, required=True, metavar="K")
    sp.add_argument("--csv", metavar="P", help="also write the CSV to this path")
    sp.add_argument("--max-n", type=int, default=DEFAULT_CEILING, metavar="M")

    sp = add("enumerate", cmd_enumerate, "list connected cubic graphs on n vertices as graph6")
    sp.add_argument("--n", type=int, required=True, metavar="K")
    sp.add_argument("--girth-min", type=int, default=3, metavar="G")
    sp.add_argument("--out", metavar="P")
    sp.add_argument("--max-n", type=int, default=DEFAULT_CEILING, metavar="M")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except CubicGraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        print("interrupted; completed rows were flushed", file=sys.stderr)
        return 130
