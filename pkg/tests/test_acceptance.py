"""One test per acceptance criterion.

Each test records a PASS/FAIL line (echoed in the terminal summary) and then
asserts, so a failing criterion both shows up in the summary and fails the run.
"""

import random
from itertools import combinations

import networkx as nx
import pytest

import roundtrip
from conftest import ACCEPTANCE
from cubic_genetics import (
    K4,
    K33,
    PETERSEN,
    BudgetExceeded,
    canonical_form,
    classify,
    cyclic_edge_connectivity,
    decompose,
    enumerate_crackers,
    enumerate_cubic_crackers,
    from_edge_list,
    girth,
    is_gene,
    is_hamiltonian,
    is_isomorphic,
    parse_graph6,
    recompose,
    relabel,
    table1_stats,
    to_graph6,
    verify_conjecture,
)
from cubic_genetics.cli import main
from oracles import _components_after, brute_isomorphic, labelled_connected_cubic, orbit_sum


def record(name: str, ok: bool, detail: str) -> None:
    ACCEPTANCE[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    assert ok, detail


def upto(graphs_by_n, top):
    return [g for n in sorted(graphs_by_n) if n <= top for g in graphs_by_n[n]]


EXPECTED_ROWS = {
    10: ("50.00", "50.00", "50.00", "100.00"),
    12: ("80.00", "20.00", "0.00", "0.00"),
    14: ("82.86", "17.14", "0.00", "0.00"),
}


def test_nonhamiltonian_statistics_rows(capsys):
    got = {}
    for n in EXPECTED_ROWS:
        assert main(["stats", "--n", str(n), "--format", "csv"]) == 0
        row = capsys.readouterr().out.splitlines()[1].split(",")
        got[n] = tuple(row[6:10])
    ok = got == EXPECTED_ROWS
    record("non-Hamiltonian statistics rows n=10,12,14", ok, "; ".join(f"n={n}: {'/'.join(v)}" for n, v in got.items()))


def test_cracker_free_graphs(graphs_by_n):
    free = [g for g in upto(graphs_by_n, 14) if cyclic_edge_connectivity(g) is None]
    free_ok = sorted(canonical_form(g) for g in free) == sorted([canonical_form(K4), canonical_form(K33)])
    over = [
        to_graph6(g)
        for g in upto(graphs_by_n, 14)
        if g.n >= 8 and not (cyclic_edge_connectivity(g) or 99) <= girth(g)
    ]
    record(
        "cracker-free graphs and cracker size <= girth",
        free_ok and not over,
        f"{len(free)} cracker-free (K4, K33 expected); {len(over)} graphs with smallest cracker above girth",
    )


def test_petersen():
    c = classify(PETERSEN)
    got = (c.cyclic_connectivity, c.hamiltonian, c.mutant, c.snark_mutant, c.girth, c.kind)
    record("Petersen checks", got == (5, False, True, True, 5, "gene"), f"cyc, ham, mutant, snark, girth, kind = {got}")


def test_cracker_structure(graphs_by_n):
    bad, total = [], 0
    for g in upto(graphs_by_n, 12):
        found = list(enumerate_cubic_crackers(g))
        cyc = cyclic_edge_connectivity(g)
        if cyc is not None and cyc > 3:
            found += enumerate_crackers(g, cyc)
        for c in found:
            total += 1
            edges = set(c.edges)
            two = _components_after(g.n, g.edges, edges) == 2
            minimal = all(
                _components_after(g.n, g.edges, set(sub)) == 1
                for k in range(1, len(edges))
                for sub in combinations(sorted(edges), k)
            )
            if not (two and minimal):
                bad.append((to_graph6(g), c.edges))
    record("cracker removal gives two components, minimally", not bad and total > 0, f"{total} crackers checked, {len(bad)} violations")


def test_operation_round_trips(genes):
    fails = {op: roundtrip.run(op, genes, 500) for op in roundtrip.OPS}
    bad = sum(len(v) for v in fails.values())
    detail = ", ".join(f"{op}: {500 - len(v)}/500" for op, v in fails.items())
    record("operation/inverse round-trips (6 x 500)", bad == 0, detail)


def test_decomposition_soundness(graphs_by_n):
    bad, count = [], 0
    for g in upto(graphs_by_n, 12):
        if is_gene(g):
            continue
        count += 1
        t = decompose(g)
        if not all(is_gene(t.nodes[i]) for i in t.leaves) or not is_isomorphic(recompose(t), g):
            bad.append(to_graph6(g))
    record("decomposition soundness n<=12", not bad, f"{count} descendants decomposed and replayed, {len(bad)} failures")


def test_conjecture_sweep(graphs_by_n):
    graphs = upto(graphs_by_n, 14)
    unique = violated = inconclusive = 0
    for g in graphs:
        try:
            ok, _ = verify_conjecture(g)
        except BudgetExceeded:
            inconclusive += 1
            continue
        unique += ok
        violated += not ok
    ok = len(graphs) == 621 and unique == 621
    record(
        "gene-multiset uniqueness over all 621 graphs n<=14",
        ok,
        f"{len(graphs)} graphs: {unique} unique, {violated} violated, {inconclusive} inconclusive",
    )


def test_canonical_form_oracle(graphs_by_n):
    rnd = random.Random(0)
    eight = graphs_by_n[8]
    pool = eight + [relabel(g, rnd.sample(range(8), 8)) for g in eight]
    disagreements = sum(
        is_isomorphic(g, h) != brute_isomorphic(8, g.edges, h.edges) for g, h in combinations(pool, 2)
    )
    counts = {n: len(graphs_by_n[n]) for n in sorted(graphs_by_n)}
    labelled = all(orbit_sum(n, [g.edges for g in gs]) == labelled_connected_cubic(n) for n, gs in graphs_by_n.items())
    ok = disagreements == 0 and labelled and list(counts.values()) == [1, 2, 5, 19, 85, 509]
    record(
        "canonical form vs brute force; class counts vs labelled oracle",
        ok,
        f"{len(pool) * (len(pool) - 1) // 2} pairs, {disagreements} disagreements; counts {list(counts.values())}; "
        f"labelled totals {'match' if labelled else 'differ'}",
    )


def _networkx_g6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).strip()


def test_graph6_bit_exactness(graphs_by_n):
    bad = 0
    graphs = upto(graphs_by_n, 14)
    for g in graphs:
        code = to_graph6(g)
        bad += parse_graph6(code) != g or to_graph6(parse_graph6(code)) != code or code != _networkx_g6(g)
    k = 40
    ladder = from_edge_list(2 * k, [(i, (i + 1) % k) for i in range(k)] + [(k + i, k + (i + 1) % k) for i in range(k)] + [(i, k + i) for i in range(k)])
    fixtures = to_graph6(K4) == b"C~" and parse_graph6(b"C~") == K4 and to_graph6(ladder) == _networkx_g6(ladder)
    record("graph6 bit-exact round trips", bad == 0 and fixtures, f"{len(graphs)} graphs, {bad} mismatches; fixtures {'ok' if fixtures else 'bad'}")


# extended, opt-in ---------------------------------------------------------------


@pytest.mark.extended
def test_statistics_row_n16():
    rec = table1_stats(16)
    got = (rec.pct_nh1, rec.pct_nh2plus, rec.pct_nh4plus, rec.pct_ratio)
    record("statistics row n=16 (extended)", rec.total == 4060 and got == (84.93, 15.07, 0.0, 0.0), f"{rec.total} graphs, {got}")


@pytest.mark.extended
def test_n18_mutants():
    rec = table1_stats(18, ceiling=18)
    record("n=18 mutants (extended)", rec.nh4plus == 2 and rec.nh == 1666, f"{rec.nh4plus} mutants among {rec.nh} non-Hamiltonian of {rec.total}")
