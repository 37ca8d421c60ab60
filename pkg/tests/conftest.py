import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

EXTENDED = os.environ.get("CUBIC_GENETICS_EXTENDED") == "1"

# criterion -> (passed, detail); filled by test_acceptance, echoed at the end
ACCEPTANCE: dict = {}


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="extended check; set CUBIC_GENETICS_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.fixture(scope="session")
def graphs_by_n():
    from cubic_genetics import enumerate_cubic

    return {n: list(enumerate_cubic(n)) for n in range(4, 15, 2)}


@pytest.fixture(scope="session")
def genes(graphs_by_n):
    from cubic_genetics import is_gene

    return [g for n in sorted(graphs_by_n) for g in graphs_by_n[n] if is_gene(g)]
