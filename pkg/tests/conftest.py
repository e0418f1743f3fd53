import os
import random
import re

import pytest

from tuttetheta.graphs import Multigraph

_CRITERIA: dict = {}


def pytest_collection_modifyitems(config, items):
    if os.environ.get("TUTTETHETA_BIG_SIEVE") == "1":
        return
    skip = pytest.mark.skip(reason="set TUTTETHETA_BIG_SIEVE=1 to sieve to 8.5e9")
    for item in items:
        if "bigsieve" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        state = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        if _CRITERIA.get(key) != "FAIL":
            _CRITERIA[key] = state


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), state in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name}: {state}")


def random_graph(rng: random.Random, max_vertices: int, max_edges: int,
                 multigraph: bool = True, loops: bool = False) -> Multigraph:
    nv = rng.randint(0, max_vertices)
    if nv == 0:
        return Multigraph(0, ())
    pairs = [(u, v) for u in range(nv) for v in range(u, nv) if u != v or loops]
    if not pairs:
        return Multigraph(nv, ())
    k = rng.randint(0, max_edges)
    if multigraph:
        edges = [rng.choice(pairs) for _ in range(k)]
    else:
        edges = rng.sample(pairs, min(k, len(pairs)))
    return Multigraph(nv, tuple(edges))


def random_rows(rng: random.Random, max_length: int, max_rows: int, min_length: int = 1):
    n = rng.randint(min_length, max_length)
    r = rng.randint(0, max_rows)
    return [[rng.randint(0, 1) for _ in range(n)] for _ in range(r)] or [[0] * n]


@pytest.fixture
def rng():
    return random.Random(20240601)
