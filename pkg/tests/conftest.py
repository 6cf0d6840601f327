import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from flowerq.graph import Graph

ROOT = Path(__file__).resolve().parents[1]
FIXTURE8 = ROOT / "fixtures" / "graph8.g6"


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


@pytest.fixture(scope="session")
def graph8_path():
    if not FIXTURE8.exists():
        pytest.skip("order-8 fixture missing; run tools/make_graph8_fixture.py")
    return FIXTURE8


# criterion number -> list of (label, passed, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def record_criterion(number: int, label: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE.setdefault(number, []).append((label, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}")
        for label, ok, detail in parts:
            terminalreporter.write_line(f"    {'pass' if ok else 'FAIL'}  {label}  {detail}")
