import numpy as np
import pytest

from magrand.core import Mag, MagSignature

ACCEPTANCE_LINES: list[str] = []


def simple_graph(n: int, edges) -> Mag:
    """First-order MAG on n vertices from index pairs."""
    return Mag.from_index_edges(MagSignature((n,)), edges)


def cycle(n: int) -> Mag:
    return simple_graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Mag:
    sig = MagSignature((n,))
    return Mag(sig, (rng.random(sig.n_pairs) < p).astype(np.uint8))


@pytest.fixture
def acceptance_log():
    def record(criterion: str, passed: bool, detail: str, seconds: float, limit: float):
        mark = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{mark}] {criterion}: {detail} ({seconds:.2f}s / limit {limit:g}s)")
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
