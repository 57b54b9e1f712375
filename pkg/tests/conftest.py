import pytest

from trispectra.verify import make_corpus

ACCEPTANCE_SEED = 20240

_CRITERION_LINES = []


def record_criterion(name, passed, detail):
    """Collect a one-line verdict for the end-of-run summary."""
    verdict = "PASS" if passed else "FAIL"
    _CRITERION_LINES.append(f"[{verdict}] {name}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_corpus():
    """A quick seeded corpus for per-module property tests."""
    return make_corpus(seed=7, trials=12, nmax=8, qmax=3)


@pytest.fixture(scope="session")
def acceptance_corpus():
    """200 seeded random connected graphs, n <= 12, >= 30% bipartite by
    construction, q cycling over {1, 2, 3}."""
    return make_corpus(
        seed=ACCEPTANCE_SEED, trials=200, nmax=12, qmax=3, bipartite_fraction=0.35
    )
