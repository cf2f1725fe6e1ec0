import pytest

from hikers import gen_coloring

ACCEPTANCE_LINES = []


def corpus_params():
    """1000 seeded random colorings: N in 3..10, arity n in {1, 2}, r in {2, 3}."""
    for seed in range(1000):
        N = 3 + seed % 8
        n = 1 + (seed // 8) % 2
        r = 2 + (seed // 16) % 2
        yield seed, N, n, r


def build_corpus():
    out = [gen_coloring("random", N, n + 1, r, seed=seed) for seed, N, n, r in corpus_params()]
    for N in range(3, 11):
        for n in (1, 2):
            out.append(gen_coloring("constant", N, n + 1, 2))
            out.append(gen_coloring("parity", N, n + 1, 2))
    return out


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture
def parity4():
    return gen_coloring("parity", 4, 2, 2)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion" in report.nodeid:
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        verdict = "PASS" if report.passed else "FAIL"
        ACCEPTANCE_LINES.append(f"{verdict} {name} ({report.duration:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
