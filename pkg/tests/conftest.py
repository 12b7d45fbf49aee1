import itertools

import pytest

from ternions.ring import ring_new

_acceptance_lines: list[str] = []


def naive_mul(q, x, y):
    """2x2 upper-triangular matrix product written out, independent of the ring tables."""
    (a, b, c), (d, e, f) = x, y
    m = [[a, b], [0, c]]
    n = [[d, e], [0, f]]
    p = [[sum(m[i][k] * n[k][j] for k in range(2)) % q for j in range(2)] for i in range(2)]
    assert p[1][0] == 0
    return (p[0][0], p[0][1], p[1][1])


def naive_add(q, x, y):
    return tuple((u + v) % q for u, v in zip(x, y))


def all_ternions(q):
    return list(itertools.product(range(q), repeat=3))


@pytest.fixture(scope="session")
def r2():
    return ring_new(2)


@pytest.fixture(scope="session")
def r3():
    return ring_new(3)


@pytest.fixture
def acceptance(request):
    """Call with (label, ok) to log a criterion outcome in the terminal summary."""
    def record(label, ok=True):
        _acceptance_lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}")
    yield record
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.failed:
        _acceptance_lines.append(f"[FAIL] {request.node.name}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def pytest_addoption(parser):
    parser.addoption("--regold", action="store_true",
                     help="rewrite tests/data/goldens.json from the current build")
