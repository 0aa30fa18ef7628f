import functools

import pytest

from equilayer import _pykernels

try:
    from equilayer import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = [_pykernels] + ([_kernels] if _kernels is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def kernels(request):
    return request.param


@functools.lru_cache(maxsize=None)
def brute_partitions(m):
    """All set partitions of [m] as rgs tuples, built by inserting each element
    into an existing block or a new singleton, as sets of frozensets."""
    parts = {frozenset()}
    for x in range(1, m + 1):
        nxt = set()
        for p in parts:
            nxt.add(p | {frozenset([x])})
            for b in p:
                nxt.add((p - {b}) | {b | {x}})
        parts = nxt
    out = set()
    for p in parts:
        label = {}
        for i, b in enumerate(sorted(p, key=min), start=1):
            for x in b:
                label[x] = i
        out.add(tuple(label[x] for x in range(1, m + 1)))
    return frozenset(out)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion."""
    name = request.node.name
    yield name
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"{status}  {name}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
