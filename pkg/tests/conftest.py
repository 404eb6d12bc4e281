import numpy as np
import pytest
from hypothesis import strategies as st

from ebiset import Instance, Labeling

odd = st.integers(min_value=0, max_value=6).map(lambda t: 2 * t + 1)


@st.composite
def instances(draw, max_half=6, min_n=1):
    a = draw(st.integers(min_value=min_n // 2, max_value=max_half))
    b = draw(st.integers(min_value=a, max_value=max_half))
    return Instance(2 * b + 1, 2 * a + 1)


@st.composite
def labelings(draw, inst=None, max_half=5, min_n=1):
    if inst is None:
        inst = draw(instances(max_half=max_half, min_n=min_n))
    cells = draw(st.permutations(range(inst.edges)))
    bits = np.zeros(inst.edges, np.uint8)
    bits[list(cells[:inst.ones])] = 1
    return Labeling(inst, bits.reshape(inst.n, inst.m))


def random_labeling(inst, rng):
    bits = np.zeros(inst.edges, np.uint8)
    bits[rng.choice(inst.edges, inst.ones, replace=False)] = 1
    return Labeling(inst, bits.reshape(inst.n, inst.m))


@pytest.fixture
def k33_example():
    from ebiset import new_labeling
    return new_labeling(Instance(3, 3), {(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)})


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    label = request.node.get_closest_marker("criterion").args[0]
    yield
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {label}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


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
