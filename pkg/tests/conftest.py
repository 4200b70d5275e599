from fractions import Fraction

import pytest
from hypothesis import strategies as st

from thompsonf import FreeWord, evaluate_word, standard_generator
from thompsonf._backend import available_backends
from thompsonf.dyadic import DyadicRational


BACKENDS = available_backends()


@pytest.fixture(params=sorted(BACKENDS))
def kernels(request):
    return BACKENDS[request.param]


@pytest.fixture(scope="session")
def x0():
    return standard_generator(0)


@pytest.fixture(scope="session")
def x1():
    return standard_generator(1)


def D(text):
    return DyadicRational.coerce(text)


def frac(d: DyadicRational) -> Fraction:
    return Fraction(d.numerator, 2**d.exponent)


def oracle_eval(f, x: Fraction) -> Fraction:
    """Piecewise-linear interpolation in plain Fractions, independent of the kernels."""
    pts = [(frac(a), frac(b)) for a, b in f.breakpoints]
    for (xa, ya), (xb, yb) in zip(pts, pts[1:]):
        if xa <= x <= xb:
            return ya + (x - xa) * (yb - ya) / (xb - xa)
    raise ValueError("outside [0, 1]")


# hypothesis strategies

dyadics = st.builds(DyadicRational, st.integers(-(2**70), 2**70), st.integers(0, 80))


@st.composite
def unit_dyadics(draw, max_exp=12):
    e = draw(st.integers(0, max_exp))
    n = draw(st.integers(0, 2**e))
    return DyadicRational(n, e)


gen_words = st.lists(st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=8).map(
    lambda letters: FreeWord(letters, 2))


@st.composite
def f_elements(draw, max_len=8):
    w = draw(st.lists(st.tuples(st.integers(0, 1), st.sampled_from([1, -1])), max_size=max_len))
    return evaluate_word(FreeWord(w, 2), [standard_generator(0), standard_generator(1)])


@st.composite
def partitions(draw, max_points=10, max_exp=8):
    size = draw(st.integers(0, max_points - 2))
    e = draw(st.integers(1, max_exp))
    top = 2**e
    size = min(size, top - 1)
    inner = draw(st.lists(st.integers(1, top - 1), min_size=size, max_size=size, unique=True))
    return [DyadicRational(0)] + [DyadicRational(v, e) for v in sorted(inner)] + [DyadicRational(1)]


# acceptance reporting

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    crit = report.user_properties and dict(report.user_properties).get("criterion")
    if crit:
        n, title = crit
        prev = _ACCEPTANCE.get(n, (title, True))
        _ACCEPTANCE[n] = (title, prev[1] and report.passed)


@pytest.fixture(autouse=True)
def _record_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        request.node.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n:>2}: {title}")
