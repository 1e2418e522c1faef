import sys
from itertools import combinations

import pytest
from hypothesis import strategies as st

from infgrass.subsets import KSubset, enumerate_window


def pairs(k, lo, hi):
    subs = enumerate_window(k, lo, hi)
    return [(a, b) for a in subs for b in subs]


def crosses_brute(l, m):
    """Literal search for i1 < j1 < i2 < j2 or j1 < i1 < j2 < i2."""
    a = sorted(set(l) - set(m))
    b = sorted(set(m) - set(l))
    for i1, i2 in combinations(a, 2):
        for j1, j2 in combinations(b, 2):
            if i1 < j1 < i2 < j2 or j1 < i1 < j2 < i2:
                return True
    return False


@st.composite
def ksubsets(draw, k=None, lo=-12, hi=12):
    if k is None:
        k = draw(st.integers(2, 6))
    vals = draw(st.lists(st.integers(lo, hi), min_size=k, max_size=k, unique=True))
    return KSubset(tuple(sorted(vals)))


@st.composite
def ksubset_pairs(draw, lo=-12, hi=12, kmax=6):
    k = draw(st.integers(2, kmax))
    return draw(ksubsets(k, lo, hi)), draw(ksubsets(k, lo, hi))


@pytest.fixture(scope="session")
def small_pairs():
    return pairs(2, -4, 4) + pairs(3, -3, 3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
