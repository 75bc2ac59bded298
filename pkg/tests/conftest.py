import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from threshfree.cotree import Cotree


def random_cotree(rng: random.Random, max_depth: int = 10, max_part: int = 8) -> Cotree:
    r = rng.randint(1, max_depth)
    parts = [rng.randint(1, max_part) for _ in range(r - 1)] + [rng.randint(2, max(2, max_part))]
    return Cotree(parts)


def random_rational(rng: random.Random, lo: float, hi: float, den: int = 1000) -> Fraction:
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


@st.composite
def cotrees(draw, max_depth=8, max_part=6):
    r = draw(st.integers(1, max_depth))
    head = draw(st.lists(st.integers(1, max_part), min_size=r - 1, max_size=r - 1))
    return Cotree(head + [draw(st.integers(2, max(2, max_part)))])


rationals = st.fractions(min_value=-12, max_value=12, max_denominator=60)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(k.rstrip("ab")), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
