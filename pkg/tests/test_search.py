import itertools
import threading
from fractions import Fraction as F

import pytest

from threshfree.cotree import Cotree
from threshfree.numeric import SQRT5
from threshfree.search import minimality_search
from threshfree.spectra import Interval


def brute_force(base, interval):
    ranges = [range(1, a + 1) for a in base.parts[:-1]] + [range(2, base.parts[-1] + 1)]
    return [Cotree(p) for p in itertools.product(*ranges) if p != base.parts and interval.is_free(Cotree(p))]


CASES = [
    (Cotree([4, 14, 5]), Interval.right(SQRT5)),
    (Cotree([5, 30, 3, 3]), Interval.right(SQRT5)),
    (Cotree([8, 3, 3]), Interval.left(F("-2.5"))),
    (Cotree([11, 3, 11, 4]), Interval.left(F("-2.5"))),
    (Cotree([2, 2]), Interval.right(F(10))),
]


@pytest.mark.parametrize("base, interval", CASES)
def test_matches_brute_force(base, interval):
    report = minimality_search(base, interval)
    assert report.complete
    assert report.examined == report.lattice_size
    assert report.counterexamples == sorted(brute_force(base, interval), key=lambda c: c.parts)


def test_finds_the_initial_threshold_below_a_larger_base():
    report = minimality_search(Cotree([4, 14, 5]), Interval.right(SQRT5))
    assert Cotree([3, 12, 4]) in report.counterexamples
    assert report.base_is_free


def test_lattice_sizes():
    report = minimality_search(Cotree([3, 12, 4]), Interval.right(SQRT5))
    assert report.full_lattice_size == 144
    assert report.lattice_size == 108
    assert report.counterexamples == []


def test_worker_count_does_not_change_the_report():
    base, interval = Cotree([11, 3, 11, 4]), Interval.left(F("-2.5"))
    one = minimality_search(base, interval, workers=1)
    many = minimality_search(base, interval, workers=4)
    assert one.same_result(many)
    assert one.counterexamples


def test_cancel_before_start():
    stop = threading.Event()
    stop.set()
    report = minimality_search(Cotree([4, 14, 5]), Interval.right(SQRT5), cancel=stop)
    assert not report.complete
    assert report.examined == 0


def test_progress_callback():
    seen = []
    minimality_search(Cotree([4, 14, 5]), Interval.right(SQRT5), progress=lambda d, t: seen.append((d, t)))
    assert seen and seen[-1][0] == seen[-1][1]


def test_rejects_zero_workers():
    with pytest.raises(ValueError):
        minimality_search(Cotree([2, 2]), Interval.right(1), workers=0)
