"""Exhaustive search below an eigenvalue-free cotree.

Every cotree ``T(b1, ..., br)`` with ``b <= a`` componentwise (and
``b_r >= 2``) is tested for freeness.  Only the ``r`` spine values matter: the
``n - r`` collapse permanents all have the same sign (negative for a right
interval, positive for a left one) and never change the verdict.

Candidates are walked depth-first from depth ``r`` towards the root, so the
spine prefix shared by all candidates with the same deep part counts is
computed once.
"""
from __future__ import annotations

import itertools
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from threading import Event
from typing import Callable, Optional

from .cotree import Cotree
from .spectra import Interval

log = logging.getLogger(__name__)


@dataclass
class SearchReport:
    base: Cotree
    interval: Interval
    full_lattice_size: int  # prod a_i, ignoring a_r >= 2
    lattice_size: int  # prod_{i<r} a_i * (a_r - 1)
    examined: int = 0
    base_is_free: bool = False
    counterexamples: list[Cotree] = field(default_factory=list)
    wall_time: float = 0.0
    workers: int = 1
    complete: bool = False

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "interval": self.interval.to_json(),
            "full_lattice_size": self.full_lattice_size,
            "lattice_size": self.lattice_size,
            "examined": self.examined,
            "base_is_free": self.base_is_free,
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "wall_time": round(self.wall_time, 3),
            "workers": self.workers,
            "complete": self.complete,
        }

    def same_result(self, other: "SearchReport") -> bool:
        """Equal in everything except timing and worker count."""
        a, b = self.to_json(), other.to_json()
        for key in ("wall_time", "workers"):
            a.pop(key)
            b.pop(key)
        return a == b


def _own_values(bounds: tuple[int, ...], x: Fraction) -> list[list[Fraction]]:
    """``own[d][m]``: value left at depth ``d + 1`` after collapsing ``m`` leaves."""
    table = []
    for depth, top in enumerate(bounds, start=1):
        if depth & 1:
            table.append([Fraction(0)] + [(x + m - 1) / m for m in range(1, top + 1)])
        else:
            table.append([Fraction(0)] + [x / m for m in range(1, top + 1)])
    return table


def _search_shard(bounds: tuple[int, ...], interval: Interval, prefix: tuple[int, ...]):
    """Scan every candidate whose deepest ``len(prefix)`` part counts equal ``prefix``.

    ``prefix`` lists ``b_r, b_{r-1}, ...``.  Returns ``(examined, free_parts)``.
    """
    r = len(bounds)
    x = -interval.value
    own = _own_values(bounds, x)
    target = r // 2 + (r & 1)  # positives the spine must produce
    strict_zero = interval.side == "left"
    free: list[tuple[int, ...]] = []
    chosen = [0] * r
    examined = 0

    def step(depth, carried, pos, zero):
        """Pair ``carried`` with ``own``; returns the new (carried, pos, zero)."""
        m = chosen[depth - 1]
        rem = own[depth - 1][m]
        if carried is None:
            return rem, pos, zero
        if depth & 1:
            total = carried + rem - 2
            if total:
                return (carried * rem - 1) / total, pos + (total > 0), zero
            if rem == 1:
                return Fraction(1), pos, zero + 1
            return None, pos + 1, zero
        total = carried + rem
        if total:
            return carried * rem / total, pos + (total > 0), zero
        if rem == 0:
            return Fraction(0), pos, zero + 1
        return None, pos + 1, zero

    def finish(carried, pos, zero):
        if carried is not None:
            if carried > 0:
                pos += 1
            elif carried == 0:
                zero += 1
        return pos == target and not (strict_zero and zero)

    # replay the fixed prefix
    carried, pos, zero = None, 0, 0
    depth = r
    for m in prefix:
        chosen[depth - 1] = m
        carried, pos, zero = step(depth, carried, pos, zero)
        depth -= 1
    if depth == 0:
        ok = finish(carried, pos, zero)
        return 1, [tuple(chosen)] if ok else []

    def walk(depth, carried, pos, zero):
        nonlocal examined
        lo = 2 if depth == r else 1
        if depth == 1:
            for m in range(lo, bounds[0] + 1):
                chosen[0] = m
                examined += 1
                if finish(*step(1, carried, pos, zero)):
                    free.append(tuple(chosen))
            return
        for m in range(lo, bounds[depth - 1] + 1):
            chosen[depth - 1] = m
            walk(depth - 1, *step(depth, carried, pos, zero))

    walk(depth, carried, pos, zero)
    return examined, free


def _shards(bounds: tuple[int, ...], want: int) -> list[tuple[int, ...]]:
    """Fix the deepest few part counts until there are at least ``want`` shards."""
    r = len(bounds)
    ranges = []
    count = 1
    for depth in range(r, 0, -1):
        if count >= want:
            break
        lo = 2 if depth == r else 1
        ranges.append(range(lo, bounds[depth - 1] + 1))
        count *= len(ranges[-1])
    return list(itertools.product(*ranges)) if ranges else [()]


def minimality_search(
    base: Cotree,
    interval: Interval,
    workers: int = 1,
    cancel: Optional[Event] = None,
    progress: Optional[Callable[[int, int], None]] = None,
) -> SearchReport:
    """Look for free cotrees strictly below ``base`` in the componentwise order.

    The report lists them in lexicographic order whatever the worker count.
    Setting ``cancel`` (or a ``KeyboardInterrupt``) stops the scan between
    shards and yields a report marked incomplete.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    bounds = base.parts
    report = SearchReport(
        base=base,
        interval=interval,
        full_lattice_size=math.prod(bounds),
        lattice_size=math.prod(bounds[:-1]) * (bounds[-1] - 1),
        base_is_free=interval.is_free(base),
        workers=workers,
    )
    start = time.perf_counter()
    shards = _shards(bounds, 16 * workers)
    found: list[tuple[int, ...]] = []
    done = 0

    def absorb(result):
        nonlocal done
        examined, free = result
        report.examined += examined
        found.extend(free)
        done += 1
        if progress:
            progress(done, len(shards))

    try:
        if workers == 1:
            for prefix in shards:
                if cancel is not None and cancel.is_set():
                    break
                absorb(_search_shard(bounds, interval, prefix))
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(_search_shard, bounds, interval, p) for p in shards]
                try:
                    for fut in as_completed(futures):
                        absorb(fut.result())
                        if cancel is not None and cancel.is_set():
                            break
                finally:
                    for fut in futures:
                        fut.cancel()
    except KeyboardInterrupt:
        log.warning("search interrupted after %d of %d shards", done, len(shards))

    report.complete = done == len(shards)
    report.counterexamples = [Cotree(p) for p in sorted(found) if p != bounds]
    report.wall_time = time.perf_counter() - start
    return report
