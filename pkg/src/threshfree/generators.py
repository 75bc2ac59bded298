"""Generators of threshold graphs with an eigenvalue-free interval.

``rfi(N, r)`` builds a depth-``r`` cotree with no eigenvalue in ``(0, N]``;
``lfi(M, r)`` one with no eigenvalue in ``[M, -1)``.  Both walk the spine of
the specialized cotree from depth ``r`` up to the root, choosing each leaf
count just large enough to keep the carried value on the right side of the
relevant threshold.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .cotree import Cotree
from .numeric import ScalarLike, as_scalar, floor_plus_one, format_scalar


class GeneratorError(ValueError):
    pass


class PoleError(ZeroDivisionError):
    pass


def f(x: ScalarLike, y: ScalarLike) -> Fraction:
    """Join recurrence ``(xy - 1) / (x + y - 2)``."""
    x, y = as_scalar(x), as_scalar(y)
    den = x + y - 2
    if den == 0:
        raise PoleError(f"f({x}, {y}) has x + y = 2")
    return (x * y - 1) / den


def g(x: ScalarLike, y: ScalarLike) -> Fraction:
    """Union recurrence ``xy / (x + y)``."""
    x, y = as_scalar(x), as_scalar(y)
    den = x + y
    if den == 0:
        raise PoleError(f"g({x}, {y}) has x + y = 0")
    return x * y / den


@dataclass(frozen=True)
class TraceLevel:
    depth: int
    bound: Fraction
    chosen: int
    remaining: Fraction
    permanent: Optional[Fraction]

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "bound": format_scalar(self.bound),
            "chosen": self.chosen,
            "remaining": format_scalar(self.remaining),
            "permanent": None if self.permanent is None else format_scalar(self.permanent),
        }


@dataclass(frozen=True)
class GenTrace:
    side: str  # "right" or "left"
    threshold: Fraction
    levels: tuple[TraceLevel, ...]  # depth r first

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "threshold": format_scalar(self.threshold),
            "levels": [lv.to_json() for lv in self.levels],
        }


INITIAL = "initial"
Policy = Union[str, Sequence[int]]


def _pick(policy: Policy, depth: int, bound: Fraction, floor: int) -> int:
    """Choose ``a_depth``: strictly above ``bound`` and at least ``floor``."""
    least = max(floor_plus_one(bound), floor)
    if policy == INITIAL:
        return least
    chosen = int(policy[depth - 1])
    if chosen < least:
        raise GeneratorError(
            f"a_{depth} = {chosen} is not admissible: need a_{depth} > {format_scalar(bound)} "
            f"and a_{depth} >= {floor}"
        )
    return chosen


def _check_policy(policy: Policy, r: int) -> None:
    if policy == INITIAL:
        return
    if isinstance(policy, str) or len(policy) != r:
        raise GeneratorError(f"policy must be 'initial' or a list of {r} integers (a_1, ..., a_r)")


def rfi(N: ScalarLike, r: int, policy: Policy = INITIAL) -> tuple[Cotree, GenTrace]:
    """Cotree of depth ``r`` whose graph has no eigenvalue in ``(0, N]``.

    ``policy`` is ``"initial"`` (smallest admissible choice at every level) or
    explicit leaf counts ``(a_1, ..., a_r)``.
    """
    N = as_scalar(N)
    if N <= 0:
        raise GeneratorError("N must be positive")
    if r < 1:
        raise GeneratorError("r must be at least 1")
    _check_policy(policy, r)

    parts = [0] * r
    levels = []
    if r % 2:
        bound = N + 1
        a = _pick(policy, r, bound, 2)
        s = 1 - (N + 1) / a
    else:
        bound = Fraction(1)
        a = _pick(policy, r, bound, 2)
        s = -N / a
    parts[r - 1] = a
    levels.append(TraceLevel(r, bound, a, s, None))

    for i in range(r - 1, 0, -1):
        if i % 2:
            bound = (N + 1) / (1 - 1 / s)
            a = _pick(policy, i, bound, 1)
            own = 1 - (N + 1) / a
            p = s + own - 2
            s = f(s, own)
        else:
            bound = N / s
            a = _pick(policy, i, bound, 1)
            own = -N / a
            p = s + own
            s = g(s, own)
        parts[i - 1] = a
        levels.append(TraceLevel(i, bound, a, s, p))
    return Cotree(parts), GenTrace("right", N, tuple(levels))


def lfi(M: ScalarLike, r: int, policy: Policy = INITIAL) -> tuple[Cotree, GenTrace]:
    """Cotree of depth ``r`` whose graph has no eigenvalue in ``[M, -1)``."""
    M = as_scalar(M)
    if M >= -1:
        raise GeneratorError("M must be below -1")
    if r < 1:
        raise GeneratorError("r must be at least 1")
    _check_policy(policy, r)

    parts = [0] * r
    levels = []
    if r % 2:
        bound = Fraction(1)
        a = _pick(policy, r, bound, 2)
        s = 1 - (M + 1) / a
    else:
        bound = -M
        a = _pick(policy, r, bound, 2)
        s = -M / a
    parts[r - 1] = a
    levels.append(TraceLevel(r, bound, a, s, None))

    for i in range(r - 1, 0, -1):
        if i % 2:
            bound = (-M - 1) / (1 - s)
            a = _pick(policy, i, bound, 1)
            own = 1 - (M + 1) / a
            p = s + own - 2
            s = f(s, own)
        else:
            bound = -M + M / s
            a = _pick(policy, i, bound, 1)
            own = -M / a
            p = s + own
            s = g(s, own)
        parts[i - 1] = a
        levels.append(TraceLevel(i, bound, a, s, p))
    return Cotree(parts), GenTrace("left", M, tuple(levels))


def check_right_ladder(trace: GenTrace) -> list[str]:
    """Sign pattern violations in an ``rfi`` trace (empty when all hold)."""
    problems = []
    for lv in trace.levels:
        join = lv.depth % 2 == 1
        if join and not lv.remaining > 0:
            problems.append(f"depth {lv.depth}: remaining {lv.remaining} should be > 0")
        if not join and not lv.remaining < 0:
            problems.append(f"depth {lv.depth}: remaining {lv.remaining} should be < 0")
        if lv.permanent is not None:
            if join and not lv.permanent < 0:
                problems.append(f"depth {lv.depth}: permanent {lv.permanent} should be < 0")
            if not join and not lv.permanent > 0:
                problems.append(f"depth {lv.depth}: permanent {lv.permanent} should be > 0")
        if not lv.chosen > lv.bound:
            problems.append(f"depth {lv.depth}: a = {lv.chosen} does not exceed bound {lv.bound}")
    return problems


def check_left_ladder(trace: GenTrace) -> list[str]:
    """Band violations in an ``lfi`` trace: joins leave s > 1, unions 0 < s < 1."""
    problems = []
    for lv in trace.levels:
        join = lv.depth % 2 == 1
        if join and not lv.remaining > 1:
            problems.append(f"depth {lv.depth}: remaining {lv.remaining} should be > 1")
        if not join and not 0 < lv.remaining < 1:
            problems.append(f"depth {lv.depth}: remaining {lv.remaining} should be in (0, 1)")
        if lv.permanent is not None:
            if join and not lv.permanent < 0:
                problems.append(f"depth {lv.depth}: permanent {lv.permanent} should be < 0")
            if not join and not lv.permanent > 1:
                problems.append(f"depth {lv.depth}: permanent {lv.permanent} should be > 1")
        if not lv.chosen > lv.bound:
            problems.append(f"depth {lv.depth}: a = {lv.chosen} does not exceed bound {lv.bound}")
    return problems
