"""Congruence diagonalization of ``A(G) + xI`` directly on a threshold cotree.

Sign counts of the returned diagonal give, by Sylvester's law of inertia, the
number of eigenvalues above, at and below ``-x``.

Nodes are processed deepest first.  At each node the identical-valued leaves
are collapsed in closed form, then the value carried up from the child is
paired with what is left.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .cotree import JOIN, Cotree, node_kind
from .numeric import ScalarLike, as_scalar, dyadic_midpoint, format_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


class CountTriple(NamedTuple):
    greater: int
    equal: int
    less: int

    @property
    def n(self) -> int:
        return self.greater + self.equal + self.less


@dataclass(frozen=True)
class TraceStep:
    depth: int
    subcase: str
    permanent: tuple[Fraction, ...]
    remaining: Optional[Fraction]

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "subcase": self.subcase,
            "permanent": [format_scalar(v) for v in self.permanent],
            "remaining": None if self.remaining is None else format_scalar(self.remaining),
        }


@dataclass
class DiagOutcome:
    diagonal: tuple[Fraction, ...]
    counts: CountTriple
    trace: list[TraceStep] = field(default_factory=list)


def _tally(values) -> CountTriple:
    pos = zero = neg = 0
    for v in values:
        if v > 0:
            pos += 1
        elif v < 0:
            neg += 1
        else:
            zero += 1
    return CountTriple(pos, zero, neg)


def join_step(alpha: Fraction, beta: Fraction):
    """One sibling pair under a join node.

    Returns ``(subcase, permanents, remaining)``; ``remaining`` is ``None``
    when both siblings leave the tree.
    """
    total = alpha + beta - 2
    if total != 0:
        return "1a", (total,), (alpha * beta - 1) / total
    if beta == 1:
        return "1b", (ZERO,), ONE
    return "1c", (-(1 - beta) ** 2, ONE), None


def union_step(alpha: Fraction, beta: Fraction):
    total = alpha + beta
    if total != 0:
        return "2a", (total,), alpha * beta / total
    if beta == 0:
        return "2b", (ZERO,), ZERO
    return "2c", (-beta, beta), None


def _step(kind: str, alpha: Fraction, beta: Fraction):
    return join_step(alpha, beta) if kind == JOIN else union_step(alpha, beta)


def _collapse_leaves(kind: str, y: Fraction, m: int):
    """Collapse ``m`` sibling leaves that all hold ``y``.

    Uses the closed forms for ``m - 1`` consecutive subcase-1a (join, ``y != 1``)
    or subcase-2a (union, ``y != 0``) iterations; otherwise falls back to
    literal pairing, which only ever hits subcases 1b/2b here.
    """
    if kind == JOIN and y != 1:
        perms = tuple(Fraction(j + 1, j) * (y - 1) for j in range(1, m))
        return "1a*", perms, (y + m - 1) / m
    if kind != JOIN and y != 0:
        perms = tuple(Fraction(j + 1, j) * y for j in range(1, m))
        return ("2a*", perms, y / m)
    return _collapse_naive(kind, y, m)


def _collapse_naive(kind: str, y: Fraction, m: int):
    acc = y
    perms: list[Fraction] = []
    tags = set()
    for _ in range(m - 1):
        tag, p, acc = _step(kind, y, acc)
        tags.add(tag)
        perms.extend(p)
        if acc is None:  # unreachable for equal leaves, kept for totality
            break
    tag = "+".join(sorted(tags)) if tags else ("1a*" if kind == JOIN else "2a*")
    return tag, tuple(perms), acc


def specialize_leaves(c: Cotree, x: ScalarLike):
    """Collapse every node's own leaves.

    Returns ``(permanent, remaining)`` where ``permanent`` holds the ``n - r``
    values fixed by the collapse and ``remaining[i - 1]`` is the single value
    left at depth ``i``.
    """
    x = as_scalar(x)
    permanent: list[Fraction] = []
    remaining: list[Fraction] = []
    for depth, m in enumerate(c.parts, start=1):
        _, perms, rem = _collapse_leaves(node_kind(depth), x, m)
        permanent.extend(perms)
        remaining.append(rem)
    return permanent, remaining


def _run(c: Cotree, x: Fraction, collapse) -> DiagOutcome:
    diagonal: list[Fraction] = []
    trace: list[TraceStep] = []
    carried: Optional[Fraction] = None
    for depth in range(c.depth, 0, -1):
        kind = node_kind(depth)
        tag, perms, rem = collapse(kind, x, c.parts[depth - 1])
        diagonal.extend(perms)
        trace.append(TraceStep(depth, tag, perms, rem))
        if carried is None:
            carried = rem
            continue
        # the carried value plays alpha, the node's own survivor beta
        tag, perms, carried = _step(kind, carried, rem)
        diagonal.extend(perms)
        trace.append(TraceStep(depth, tag, perms, carried))
    if carried is not None:
        diagonal.append(carried)
    return DiagOutcome(tuple(diagonal), _tally(diagonal), trace)


def diagonalize_full(c: Cotree, x: ScalarLike) -> DiagOutcome:
    """Diagonal congruent to ``A(G) + xI``, with a per-step trace."""
    return _run(c, as_scalar(x), _collapse_leaves)


def diagonalize_naive(c: Cotree, x: ScalarLike) -> DiagOutcome:
    """Same sibling order as :func:`diagonalize_full` but strictly one pair at a time."""
    return _run(c, as_scalar(x), _collapse_naive)


def spine_counts(parts: Sequence[int], x: Fraction) -> CountTriple:
    """Sign counts of ``diagonalize_full`` without materializing the diagonal.

    The ``n - r`` collapse permanents are ``(j+1)/j * (x-1)`` at joins and
    ``(j+1)/j * x`` at unions, so only their common sign is needed; the ``r``
    survivors are run through the pairing steps.
    """
    join_sign = (x > 1) - (x < 1)
    union_sign = (x > 0) - (x < 0)
    counts = [0, 0, 0]  # indexed by sign: 0 -> zero, 1 -> pos, -1 -> neg
    carried = None
    for depth in range(len(parts), 0, -1):
        m = parts[depth - 1]
        if depth & 1:
            counts[join_sign] += m - 1
            rem = (x + m - 1) / m
        else:
            counts[union_sign] += m - 1
            rem = x / m
        if carried is None:
            carried = rem
            continue
        if depth & 1:
            total = carried + rem - 2
            if total != 0:
                counts[(total > 0) - (total < 0)] += 1
                carried = (carried * rem - 1) / total
            elif rem == 1:
                counts[0] += 1
                carried = ONE
            else:
                counts[1] += 1
                counts[-1] += 1
                carried = None
        else:
            total = carried + rem
            if total != 0:
                counts[(total > 0) - (total < 0)] += 1
                carried = carried * rem / total
            elif rem == 0:
                counts[0] += 1
                carried = ZERO
            else:
                counts[1] += 1
                counts[-1] += 1
                carried = None
    if carried is not None:
        counts[(carried > 0) - (carried < 0)] += 1
    return CountTriple(counts[1], counts[0], counts[-1])


def count_triple(c: Cotree, a: ScalarLike) -> CountTriple:
    """Eigenvalue counts (above ``a``, equal to ``a``, below ``a``)."""
    return spine_counts(c.parts, -as_scalar(a))


def inertia_closed_form(c: Cotree) -> CountTriple:
    odd = c.parts[0::2]
    even = c.parts[1::2]
    zero = sum(a - 1 for a in even)
    if c.depth % 2:
        return CountTriple(c.unions + 1, zero, sum(odd) - 1)
    return CountTriple(c.unions, zero, sum(odd))


def mult_minus_one(c: Cotree) -> int:
    return sum(a - 1 for a in c.parts[0::2])


def left_closed_form(c: Cotree) -> int:
    """Number of eigenvalues that are at least -1 (the target count for [M, -1) freeness)."""
    inertia = inertia_closed_form(c)
    return mult_minus_one(c) + inertia.equal + inertia.greater


def _iteration_cap(n: int, tol: Fraction) -> int:
    return math.ceil(math.log2(n / tol)) + 2


def bisect_theta_plus(c: Cotree, tol: ScalarLike = Fraction(1, 10**9)) -> Fraction:
    """Smallest positive eigenvalue, to within ``tol``."""
    tol = as_scalar(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    target = inertia_closed_form(c).greater
    if target < 1:
        raise ValueError(f"{c} has no positive eigenvalue")
    lo, hi = ZERO, Fraction(c.n)  # (0, lo] eigenvalue free; (0, hi] is not
    for _ in range(_iteration_cap(c.n, tol)):
        if hi - lo <= tol:
            break
        mid = dyadic_midpoint(lo, hi)
        counts = count_triple(c, mid)
        if counts.greater == target:
            lo = mid
        elif counts.equal and counts.greater + counts.equal == target:
            return mid
        else:
            hi = mid
    return (lo + hi) / 2


def bisect_theta_minus(c: Cotree, tol: ScalarLike = Fraction(1, 10**9)) -> Fraction:
    """Largest eigenvalue below -1, to within ``tol``."""
    tol = as_scalar(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    target = count_triple(c, -1).less
    if target < 1:
        raise ValueError(f"{c} has no eigenvalue below -1")
    lo, hi = Fraction(-c.n), -ONE  # [hi, -1) eigenvalue free; [lo, -1) is not
    for _ in range(_iteration_cap(c.n, tol)):
        if hi - lo <= tol:
            break
        mid = dyadic_midpoint(lo, hi)
        counts = count_triple(c, mid)
        if counts.less == target:
            hi = mid
        elif counts.equal and counts.less + counts.equal == target:
            return mid
        else:
            lo = mid
    return (lo + hi) / 2
