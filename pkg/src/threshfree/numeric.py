"""Exact scalar helpers.

Every quantity in the diagonalization recurrences is a :class:`fractions.Fraction`.
Floats never enter the hot paths; decimal input is parsed digit-for-digit.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import NamedTuple, Union

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_DECIMAL = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$")
_RATIO = re.compile(r"^\s*[+-]?\d+\s*/\s*\d+\s*$")


class FloorResult(NamedTuple):
    value: int
    is_exact_integer: bool


def scalar_from_decimal(text: str) -> Fraction:
    """Parse a finite decimal literal (``"4.8"``, ``"-3.3"``, ``"1e-9"``) exactly.

    ``p/q`` ratios are accepted too. Anything else raises ``ValueError``.
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    if _DECIMAL.match(text) or _RATIO.match(text):
        value = Fraction(text.replace(" ", ""))
        return value
    raise ValueError(f"malformed decimal literal: {text!r}")


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return scalar_from_decimal(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar; pass a str or Fraction")


def floor_exact(x: Fraction) -> FloorResult:
    fl = math.floor(x)
    return FloorResult(fl, fl == x)


def floor_plus_one(x: Fraction) -> int:
    """Smallest integer strictly greater than ``x``."""
    return math.floor(x) + 1


def sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def dyadic_midpoint(lo: Fraction, hi: Fraction) -> Fraction:
    """A dyadic rational in the open interval (lo, hi), close to its middle.

    Keeps denominators powers of two once the endpoints are dyadic, so repeated
    bisection does not blow up the operand sizes.
    """
    if not lo < hi:
        raise ValueError("need lo < hi")
    width = hi - lo
    # 2**-k <= width / 4, so flooring the midpoint to the 2**-k grid stays above lo
    k = (4 * width.denominator // width.numerator).bit_length()
    scale = 1 << k
    return Fraction(math.floor((lo + hi) / 2 * scale), scale)


def scalar_to_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def scalar_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# Rational stand-ins for the irrational ends of the trivial-eigenvalue window
# (-1 -+ sqrt 2)/2.  Truncated toward the window's interior: both lie strictly
# inside it, so no threshold graph has an eigenvalue between the surrogate and
# the true endpoint.
SQRT2_RIGHT = Fraction("0.20710678118654752")
SQRT2_LEFT = Fraction("-1.20710678118654752")
SQRT5 = Fraction("2.2360679774997896")
