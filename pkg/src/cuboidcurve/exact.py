"""Exact rational arithmetic, integer square roots and perfect-square tests.

Rationals are :class:`fractions.Fraction` instances, which are reduced to
lowest terms with a positive denominator on construction.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction

from .errors import ZeroDenominatorError

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:/([+-]?\d+))?\s*")

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def normalize(n: int, d: int) -> Fraction:
    if d == 0:
        raise ZeroDenominatorError(f"zero denominator in {n}/{d}")
    return Fraction(n, d)


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def arith(op: str, a: Fraction, b: Fraction) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if op == "div" and b == 0:
        raise ZeroDenominatorError("division by zero")
    return fn(as_rational(a), as_rational(b))


def isqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), is_perfect_square)``."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Nonnegative square root of ``x`` if it is a rational square, else None.

    A canonical n/d is a square iff n >= 0 and both n and d are integer squares.
    """
    x = as_rational(x)
    if x < 0:
        return None
    rn, ok_n = isqrt(x.numerator)
    if not ok_n:
        return None
    rd, ok_d = isqrt(x.denominator)
    if not ok_d:
        return None
    return Fraction(rn, rd)


def is_square(x: Fraction) -> bool:
    return rational_sqrt(x) is not None


def height(x: Fraction) -> int:
    x = as_rational(x)
    return max(abs(x.numerator), x.denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``[-]digits[/[-]digits]`` into a canonical Fraction.

    >>> parse_rational("-4/-13")
    Fraction(4, 13)
    """
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return normalize(num, den)


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
