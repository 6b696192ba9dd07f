"""Half-angle generators of Heron angles.

A generator is ``m = tan(a/2) = sin a / (1 + cos a)``. Rational generators are
exactly the Heron angles (rational sine and cosine), so all maps here stay
inside the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvolutionSingularError, SingularAngleError, ZeroGeneratorError
from .exact import as_rational


@dataclass(frozen=True)
class UnitPair:
    """``(cos, sin)`` of a Heron angle."""

    cos: Fraction
    sin: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cos", as_rational(self.cos))
        object.__setattr__(self, "sin", as_rational(self.sin))
        if self.cos**2 + self.sin**2 != 1:
            raise ValueError(f"({self.cos}, {self.sin}) is not on the unit circle")

    def swap(self) -> UnitPair:
        return UnitPair(self.sin, self.cos)


def cos_sin_from_generator(m) -> UnitPair:
    m = as_rational(m)
    m2 = m * m
    return UnitPair((1 - m2) / (1 + m2), 2 * m / (1 + m2))


def generator_from_cos_sin(u: UnitPair) -> Fraction:
    if u.cos == -1:
        raise SingularAngleError("angle pi has no finite generator")
    return u.sin / (1 + u.cos)


def involute(m) -> Fraction:
    """Generator of the complementary angle pi/2 - a."""
    m = as_rational(m)
    if m == -1:
        raise InvolutionSingularError("involution undefined at generator -1")
    return (1 - m) / (1 + m)


def reflect(m) -> Fraction:
    """Generator of the supplementary angle pi - a."""
    m = as_rational(m)
    if m == 0:
        raise ZeroGeneratorError("reflection undefined at generator 0")
    return 1 / m
