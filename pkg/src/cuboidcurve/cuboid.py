"""Cuboids built from two Heron angles and a rational space diagonal.

With elevation angle t (generator q) and azimuth f (generator p)::

    x = d cos t sin f    y = d cos t cos f    z = d sin t
    a = d cos t          b = d sin(phi)       c = d sin(psi)

where cos phi = cos t cos f and cos psi = cos t sin f. Edges and ``a`` are
always rational; ``b`` and ``c`` are only known through their squares.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, replace
from fractions import Fraction

from .angles import cos_sin_from_generator
from .errors import DegenerateGeneratorError, NonPositiveScaleError
from .exact import as_rational, format_rational, rational_sqrt

log = logging.getLogger(__name__)

_DEGENERATE = (Fraction(0), Fraction(1), Fraction(-1))


@dataclass(frozen=True)
class QuadValue:
    """A nonnegative quantity known by its exact square, plus the root when rational."""

    square: Fraction
    root: Fraction | None = None

    def __post_init__(self):
        if self.square < 0:
            raise ValueError("square must be nonnegative")
        if self.root is not None and (self.root < 0 or self.root**2 != self.square):
            raise ValueError(f"{self.root} is not the root of {self.square}")

    @classmethod
    def from_square(cls, square) -> QuadValue:
        square = as_rational(square)
        return cls(square, rational_sqrt(square))

    @classmethod
    def from_value(cls, value) -> QuadValue:
        value = abs(as_rational(value))
        return cls(value * value, value)

    @property
    def is_rational(self) -> bool:
        return self.root is not None

    def as_record(self) -> dict:
        rec = {"square": format_rational(self.square)}
        if self.root is not None:
            rec["root"] = format_rational(self.root)
        return rec


class Classification(str, enum.Enum):
    PERFECT = "PERFECT"
    B_RATIONAL = "B_RATIONAL"
    C_RATIONAL = "C_RATIONAL"
    NEITHER = "NEITHER"


@dataclass(frozen=True)
class CuboidData:
    x: QuadValue
    y: QuadValue
    z: QuadValue
    a: QuadValue
    b: QuadValue
    c: QuadValue
    d: Fraction
    source: tuple[Fraction, Fraction, Fraction]  # (q_gen, p_gen, d)

    def quantities(self) -> dict[str, QuadValue]:
        return {
            "x": self.x, "y": self.y, "z": self.z,
            "a": self.a, "b": self.b, "c": self.c,
            "d": QuadValue.from_value(self.d),
        }

    def as_record(self) -> dict:
        rec = {k: getattr(self, k).as_record() for k in "xyzabc"}
        rec["d"] = format_rational(self.d)
        q, p, d = self.source
        rec["source"] = {"q": format_rational(q), "p": format_rational(p), "d": format_rational(d)}
        rec["classification"] = classify(self).value
        return rec


def build(q_gen, p_gen, d) -> CuboidData:
    q_gen, p_gen, d = as_rational(q_gen), as_rational(p_gen), as_rational(d)
    if q_gen in _DEGENERATE:
        raise DegenerateGeneratorError(f"q generator {q_gen} gives a flat cuboid")
    if p_gen in _DEGENERATE:
        raise DegenerateGeneratorError(f"p generator {p_gen} gives a flat cuboid")
    if d <= 0:
        raise NonPositiveScaleError(f"space diagonal must be positive, got {d}")

    theta = cos_sin_from_generator(q_gen)
    varphi = cos_sin_from_generator(p_gen)
    cos_phi = theta.cos * varphi.cos
    cos_psi = theta.cos * varphi.sin
    d2 = d * d

    return CuboidData(
        x=QuadValue.from_value(d * cos_psi),
        y=QuadValue.from_value(d * cos_phi),
        z=QuadValue.from_value(d * theta.sin),
        a=QuadValue.from_value(d * theta.cos),
        b=QuadValue.from_square(d2 * (1 - cos_phi**2)),
        c=QuadValue.from_square(d2 * (1 - cos_psi**2)),
        d=d,
        source=(q_gen, p_gen, d),
    )


def verify(cd: CuboidData) -> bool:
    x2, y2, z2 = cd.x.square, cd.y.square, cd.z.square
    return (
        x2 + y2 == cd.a.square
        and x2 + z2 == cd.b.square
        and y2 + z2 == cd.c.square
        and x2 + y2 + z2 == cd.d * cd.d
    )


def tamper(cd: CuboidData, **squares) -> CuboidData:
    """Copy of ``cd`` with the named squares replaced; for negative tests."""
    return replace(cd, **{k: QuadValue.from_square(v) for k, v in squares.items()})


def classify(cd: CuboidData) -> Classification:
    if all(v.is_rational for v in cd.quantities().values()):
        log.critical(
            "PERFECT CUBOID FOUND from source %s: every edge and diagonal is rational",
            tuple(map(format_rational, cd.source)),
        )
        return Classification.PERFECT
    if cd.b.is_rational and not cd.c.is_rational:
        return Classification.B_RATIONAL
    if cd.c.is_rational and not cd.b.is_rational:
        return Classification.C_RATIONAL
    return Classification.NEITHER
