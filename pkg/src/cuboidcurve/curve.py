"""The curve E(q): p^2 + q^2 = r^2 (1 + p^2 q^2) and its group law."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .angles import involute
from .errors import ExceptionalPairError, NotOnCurveError, ZeroParameterError
from .exact import as_rational, format_rational, rational_sqrt

DEGENERATE_P = (Fraction(0), Fraction(1), Fraction(-1))


@dataclass(frozen=True)
class CurvePoint:
    p: Fraction
    r: Fraction

    def __str__(self):
        return f"({format_rational(self.p)}, {format_rational(self.r)})"

    @property
    def is_degenerate(self) -> bool:
        """True for p in {0, 1, -1}, which correspond to a cuboid with a zero edge."""
        return self.p in DEGENERATE_P

    def as_record(self) -> dict:
        return {"p": format_rational(self.p), "r": format_rational(self.r)}


@dataclass(frozen=True)
class ConjugateReport:
    p_bar: Fraction
    s_squared: Fraction
    s: Fraction | None
    conjugate_is_rational: bool

    def as_record(self) -> dict:
        rec = {
            "p_bar": format_rational(self.p_bar),
            "s_squared": format_rational(self.s_squared),
        }
        if self.s is not None:
            rec["s"] = format_rational(self.s)
        rec["conjugate_rational"] = self.conjugate_is_rational
        return rec


def conjugate_p(p) -> Fraction:
    """p-coordinate of the conjugate point, (1 - p) / (1 + p)."""
    return involute(p)


@dataclass(frozen=True)
class Curve:
    """E(q) for a fixed nonzero rational q.

    Points are :class:`CurvePoint` values; every point handed out by a method
    is checked against the curve equation before it is returned.
    """

    q: Fraction
    degenerate_for_cuboids: bool = field(init=False)

    def __post_init__(self):
        q = as_rational(self.q)
        if q == 0:
            raise ZeroParameterError("q must be nonzero")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "degenerate_for_cuboids", abs(q) == 1)

    def r_squared(self, p) -> Fraction:
        p = as_rational(p)
        p2, q2 = p * p, self.q * self.q
        return (p2 + q2) / (1 + p2 * q2)

    def contains(self, p, r) -> bool:
        p, r = as_rational(p), as_rational(r)
        p2, q2, r2 = p * p, self.q * self.q, r * r
        return p2 + q2 == r2 * (1 + p2 * q2)

    def point(self, p, r) -> CurvePoint:
        """Validated constructor; raises NotOnCurveError off the curve."""
        p, r = as_rational(p), as_rational(r)
        if not self.contains(p, r):
            raise NotOnCurveError(
                f"({format_rational(p)}, {format_rational(r)}) is not on E({format_rational(self.q)})"
            )
        return self._certify(p, r)

    def _certify(self, p: Fraction, r: Fraction) -> CurvePoint:
        # Single exit for every point this class produces.
        assert self.contains(p, r), "curve equation violated"
        return CurvePoint(p, r)

    def lift(self, p) -> CurvePoint | None:
        """Point above ``p`` with r >= 0, or None if r^2 is not a rational square."""
        p = as_rational(p)
        r = rational_sqrt(self.r_squared(p))
        if r is None:
            return None
        return self._certify(p, r)

    def identity(self) -> CurvePoint:
        return self._certify(Fraction(0), self.q)

    def invert(self, P: CurvePoint) -> CurvePoint:
        return self._certify(-P.p, P.r)

    def add(self, P1: CurvePoint, P2: CurvePoint) -> CurvePoint:
        t = P1.p * P2.p * P1.r * P2.r
        if t == 1 or t == -1:
            raise ExceptionalPairError(f"addition undefined for {P1} and {P2}")
        p = (P1.p * P2.r + P2.p * P1.r) / ((1 - t) * self.q)
        r = (P1.p * P2.p + P1.r * P2.r) / ((1 + t) * self.q)
        return self._certify(p, r)

    def scalar_mul(self, k: int, P: CurvePoint) -> CurvePoint:
        """P composed with itself k times, by double-and-add."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        result = self.identity()
        addend = P
        while k:
            if k & 1:
                result = self.add(result, addend)
            k >>= 1
            if k:
                addend = self.add(addend, addend)
        return result

    def conjugate_status(self, P: CurvePoint) -> ConjugateReport:
        p_bar = conjugate_p(P.p)
        s2 = self.r_squared(p_bar)
        s = rational_sqrt(s2)
        return ConjugateReport(p_bar, s2, s, s is not None)
