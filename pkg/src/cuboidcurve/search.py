"""Bounded-height point search on E(q) and the conjugate-point sweep."""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .curve import ConjugateReport, Curve, CurvePoint
from .errors import ExceptionalPairError
from .exact import format_rational, rational_sqrt

log = logging.getLogger(__name__)


def enumerate_p(bound: int) -> Iterator[Fraction]:
    """Every rational of height <= bound, exactly once.

    Order: ascending height, then |numerator|, then denominator, with the
    positive value before its negative.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    yield Fraction(0)
    for h in range(1, bound + 1):
        # height h: n/h with n < h, then h/k with k <= h
        pairs = [(n, h) for n in range(1, h) if math.gcd(n, h) == 1]
        pairs += [(h, k) for k in range(1, h + 1) if math.gcd(h, k) == 1]
        for n, k in pairs:
            yield Fraction(n, k)
            yield Fraction(-n, k)


def enumeration_key(p: Fraction) -> tuple[int, int, int, bool]:
    """Sort key reproducing the order of :func:`enumerate_p`."""
    return (max(abs(p.numerator), p.denominator), abs(p.numerator), p.denominator, p < 0)


def _lift_chunk(args: tuple[Fraction, list[Fraction]]) -> list[Fraction | None]:
    q, ps = args
    curve = Curve(q)
    return [rational_sqrt(curve.r_squared(p)) for p in ps]


def _chunks(seq: list, n: int) -> list[list]:
    size = max(1, -(-len(seq) // n))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def find_points(c: Curve, bound: int, jobs: int = 1) -> list[CurvePoint]:
    """All rational points with height(p) <= bound, r >= 0, in enumeration order.

    With ``jobs > 1`` the candidates are split across worker processes; the
    chunks are concatenated in order, so the output matches a serial run.
    """
    candidates = list(enumerate_p(bound))
    if jobs <= 1:
        roots = _lift_chunk((c.q, candidates))
    else:
        work = [(c.q, chunk) for chunk in _chunks(candidates, jobs * 4)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            roots = [r for part in pool.map(_lift_chunk, work) for r in part]
    return [c._certify(p, r) for p, r in zip(candidates, roots) if r is not None]


class Orbit(list):
    """Multiples ``[P, 2P, ..., nP]``; ``halted_at`` is set when an exceptional pair stopped it."""

    halted_at: int | None = None


def orbit(c: Curve, P: CurvePoint, n_max: int) -> Orbit:
    if n_max < 1:
        raise ValueError("n_max must be positive")
    P = c.point(P.p, P.r)
    out = Orbit([P])
    current = P
    for k in range(2, n_max + 1):
        try:
            current = c.add(current, P)
        except ExceptionalPairError:
            log.warning("orbit of %s halted at multiple %d: exceptional pair", P, k)
            out.halted_at = k
            break
        out.append(current)
    return out


@dataclass
class TheoremReport:
    q: Fraction
    height_bound: int
    points_found: list[tuple[CurvePoint, ConjugateReport]] = field(default_factory=list)
    degenerate_exceptions: list[CurvePoint] = field(default_factory=list)
    counterexamples: list[CurvePoint] = field(default_factory=list)
    elapsed: float = 0.0

    def as_record(self) -> dict:
        # elapsed is left out so reports are byte-identical across runs
        return {
            "q": format_rational(self.q),
            "height_bound": self.height_bound,
            "points_found": [{**P.as_record(), **rep.as_record()} for P, rep in self.points_found],
            "degenerate_exceptions": [P.as_record() for P in self.degenerate_exceptions],
            "counterexamples": [P.as_record() for P in self.counterexamples],
        }

    def rows(self) -> list[dict]:
        """One flat row per point, degenerate points included, in search order."""
        rows = []
        for P, rep in self.points_found:
            rows.append((P.p, {
                **P.as_record(),
                "p_bar": format_rational(rep.p_bar),
                "s_squared": format_rational(rep.s_squared),
                "conjugate_rational": rep.conjugate_is_rational,
                "degenerate": False,
            }))
        for P in self.degenerate_exceptions:
            rows.append((P.p, {**P.as_record(), "p_bar": "", "s_squared": "",
                               "conjugate_rational": "", "degenerate": True}))
        rows.sort(key=lambda item: enumeration_key(item[0]))
        return [row for _, row in rows]


def verify_theorem(c: Curve, bound: int, jobs: int = 1) -> TheoremReport:
    """Check that no nondegenerate rational point has a rational conjugate."""
    if c.degenerate_for_cuboids:
        log.warning("q = %s: E(q) is degenerate, r^2 = 1 for every p", format_rational(c.q))
    start = time.perf_counter()
    report = TheoremReport(c.q, bound)
    for P in find_points(c, bound, jobs=jobs):
        if P.is_degenerate:
            report.degenerate_exceptions.append(P)
            continue
        rep = c.conjugate_status(P)
        report.points_found.append((P, rep))
        if rep.conjugate_is_rational:
            _audit_counterexample(c, P)
            report.counterexamples.append(P)
    report.elapsed = time.perf_counter() - start
    return report


def _audit_counterexample(c: Curve, P: CurvePoint) -> None:
    rep = c.conjugate_status(P)
    if not (c.contains(P.p, P.r) and rep.s is not None and c.contains(rep.p_bar, rep.s)):
        raise AssertionError(f"counterexample {P} failed its re-check")
    log.critical("counterexample on E(%s): %s with conjugate (%s, %s)",
                 format_rational(c.q), P, format_rational(rep.p_bar), format_rational(rep.s))
