"""Exact arithmetic on the curve p^2 + q^2 = r^2 (1 + p^2 q^2).

Rational points, the group law, conjugate points, the cuboids these points
parametrize, and a bounded sweep for rational conjugate pairs.
"""

from .angles import UnitPair, cos_sin_from_generator, generator_from_cos_sin, involute, reflect
from .cuboid import Classification, CuboidData, QuadValue, build, classify, verify
from .curve import ConjugateReport, Curve, CurvePoint, conjugate_p
from .errors import (
    DegenerateGeneratorError,
    DomainError,
    ExceptionalPairError,
    InvolutionSingularError,
    NonPositiveScaleError,
    NotOnCurveError,
    SingularAngleError,
    ZeroDenominatorError,
    ZeroGeneratorError,
    ZeroParameterError,
)
from .exact import Rational, arith, format_rational, height, isqrt, normalize, parse_rational, rational_sqrt
from .search import Orbit, TheoremReport, enumerate_p, find_points, orbit, verify_theorem

__version__ = "0.1.0"
