"""
The q = 16/21 example
=====================

One rational point on E(16/21), its conjugate, and the cuboid both come from.
"""

from fractions import Fraction as F

from cuboidcurve import Curve, build, classify, format_rational

curve = Curve(F(16, 21))
P = curve.point(F(4, 13), F(4, 5))
print("P =", P, "on curve:", curve.contains(P.p, P.r))

# The conjugate has p_bar = (1 - p)/(1 + p); its s^2 is not a rational square.
rep = curve.conjugate_status(P)
print("p_bar =", format_rational(rep.p_bar))
print("s^2   =", format_rational(rep.s_squared), "rational:", rep.conjugate_is_rational)

# The same generators, scaled by d = 697, give an integer box whose
# face diagonal c is irrational.
cd = build(curve.q, P.p, 697)
for name, value in cd.quantities().items():
    root = format_rational(value.root) if value.is_rational else "irrational"
    print(f"  {name}: square {format_rational(value.square):>8}  root {root}")
print("classification:", classify(cd).value)
