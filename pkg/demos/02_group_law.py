"""
Group law on E(q)
=================

Multiples of a point, the identity (0, q) and inverses (-p, r).
"""

from fractions import Fraction as F

from cuboidcurve import Curve, orbit

curve = Curve(F(16, 21))
P = curve.point(F(4, 13), F(4, 5))

for k, Pk in enumerate(orbit(curve, P, 5), start=1):
    print(f"{k}P = {Pk}")

print("P + identity =", curve.add(P, curve.identity()))
print("P + (-P)     =", curve.add(P, curve.invert(P)))

# Heights grow quickly: compare the digit count of the 20th multiple.
P20 = curve.scalar_mul(20, P)
print("20P has", len(str(P20.p.denominator)), "digit denominator")
