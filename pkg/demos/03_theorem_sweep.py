"""
Sweeping for rational conjugate pairs
=====================================

Enumerate points of bounded height on a few curves and check that no
nondegenerate point has a rational conjugate.
"""

from fractions import Fraction as F

from cuboidcurve import Curve, verify_theorem

for q in (F(16, 21), F(3, 4), F(5, 12), F(8, 15)):
    rep = verify_theorem(Curve(q), 60)
    print(
        f"E({q}): {len(rep.points_found):3d} nondegenerate points, "
        f"{len(rep.degenerate_exceptions)} degenerate, "
        f"{len(rep.counterexamples)} counterexamples ({rep.elapsed:.2f}s)"
    )
    for P, conj in rep.points_found[:4]:
        print(f"    {P}  ->  s^2 = {conj.s_squared}")
