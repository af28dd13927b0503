"""
Radius constants
================

Every radius in closed form next to an independent disc-containment bisection.
A large gap flags a formula whose bounding disc leaves the region.
"""

from srho import radii
from srho.region import C1

# ratio classes: closed form vs the largest r whose bounding disc fits
print("class      n   closed      disc-certified")
for klass in radii.RATIO_CLASSES:
    for n in (1, 2, 3):
        rep = radii.ratio_class_radius(klass, n)
        print(f"{klass:9s} {n:2d}   {rep.radius:.7f}   {rep.extras['disc_certified']:.7f}")

# Janowski: the three candidates and the one selected
for A, B in ((1.0, 0.0), (0.5, 0.25), (0.5, -0.5), (0.9, -0.9)):
    rep = radii.janowski_radius(radii.JanowskiParams(A, B))
    cand = ", ".join(f"{k}={v:.5f}" for k, v in rep.extras.items())
    print(f"Janowski A={A:+.2f} B={B:+.2f}: {rep.radius:.6f} ({rep.case_label})  [{cand}]")

# F3 reports both closed forms; the disc bisection decides which binds
for A in (-1.0, 0.0, 1.0):
    rep = radii.f3_radius(A, 1)
    e = rep.extras
    print(f"F3 A={A:+.1f}: R0={e['R0']:.7f} R1={e['R1']:.7f} certified={rep.radius:.7f}")

# M_n(beta), starlike order, convexity
print("Mn(cosh 1), n=1:", radii.mn_beta_radius(C1, 1).radius)
print("starlike order 0.8:", radii.starlike_order_radius(0.8).radius)
for form in ("printed", "derived"):
    print(f"convexity alpha=0.5 ({form}):", radii.convexity_radius(0.5, form).radius)
