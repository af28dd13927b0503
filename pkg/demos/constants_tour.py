"""
A tour of the region cosh(sqrt z)(D)
====================================

Where the region sits, how wide it is, and the constants that describe it.
"""

import math

import numpy as np

from srho import region, series

# the real extent runs from cos 1 to cosh 1
sig = region.Sigma(1.0)
print(f"real extent: ({sig.lo:.6f}, {sig.hi:.6f}), midpoint {sig.midpoint:.6f}")

# boundary points come from the closed form; check one against the map itself
p = region.boundary_point(sig, math.pi / 2)
print("boundary at t = pi/2:", p.u, " map at z = i:", region.eval_rho(sig, 1j))

# membership is |arccosh u| < sigma
for u in (1.0, 1.6, region.eval_rho(sig, 0.5), 0.55 + 0.1j):
    print(f"u = {complex(u):.4f}  level {float(region.level(sig, u)):.4f}  inside {region.contains(sig, u)}")

# the largest |arg u| on the boundary and where it occurs
m, t2 = region.max_argument(sig)
print(f"max |arg u| = {m:.7f} at t = {t2:.6f}  ({m / (math.pi / 2):.7f} * pi/2)")

# half-height of the region above the midpoint of its real extent
l, t0 = region.imag_extent(sig)
top, _ = region.max_imag(sig)
print(f"height at the midpoint {l:.8f}, overall top {top:.8f}")

# the parabola constant
g0, tau = region.st_p_gamma()
print(f"gamma0 = {g0:.8f} at tau = {tau:.6f}")

# growth and distortion bounds on |z| = 1
low, up, dlow, dup = series.growth_distortion(1.0)
print(f"{low:.6f} <= |f(z)| <= {up:.6f},  {dlow:.6f} <= |f'(z)| <= {dup:.6f}")

# the inscribed disc at a few centres
for c in np.linspace(sig.lo + 0.05, sig.hi - 0.05, 5):
    d = region.inscribed_radius(sig, c)
    print(f"centre {c:.4f}: radius {d.radius:.6f}")
