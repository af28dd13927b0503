"""
Inclusion figure
================

Writes the boundary of the region and the inclusion curves as SVG, then
checks each threshold shape with the sampling oracle.
"""

import sys

from srho import cli, verify
from srho.region import inclusion_thresholds, st_p_gamma

out = sys.argv[1] if len(sys.argv) > 1 else "inclusions.svg"
cli.run(["figure", "--name", "inclusions", "--samples", "400", "--out", out])
print("wrote", out)

rec = inclusion_thresholds(1.0)
g0, _ = st_p_gamma()
shapes = {
    "sqrt(1 + kappa z)": verify.SqrtKappa(rec.kappa_max),
    "ellipse k": verify.EllipseK(rec.k_min),
    "(1 - z)^-s": verify.HplImage(rec.s_hpl_min),
    "limacon": verify.LimaconImage(rec.s_L_min),
    "parabola": verify.Parabola(g0 + 1e-4),
}
for name, shape in shapes.items():
    rep = verify.verify_region_inclusion(shape)
    print(f"{name:18s} {rep.details['direction']:16s} pass={rep.passed} margin={rep.worst_margin:.2e}")
