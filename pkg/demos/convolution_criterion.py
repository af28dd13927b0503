"""
Convolution criterion
=====================

Membership via a non-vanishing polynomial, compared with direct sampling of
z f'/f and with the coefficient bounds.
"""

from srho import criteria, radii, series, verify

# f(z) = z + a z^2 across the threshold (1 - cos 1)/(2 - cos 1)
a_max = radii.family_threshold("MonomialPerturb", 2)
for a in (0.9 * a_max, 0.99 * a_max, 1.05 * a_max):
    c = criteria.CoeffList([a])
    conv = criteria.convolution_nonvanishing(c)
    suff, worst = criteria.coeff_sufficient(c)
    samp = verify.verify_subordination(radii.threshold_family("MonomialPerturb", a))
    print(f"a2={a:.5f}: convolution {conv.passed} (zeros {conv.details['zeros_inside']}), "
          f"sufficient {suff} ({worst:.4f}), sampling {samp.passed}")

# the extremal function passes the necessary L2 condition
for n in (2, 3, 4, 5):
    ok, lhs, rhs = criteria.coeff_l2_check(criteria.CoeffList.from_series(series.build_phi_n(n, 12).coeffs))
    print(f"phi_{n}: L2 {ok}  {lhs:.5f} <= {rhs:.5f}")

# Fekete-Szego: phi_2 stays under the bound for a few mu
c = series.build_phi_n(2).coeffs
for mu in (0, 7 / 12, 2):
    print(f"mu={mu:.4f}: |a3 - mu a2^2| = {abs(c[3] - mu * c[2] ** 2):.5f} <= {criteria.fekete_szego_bound(mu):.5f}")
