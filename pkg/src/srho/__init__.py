"""Numerical toolkit for starlike functions subordinate to ``cosh(sigma*sqrt(z))``.

Modules:

- :mod:`srho.numerics` root finding, extremization and quadrature
- :mod:`srho.series` truncated Taylor series and closed-form test families
- :mod:`srho.region` geometry of the image region
- :mod:`srho.radii` radius constants and parameter thresholds
- :mod:`srho.criteria` coefficient and convolution criteria
- :mod:`srho.verify` sampling oracles
"""
from .errors import SrhoError
from .numerics import NumericConfig
from .region import (
    C0, C1, CONSTANTS, Disc, Sigma, boundary_point, contains, eval_rho, imag_extent,
    inclusion_thresholds, inscribed_radius, max_argument, st_p_gamma,
)
from .series import FamilySpec, TaylorSeries, build_phi_n, build_rho_series, growth_distortion
from .radii import (
    JanowskiParams, RadiusReport, convexity_radius, f3_radius, family_threshold, janowski_radius,
    janowski_subordinate_ok, mbeta_radius, mn_beta_radius, ratio_class_radius, starlike_order_radius,
)
from .criteria import (
    CoeffList, coeff_l2_check, coeff_sufficient, convolution_nonvanishing, fekete_szego_bound,
)
from .verify import (
    SamplingPlan, VerificationReport, sharpness_probe, verify_region_inclusion, verify_subordination,
)

__version__ = "0.1.0"
