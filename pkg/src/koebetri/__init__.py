"""Koebe-radius analysis of univalent trinomials with fold symmetry.

The library computes the minimal radius of the disk covered by every image of
the unit disk under a univalent trinomial z + a z^(1+T) + b z^(1+2T), locates
the extremal coefficients, scans the univalence-domain boundary to confirm the
minimum, and certifies the supporting inequalities with exact sign-variation
counts and grid checks.
"""

from __future__ import annotations

from .classical import (
    PolynomialFamilyCoeffs,
    cheb_u,
    cheb_u_deriv,
    general_extremizer_coeffs,
    odd_extremizer_coeffs,
    q_coeffs,
    symmetric_koebe_coeffs,
)
from .certify import (
    BudanCertificate,
    RealPolynomial,
    budan_certificate,
    domination_gaps,
    hat_poly,
    reconstruct_poly,
    step_algorithm,
    verify_ellipse_cases,
    verify_lemma_numeric,
    verify_t_geq_7_chain,
)
from .domain import (
    AlphaParam,
    BoundaryPoint,
    CurveId,
    Membership,
    boundary_point,
    closed_boundary_polyline,
    contains,
    curve_derivative,
    find_t_tilde,
    suffridge_point,
    t_star,
    tform_point,
)
from .figures import FigureSpec, figure_data, render_figure
from .objective import (
    DirectionProfile,
    Trinomial,
    direction_profile,
    extremal_coeffs,
    koebe_radius,
    main_value,
    mu,
    phi,
    suffridge_radius,
)
from .search import (
    GlobalReport,
    ScanResult,
    UnivalenceVerdict,
    Verdict,
    boundary_scan,
    domain_agreement,
    global_verify,
    min_over_direction,
    univalence_check,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaParam",
    "BoundaryPoint",
    "BudanCertificate",
    "CurveId",
    "DirectionProfile",
    "FigureSpec",
    "GlobalReport",
    "Membership",
    "PolynomialFamilyCoeffs",
    "RealPolynomial",
    "ScanResult",
    "Trinomial",
    "UnivalenceVerdict",
    "Verdict",
    "boundary_point",
    "boundary_scan",
    "budan_certificate",
    "cheb_u",
    "cheb_u_deriv",
    "closed_boundary_polyline",
    "contains",
    "curve_derivative",
    "direction_profile",
    "domain_agreement",
    "domination_gaps",
    "extremal_coeffs",
    "figure_data",
    "find_t_tilde",
    "general_extremizer_coeffs",
    "global_verify",
    "hat_poly",
    "koebe_radius",
    "main_value",
    "min_over_direction",
    "mu",
    "odd_extremizer_coeffs",
    "phi",
    "q_coeffs",
    "reconstruct_poly",
    "render_figure",
    "step_algorithm",
    "suffridge_point",
    "suffridge_radius",
    "symmetric_koebe_coeffs",
    "t_star",
    "tform_point",
    "univalence_check",
    "verify_ellipse_cases",
    "verify_lemma_numeric",
    "verify_t_geq_7_chain",
    "__version__",
]
