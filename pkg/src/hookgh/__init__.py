"""Exact tools for hook-shape Garsia-Haiman modules: inversion monomial
bases, the bump/arm/leg bijection, derivative modules, orbit-point
evaluation, and exhaustive verification campaigns."""

__version__ = "0.1.0"

from .shapes import (
    Cell,
    HookShape,
    b_stat,
    cells,
    conjugate,
    format_shape,
    parse_shape,
    remove_corner,
    removable_cells,
    row_lengths,
)
from .fillings import (
    InversionSet,
    Monomial,
    StandardFilling,
    complement,
    dual_signature_monomial,
    enumerate_fillings,
    filling_from_json,
    filling_to_json,
    inversions,
    phi,
    signature_monomial,
    split_fillings,
)
from .foata import arm, bump, leg, theta, theta_inverse
from .polyalg import (
    OrbitParams,
    OrbitPoint,
    Polynomial,
    apply_diff,
    default_params,
    delta,
    derivative_module,
    evaluate,
    orbit_point,
    psi,
    psi_at,
    seeded_params,
)
from .exactla import ExactMatrix, RowReducer, independent, intersection_dim, rank
from .lab import (
    CampaignReport,
    Claim,
    HilbertSeries,
    explore_d_intersection,
    hilbert_series,
    verify_arr_basis,
    verify_nfact2,
    verify_orbit_harmonics,
)
from .kernels import backend
