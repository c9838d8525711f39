"""Exact Clifford-algebra toolkit for inframonogenic polynomials.

The package provides rational arithmetic in Cl(0, m), multivector-valued
polynomials with Dirac-type operators, the Fischer pairing with its
inframonogenic direct-sum decomposition, finite-difference verification
for a closed-form plane field, and a command-line front end.
"""

from .algebra import (
    MAX_DIM,
    BladeIndex,
    Multivector,
    blade_mul,
    blade_name,
    blade_sign,
    blades_in_order,
    vector_inner_left,
    vector_inner_right,
    vector_outer_left,
    vector_outer_right,
)
from .fischer import (
    AdjointnessReport,
    AlmansiSplit,
    DecompositionChecks,
    DecompositionResult,
    FischerTower,
    HarmonicInframonogenicReport,
    KernelSampler,
    TowerLayer,
    adjointness_report,
    almansi_split,
    composition_rank,
    coords,
    embed_matrix,
    fischer_decompose,
    fischer_inner,
    fischer_inner_differential,
    fischer_tower,
    from_coords,
    harmonic_inframonogenic_report,
    infra_space_dim,
    kernel_basis,
    poly_basis,
    sandwich_matrix,
    sandwich_rank,
    wrap_x,
)
from .grammar import PolynomialSyntaxError, parse_polynomial
from .operators import (
    IdentityReport,
    LinearMonogenicSplit,
    conjugate_sum,
    dirac_left,
    dirac_right,
    identity_report,
    is_biharmonic,
    is_harmonic,
    is_inframonogenic,
    is_k_monogenic,
    is_left_monogenic,
    is_right_monogenic,
    is_two_sided_monogenic,
    kvector_system_residuals,
    laplacian,
    linear_monogenic_split,
    predicate_report,
    sandwich,
)
from .polynomials import (
    CliffordPolynomial,
    euler,
    monomial_basis,
    monomial_count,
    mul_by_x_left,
    mul_by_x_right,
    space_dim,
    x_vector,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIM",
    "BladeIndex",
    "Multivector",
    "CliffordPolynomial",
    "AdjointnessReport",
    "AlmansiSplit",
    "DecompositionChecks",
    "DecompositionResult",
    "FischerTower",
    "HarmonicInframonogenicReport",
    "IdentityReport",
    "KernelSampler",
    "LinearMonogenicSplit",
    "PolynomialSyntaxError",
    "TowerLayer",
    "adjointness_report",
    "almansi_split",
    "blade_mul",
    "blade_name",
    "blade_sign",
    "blades_in_order",
    "composition_rank",
    "conjugate_sum",
    "coords",
    "dirac_left",
    "dirac_right",
    "embed_matrix",
    "euler",
    "fischer_decompose",
    "fischer_inner",
    "fischer_inner_differential",
    "fischer_tower",
    "from_coords",
    "harmonic_inframonogenic_report",
    "identity_report",
    "infra_space_dim",
    "is_biharmonic",
    "is_harmonic",
    "is_inframonogenic",
    "is_k_monogenic",
    "is_left_monogenic",
    "is_right_monogenic",
    "is_two_sided_monogenic",
    "kernel_basis",
    "kvector_system_residuals",
    "laplacian",
    "linear_monogenic_split",
    "monomial_basis",
    "monomial_count",
    "mul_by_x_left",
    "mul_by_x_right",
    "parse_polynomial",
    "poly_basis",
    "predicate_report",
    "sandwich",
    "sandwich_matrix",
    "sandwich_rank",
    "space_dim",
    "vector_inner_left",
    "vector_inner_right",
    "vector_outer_left",
    "vector_outer_right",
    "wrap_x",
    "x_vector",
]
