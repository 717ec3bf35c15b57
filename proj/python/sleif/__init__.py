"""Spectral solver for Sturm-Liouville problems in impedance form.

Computes eigenvalues, normalized eigenfunctions, normalization constants and
Weyl functions of -(kappa(x) u')' = lambda kappa(x) u on [0, L] through a
spherical-Bessel series whose coefficients come from a recursive integration
procedure.
"""

from ._core import (
    BoundaryCondition,
    ConductivityProfile,
    FormalPowerTable,
    MeshFunction,
    NsbfCoefficientTable,
    SpectralDataset,
    UniformMesh,
    alpha_from_formal_powers,
    asymptotic_gaps,
    build_mesh,
    builtin_profile,
    characteristic_dirichlet,
    compute_coefficients,
    compute_formal_powers,
    compute_normalization,
    cosine_solution,
    cosine_solution_deriv,
    cumulative_integral,
    eigenfunction_samples,
    error_bound_diagnostic,
    exp_solution,
    find_eigenvalues,
    goursat_residual,
    integrate,
    legendre_coefficients,
    mesh_function,
    profile_from_closed_form,
    profile_triangular,
    reciprocal_profile,
    sine_solution,
    sine_solution_deriv,
    spherical_bessel_sequence,
    spps_eval,
    verify,
    weyl_dirichlet,
    weyl_dirichlet_residue,
    weyl_neumann,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
