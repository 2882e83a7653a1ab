"""phasestar: exact star products on phase space.

Clifford (geometric) algebra over Grassmann generators with phase-space
polynomial coefficients, the Moyal deformation of the coefficient product,
supersymmetric factorization of polynomial Hamiltonians, and exact
star-genvalue checks against Gaussian Wigner functions.  All arithmetic is
over Gaussian rationals with a formal hbar, so every identity is checked by
data equality rather than tolerance.
"""

from .scalars import GaussianRational, HbarScalar
from .phasepoly import (
    HBAR,
    I,
    P,
    PhasePoly,
    Q,
    diff,
    moyal_commutator,
    moyal_star,
    poisson_bracket,
    poly_mul,
)
from .multivector import (
    Metric,
    Multivector,
    blade_grade,
    blade_mask,
    blade_name,
    clifford_star,
    grade_project,
    moyal_clifford_anticommutator,
    moyal_clifford_commutator,
    moyal_clifford_star,
    star_anticommutator,
    star_commutator,
    wedge,
)
from .symplectic import (
    PoissonBivector,
    SymplecticForm,
    flat,
    hamiltonian_vector_field,
    nabla,
    natural,
    poisson_bracket_geometric,
    symplectic_dot,
)
from .susy import (
    HolomorphicFrame,
    Superpotential,
    SusySystem,
    SusyVerificationError,
    build_w,
    classical_hamiltonian,
    ladder_check,
    partner_hamiltonians,
    projector_check,
    projectors,
    supercharges,
    susy_hamiltonian,
    susy_hamiltonian_closed_form,
    verify_pauli_algebra,
    verify_susy_algebra,
)
from .gausswigner import (
    GaussPoly,
    bopp_star_left,
    bopp_star_right,
    check_stargenvalue,
    gauss_diff,
    laguerre,
    oscillator_hamiltonian,
    oscillator_wigner,
)
from .expr import ExprError, LowerError, ParseError, parse, parse_multivector, parse_poly
from .report import IdentityCheck, Report

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "HbarScalar",
    "PhasePoly",
    "Q",
    "P",
    "HBAR",
    "I",
    "poly_mul",
    "diff",
    "moyal_star",
    "moyal_commutator",
    "poisson_bracket",
    "Metric",
    "Multivector",
    "blade_mask",
    "blade_grade",
    "blade_name",
    "wedge",
    "clifford_star",
    "moyal_clifford_star",
    "grade_project",
    "star_commutator",
    "star_anticommutator",
    "moyal_clifford_commutator",
    "moyal_clifford_anticommutator",
    "SymplecticForm",
    "PoissonBivector",
    "flat",
    "natural",
    "symplectic_dot",
    "nabla",
    "hamiltonian_vector_field",
    "poisson_bracket_geometric",
    "Superpotential",
    "HolomorphicFrame",
    "SusySystem",
    "SusyVerificationError",
    "build_w",
    "classical_hamiltonian",
    "susy_hamiltonian",
    "susy_hamiltonian_closed_form",
    "partner_hamiltonians",
    "projectors",
    "projector_check",
    "supercharges",
    "ladder_check",
    "verify_susy_algebra",
    "verify_pauli_algebra",
    "GaussPoly",
    "gauss_diff",
    "bopp_star_left",
    "bopp_star_right",
    "laguerre",
    "oscillator_hamiltonian",
    "oscillator_wigner",
    "check_stargenvalue",
    "parse",
    "parse_poly",
    "parse_multivector",
    "ExprError",
    "ParseError",
    "LowerError",
    "IdentityCheck",
    "Report",
]
