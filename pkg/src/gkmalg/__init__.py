"""Exact centrally extended current algebras over compact manifolds.

The package builds, in exact arithmetic, the Lie algebra of maps from a
compact manifold (torus, 2-sphere, SU(2)) into a compact base algebra,
extended by central charges and commuting Hermitean grading operators, and
verifies every asserted property both exactly and against an independent
quadrature oracle.
"""

from .algebra import GKMAlgebra, GKMElement, build_algebra
from .liealg import (
    CartanWeylData,
    FiniteAlgebra,
    cartan_weyl,
    jacobi_check_finite,
    killing_form,
    make_algebra,
)
from .modes import (
    ModeSystem,
    Sphere2Geometry,
    Sphere3Geometry,
    TorusGeometry,
    enumerate_modes,
    make_mode_system,
    parse_manifold,
)
from .quadrature import (
    QuadratureGrid,
    make_grid,
    mode_values,
    numeric_cocycle_pairing,
    numeric_conjugation_pairing,
    numeric_eigencheck,
    numeric_orthonormality,
    numeric_product_coefficient,
)
from .report import CheckResult, VerificationReport
from .scalars import ComplexSurd, Rational, SurdScalar
from .serialize import DumpFormatError, dump_algebra, load_algebra, save_algebra
from .verify import (
    associativity_check,
    cocycle_antisymmetry_check,
    commutativity_check,
    eigen_additivity_check,
    eta_involution_check,
    grading_check,
    invariance_check,
    jacobi_check_gkm,
    killing_consistency_check,
    killing_table_check,
    mode_axiom_checks,
    oracle_agreement_check,
    run_suites,
    torus_hierarchy_check,
    unit_check,
)
from .wigner import SpinTriple, clebsch_gordan, gaunt_normalized, wigner3j

__version__ = "0.1.0"

__all__ = [
    "CartanWeylData",
    "CheckResult",
    "ComplexSurd",
    "DumpFormatError",
    "FiniteAlgebra",
    "GKMAlgebra",
    "GKMElement",
    "ModeSystem",
    "QuadratureGrid",
    "Rational",
    "Sphere2Geometry",
    "Sphere3Geometry",
    "SpinTriple",
    "SurdScalar",
    "TorusGeometry",
    "VerificationReport",
    "associativity_check",
    "build_algebra",
    "cartan_weyl",
    "clebsch_gordan",
    "cocycle_antisymmetry_check",
    "commutativity_check",
    "dump_algebra",
    "eigen_additivity_check",
    "enumerate_modes",
    "eta_involution_check",
    "gaunt_normalized",
    "grading_check",
    "invariance_check",
    "jacobi_check_finite",
    "jacobi_check_gkm",
    "killing_consistency_check",
    "killing_form",
    "killing_table_check",
    "load_algebra",
    "make_algebra",
    "make_grid",
    "make_mode_system",
    "mode_axiom_checks",
    "mode_values",
    "numeric_cocycle_pairing",
    "numeric_conjugation_pairing",
    "numeric_eigencheck",
    "numeric_orthonormality",
    "numeric_product_coefficient",
    "oracle_agreement_check",
    "parse_manifold",
    "run_suites",
    "save_algebra",
    "torus_hierarchy_check",
    "unit_check",
    "wigner3j",
]
