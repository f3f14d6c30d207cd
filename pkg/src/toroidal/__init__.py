"""Exact computations with twisted full toroidal Lie algebras and their
bounded modules, checked on finite windows."""

from .cyclotomic import CycScalar, root_of_unity, simplify
from .finite import (Envelope, FiniteModule, ModuleSpecError, WindowCapError, a_module, finite_dim_irrep,
                     w2_sigma0)
from .gradings import Kind, WeightVector, classify, decompose_window, weight_of
from .liealg import (FiniteAutomorphism, algebra_from_json, automorphism_from_json, build_chevalley,
                     chevalley_involution, identity_automorphism, twisted_transpose, validate_automorphisms)
from .linalg import Echelon, Vec
from .loopmod import LoopModule, ModuleParams, Window, build_Sprime, build_Tprime, validate_params
from .multiloop import GSigma0, Multiloop, check_assumptions_213, subalgebra_a
from .reports import Check, Report
from .roots import RootSystem, enlarge_roots, weyl_dimension
from .tau import CocycleConfig, Tau, check_da_equivariance, check_jacobi
from .thin import ThinCoverData, thin_cover_lift_restrict

__all__ = [
    "CycScalar", "root_of_unity", "simplify",
    "Envelope", "FiniteModule", "ModuleSpecError", "WindowCapError", "a_module", "finite_dim_irrep", "w2_sigma0",
    "Kind", "WeightVector", "classify", "decompose_window", "weight_of",
    "FiniteAutomorphism", "algebra_from_json", "automorphism_from_json", "build_chevalley",
    "chevalley_involution", "identity_automorphism", "twisted_transpose", "validate_automorphisms",
    "Echelon", "Vec",
    "LoopModule", "ModuleParams", "Window", "build_Sprime", "build_Tprime", "validate_params",
    "GSigma0", "Multiloop", "check_assumptions_213", "subalgebra_a",
    "Check", "Report",
    "RootSystem", "enlarge_roots", "weyl_dimension",
    "CocycleConfig", "Tau", "check_da_equivariance", "check_jacobi",
    "ThinCoverData", "thin_cover_lift_restrict",
]
