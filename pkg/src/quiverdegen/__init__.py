"""Degeneration orders for quiver representations, computed exactly."""
from .linalg import GF, QQ, ExactMatrix, FieldSpec
from .quiver import (
    Arrow,
    Quiver,
    QuiverError,
    Representation,
    RepMorphism,
    direct_sum,
    euler_pairing,
    ext1_dim,
    hom_basis,
    hom_dim,
    kernel_cokernel,
)
from .decompose import Decomposition, decompose, fitting_split, is_indecomposable, is_isomorphic
from .degeneration import (
    RZWitness,
    Verdict,
    decide_deg,
    extension_degeneration,
    hom_order_leq,
    orbit_dimension,
    rz_witness_search,
    verify_rz_witness,
)
from .dvr import FamilyRep, check_dvr_degeneration, rz_to_family
from .derived import (
    ChainMap,
    Complex,
    TriangleWitness,
    delta_witness_search,
    derived_iso,
    hom_dim_derived,
    homology,
    mapping_cone,
    ses_to_triangle,
    shift,
)
from .enumeration import enumerate_indecomposables, enumerate_modules
from .poset import DegenerationPoset, hasse_diagram, verify_partial_order

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "ExactMatrix", "FieldSpec",
    "Arrow", "Quiver", "QuiverError", "Representation", "RepMorphism", "direct_sum", "euler_pairing",
    "ext1_dim", "hom_basis", "hom_dim", "kernel_cokernel",
    "Decomposition", "decompose", "fitting_split", "is_indecomposable", "is_isomorphic",
    "RZWitness", "Verdict", "decide_deg", "extension_degeneration", "hom_order_leq", "orbit_dimension",
    "rz_witness_search", "verify_rz_witness",
    "FamilyRep", "check_dvr_degeneration", "rz_to_family",
    "ChainMap", "Complex", "TriangleWitness", "delta_witness_search", "derived_iso", "hom_dim_derived",
    "homology", "mapping_cone", "ses_to_triangle", "shift",
    "enumerate_indecomposables", "enumerate_modules",
    "DegenerationPoset", "hasse_diagram", "verify_partial_order",
]
