"""Exact fractional-revival analysis on Cayley graphs of finite abelian groups.

The package decides, for the continuous walk H(t) = exp(i t A) on an abelian
Cayley graph, whether some time sends vertex 0 to an exact two-point mixture
alpha*e_0 + beta*e_a, certifies the finding with root-of-unity phase data,
verifies certificates against dense numerics, and constructs the certified
graph families.
"""

from .boolfn import (
    BooleanClass,
    BooleanFunction,
    GroupFunction,
    WalshSpectrum,
    classify_boolean,
    eigenvalues_from_walsh,
    fourier_integers,
    group_fourier,
    hadamard_transform,
    is_class_function,
    mm_bent,
    plateaued_level,
    support,
    support_size_check,
    walsh_transform,
)
from .cayley import (
    CayleyGraph,
    ConnectionSet,
    Spectrum,
    adjacency_matrix,
    graph_from_json,
    graph_to_json,
    is_integral,
    make_graph,
    spectrum,
    unit_closed,
    validate_connection_set,
)
from .cli import RunConfig
from .cyclotomic import IntPolynomial, RootOfUnitySum, cyclotomic_polynomial
from .engine import (
    FRWitness,
    InvolutionSplit,
    Moduli,
    WitnessKind,
    compute_moduli,
    decide_fr,
    search_all,
    split_by_involution,
)
from .errors import (
    AsymmetricSetError,
    DisconnectedGraphWarning,
    FrCayleyError,
    HypothesisViolationError,
    InvalidGroupError,
    NonIntegralSpectrumError,
    NotClassFunctionError,
    NotInvolutionError,
    OracleDimensionError,
    SpecFormatError,
    ZeroInSetError,
)
from .families import (
    BuiltFamily,
    FamilyVariant,
    build_bent_family,
    build_cublike_family,
    build_from_spec,
    build_multi_prime_family,
    build_plateaued_family,
    build_ramanujan_family,
    engine_agrees,
    is_prime,
    p_adic_valuation,
    ramanujan_sum,
)
from .groups import Element, FiniteAbelianGroup, make_group, units_mod
from .oracle import (
    TransferMatrix,
    VerificationReport,
    character_table,
    dense_expm_check,
    eigenvalue_array,
    fr_grid_scan,
    series_walk_matrix,
    transfer_matrix,
    verify_fr,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricSetError",
    "BooleanClass",
    "BooleanFunction",
    "BuiltFamily",
    "CayleyGraph",
    "ConnectionSet",
    "DisconnectedGraphWarning",
    "Element",
    "FRWitness",
    "FamilyVariant",
    "FiniteAbelianGroup",
    "FrCayleyError",
    "GroupFunction",
    "HypothesisViolationError",
    "IntPolynomial",
    "InvalidGroupError",
    "InvolutionSplit",
    "Moduli",
    "NonIntegralSpectrumError",
    "NotClassFunctionError",
    "NotInvolutionError",
    "OracleDimensionError",
    "RootOfUnitySum",
    "RunConfig",
    "SpecFormatError",
    "Spectrum",
    "TransferMatrix",
    "VerificationReport",
    "WalshSpectrum",
    "WitnessKind",
    "ZeroInSetError",
    "adjacency_matrix",
    "build_bent_family",
    "build_cublike_family",
    "build_from_spec",
    "build_multi_prime_family",
    "build_plateaued_family",
    "build_ramanujan_family",
    "character_table",
    "classify_boolean",
    "compute_moduli",
    "cyclotomic_polynomial",
    "decide_fr",
    "dense_expm_check",
    "eigenvalue_array",
    "eigenvalues_from_walsh",
    "engine_agrees",
    "fourier_integers",
    "fr_grid_scan",
    "graph_from_json",
    "graph_to_json",
    "group_fourier",
    "hadamard_transform",
    "is_class_function",
    "is_integral",
    "is_prime",
    "make_graph",
    "make_group",
    "mm_bent",
    "p_adic_valuation",
    "plateaued_level",
    "ramanujan_sum",
    "search_all",
    "series_walk_matrix",
    "spectrum",
    "split_by_involution",
    "support",
    "support_size_check",
    "transfer_matrix",
    "unit_closed",
    "units_mod",
    "validate_connection_set",
    "verify_fr",
    "walsh_transform",
]
