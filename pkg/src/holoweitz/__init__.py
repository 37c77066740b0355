"""Exact computational representation theory for special holonomy.

Root systems, highest-weight representations, tensor and exterior
decompositions, Casimir eigenvalues, universal Weitzenboeck formulas and
a deduction engine for the parallelism of twistor, Killing and *-Killing
forms under G2 and Spin7 holonomy.  All arithmetic is exact rational.
"""

from .contexts import (
    HolonomyContext,
    RegistryEntry,
    form_space,
    load_registry,
    make_context,
    qr_trivial,
)
from .decompose import Decomposition, decompose_character, exterior_power, tensor
from .errors import (
    ContextNotSupported,
    DegreeOutOfRange,
    DimensionMismatch,
    HoloweitzError,
    InternalNegativeMultiplicity,
    MixedRootSystems,
    MultiplicityViolation,
    NotACharacter,
    NotAFormComponent,
    NotDominant,
    TrivialHolonomyRep,
    UnsupportedContext,
    UnsupportedType,
)
from .irreps import (
    Irrep,
    adjoint_irrep,
    casimir_base,
    casimir_lambda2,
    dimension,
    trivial_irrep,
    weight_system,
)
from .prover import (
    ComponentVerdict,
    DegreeReport,
    FormClass,
    TheoremReport,
    integrability_factor,
    prove_component,
    prove_degree,
    prove_theorems,
    vanishing_analysis,
)
from .roots import RootSystem, build_root_system, inner, to_dominant_chamber, weyl_orbit
from .weitzenboeck import WeitzenboeckFormula, conformal_weights, trace_residual

__version__ = "0.1.0"

__all__ = [
    "ComponentVerdict",
    "ContextNotSupported",
    "Decomposition",
    "DegreeOutOfRange",
    "DegreeReport",
    "DimensionMismatch",
    "FormClass",
    "HolonomyContext",
    "HoloweitzError",
    "InternalNegativeMultiplicity",
    "Irrep",
    "MixedRootSystems",
    "MultiplicityViolation",
    "NotACharacter",
    "NotAFormComponent",
    "NotDominant",
    "RegistryEntry",
    "RootSystem",
    "TheoremReport",
    "TrivialHolonomyRep",
    "UnsupportedContext",
    "UnsupportedType",
    "WeitzenboeckFormula",
    "adjoint_irrep",
    "build_root_system",
    "casimir_base",
    "casimir_lambda2",
    "conformal_weights",
    "decompose_character",
    "dimension",
    "exterior_power",
    "form_space",
    "inner",
    "integrability_factor",
    "load_registry",
    "make_context",
    "prove_component",
    "prove_degree",
    "prove_theorems",
    "qr_trivial",
    "tensor",
    "to_dominant_chamber",
    "trace_residual",
    "trivial_irrep",
    "vanishing_analysis",
    "weight_system",
    "weyl_orbit",
]
