"""Tight correlation Bell inequalities for N observers, three binary settings.

The package enumerates the admissible sign functions that generate the tight
inequality family, certifies classical bounds and facet status with exact
integer arithmetic, quantifies maximal quantum violation by see-saw
optimization over qubit observables, and rereads the inequalities as
CH-type constraints and as the complete two-setting family.
"""

from .fourier import (
    FourierSpectrum,
    Monomial,
    NotSignValued,
    SignFunction,
    VariableAssignment,
    fourier_transform,
    inverse_transform,
    is_admissible,
    is_factorable,
    table_size,
)
from .symmetry import SymmetryElement, canonicalize, orbit_tables, symmetry_group
from .enumeration import (
    CanonicalClass,
    EnumerationReport,
    UnsupportedSize,
    classify,
    enumerate_admissible,
    read_checkpoint,
    write_checkpoint,
)
from .polytope import (
    BellInequality,
    BoundNotAttained,
    CorrelationTensor,
    DeterministicStrategy,
    LhvBounds,
    NotAdmissible,
    TightnessCertificate,
    Vertex,
    all_vertices,
    canonical_coefficient,
    certify_tightness,
    chsh_pattern,
    enumerate_strategies,
    fraction_free_rank,
    inequality_from_sign_function,
    lhv_max,
    lhv_max_by_strategies,
    strategy_to_correlations,
    strategy_to_vertex,
    vertex_matrix,
    vertex_tensor,
)
from .quantum import (
    NotNormalized,
    ObservableDirection,
    QuantumValueReport,
    algebraic_maximum,
    bell_operator,
    evaluate_state,
    seesaw_maximize,
)
from .lifting import (
    LiftedInequality,
    LiftedVertex,
    lift,
    lifted_vertices,
    two_setting_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "BellInequality",
    "BoundNotAttained",
    "CanonicalClass",
    "CorrelationTensor",
    "DeterministicStrategy",
    "EnumerationReport",
    "FourierSpectrum",
    "LhvBounds",
    "LiftedInequality",
    "LiftedVertex",
    "Monomial",
    "NotAdmissible",
    "NotNormalized",
    "NotSignValued",
    "ObservableDirection",
    "QuantumValueReport",
    "SignFunction",
    "SymmetryElement",
    "TightnessCertificate",
    "UnsupportedSize",
    "VariableAssignment",
    "Vertex",
    "algebraic_maximum",
    "all_vertices",
    "bell_operator",
    "canonical_coefficient",
    "canonicalize",
    "certify_tightness",
    "chsh_pattern",
    "classify",
    "enumerate_admissible",
    "enumerate_strategies",
    "evaluate_state",
    "fourier_transform",
    "fraction_free_rank",
    "inequality_from_sign_function",
    "inverse_transform",
    "is_admissible",
    "is_factorable",
    "lhv_max",
    "lhv_max_by_strategies",
    "lift",
    "lifted_vertices",
    "orbit_tables",
    "read_checkpoint",
    "seesaw_maximize",
    "strategy_to_correlations",
    "strategy_to_vertex",
    "symmetry_group",
    "table_size",
    "two_setting_reduction",
    "vertex_matrix",
    "vertex_tensor",
    "write_checkpoint",
]
