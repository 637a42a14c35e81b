"""Combinatorics of hereditary gentle algebras on marked surfaces.

The package models gentle presentations, their marked ribbon surfaces,
the curve dictionary for string modules, the embedding of curves into
two-term complexes of projectives, and a silting/tau-tilting pipeline
with independent linear-algebra oracles for every geometric claim.
"""

from .errors import (
    BoundExceededError,
    ClassificationViolation,
    GentleSiltError,
    InternalConsistencyError,
    NotFiniteDimensionalError,
    NotGentleError,
    NotHereditaryError,
    NotHereditaryGentleTypeError,
    StructuralError,
    UnsupportedTopologyError,
)
from .quivers import (
    Arrow,
    GentlePresentation,
    HereditaryType,
    Quiver,
    canonical_form,
    classify_hereditary_type,
    connected_components,
    delete_nonzero_graded_arrows,
    is_hereditary_gentle,
    presentation,
    presentations_isomorphic,
    validate_gentle,
)

__all__ = [
    "Arrow",
    "BoundExceededError",
    "ClassificationViolation",
    "GentlePresentation",
    "GentleSiltError",
    "HereditaryType",
    "InternalConsistencyError",
    "NotFiniteDimensionalError",
    "NotGentleError",
    "NotHereditaryError",
    "NotHereditaryGentleTypeError",
    "Quiver",
    "StructuralError",
    "UnsupportedTopologyError",
    "canonical_form",
    "classify_hereditary_type",
    "connected_components",
    "delete_nonzero_graded_arrows",
    "is_hereditary_gentle",
    "presentation",
    "presentations_isomorphic",
    "validate_gentle",
]
