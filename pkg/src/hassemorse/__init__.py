"""Discrete gradient vector fields from vertex values, via the decorated Hasse diagram."""

from .complex_core import (
    ComplexError,
    DimensionMismatch,
    DuplicateValue,
    Simplex,
    SimplicialComplex,
    UnknownVertex,
    build_complex,
    lex_compare,
    link,
    lower_link,
)
from .extract import Counters, Gvf, extract_right_child
from .hasse import DecoratedHasse, HasseNode, Label, build_hasse, decorate, is_left_right_parent
from .morse import (
    DiscreteMorseFunction,
    ValidationReport,
    betti_z2,
    critical_counts,
    induced_gvf,
    is_discrete_morse,
    realize_morse_function,
    validate_gvf,
)
from .reference import (
    GradientPath,
    cancel_kid,
    count_lower_link_calls,
    extract,
    extract_cancel,
    extract_raw,
    gradient_paths,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexError",
    "Counters",
    "DecoratedHasse",
    "DimensionMismatch",
    "DiscreteMorseFunction",
    "DuplicateValue",
    "GradientPath",
    "Gvf",
    "HasseNode",
    "Label",
    "Simplex",
    "SimplicialComplex",
    "UnknownVertex",
    "ValidationReport",
    "betti_z2",
    "build_complex",
    "build_hasse",
    "cancel_kid",
    "count_lower_link_calls",
    "critical_counts",
    "decorate",
    "extract",
    "extract_cancel",
    "extract_raw",
    "extract_right_child",
    "gradient_paths",
    "induced_gvf",
    "is_discrete_morse",
    "is_left_right_parent",
    "lex_compare",
    "link",
    "lower_link",
    "realize_morse_function",
    "validate_gvf",
]
