"""Symbolic Leavitt path algebras over the Gaussian rationals."""

from .algebra import (
    LeavittAlgebra,
    LeavittElement,
    PathMonomial,
    RewriteLimitExceeded,
    add,
    involute,
    multiply,
    normal_form,
    scalar,
)
from .coefficients import I, ONE, ZERO, coeff, conj, format_coeff
from .maps import (
    DualityReport,
    GeneratorMap,
    HomReport,
    MapError,
    RelationFailure,
    duality_unitary,
    generator_map_from_json,
    identity_map,
    load_generator_map,
    twist_hom,
    verify_hom,
)
from .parser import ElementSyntaxError, parse_element
from .tensor import TensorAlgebra, TensorElement

__all__ = [
    "LeavittAlgebra", "LeavittElement", "PathMonomial", "RewriteLimitExceeded",
    "add", "involute", "multiply", "normal_form", "scalar",
    "I", "ONE", "ZERO", "coeff", "conj", "format_coeff",
    "DualityReport", "GeneratorMap", "HomReport", "MapError", "RelationFailure",
    "duality_unitary", "generator_map_from_json", "identity_map", "load_generator_map",
    "twist_hom", "verify_hom",
    "ElementSyntaxError", "parse_element",
    "TensorAlgebra", "TensorElement",
]
