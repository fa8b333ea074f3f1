"""Exact computer algebra for a family of infinite-dimensional graded
Lie algebras with generators L, M, Y indexed over a rank-one abelian
group: brackets, automorphism families, scale isomorphisms, and
highest-weight module analysis, all in rational arithmetic.
"""

from .errors import (
    DomainError,
    EngineError,
    ParseError,
    UnknownCommand,
    UsageError,
    ValidationError,
)
from .groups import (
    Character,
    Density,
    Direction,
    ElementClass,
    GroupPresentation,
    IndexOutsideT,
    char_eval,
    classify,
    iso_scale,
    make_group,
    member_S,
    order_cmp,
    order_density,
)
from .lie import (
    GeneratorSymbol,
    IndexDomainError,
    LieElement,
    bracket,
    generator,
    grade_decompose,
    ideal_membership,
    jacobi_residual,
    zero,
)
from .automorphisms import (
    Automorphism,
    IsomorphismMap,
    build_isomorphism,
    canonical_shape,
    cocycle,
    compose,
    diagonal,
    exp_ad,
    hom_residual,
    identity,
    invert,
    scale,
    validate_cocycle,
)
from .verma import (
    HighestWeight,
    PBWMonomial,
    ReductionWitness,
    SubmoduleSlice,
    Truncation,
    VermaVector,
    act_element,
    act_generator,
    act_word,
    canonical_submodule_generators,
    count_L_partitions,
    highest_weight,
    highest_weight_vector,
    l_string_scalar,
    length_of,
    make_monomial,
    monomial_depth,
    monomial_letters,
    monomial_vector,
    monomial_weight,
    raising_symbols,
    reduce_to_highest,
    singular_vectors,
    submodule_weight_dim,
    weight_basis,
)
from .expressions import (
    format_automorphism,
    format_element,
    format_vector,
    format_word,
    parse_automorphism,
    parse_element,
    parse_lie,
    parse_vector,
)
from .checks import SUITES, CheckReport

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "Character",
    "CheckReport",
    "Density",
    "Direction",
    "DomainError",
    "ElementClass",
    "EngineError",
    "GeneratorSymbol",
    "GroupPresentation",
    "HighestWeight",
    "IndexDomainError",
    "IndexOutsideT",
    "IsomorphismMap",
    "LieElement",
    "PBWMonomial",
    "ParseError",
    "ReductionWitness",
    "SUITES",
    "SubmoduleSlice",
    "Truncation",
    "UnknownCommand",
    "UsageError",
    "ValidationError",
    "VermaVector",
    "act_element",
    "act_generator",
    "act_word",
    "bracket",
    "build_isomorphism",
    "canonical_shape",
    "canonical_submodule_generators",
    "char_eval",
    "classify",
    "cocycle",
    "compose",
    "count_L_partitions",
    "diagonal",
    "exp_ad",
    "format_automorphism",
    "format_element",
    "format_vector",
    "format_word",
    "generator",
    "grade_decompose",
    "highest_weight",
    "highest_weight_vector",
    "hom_residual",
    "identity",
    "ideal_membership",
    "invert",
    "iso_scale",
    "jacobi_residual",
    "l_string_scalar",
    "length_of",
    "make_group",
    "make_monomial",
    "member_S",
    "monomial_depth",
    "monomial_letters",
    "monomial_vector",
    "monomial_weight",
    "order_cmp",
    "order_density",
    "parse_automorphism",
    "parse_element",
    "parse_lie",
    "parse_vector",
    "raising_symbols",
    "reduce_to_highest",
    "scale",
    "singular_vectors",
    "submodule_weight_dim",
    "validate_cocycle",
    "weight_basis",
    "zero",
]
