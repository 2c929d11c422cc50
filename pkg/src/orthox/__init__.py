"""Exact algebra for the semigroups generated by two mutually inverse elements."""

from .errors import (
    BadExponent,
    BadSymbol,
    EmptyWord,
    FamilyMismatch,
    NotCombinatorial,
    NotIdempotent,
    NotInScope,
    OrthoxError,
    WindowExceedsBounds,
    WrongFamily,
)
from .family import (
    Combinatorial,
    FamilySpec,
    GroupCase,
    Relation,
    describe,
    dual_of,
    group_case,
    relations_of,
)
from .normal_form import (
    Element,
    Finite,
    GroupElement,
    InfiniteUpTo,
    ReducedWord,
    canonical_inverse,
    equal,
    format_element,
    is_group_element,
    is_idempotent,
    multiply,
    order_of,
    power,
    reduce,
    window_elements,
)
from .words import format_word, mirror, parse_word, syllables

__version__ = "0.1.0"
