"""Exception types shared across the package."""


class OrthoxError(Exception):
    """Base class for all domain errors raised by orthox."""


class EmptyWord(OrthoxError):
    """Raised when a word is empty after stripping whitespace."""


class BadSymbol(OrthoxError):
    """Raised when a word contains a character outside {a, b, ^, digits}."""


class BadExponent(OrthoxError):
    """Raised for malformed or zero caret exponents."""


class FamilyMismatch(OrthoxError):
    """Raised when two elements from different families are combined."""


class NotIdempotent(OrthoxError):
    """Raised when an operation requires an idempotent argument."""


class NotCombinatorial(OrthoxError):
    """Raised when eggbox coordinates are requested for a group-case element."""


class WrongFamily(OrthoxError):
    """Raised when an operation is defined only for a specific family."""


class WindowExceedsBounds(OrthoxError):
    """Raised when an eggbox window asks for cells beyond the family bounds."""


class NotInScope(OrthoxError):
    """Raised when a relation system cannot be placed in any supported family.

    Defensive only: every relation over {a, b} holds in the one-element
    family (both absorptions, order 1), so well-formed input never lands
    here.  The error survives as a guard for future extensions.
    """
