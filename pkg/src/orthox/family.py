"""Family parameter objects and their defining relations.

Two kinds of semigroup are served.  ``Combinatorial(n, m)`` is presented by

    aba = a,  bab = b,  a^2 b^2 = ab,
    a^(n+1) b = a^n   (only when n is finite),
    a b^(m+1) = b^m   (only when m is finite),

with ``Combinatorial(1, 1)`` being the bicyclic semigroup.  ``GroupCase``
covers the four families whose generators lie in subgroups; there the base
presentation gains ``b^2 a^2 = ba`` and optionally the absorptions
``a^2 b = a`` / ``a b^2 = b`` and a finite generator order.

Bounds and orders use ``None`` for "infinite".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OrthoxError
from .words import mirror, parse_word


@dataclass(frozen=True)
class Relation:
    """An unoriented defining relation lhs = rhs between two words."""

    lhs: str
    rhs: str

    def mirrored(self) -> "Relation":
        return Relation(mirror(self.lhs), mirror(self.rhs))

    def as_pair(self) -> frozenset[str]:
        return frozenset((self.lhs, self.rhs))


@dataclass(frozen=True)
class Combinatorial:
    """Family with nongroup generators; bounds may be None (infinite)."""

    right_bound: int | None  # n: caps a^l b at l = n
    left_bound: int | None   # m: caps a b^k at k = m

    def __post_init__(self):
        for value in (self.right_bound, self.left_bound):
            if value is not None and value < 1:
                raise OrthoxError(f"bound must be >= 1 or None, got {value}")


@dataclass(frozen=True)
class GroupCase:
    """Family with group generators.

    absorb_left means a(ab) = a, absorb_right means (ab)b = b.  The flag
    pair selects the band shape: (False, False) a 2x2 rectangular band,
    (False, True) a right zero pair, (True, False) a left zero pair,
    (True, True) a single idempotent.
    """

    absorb_left: bool
    absorb_right: bool
    order: int | None

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise OrthoxError(f"order must be >= 1 or None, got {self.order}")

    @property
    def case_number(self) -> int:
        return {(False, False): 1, (False, True): 2,
                (True, False): 3, (True, True): 4}[
                    (self.absorb_left, self.absorb_right)]

    @property
    def tracks_row(self) -> bool:
        # ab^2 = b merges the a-row into the b-row, so the first letter
        # stays meaningful only without the right absorption.
        return not self.absorb_right

    @property
    def tracks_col(self) -> bool:
        return not self.absorb_left


FamilySpec = Combinatorial | GroupCase


def relations_of(family: FamilySpec) -> list[Relation]:
    """The defining relations of the family, mutual-inverse axioms first."""
    rels = [Relation("aba", "a"), Relation("bab", "b"), Relation("aabb", "ab")]
    if isinstance(family, Combinatorial):
        n, m = family.right_bound, family.left_bound
        if n is not None:
            rels.append(Relation("a" * (n + 1) + "b", "a" * n))
        if m is not None:
            rels.append(Relation("a" + "b" * (m + 1), "b" * m))
        return rels
    rels.append(Relation("bbaa", "ba"))
    if family.absorb_left:
        rels.append(Relation("aab", "a"))
    if family.absorb_right:
        rels.append(Relation("abb", "b"))
    if family.order is not None:
        rels.append(Relation("a" * (family.order + 1), "a"))
    return rels


def dual_of(family: FamilySpec) -> FamilySpec:
    """Swap the roles of a and b: an involution on family specs."""
    if isinstance(family, Combinatorial):
        return Combinatorial(family.left_bound, family.right_bound)
    return GroupCase(family.absorb_right, family.absorb_left, family.order)


def describe(family: FamilySpec) -> str:
    if isinstance(family, Combinatorial):
        return "Combinatorial({},{})".format(
            _bound_str(family.right_bound), _bound_str(family.left_bound))
    return "GroupCase({}, order={})".format(
        family.case_number, _bound_str(family.order))


def family_to_json(family: FamilySpec) -> dict:
    if isinstance(family, Combinatorial):
        return {"kind": "combinatorial",
                "right_bound": _bound_json(family.right_bound),
                "left_bound": _bound_json(family.left_bound)}
    return {"kind": "group",
            "case": family.case_number,
            "absorb_left": family.absorb_left,
            "absorb_right": family.absorb_right,
            "order": _bound_json(family.order)}


def parse_bound(text: str) -> int | None:
    """Parse a CLI bound: a positive integer or the literal "inf"."""
    if text.strip().lower() == "inf":
        return None
    try:
        value = int(text)
    except ValueError:
        raise OrthoxError(f"bound must be a positive integer or 'inf', got {text!r}")
    if value < 1:
        raise OrthoxError(f"bound must be >= 1, got {value}")
    return value


def parse_combinatorial(text: str) -> Combinatorial:
    """Parse the CLI family selector "n,m" (e.g. "3,inf")."""
    parts = text.split(",")
    if len(parts) != 2:
        raise OrthoxError(f"family selector must look like 'n,m', got {text!r}")
    return Combinatorial(parse_bound(parts[0]), parse_bound(parts[1]))


def group_case(case: int, order: int | None) -> GroupCase:
    """Build a GroupCase from its 1..4 case number."""
    flags = {1: (False, False), 2: (False, True),
             3: (True, False), 4: (True, True)}
    if case not in flags:
        raise OrthoxError(f"group case must be 1..4, got {case}")
    return GroupCase(*flags[case], order)


def letter_balance(word: str) -> int:
    """#a minus #b for a flat or caret-form word."""
    flat = parse_word(word)
    return flat.count("a") - flat.count("b")


def _bound_str(value: int | None) -> str:
    return "inf" if value is None else str(value)


def _bound_json(value: int | None):
    return "inf" if value is None else value


def order_gcd(deltas: list[int]) -> int | None:
    """Least order implied by a set of balance differences (None if free)."""
    nonzero = [abs(d) for d in deltas if d]
    return math.gcd(*nonzero) if nonzero else None
