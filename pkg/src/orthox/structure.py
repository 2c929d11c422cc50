"""Green's relations, eggbox coordinates, the idempotent band and the
six-piece partition of the fully free combinatorial family.

Eggbox keys use None for the central row (the R-class of a) and the
central column (the L-class of b, which contains ab).  Edge rows are the
head pairs (i, k) of canonical forms, edge columns the tail pairs (l, j).
Window enumerations cap the exponents k and l, so a window is a
rectangular sub-grid of the eggbox diagram.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cmp_to_key
from typing import NamedTuple, Optional

from .errors import (
    FamilyMismatch,
    NotCombinatorial,
    NotIdempotent,
    OrthoxError,
    WrongFamily,
)
from .family import Combinatorial, FamilySpec, GroupCase
from .normal_form import (
    Element,
    GroupElement,
    ReducedWord,
    is_idempotent,
    multiply,
    sort_key,
    window_elements,
)

RowKey = Optional[tuple[int, int]]   # None = central row, else head (i, k)
ColKey = Optional[tuple[int, int]]   # None = central column, else tail (l, j)

GREEN_RELATIONS = ("R", "L", "H", "D")


class EggboxCoord(NamedTuple):
    row: RowKey
    col: ColKey


class Piece(enum.Enum):
    """The six-piece partition of Combinatorial(inf, inf)."""

    CYCLIC_A = "cyclic_a"
    CYCLIC_B = "cyclic_b"
    CENTER = "bicyclic_center"
    LOWER_RIGHT = "bicyclic_lower_right"
    UPPER_RIGHT = "bicyclic_upper_right"
    LOWER_LEFT = "bicyclic_lower_left"


@dataclass
class BandDiagram:
    nodes: list[Element]
    order_edges: list[tuple[Element, Element]]  # (lower, upper) covering pairs
    r_edges: list[tuple[Element, Element]]
    l_edges: list[tuple[Element, Element]]


def eggbox_coord(x: Element) -> EggboxCoord:
    """Grid coordinate of a combinatorial element."""
    form = x.form
    if not isinstance(form, ReducedWord):
        raise NotCombinatorial("eggbox coordinates exist for combinatorial elements only")
    row: RowKey = None if (form.i, form.k) == (0, 0) else (form.i, form.k)
    col: ColKey = None if (form.l, form.j) in ((0, 0), (1, 1)) else (form.l, form.j)
    return EggboxCoord(row, col)


def element_at(family: Combinatorial, row: RowKey, col: ColKey) -> Element:
    """The unique element sitting at an eggbox coordinate."""
    i, k = row if row is not None else (0, 0)
    l, j = col if col is not None else ((0, 0) if row is not None else (1, 1))
    if row is None and col is None:
        return Element(family, ReducedWord(0, 0, 1, 1))
    if col is None:
        return Element(family, ReducedWord(i, k, 0, 0))
    return Element(family, ReducedWord(i, k, l, j))


def related(x: Element, y: Element, rel: str) -> bool:
    """Green's relations R, L, H, D.  D is total inside every family."""
    if rel not in GREEN_RELATIONS:
        raise OrthoxError(f"relation must be one of {GREEN_RELATIONS}, got {rel!r}")
    if x.family != y.family:
        raise FamilyMismatch("Green's relations compare elements of one family")
    if rel == "D":
        return True
    if isinstance(x.form, GroupElement):
        same_row = x.form.row == y.form.row
        same_col = x.form.col == y.form.col
    else:
        cx, cy = eggbox_coord(x), eggbox_coord(y)
        same_row = cx.row == cy.row
        same_col = cx.col == cy.col
    if rel == "R":
        return same_row
    if rel == "L":
        return same_col
    return same_row and same_col


def idempotents_window(family: FamilySpec, bound: int) -> list[Element]:
    """Idempotents with exponents <= bound (group cases: all of them)."""
    if isinstance(family, GroupCase):
        rows = ("a", "b") if family.tracks_row else (None,)
        cols = ("a", "b") if family.tracks_col else (None,)
        return [Element(family, GroupElement(0, r, c))
                for r in rows for c in cols]
    return [x for x in window_elements(family, bound) if is_idempotent(x)]


def natural_leq(e: Element, f: Element) -> bool:
    """Natural partial order on idempotents: e <= f iff ef = fe = e."""
    for x in (e, f):
        if not is_idempotent(x):
            raise NotIdempotent(f"natural order needs idempotents, got {x.form}")
    return multiply(e, f) == e and multiply(f, e) == e


def band_diagram(family: FamilySpec, bound: int) -> BandDiagram:
    """Window band: nodes, covering pairs and same-row/column pairs."""
    nodes = sorted(idempotents_window(family, bound), key=sort_key)
    below: dict[Element, set[Element]] = {
        f: {e for e in nodes if e != f and natural_leq(e, f)} for f in nodes}
    order_edges = []
    for f in nodes:
        for e in below[f]:
            if not any(e in below[g] for g in below[f]):
                order_edges.append((e, f))
    r_edges = [(x, y) for x, y in itertools.combinations(nodes, 2)
               if related(x, y, "R")]
    l_edges = [(x, y) for x, y in itertools.combinations(nodes, 2)
               if related(x, y, "L")]
    key = lambda pair: (sort_key(pair[0]), sort_key(pair[1]))
    return BandDiagram(nodes, sorted(order_edges, key=key),
                       sorted(r_edges, key=key), sorted(l_edges, key=key))


def local_chain(e: Element, family: FamilySpec, bound: int) -> list[Element]:
    """Window idempotents below e, sorted from e downward.

    Raises if the collected set is not totally ordered; in every family
    served here it is a chain, which is the uniformity of the band seen
    at window scale.
    """
    if not is_idempotent(e):
        raise NotIdempotent("local_chain starts from an idempotent")
    members = [x for x in idempotents_window(family, bound) if natural_leq(x, e)]
    if e not in members:
        members.append(e)
    for x, y in itertools.combinations(members, 2):
        if not (natural_leq(x, y) or natural_leq(y, x)):
            raise OrthoxError(
                f"band below {e.form} is not a chain: {x.form} vs {y.form}")

    def cmp(u: Element, v: Element) -> int:
        if u == v:
            return 0
        return -1 if natural_leq(v, u) else 1

    members.sort(key=cmp_to_key(cmp))
    return members


def piece_of(x: Element) -> Piece:
    """Locate x in the six-piece partition of Combinatorial(inf, inf)."""
    if x.family != Combinatorial(None, None):
        raise WrongFamily("the six-piece partition lives in Combinatorial(inf, inf)")
    form = x.form
    i, k, l, j = form.i, form.k, form.l, form.j
    if (i, k) == (0, 0):                     # tail-only shapes
        return Piece.CENTER if j == 1 else Piece.CYCLIC_A
    if (l, j) == (0, 0):                     # head-only shapes
        return Piece.CENTER if i == 1 else Piece.CYCLIC_B
    if i == 1 and j == 1:
        return Piece.CENTER
    if i == 1:
        return Piece.UPPER_RIGHT
    if j == 1:
        return Piece.LOWER_LEFT
    return Piece.LOWER_RIGHT
