"""Canonical forms, multiplication, inverses and related element queries.

Combinatorial elements are stored as the quadruple (i, k, l, j) spelling
a^i b^k a^l b^j with i, j in {0, 1}.  Exactly one shape holds:

    head only   (i, k, 0, 0) with k > i           -- a^i b^k
    tail only   (0, 0, l, j) with l >= 1, l >= j  -- a^l b^j (ab included)
    both        (i, k, l, j) with k > i, l > j

The product of two elements is computed by colliding the tail of the left
factor with the head of the right factor into a single run a^x b^y, which
re-abridges to a head or a tail and is then absorbed into the surviving
outer parts.  Family bounds fire afterwards: a head (1, k) with k > m
drops to (0, k-1), a tail (l, 1) with l > n drops to (l-1, 0).

Group-case elements carry the letter balance g = #a - #b (a residue when
the generator order is finite) plus the first and last letters where the
family keeps them meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FamilyMismatch, OrthoxError
from .family import Combinatorial, FamilySpec, GroupCase
from .words import format_word, mirror, parse_word, syllables

Part = tuple[int, int]


@dataclass(frozen=True)
class ReducedWord:
    """Canonical quadruple (i, k, l, j) for a^i b^k a^l b^j."""

    i: int
    k: int
    l: int
    j: int

    def __post_init__(self):
        head = self.k > 0
        tail = self.l > 0
        ok = False
        if head and not tail:
            ok = self.k > self.i and self.j == 0
        elif tail and not head:
            ok = self.i == 0 and self.l >= self.j and self.j in (0, 1)
        elif head and tail:
            ok = self.k > self.i and self.l > self.j
        if not ok or self.i not in (0, 1) or self.j not in (0, 1):
            raise OrthoxError(f"invalid reduced quadruple {(self.i, self.k, self.l, self.j)}")

    @property
    def head(self) -> Part | None:
        return (self.i, self.k) if self.k else None

    @property
    def tail(self) -> Part | None:
        return (self.l, self.j) if self.l else None

    def spelled(self) -> str:
        return "a" * self.i + "b" * self.k + "a" * self.l + "b" * self.j


@dataclass(frozen=True)
class GroupElement:
    """Coordinates (g, row, col); row/col are 'a'/'b' or None when untracked."""

    g: int
    row: str | None
    col: str | None


@dataclass(frozen=True)
class Element:
    family: FamilySpec
    form: ReducedWord | GroupElement


def reduce(word: str, family: FamilySpec) -> Element:
    """Canonical form of a word (caret notation accepted) in the family."""
    flat = parse_word(word)
    if isinstance(family, GroupCase):
        g = flat.count("a") - flat.count("b")
        if family.order is not None:
            g %= family.order
        return Element(family, GroupElement(
            g,
            flat[0] if family.tracks_row else None,
            flat[-1] if family.tracks_col else None))
    acc: tuple[Part | None, Part | None] | None = None
    for k, l in syllables(flat):
        syl = _bounded(family, *_abridge(k, l))
        acc = syl if acc is None else _bounded(family, *_combine(*acc, *syl))
    assert acc is not None
    return _element(family, *acc)


def multiply(x: Element, y: Element) -> Element:
    if x.family != y.family:
        raise FamilyMismatch(f"cannot multiply across families {x.family} and {y.family}")
    if isinstance(x.form, GroupElement):
        g = x.form.g + y.form.g
        order = x.family.order
        if order is not None:
            g %= order
        return Element(x.family, GroupElement(g, x.form.row, y.form.col))
    parts = _combine(x.form.head, x.form.tail, y.form.head, y.form.tail)
    return _element(x.family, *_bounded(x.family, *parts))


def equal(x: Element, y: Element) -> bool:
    if x.family != y.family:
        raise FamilyMismatch(f"cannot compare across families {x.family} and {y.family}")
    return x.form == y.form


def canonical_inverse(x: Element) -> Element:
    """The inverse obtained by mirroring the canonical word of x."""
    return reduce(mirror(parse_word(format_element(x))), x.family)


def power(x: Element, p: int) -> Element:
    if p < 1:
        raise OrthoxError(f"power expects a positive exponent, got {p}")
    acc = x
    for _ in range(p - 1):
        acc = multiply(acc, x)
    return acc


def is_idempotent(x: Element) -> bool:
    return multiply(x, x) == x


def is_group_element(x: Element) -> bool:
    """Group-case elements always; combinatorial ones only when idempotent."""
    if isinstance(x.form, GroupElement):
        return True
    return is_idempotent(x)


@dataclass(frozen=True)
class Finite:
    value: int


@dataclass(frozen=True)
class InfiniteUpTo:
    probe_limit: int


def order_of(x: Element, probe_limit: int) -> Finite | InfiniteUpTo:
    """Size of the cyclic subsemigroup of x, probed up to probe_limit powers."""
    if probe_limit < 1:
        raise OrthoxError(f"probe_limit must be >= 1, got {probe_limit}")
    seen: set[Element] = set()
    cur = x
    for step in range(1, probe_limit + 1):
        if cur in seen:
            return Finite(step - 1)
        seen.add(cur)
        cur = multiply(cur, x)
    if cur in seen:
        return Finite(probe_limit)
    return InfiniteUpTo(probe_limit)


def format_element(x: Element) -> str:
    """Canonical word of x in caret notation; round-trips through reduce."""
    if isinstance(x.form, ReducedWord):
        return format_word(x.form.spelled())
    return format_word(_group_word(x.family, x.form))


def element_to_json(x: Element) -> dict:
    if isinstance(x.form, ReducedWord):
        f = x.form
        return {"i": f.i, "k": f.k, "l": f.l, "j": f.j}
    out: dict = {"g": x.form.g}
    if x.form.row is not None:
        out["row"] = x.form.row
    if x.form.col is not None:
        out["col"] = x.form.col
    out["order"] = "inf" if x.family.order is None else x.family.order
    return out


def sort_key(x: Element):
    """Stable ordering key for deterministic set and sequence output."""
    if isinstance(x.form, ReducedWord):
        f = x.form
        return (f.i, f.k, f.l, f.j)
    return (x.form.g, x.form.row or "", x.form.col or "")


def window_elements(family: FamilySpec, bound: int) -> list[Element]:
    """All canonical elements whose exponents (or balance) fit the bound."""
    if bound < 1:
        raise OrthoxError(f"bound must be >= 1, got {bound}")
    out: list[Element] = []
    if isinstance(family, GroupCase):
        if family.order is not None:
            gs = range(family.order)
        else:
            gs = range(-bound, bound + 1)
        rows = ("a", "b") if family.tracks_row else (None,)
        cols = ("a", "b") if family.tracks_col else (None,)
        for g in gs:
            for row in rows:
                for col in cols:
                    out.append(Element(family, GroupElement(g, row, col)))
        return out
    n, m = family.right_bound, family.left_bound
    k_top = {0: bound, 1: min(bound, m) if m is not None else bound}
    l_top = {0: bound, 1: min(bound, n) if n is not None else bound}
    for i in (0, 1):
        for k in range(i + 1, k_top[i] + 1):
            out.append(Element(family, ReducedWord(i, k, 0, 0)))
    for j in (0, 1):
        for l in range(max(1, j), l_top[j] + 1):
            out.append(Element(family, ReducedWord(0, 0, l, j)))
    for i in (0, 1):
        for k in range(i + 1, k_top[i] + 1):
            for j in (0, 1):
                for l in range(j + 1, l_top[j] + 1):
                    out.append(Element(family, ReducedWord(i, k, l, j)))
    out.sort(key=sort_key)
    return out


# -- the combine kernel ------------------------------------------------

def _abridge(k: int, l: int) -> tuple[Part | None, Part | None]:
    """Collapse one run a^k b^l into a head or tail part."""
    if k == 0:
        return ((0, l), None)
    if l == 0:
        return (None, (k, 0))
    if k == l:
        return (None, (1, 1))
    if l > k:
        return ((1, l - k + 1), None)
    return (None, (k - l + 1, 1))


def _combine(p1: Part | None, q1: Part | None,
             p2: Part | None, q2: Part | None) -> tuple[Part | None, Part | None]:
    """Multiply (p1 q1) by (p2 q2), colliding the inner tail and head."""
    if q1 is not None and p2 is not None:
        l, j = q1
        i, k = p2
        if i == j:
            zp, zq = _abridge(l, k)
        else:
            zp, zq = _abridge(l + 1 - j, k + 1 - i)
        if zp is not None:
            return (zp if p1 is None else _mul_heads(p1, zp), q2)
        return (p1, zq if q2 is None else _mul_tails(zq, q2))
    if p2 is not None:
        return (p2 if p1 is None else _mul_heads(p1, p2), q2)
    if q1 is not None:
        return (p1, q1 if q2 is None else _mul_tails(q1, q2))
    return (p1, q2)


def _mul_heads(x: Part, y: Part) -> Part:
    # a^i b^k . a^i' b^k'  =  a^i b^(k + k' - i')
    return (x[0], x[1] + y[1] - y[0])


def _mul_tails(x: Part, y: Part) -> Part:
    # a^l b^j . a^l' b^j'  =  a^(l + l' - j) b^j'
    return (x[0] + y[0] - x[1], y[1])


def _bounded(family: Combinatorial, p: Part | None,
             q: Part | None) -> tuple[Part | None, Part | None]:
    if p is not None and q == (1, 1):
        q = None  # trailing ab is absorbed by any head
    m = family.left_bound
    if p is not None and m is not None and p[0] == 1 and p[1] > m:
        p = (0, p[1] - 1)
    n = family.right_bound
    if q is not None and n is not None and q[1] == 1 and q[0] > n:
        q = (q[0] - 1, 0)
    return (p, q)


def _element(family: Combinatorial, p: Part | None, q: Part | None) -> Element:
    i, k = p if p is not None else (0, 0)
    l, j = q if q is not None else (0, 0)
    return Element(family, ReducedWord(i, k, l, j))


# -- group-case canonical words ---------------------------------------

def _group_word(family: GroupCase, form: GroupElement) -> str:
    g = form.g
    order = family.order
    if order is not None:
        key = (form.row, form.col)
        if key == ("a", "a"):
            return "abba" if g == 0 else "a" * g
        if key == ("a", "b"):
            return "ab" if g == 0 else "a" * (g + 1) + "b"
        if key == ("b", "a"):
            return "ba" if g == 0 else "b" * (order + 1 - g) + "a"
        if key == ("b", "b"):
            return "baab" if g == 0 else "b" * (order - g)
        if key == (None, "a"):
            return "ba" if g == 0 else "a" * g
        if key == (None, "b"):
            return "ab" if g == 0 else "b" * (order - g)
        if key == ("a", None):
            return "ab" if g == 0 else "a" * g
        if key == ("b", None):
            return "ba" if g == 0 else "b" * (order - g)
        return "ab" if g == 0 else "a" * g
    t = -g
    key = (form.row, form.col)
    if key == ("a", "a"):
        return "a" * g if g >= 1 else "a" + "b" * (t + 2) + "a"
    if key == ("a", "b"):
        if g >= 1:
            return "a" * (g + 1) + "b"
        return "ab" if g == 0 else "a" + "b" * (t + 1)
    if key == ("b", "a"):
        if g >= 1:
            return "b" + "a" * (g + 1)
        return "ba" if g == 0 else "b" * (t + 1) + "a"
    if key == ("b", "b"):
        if g >= 1:
            return "b" + "a" * (g + 2) + "b"
        return "baab" if g == 0 else "b" * t
    if key == (None, "a"):
        return "a" * g if g >= 1 else ("ba" if g == 0 else "b" * (t + 1) + "a")
    if key == (None, "b"):
        return "a" * (g + 1) + "b" if g >= 1 else ("ab" if g == 0 else "b" * t)
    if key == ("a", None):
        return "a" * g if g >= 1 else ("ab" if g == 0 else "a" + "b" * (t + 1))
    if key == ("b", None):
        return "b" + "a" * (g + 1) if g >= 1 else ("ba" if g == 0 else "b" * t)
    return "a" * g if g >= 1 else ("ab" if g == 0 else "b" * t)
