"""Brute-force validator: bounded bidirectional closure over raw words.

The closure never consults the reduction engine.  It enumerates every
word up to a length cap, applies each defining relation in both
directions at every position (staying within the cap) and joins the
results with union-find.  Two words in one class are provably equal in
the presented semigroup; two words in different classes are merely "not
known equal" at this cap.

The cap warning is a saturation heuristic: the closure is recomputed
with the cap raised by two (the largest single-step growth) and the flag
is set when the restricted partition still changed, meaning the stated
cap had not converged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import OrthoxError
from .family import FamilySpec, Relation, relations_of
from .normal_form import reduce

MergeStep = tuple[str, str, str, int, str]  # word, lhs, rhs, position, result


@dataclass
class ClosureTable:
    max_len: int
    cap: int
    classes: dict[str, str]           # word -> length-lex minimal representative
    merged_via: list[MergeStep] = field(repr=False, default_factory=list)
    cap_warning: bool = False

    def groups(self) -> list[tuple[str, ...]]:
        by_rep: dict[str, list[str]] = {}
        for word, rep in self.classes.items():
            by_rep.setdefault(rep, []).append(word)
        out = [tuple(sorted(ws, key=_lenlex)) for ws in by_rep.values()]
        out.sort(key=lambda g: _lenlex(g[0]))
        return out

    def same_class(self, w1: str, w2: str) -> bool:
        return self.classes[w1] == self.classes[w2]


@dataclass
class VerifyReport:
    agreements: int
    reducer_splits_closure: list[tuple[str, str]]
    closure_splits_reducer: list[tuple[str, str]]
    cap_warning: bool

    def to_json(self) -> dict:
        mismatches = (
            [{"kind": "reducer_splits_closure", "left": a, "right": b}
             for a, b in self.reducer_splits_closure]
            + [{"kind": "closure_splits_reducer", "left": a, "right": b}
               for a, b in self.closure_splits_reducer])
        return {"agreements": self.agreements,
                "mismatches": mismatches,
                "cap_warning": self.cap_warning}


def closure_classes(family: FamilySpec, max_len: int, cap: int | None = None,
                    check_cap: bool = True) -> ClosureTable:
    """Closure classes of all words of length <= max_len for the family."""
    return closure_from_relations(relations_of(family), max_len, cap, check_cap)


def closure_from_relations(rels: list[Relation], max_len: int,
                           cap: int | None = None,
                           check_cap: bool = True) -> ClosureTable:
    """Same as closure_classes but over an explicit relation list."""
    if cap is None:
        cap = max_len + 4
    if not 1 <= max_len <= cap:
        raise OrthoxError(f"need 1 <= max_len <= cap, got {max_len}, {cap}")
    rules = [(r.lhs, r.rhs) for r in rels]
    parent, merges = _saturate(rules, cap)
    classes = _restrict(parent, max_len)
    warning = False
    if check_cap:
        wider, _ = _saturate(rules, cap + 2)
        warning = _restrict(wider, max_len) != classes
    return ClosureTable(max_len, cap, classes, merges, warning)


def verify_reducer(family: FamilySpec, max_len: int,
                   cap: int | None = None) -> VerifyReport:
    """Compare closure equality with reduction-engine equality pairwise."""
    table = closure_classes(family, max_len, cap)
    vocab = sorted(table.classes, key=_lenlex)
    canon = {w: reduce(w, family) for w in vocab}
    agreements = 0
    reducer_splits: list[tuple[str, str]] = []
    closure_splits: list[tuple[str, str]] = []
    for w1, w2 in itertools.combinations(vocab, 2):
        closure_eq = table.classes[w1] == table.classes[w2]
        reducer_eq = canon[w1] == canon[w2]
        if closure_eq == reducer_eq:
            agreements += 1
        elif closure_eq:
            reducer_splits.append((w1, w2))
        else:
            closure_splits.append((w1, w2))
    return VerifyReport(agreements, reducer_splits, closure_splits,
                        table.cap_warning)


def all_words(max_len: int) -> list[str]:
    out = []
    for length in range(1, max_len + 1):
        out.extend("".join(t) for t in itertools.product("ab", repeat=length))
    return out


def _saturate(rules: list[tuple[str, str]], cap: int):
    parent: dict[str, str] = {}

    def find(w: str) -> str:
        root = w
        while parent[root] != root:
            root = parent[root]
        while parent[w] != root:
            parent[w], w = root, parent[w]
        return root

    words = all_words(cap)
    for w in words:
        parent[w] = w
    merges: list[MergeStep] = []
    oriented = []
    for lhs, rhs in rules:
        oriented.append((lhs, rhs))
        if lhs != rhs:
            oriented.append((rhs, lhs))
    for w in words:
        for src, dst in oriented:
            if len(w) - len(src) + len(dst) > cap:
                continue
            pos = w.find(src)
            while pos != -1:
                result = w[:pos] + dst + w[pos + len(src):]
                ra, rb = find(w), find(result)
                if ra != rb:
                    parent[rb] = ra
                    merges.append((w, src, dst, pos, result))
                pos = w.find(src, pos + 1)
    roots = {w: find(w) for w in words}
    return roots, merges


def _restrict(roots: dict[str, str], max_len: int) -> dict[str, str]:
    reps: dict[str, str] = {}
    members: dict[str, list[str]] = {}
    for w, root in roots.items():
        if len(w) <= max_len:
            members.setdefault(root, []).append(w)
    for root, ws in members.items():
        reps[root] = min(ws, key=_lenlex)
    return {w: reps[root]
            for w, root in roots.items() if len(w) <= max_len}


def _lenlex(w: str):
    return (len(w), w)
