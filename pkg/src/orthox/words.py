"""Words over the two-letter alphabet {a, b}.

A word is a nonempty string of the letters 'a' and 'b'.  The parser also
accepts caret exponents ("a^3b" for "aaab"); the formatter reintroduces
them for runs of length two or more.  There is no empty word: the
semigroups served by this package carry no adjoined identity.
"""

from __future__ import annotations

import re

from .errors import BadExponent, BadSymbol, EmptyWord

ALPHABET = "ab"

_MIRROR = str.maketrans("ab", "ba")
_TOKEN = re.compile(r"([ab])(?:\^(\d+))?")
_ALLOWED = set("ab^0123456789")


def parse_word(text: str) -> str:
    """Expand caret notation into a flat letter string ("a^3b" -> "aaab")."""
    s = text.strip()
    if not s:
        raise EmptyWord("word is empty")
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if m is None:
            ch = s[pos]
            if ch not in _ALLOWED:
                raise BadSymbol(
                    f"symbol {ch!r} at position {pos} is not one of a, b, ^, digits"
                )
            raise BadExponent(f"malformed exponent at position {pos} in {text!r}")
        exp = m.group(2)
        if exp is None:
            count = 1
        else:
            count = int(exp)
            if count < 1:
                raise BadExponent(f"exponent must be >= 1, got {count}")
        out.append(m.group(1) * count)
        pos = m.end()
    return "".join(out)


def format_word(word: str) -> str:
    """Compress letter runs back into caret notation ("aaab" -> "a^3b")."""
    if not word:
        raise EmptyWord("word is empty")
    parts = []
    for letter, _, run in _runs(word):
        parts.append(letter if run == 1 else f"{letter}^{run}")
    return "".join(parts)


def syllables(word: str) -> list[tuple[int, int]]:
    """Split a word into maximal runs a^k b^l, returned as (k, l) pairs.

    The first syllable may have k = 0 and the last may have l = 0; every
    interior exponent is >= 1.  Concatenating the syllables re-spells the
    word exactly.
    """
    if not word:
        raise EmptyWord("word is empty")
    out: list[tuple[int, int]] = []
    runs = list(_runs(word))
    idx = 0
    while idx < len(runs):
        letter, _, run = runs[idx]
        if letter == "a":
            if idx + 1 < len(runs):
                out.append((run, runs[idx + 1][2]))
                idx += 2
            else:
                out.append((run, 0))
                idx += 1
        else:
            out.append((0, run))
            idx += 1
    return out


def spell(syls: list[tuple[int, int]]) -> str:
    """Inverse of :func:`syllables`."""
    return "".join("a" * k + "b" * l for k, l in syls)


def mirror(word: str) -> str:
    """Reverse the word and swap a <-> b.

    An involution that reverses concatenation; it sends each element to
    one of its inverses in every family served here.
    """
    if not word:
        raise EmptyWord("word is empty")
    return word[::-1].translate(_MIRROR)


def _runs(word: str):
    start = 0
    for pos in range(1, len(word) + 1):
        if pos == len(word) or word[pos] != word[start]:
            yield word[start], start, pos - start
            start = pos
