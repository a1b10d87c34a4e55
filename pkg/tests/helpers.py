"""Independent slow oracles used only by the tests.

These deliberately re-derive everything from first definitions, not from
the library's fast criteria, so that agreement between the two is evidence.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from permorders import (
    canonical_word,
    identity,
    left_descents,
    length,
    left_action,
    reduced_words,
)

FIXTURES = Path(__file__).parent / "fixtures"


def bruhat_leq_subword(v, w) -> bool:
    """Subword definition: v <= w iff a fixed reduced word of w has a
    subsequence multiplying to v with length(v) letters."""
    word = canonical_word(w)

    @lru_cache(maxsize=None)
    def can(i: int, u) -> bool:
        if u == identity(len(w)):
            return True
        need = length(u)
        if len(word) - i < need:
            return False
        # skip letter i, or consume it as the first letter of u
        if can(i + 1, u):
            return True
        d = word[i]
        return d in left_descents(u) and can(i + 1, left_action(d, u))

    return can(0, v)


def weak_leq_prefix(v, w) -> bool:
    """Prefix definition: v <= w iff some reduced word of w starts with a
    reduced word of v."""
    lv = length(v)
    target = None if lv == 0 else reduced_words(v)
    if lv == 0:
        return True
    return any(word[:lv] in target for word in reduced_words(w))
