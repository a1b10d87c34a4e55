"""Signed pattern containment and the classifying pattern predicates.

A pattern of size k is a sequence of nonzero ints whose absolute values are
exactly 1..k.  A sequence ``w`` (also nonzero ints, distinct absolute
values) contains the pattern when some index subsequence matches it in both
relative order of absolute values and sign, entry by entry.  Plain
(unsigned) permutations are the all-positive case.

The three predicates at the bottom cut out exactly the permutation classes
whose principal order ideals are well behaved; their pattern lists are the
whole point, so they are spelled out literally.
"""

from __future__ import annotations

from typing import Sequence

from .perms import Perm

_P321 = (3, 2, 1)
_P3412 = (3, 4, 1, 2)
_P231 = (2, 3, 1)
_P312 = (3, 1, 2)


def _check_signed(seq: Sequence[int], what: str) -> None:
    if any(x == 0 for x in seq):
        raise ValueError(f"{what} entries must be nonzero: {tuple(seq)}")
    if len({abs(x) for x in seq}) != len(seq):
        raise ValueError(f"{what} entries must have distinct absolute values: {tuple(seq)}")


def contains(w: Sequence[int], pattern: Sequence[int]) -> bool:
    """Signed pattern containment.

    >>> contains((5, 3, 1, -2, 4), (3, 2, -1))
    True
    >>> contains((5, 3, 1, 2, 4), (3, 2, -1))
    False
    >>> contains((3, 4, 1, 2), (3, 4, 1, 2))
    True
    """
    w = tuple(w)
    p = tuple(pattern)
    _check_signed(w, "sequence")
    _check_signed(p, "pattern")
    if sorted(abs(x) for x in p) != list(range(1, len(p) + 1)):
        raise ValueError(f"pattern must use absolute values 1..{len(p)}: {p}")
    k, n = len(p), len(w)
    if k > n:
        return False
    absw = [abs(x) for x in w]
    absp = [abs(x) for x in p]

    # backtracking over index subsequences, pruning as soon as the chosen
    # prefix stops being order-isomorphic (or sign-compatible) with p
    def extend(start: int, chosen: list[int]) -> bool:
        j = len(chosen)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            if w[i] * p[j] < 0:
                continue
            if all((absw[c] < absw[i]) == (absp[t] < absp[j]) for t, c in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


def avoids(w: Sequence[int], *patterns: Sequence[int]) -> bool:
    """True when ``w`` contains none of the given patterns.

    >>> avoids((2, 4, 1, 3), (3, 2, 1))
    True
    """
    return not any(contains(w, p) for p in patterns)


def is_fully_commutative(w: Perm) -> bool:
    """321-avoiding: all reduced words are linked by commutations alone.

    >>> is_fully_commutative((2, 4, 1, 3))
    True
    >>> is_fully_commutative((3, 2, 1, 4))
    False
    """
    return avoids(w, _P321)


def is_boolean_element(w: Perm) -> bool:
    """{321, 3412}-avoiding: the Bruhat order below ``w`` is a boolean lattice.

    >>> is_boolean_element((2, 3, 4, 1))
    True
    >>> is_boolean_element((3, 4, 1, 2))
    False
    """
    return avoids(w, _P321, _P3412)


def is_free(w: Perm) -> bool:
    """{321, 231, 312}-avoiding: a product of pairwise-commuting generators.

    >>> is_free((2, 1, 4, 3))
    True
    >>> is_free((2, 4, 1, 3))
    False
    """
    return avoids(w, _P321, _P231, _P312)
