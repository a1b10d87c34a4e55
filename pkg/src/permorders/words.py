"""Reduced words: enumeration, rewriting moves, support.

A word is a tuple of generator indices, evaluated left to right, so
``(1, 2, 3)`` means s1 s2 s3.  The empty word is the identity.  A word for
``w`` is *reduced* when its length equals the Coxeter length of ``w``.

Two local rewriting moves connect words without changing the evaluated
permutation: swapping adjacent letters that differ by more than one
(commutation), and replacing a factor i, j, i by j, i, j when ``|i - j| == 1``
(the braid move).  Every pair of reduced words of the same permutation is
connected by these moves, which is what :func:`move_closure` exercises.
"""

from __future__ import annotations

from typing import Sequence

from .perms import (
    Perm,
    identity,
    left_action,
    left_descents,
    length,
    right_action,
    right_descents,
)

Word = tuple[int, ...]

REDUCED_WORD_CAP = 20


def evaluate(word: Sequence[int], n: int) -> Perm:
    """Multiply out a word inside degree ``n``.

    >>> evaluate((1, 2, 3), 4)
    (2, 3, 4, 1)
    >>> evaluate((2, 1, 3, 2), 4)
    (3, 4, 1, 2)
    >>> evaluate((), 3)
    (1, 2, 3)
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for degree {n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def is_reduced(word: Sequence[int], n: int) -> bool:
    """True when the word's length equals the length of its product.

    >>> is_reduced((1, 3), 4)
    True
    >>> is_reduced((2, 1, 2, 1), 4)
    False
    """
    return length(evaluate(word, n)) == len(word)


def reduced_words(w: Perm, max_length: int = REDUCED_WORD_CAP) -> frozenset[Word]:
    """All reduced words of ``w``.

    Walks the descent recursion: every reduced word ends in a right descent,
    so R(w) is the union over right descents ``i`` of R(w s_i) extended by
    ``i``.  Guarded by ``max_length`` because the count grows fast.

    >>> sorted(reduced_words((2, 1, 4, 3)))
    [(1, 3), (3, 1)]
    >>> sorted(reduced_words((3, 2, 1)))
    [(1, 2, 1), (2, 1, 2)]
    >>> sorted(reduced_words((2, 3, 4, 1)))
    [(1, 2, 3)]
    """
    if length(w) > max_length:
        raise ValueError(
            f"element has length {length(w)} > cap {max_length}; "
            "raise max_length explicitly to enumerate anyway"
        )
    memo: dict[Perm, tuple[Word, ...]] = {identity(len(w)): ((),)}

    def rec(u: Perm) -> tuple[Word, ...]:
        cached = memo.get(u)
        if cached is not None:
            return cached
        acc: list[Word] = []
        for i in sorted(right_descents(u)):
            for prefix in rec(right_action(u, i)):
                acc.append(prefix + (i,))
        memo[u] = tuple(acc)
        return memo[u]

    return frozenset(rec(w))


def canonical_word(w: Perm) -> Word:
    """The lexicographically smallest reduced word of ``w``.

    Greedy: a word may start with ``i`` exactly when ``i`` is a left descent,
    so repeatedly peeling the smallest left descent off the front minimizes
    the word letter by letter.

    >>> canonical_word((2, 1, 4, 3))
    (1, 3)
    >>> canonical_word((3, 4, 1, 2))
    (2, 1, 3, 2)
    >>> canonical_word((1, 2, 3))
    ()
    """
    out: list[int] = []
    u = w
    while True:
        ds = left_descents(u)
        if not ds:
            break
        i = min(ds)
        out.append(i)
        u = left_action(i, u)
    return tuple(out)


def move_closure(word: Sequence[int], n: int) -> frozenset[Word]:
    """Close a reduced word under commutation and braid moves.

    >>> sorted(move_closure((1, 3), 4))
    [(1, 3), (3, 1)]
    >>> sorted(move_closure((1, 2, 1), 3))
    [(1, 2, 1), (2, 1, 2)]
    >>> sorted(move_closure((1, 2, 3), 4))
    [(1, 2, 3)]
    """
    start = tuple(word)
    if not is_reduced(start, n):
        raise ValueError("move closure is defined for reduced words only")
    seen: set[Word] = {start}
    stack: list[Word] = [start]
    while stack:
        cur = stack.pop()
        for p in range(len(cur) - 1):
            a, b = cur[p], cur[p + 1]
            if abs(a - b) > 1:
                nxt = cur[:p] + (b, a) + cur[p + 2 :]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        for p in range(len(cur) - 2):
            a, b, c = cur[p], cur[p + 1], cur[p + 2]
            if a == c and abs(a - b) == 1:
                nxt = cur[:p] + (b, a, b) + cur[p + 3 :]
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return frozenset(seen)


def support(w: Perm) -> frozenset[int]:
    """Generator indices appearing in the reduced words of ``w``.

    The letter *set* of a reduced word is invariant under both rewriting
    moves, so one word determines it.

    >>> sorted(support((3, 2, 1, 4)))
    [1, 2]
    >>> support((1, 2, 3))
    frozenset()
    """
    return frozenset(canonical_word(w))


def is_product_of_distinct_generators(w: Perm) -> bool:
    """True when some (equivalently, any) reduced word has no repeated letter.

    >>> is_product_of_distinct_generators((2, 3, 4, 1))
    True
    >>> is_product_of_distinct_generators((3, 2, 1, 4))
    False
    >>> is_product_of_distinct_generators((1, 2, 3, 4))
    True
    """
    return length(w) == len(support(w))


def format_word(word: Sequence[int]) -> str:
    """Bracketed-list text form used by the command line.

    >>> format_word((1, 2, 1))
    '[1,2,1]'
    >>> format_word(())
    '[]'
    """
    return "[" + ",".join(str(i) for i in word) + "]"
