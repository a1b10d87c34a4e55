"""Permutations of {1, ..., n} in one-line notation.

A permutation is a plain tuple of ints: ``w[i]`` is the image of ``i + 1``,
so ``(2, 1, 4, 3)`` is the permutation written 2143.  Values and generator
indices are 1-based throughout; only tuple positions are 0-based.

Generator ``i`` (for ``1 <= i <= n - 1``) is the adjacent transposition of
``i`` and ``i + 1``.  Products compose right to left: ``multiply(u, v)``
maps ``j`` to ``u(v(j))``.  Consequently right-multiplying by generator
``i`` swaps the *positions* ``i`` and ``i + 1`` of the one-line notation,
while left-multiplying swaps the *values* ``i`` and ``i + 1``.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

Perm = tuple[int, ...]


def make_perm(entries: Iterable[int]) -> Perm:
    """Validate one-line entries and return them as a permutation tuple.

    >>> make_perm([2, 1, 4, 3])
    (2, 1, 4, 3)
    >>> make_perm([1, 1, 2])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 2)
    """
    w = tuple(entries)
    if not w:
        raise ValueError("a permutation needs degree at least 1")
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Perm:
    """The identity permutation of degree ``n``.

    >>> identity(4)
    (1, 2, 3, 4)
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return tuple(range(1, n + 1))


def generator(n: int, i: int) -> Perm:
    """The adjacent transposition of ``i`` and ``i + 1`` inside degree ``n``.

    >>> generator(4, 2)
    (1, 3, 2, 4)
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for degree {n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def longest_element(n: int) -> Perm:
    """The order-reversing permutation n, n-1, ..., 1.

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return tuple(range(n, 0, -1))


def multiply(u: Perm, v: Perm) -> Perm:
    """Product ``u v``, mapping ``j`` to ``u(v(j))``.

    >>> multiply((2, 1, 3, 4), (1, 3, 2, 4))
    (2, 3, 1, 4)
    """
    if len(u) != len(v):
        raise ValueError(f"degree mismatch: {len(u)} vs {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    """The inverse permutation.

    >>> inverse((2, 3, 4, 1))
    (4, 1, 2, 3)
    """
    out = [0] * len(w)
    for pos, val in enumerate(w):
        out[val - 1] = pos + 1
    return tuple(out)


def right_action(w: Perm, i: int) -> Perm:
    """``w`` times generator ``i``: swap positions ``i`` and ``i + 1``.

    >>> right_action((3, 4, 1, 2), 2)
    (3, 1, 4, 2)
    >>> right_action(right_action((3, 4, 1, 2), 2), 2)
    (3, 4, 1, 2)
    """
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"generator index {i} out of range for degree {len(w)}")
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def left_action(i: int, w: Perm) -> Perm:
    """Generator ``i`` times ``w``: swap the values ``i`` and ``i + 1``.

    >>> left_action(1, (2, 3, 4, 1))
    (1, 3, 4, 2)
    """
    if not 1 <= i <= len(w) - 1:
        raise ValueError(f"generator index {i} out of range for degree {len(w)}")
    lst = [i + 1 if x == i else i if x == i + 1 else x for x in w]
    return tuple(lst)


def length(w: Perm) -> int:
    """Coxeter length = number of inversions.

    >>> length((3, 4, 1, 2))
    4
    >>> length((1, 2, 3))
    0
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def right_descents(w: Perm) -> frozenset[int]:
    """Indices ``i`` with ``w(i) > w(i + 1)``, i.e. length drops under ``w s_i``.

    >>> sorted(right_descents((2, 1, 4, 3)))
    [1, 3]
    """
    return frozenset(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def left_descents(w: Perm) -> frozenset[int]:
    """Indices ``i`` such that ``i`` appears to the right of ``i + 1`` in ``w``.

    Equivalently the right descents of the inverse: length drops under
    ``s_i w``.

    >>> sorted(left_descents((2, 3, 4, 1)))
    [1]
    """
    return right_descents(inverse(w))


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations of degree ``n`` in lexicographic order.

    >>> list(all_perms(2))
    [(1, 2), (2, 1)]
    """
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return iter(itertools.permutations(range(1, n + 1)))


def parse_perm(text: str) -> Perm:
    """Parse one-line notation: a digit string for n <= 9, or comma form.

    >>> parse_perm("2143")
    (2, 1, 4, 3)
    >>> parse_perm("10,2,3,4,5,6,7,8,9,1")
    (10, 2, 3, 4, 5, 6, 7, 8, 9, 1)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    if "," in text:
        try:
            entries = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"bad permutation string: {text!r}") from None
        return make_perm(entries)
    if not text.isdigit() or "0" in text:
        raise ValueError(f"bad permutation string: {text!r}")
    if len(text) > 9:
        raise ValueError(f"digit form only works up to degree 9: {text!r}")
    return make_perm(int(ch) for ch in text)


def format_perm(w: Perm) -> str:
    """One-line notation as text; digit string for n <= 9, comma form beyond.

    >>> format_perm((2, 1, 4, 3))
    '2143'
    """
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)
