"""The Bruhat and right weak orders on a symmetric group.

Both are graded by Coxeter length.  Comparison is by closed criteria —
sorted-prefix dominance for Bruhat, length additivity for weak — and the
test suite cross-checks both against the defining subword/prefix searches.

``interval`` materializes a closed interval [bottom, top] as a
:class:`~permorders.posets.FinitePoset` by walking lower covers down from
the top and keeping what stays above the bottom; gradedness makes that
complete, and the interval's covers are the global covers restricted to it.
"""

from __future__ import annotations

from bisect import insort

from .perms import Perm, identity, inverse, length, multiply, right_action, right_descents
from .posets import FinitePoset

BRUHAT = "bruhat"
WEAK = "weak"


def check_order(order: str) -> str:
    if order not in (BRUHAT, WEAK):
        raise ValueError(f"unknown order {order!r}; expected {BRUHAT!r} or {WEAK!r}")
    return order


def _check_degrees(v: Perm, w: Perm) -> None:
    if len(v) != len(w):
        raise ValueError(f"degree mismatch: {len(v)} vs {len(w)}")


def bruhat_leq(v: Perm, w: Perm) -> bool:
    """Bruhat comparison by sorted-prefix dominance.

    For every k, the sorted first k values of ``v`` must be entrywise at
    most those of ``w``.

    >>> bruhat_leq((2, 1, 4, 3), (2, 3, 4, 1))
    True
    >>> bruhat_leq((1, 3, 2, 4), (2, 1, 4, 3))
    False
    """
    _check_degrees(v, w)
    if v == w:
        return True
    sv: list[int] = []
    sw: list[int] = []
    for k in range(len(v) - 1):
        insort(sv, v[k])
        insort(sw, w[k])
        if any(a > b for a, b in zip(sv, sw)):
            return False
    return True


def weak_leq(v: Perm, w: Perm) -> bool:
    """Right weak comparison: lengths add along v^-1 w.

    >>> weak_leq((2, 1, 3, 4), (2, 3, 4, 1))
    True
    >>> weak_leq((2, 1, 4, 3), (2, 3, 4, 1))
    False
    """
    _check_degrees(v, w)
    return length(w) == length(v) + length(multiply(inverse(v), w))


def leq(v: Perm, w: Perm, order: str) -> bool:
    """Dispatch to :func:`bruhat_leq` or :func:`weak_leq`."""
    check_order(order)
    return bruhat_leq(v, w) if order == BRUHAT else weak_leq(v, w)


def bruhat_covers_down(w: Perm) -> list[Perm]:
    """Lower Bruhat covers: transpose positions i < j with ``w(i) > w(j)``
    and no value between them at an intermediate position.

    >>> sorted(bruhat_covers_down((3, 2, 1)))
    [(2, 3, 1), (3, 1, 2)]
    """
    n = len(w)
    out: list[Perm] = []
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j] and not any(w[j] < w[l] < w[i] for l in range(i + 1, j)):
                lst = list(w)
                lst[i], lst[j] = lst[j], lst[i]
                out.append(tuple(lst))
    return out


def weak_covers_down(w: Perm) -> list[Perm]:
    """Lower weak covers: strip one right descent.

    >>> sorted(weak_covers_down((3, 2, 1)))
    [(2, 3, 1), (3, 1, 2)]
    """
    return [right_action(w, i) for i in sorted(right_descents(w))]


def covers_down(w: Perm, order: str) -> list[Perm]:
    """Lower covers of ``w`` in the chosen order."""
    check_order(order)
    return bruhat_covers_down(w) if order == BRUHAT else weak_covers_down(w)


def interval(bottom: Perm, top: Perm, order: str) -> FinitePoset:
    """The closed interval [bottom, top] as a finite poset.

    >>> interval((1, 2, 3, 4), (2, 1, 4, 3), "bruhat").size
    4
    >>> interval((1, 3, 2, 4), (3, 4, 1, 2), "bruhat").size
    10
    """
    check_order(order)
    _check_degrees(bottom, top)
    if not leq(bottom, top, order):
        raise ValueError(
            f"bottom {bottom} is not below top {top} in the {order} order"
        )
    trivial_bottom = bottom == identity(len(bottom))
    members: set[Perm] = {top}
    frontier: list[Perm] = [top]
    while frontier:
        nxt: list[Perm] = []
        for u in frontier:
            for c in covers_down(u, order):
                if c in members:
                    continue
                if trivial_bottom or leq(bottom, c, order):
                    members.add(c)
                    nxt.append(c)
        frontier = nxt
    labels = sorted(members, key=lambda u: (length(u), u))
    pairs = [
        (c, u) for u in labels for c in covers_down(u, order) if c in members
    ]
    return FinitePoset(labels, pairs)


def ideal(w: Perm, order: str) -> FinitePoset:
    """Principal order ideal: everything below ``w``.

    >>> ideal((3, 2, 1), "weak").size
    6
    >>> ideal((2, 1, 4, 3), "bruhat").size
    4
    """
    return interval(identity(len(w)), w, order)
