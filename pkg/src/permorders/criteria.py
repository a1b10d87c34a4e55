"""Closed-form interval classification, next to its structural oracle.

Every function here decides a lattice property of an interval *without
building the interval*, from reduced words and pattern predicates alone:

* principal order ideals, Bruhat: all four properties are equivalent, and
  hold exactly for products of distinct generators;
* principal order ideals, weak: always a lattice; modular and distributive
  together exactly for fully commutative tops; boolean exactly for free
  tops;
* weak intervals [v, w]: same rules applied to v^-1 w, since the interval
  is isomorphic to that element's ideal;
* Bruhat intervals over an atom [s_k, w]: boolean iff some reduced word
  splits as x s_k y with x and y repetition-free, sharing only letters
  k - 1 or k + 1, and neither containing k; a non-boolean lattice iff some
  reduced word splits as x (s_k s_{k-1} s_{k+1} s_k) y with x and y
  repetition-free, disjoint, and avoiding k - 1, k, k + 1 entirely.  The
  rank-4 pattern needs both neighbors of k, so for k at the ends of the
  alphabet lattice and boolean coincide.

``boolean_over_support`` asks for [s, w] boolean for *every* generator s
below w; in the Bruhat order that adds exactly the elements
s_{k+1} s_k s_{k+1} to the distinct-generator products, in the weak order
it is freeness again.

Each predicate is paired in the tests (and optionally at call time, via the
report helpers) with the structural route: materialize the poset, check the
laws on all triples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orders import BRUHAT, WEAK, bruhat_leq, check_order, ideal, interval, weak_leq
from .patterns import is_free, is_fully_commutative
from .perms import Perm, format_perm, identity, inverse, left_descents, length, multiply
from .posets import LatticeReport, classify
from .words import evaluate, is_product_of_distinct_generators, reduced_words, support


def poi_bruhat_class(w: Perm) -> LatticeReport:
    """Classify the Bruhat order ideal below ``w`` in closed form.

    >>> poi_bruhat_class((2, 1, 4, 3)).flags
    (True, True, True, True)
    >>> poi_bruhat_class((3, 4, 1, 2)).flags
    (False, False, False, False)
    """
    flag = is_product_of_distinct_generators(w)
    return LatticeReport(flag, flag, flag, flag, rank=length(w), atom_count=len(support(w)))


def poi_weak_class(w: Perm) -> LatticeReport:
    """Classify the weak order ideal below ``w`` in closed form.

    >>> poi_weak_class((3, 2, 1)).flags
    (True, False, False, False)
    >>> poi_weak_class((2, 4, 1, 3)).flags
    (True, True, True, False)
    >>> poi_weak_class((2, 1, 4, 3)).flags
    (True, True, True, True)
    """
    md = is_fully_commutative(w)
    return LatticeReport(
        True,
        md,
        md,
        md and is_free(w),
        rank=length(w),
        atom_count=len(left_descents(w)),
    )


def weak_interval_class(v: Perm, w: Perm) -> LatticeReport:
    """Classify the weak interval [v, w]; it mirrors the ideal of v^-1 w.

    >>> weak_interval_class((2, 1, 3, 4), (2, 3, 4, 1)).flags
    (True, True, True, False)
    """
    if not weak_leq(v, w):
        raise ValueError(
            f"{format_perm(v)} is not below {format_perm(w)} in the weak order"
        )
    return poi_weak_class(multiply(inverse(v), w))


def _split_is_boolean_witness(word: tuple[int, ...], k: int) -> bool:
    p = word.index(k)
    x, y = word[:p], word[p + 1 :]
    sx, sy = set(x), set(y)
    if len(sx) != len(x) or len(sy) != len(y):
        return False
    return (sx & sy) <= {k - 1, k + 1}


def _check_atom(k: int, w: Perm) -> None:
    n = len(w)
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for degree {n}")
    # s_k <= w in Bruhat order exactly when k appears in reduced words
    if k not in support(w):
        raise ValueError(f"s_{k} is not below {format_perm(w)} in the Bruhat order")


def bruhat_atom_interval_boolean(k: int, w: Perm) -> bool:
    """Is the Bruhat interval [s_k, w] a boolean lattice?

    >>> bruhat_atom_interval_boolean(1, (2, 3, 4, 1))
    True
    >>> bruhat_atom_interval_boolean(2, (3, 4, 1, 2))
    False
    >>> bruhat_atom_interval_boolean(2, (1, 3, 2, 4))
    True
    """
    _check_atom(k, w)
    n = len(w)
    # a witness word holds at most n - 2 distinct letters besides s_k, plus
    # one repeat of each existing neighbor of k
    neighbors = len({k - 1, k + 1} & set(range(1, n)))
    if length(w) > (n - 2) + neighbors + 1:
        return False
    for word in reduced_words(w):
        if word.count(k) == 1 and _split_is_boolean_witness(word, k):
            return True
    return False


def bruhat_atom_interval_lattice(k: int, w: Perm) -> bool:
    """Is the Bruhat interval [s_k, w] a lattice (boolean or not)?

    >>> bruhat_atom_interval_lattice(2, (3, 4, 1, 2))
    True
    >>> bruhat_atom_interval_lattice(1, (3, 2, 1, 4))
    True
    """
    if bruhat_atom_interval_boolean(k, w):
        return True
    n = len(w)
    if not 2 <= k <= n - 2:
        return False
    if length(w) > n:  # 4 pattern letters + at most n - 4 distinct others
        return False
    quad = (k, k - 1, k + 1, k)
    for word in reduced_words(w):
        for p in range(len(word) - 3):
            if word[p : p + 4] != quad:
                continue
            x, y = word[:p], word[p + 4 :]
            sx, sy = set(x), set(y)
            if len(sx) != len(x) or len(sy) != len(y):
                continue
            if sx & sy:
                continue
            if {k - 1, k, k + 1} & (sx | sy):
                continue
            return True
    return False


def bruhat_atom_interval_class(k: int, w: Perm) -> LatticeReport:
    """Closed-form report for [s_k, w]: modular and distributive collapse to
    boolean over an atom, lattice may hold separately."""
    boo = bruhat_atom_interval_boolean(k, w)
    lat = boo or bruhat_atom_interval_lattice(k, w)
    rk = length(w) - 1
    return LatticeReport(lat, boo, boo, boo, rank=rk, atom_count=rk if boo else None)


def boolean_over_support_bruhat(w: Perm) -> bool:
    """[s, w] boolean in Bruhat order for every generator s below w.

    >>> boolean_over_support_bruhat((3, 2, 1, 4))
    True
    >>> boolean_over_support_bruhat((3, 4, 1, 2))
    False
    >>> boolean_over_support_bruhat((2, 1, 4, 3))
    True
    """
    if is_product_of_distinct_generators(w):
        return True
    n = len(w)
    if length(w) != 3:
        return False
    return any(w == evaluate((j, j - 1, j), n) for j in range(2, n))


def boolean_over_support_weak(w: Perm) -> bool:
    """[s, w] boolean in weak order for every generator s below w.

    >>> boolean_over_support_weak((2, 1, 4, 3))
    True
    >>> boolean_over_support_weak((2, 3, 4, 1))
    False
    """
    return is_free(w)


# -- combined reports -------------------------------------------------------


@dataclass(frozen=True)
class CriteriaReport:
    """A closed-form verdict side by side with the structural one.

    ``predicate`` is None when no closed rule covers the subject (a general
    Bruhat interval whose bottom is neither the identity nor an atom);
    ``structural`` is None unless requested.  ``agree`` compares the four
    flags, and is None when either side is missing.
    """

    subject: str
    order: str
    predicate: LatticeReport | None
    structural: LatticeReport | None

    @property
    def agree(self) -> bool | None:
        if self.predicate is None or self.structural is None:
            return None
        return self.predicate.flags == self.structural.flags

    def as_dict(self) -> dict:
        return {
            "subject": self.subject,
            "order": self.order,
            "predicate": None if self.predicate is None else self.predicate.as_dict(),
            "structural": None if self.structural is None else self.structural.as_dict(),
            "agree": self.agree,
        }


def _predicate_interval_report(v: Perm, w: Perm, order: str) -> LatticeReport | None:
    if order == WEAK:
        return weak_interval_class(v, w)
    if not bruhat_leq(v, w):
        raise ValueError(
            f"{format_perm(v)} is not below {format_perm(w)} in the Bruhat order"
        )
    if v == identity(len(v)):
        return poi_bruhat_class(w)
    if length(v) == 1:
        k = min(i for i in range(1, len(v)) if v[i - 1] != i)
        return bruhat_atom_interval_class(k, w)
    return None


def classify_poi_report(w: Perm, order: str, structural: bool = False) -> CriteriaReport:
    """Closed-form (and optionally structural) report for the ideal of ``w``."""
    check_order(order)
    pred = poi_bruhat_class(w) if order == BRUHAT else poi_weak_class(w)
    struct = classify(ideal(w, order)) if structural else None
    return CriteriaReport(
        subject=f"[{format_perm(identity(len(w)))}, {format_perm(w)}]",
        order=order,
        predicate=pred,
        structural=struct,
    )


def classify_interval_report(
    v: Perm, w: Perm, order: str, structural: bool = False
) -> CriteriaReport:
    """Closed-form (and optionally structural) report for [v, w]."""
    check_order(order)
    pred = _predicate_interval_report(v, w, order)
    struct = classify(interval(v, w, order)) if structural else None
    return CriteriaReport(
        subject=f"[{format_perm(v)}, {format_perm(w)}]",
        order=order,
        predicate=pred,
        structural=struct,
    )
