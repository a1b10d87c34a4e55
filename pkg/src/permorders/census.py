"""Counting well-behaved intervals and verifying the closed formulas.

Everything countable here has two independent routes:

* a *counted* route — brute-force sweep of the symmetric group through the
  closed-form predicates, a constructive generator for the atom-interval
  boolean census, or (capped lower) literal poset classification;
* a *formula* route — Fibonacci / Catalan / factorial expressions.

A :class:`CensusRow` carries both numbers; ``match`` compares them.  The
``verify`` driver assembles rows across a degree range and reports whether
every row matched.  All arithmetic is plain Python ints, so the formulas
stay exact at any size.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from .criteria import (
    boolean_over_support_bruhat,
    boolean_over_support_weak,
    bruhat_atom_interval_boolean,
    bruhat_atom_interval_lattice,
)
from .orders import BRUHAT, WEAK, check_order, ideal, interval, leq
from .patterns import is_boolean_element, is_free, is_fully_commutative
from .perms import Perm, all_perms, generator, left_action
from .posets import classify
from .words import Word, evaluate, is_reduced, support

LATTICE = "lattice"
MODDIST = "modular_or_distributive"
BOOLEAN = "boolean"
SUPPORT = "boolean_over_support"

POI_CLASSES = (LATTICE, MODDIST, BOOLEAN)

STRUCTURAL_CAP = 5  # default ceiling for structural sweeps; 6 is opt-in
STRUCTURAL_MAX = 6
PREDICATE_CAP = 9


@lru_cache(maxsize=None)
def fibonacci(i: int) -> int:
    """F(0) = 0, F(1) = 1, F(i) = F(i-1) + F(i-2); exact ints.

    >>> [fibonacci(i) for i in range(9)]
    [0, 1, 1, 2, 3, 5, 8, 13, 21]
    """
    if i < 0:
        raise ValueError("negative index")
    a, b = 0, 1
    for _ in range(i):
        a, b = b, a + b
    return a


def catalan(i: int) -> int:
    """Central-binomial form; exact ints.

    >>> [catalan(i) for i in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if i < 0:
        raise ValueError("negative index")
    return comb(2 * i, i) // (i + 1)


@dataclass(frozen=True)
class CensusRow:
    n: int
    k: int | None
    order: str
    cls: str
    counted: int
    formula: int

    @property
    def match(self) -> bool:
        return self.counted == self.formula

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "order": self.order,
            "class": self.cls,
            "counted": self.counted,
            "formula": self.formula,
            "match": self.match,
        }


# -- formulas ----------------------------------------------------------------


def poi_formula(n: int, order: str, cls: str) -> int:
    """Count of tops whose principal order ideal lies in the given class."""
    check_order(order)
    if order == BRUHAT:
        return fibonacci(2 * n - 1)
    return {LATTICE: factorial(n), MODDIST: catalan(n), BOOLEAN: fibonacci(n + 1)}[cls]


def atom_boolean_formula(n: int, k: int) -> int:
    """Tops w >= s_k with [s_k, w] boolean in Bruhat order; valid for n >= 3.

    >>> atom_boolean_formula(4, 2)
    16
    >>> atom_boolean_formula(9, 4)
    2688
    """
    if k in (1, n - 1):
        return 4 * fibonacci(2 * n - 4)
    return 16 * fibonacci(2 * k - 2) * fibonacci(2 * (n - k) - 2)


def atom_lattice_formula(n: int, k: int) -> int:
    """Tops w >= s_k with [s_k, w] a lattice in Bruhat order; n >= 3.

    >>> atom_lattice_formula(4, 2)
    17
    >>> atom_lattice_formula(5, 2)
    51
    """
    if k in (1, n - 1):
        return atom_boolean_formula(n, k)
    return (
        atom_boolean_formula(n, k)
        + fibonacci(2 * n - 5)
        - fibonacci(2 * k - 3) * fibonacci(2 * (n - k) - 3)
    )


def weak_atom_formula(n: int, k: int, cls: str) -> int:
    """Tops w >= s_k (weak order) whose interval [s_k, w] is in the class."""
    return {
        LATTICE: factorial(n) // 2,
        MODDIST: catalan(n) - catalan(n - 1),
        BOOLEAN: fibonacci(k + 1) * fibonacci(n - k + 1),
    }[cls]


def weak_atom_boolean_total(n: int) -> int:
    """Sum of the boolean weak-atom counts over k, in closed form.

    >>> weak_atom_boolean_total(4)
    10
    """
    num = (n + 1) * fibonacci(n + 3) + (n - 7) * fibonacci(n + 1)
    if num % 5:
        raise ArithmeticError(f"total for n={n} is not divisible by 5")
    return num // 5


def support_formula(n: int, order: str) -> int:
    """Elements boolean over their whole support.

    >>> support_formula(4, "bruhat")
    15
    >>> support_formula(4, "weak")
    5
    """
    check_order(order)
    if order == BRUHAT:
        return fibonacci(2 * n - 1) + n - 2
    return fibonacci(n + 1)


# -- constructive generation of the atom-interval boolean census -------------


def _distinct_words(letters: tuple[int, ...]):
    for r in range(len(letters) + 1):
        yield from itertools.permutations(letters, r)


def _boundary_witnesses(n: int, k: int) -> dict[Perm, tuple[Word, Word]]:
    """All w with [s_k, w] boolean, for k at an end of the alphabet.

    Enumerates every x s_k y with x, y repetition-free words over the other
    letters, overlapping only in the single existing neighbor of k; keeps
    the reduced ones, one split (x, y) per permutation.
    """
    if k not in (1, n - 1):
        raise ValueError("boundary generator expected")
    others = tuple(i for i in range(1, n) if i != k)
    shared = {k - 1, k + 1} & set(range(1, n))
    out: dict[Perm, tuple[Word, Word]] = {}
    for x in _distinct_words(others):
        sx = set(x)
        allowed = tuple(l for l in others if l not in sx or l in shared)
        for y in _distinct_words(allowed):
            word = x + (k,) + y
            if is_reduced(word, n):
                out.setdefault(evaluate(word, n), (x, y))
    return out


def atom_boolean_tops(n: int, k: int) -> frozenset[Perm]:
    """The set of tops w with [s_k, w] boolean, generated constructively.

    Middle k composes one witness per element of the two one-sided
    sub-problems: letters above k come from degree n - k + 1 with its first
    generator shifted onto k, letters below k from degree k + 1 with its
    last generator; the glued word x_u x_v s_k y_u y_v is a witness for the
    product.

    >>> len(atom_boolean_tops(3, 1))
    4
    >>> len(atom_boolean_tops(4, 2))
    16
    """
    if n < 2:
        raise ValueError("degree must be at least 2")
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for degree {n}")
    if n == 2:
        return frozenset({generator(2, 1)})
    if k in (1, n - 1):
        return frozenset(_boundary_witnesses(n, k))
    upper = _boundary_witnesses(n - k + 1, 1)
    lower = _boundary_witnesses(k + 1, k)
    shift = k - 1
    out: set[Perm] = set()
    for xu, yu in upper.values():
        xu2 = tuple(i + shift for i in xu)
        yu2 = tuple(i + shift for i in yu)
        for xv, yv in lower.values():
            word = xu2 + xv + (k,) + yu2 + yv
            if is_reduced(word, n):
                out.add(evaluate(word, n))
    return frozenset(out)


def atom_boolean_tops_exhaustive(n: int, k: int) -> frozenset[Perm]:
    """Direct witness enumeration for any k (slow; cross-checks the above)."""
    others = tuple(i for i in range(1, n) if i != k)
    shared = {k - 1, k + 1} & set(range(1, n))
    out: set[Perm] = set()
    for x in _distinct_words(others):
        sx = set(x)
        allowed = tuple(l for l in others if l not in sx or l in shared)
        for y in _distinct_words(allowed):
            word = x + (k,) + y
            if is_reduced(word, n):
                out.add(evaluate(word, n))
    return frozenset(out)


# -- counting sweeps ----------------------------------------------------------


def _check_caps(n: int, method: str) -> None:
    if method == "structural":
        if n > STRUCTURAL_MAX:
            raise ValueError(f"structural sweeps are capped at n <= {STRUCTURAL_MAX}")
    elif n > PREDICATE_CAP:
        raise ValueError(f"counting sweeps are capped at n <= {PREDICATE_CAP}")


def count_poi_classes(n: int, order: str, method: str = "predicate") -> list[CensusRow]:
    """Three rows (lattice, modular-or-distributive, boolean) for ideals."""
    check_order(order)
    _check_caps(n, method)
    lat = md = boo = 0
    if method == "predicate":
        for w in all_perms(n):
            if order == BRUHAT:
                if is_boolean_element(w):
                    lat += 1
                    md += 1
                    boo += 1
            else:
                lat += 1
                if is_fully_commutative(w):
                    md += 1
                    if is_free(w):
                        boo += 1
    elif method == "structural":
        for w in all_perms(n):
            rep = classify(ideal(w, order))
            lat += rep.is_lattice
            md += rep.is_modular
            if rep.is_modular != rep.is_distributive:
                raise AssertionError(f"modular/distributive split at {w}")
            boo += rep.is_boolean
    else:
        raise ValueError(f"unknown method {method!r}")
    counts = {LATTICE: lat, MODDIST: md, BOOLEAN: boo}
    return [
        CensusRow(n, None, order, cls, counts[cls], poi_formula(n, order, cls))
        for cls in POI_CLASSES
    ]


def atom_interval_counts(n: int, k: int, method: str) -> dict[str, int]:
    """Counts of lattice/modular/distributive/boolean Bruhat intervals
    [s_k, w], keyed by property name."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for degree {n}")
    _check_caps(n, method)
    lat = boo = mod = dist = 0
    for w in all_perms(n):
        if k not in support(w):
            continue
        if method == "predicate":
            b = bruhat_atom_interval_boolean(k, w)
            l = b or bruhat_atom_interval_lattice(k, w)
            m = d = b
        elif method == "structural":
            rep = classify(interval(generator(n, k), w, BRUHAT))
            l, m, d, b = rep.flags
        else:
            raise ValueError(f"unknown method {method!r}")
        lat += l
        mod += m
        dist += d
        boo += b
    return {"lattice": lat, "modular": mod, "distributive": dist, "boolean": boo}


def count_bruhat_atom_boolean(n: int, k: int, method: str = "constructive") -> CensusRow:
    """One census cell: tops of boolean atom intervals in Bruhat order.

    >>> count_bruhat_atom_boolean(3, 1).counted
    4
    """
    if method == "constructive":
        counted = len(atom_boolean_tops(n, k))
    else:
        counted = atom_interval_counts(n, k, method)["boolean"]
    return CensusRow(n, k, BRUHAT, BOOLEAN, counted, atom_boolean_formula(n, k))


def count_bruhat_atom_lattice(n: int, k: int, method: str = "predicate") -> CensusRow:
    """One census cell: tops of lattice atom intervals in Bruhat order.

    >>> count_bruhat_atom_lattice(4, 2).counted
    17
    """
    counted = atom_interval_counts(n, k, method)["lattice"]
    return CensusRow(n, k, BRUHAT, LATTICE, counted, atom_lattice_formula(n, k))


def count_weak_atom(n: int, k: int, cls: str, method: str = "predicate") -> CensusRow:
    """One census cell: weak-order atom intervals [s_k, w] in a class.

    >>> count_weak_atom(4, 1, "boolean").counted
    3
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"generator index {k} out of range for degree {n}")
    if cls not in POI_CLASSES:
        raise ValueError(f"unknown class {cls!r}")
    _check_caps(n, method)
    counted = 0
    for w in all_perms(n):
        # s_k <= w in weak order iff s_k w is shorter, i.e. k sits right of k+1
        if w.index(k) < w.index(k + 1):
            continue
        if method == "predicate":
            u = left_action(k, w)
            ok = (
                cls == LATTICE
                or (cls == MODDIST and is_fully_commutative(u))
                or (cls == BOOLEAN and is_free(u))
            )
        elif method == "structural":
            rep = classify(interval(generator(n, k), w, WEAK))
            ok = {
                LATTICE: rep.is_lattice,
                MODDIST: rep.is_modular,
                BOOLEAN: rep.is_boolean,
            }[cls]
        else:
            raise ValueError(f"unknown method {method!r}")
        counted += ok
    return CensusRow(n, k, WEAK, cls, counted, weak_atom_formula(n, k, cls))


def count_boolean_over_support(n: int, order: str, method: str = "predicate") -> CensusRow:
    """One census row: elements boolean over their whole support.

    >>> count_boolean_over_support(4, "bruhat").counted
    15
    """
    check_order(order)
    _check_caps(n, method)
    counted = 0
    for w in all_perms(n):
        if method == "predicate":
            ok = (
                boolean_over_support_bruhat(w)
                if order == BRUHAT
                else boolean_over_support_weak(w)
            )
        elif method == "structural":
            # every support generator must sit below w (automatic in Bruhat
            # order, a real restriction in weak order) with a boolean interval
            ok = all(
                leq(generator(n, i), w, order)
                and classify(interval(generator(n, i), w, order)).is_boolean
                for i in sorted(support(w))
            )
        else:
            raise ValueError(f"unknown method {method!r}")
        counted += ok
    return CensusRow(n, None, order, SUPPORT, counted, support_formula(n, order))


# -- the verify driver --------------------------------------------------------

SECTIONS = ("poi", "atom-boolean", "atom-lattice", "weak-atom", "support")


def _section_tasks(section: str, ns: Sequence[int], mode: str, lattice_cap: int) -> list[tuple]:
    tasks: list[tuple] = []
    structural = mode == "structural"
    for n in ns:
        if section == "poi":
            for order in (BRUHAT, WEAK):
                tasks.append(("poi", n, None, order, mode))
        elif section == "atom-boolean":
            if n < 3:
                continue
            for k in range(1, n):
                tasks.append(("atom-boolean", n, k, BRUHAT, "structural" if structural else "constructive"))
        elif section == "atom-lattice":
            if n < 3 or (not structural and n > lattice_cap):
                continue
            for k in range(1, n):
                tasks.append(("atom-lattice", n, k, BRUHAT, mode))
        elif section == "weak-atom":
            for k in range(1, n):
                for cls in POI_CLASSES:
                    tasks.append(("weak-atom", n, k, cls, mode))
        elif section == "support":
            for order in (BRUHAT, WEAK):
                tasks.append(("support", n, None, order, mode))
        else:
            raise ValueError(f"unknown section {section!r}")
    return tasks


def _run_task(task: tuple) -> list[CensusRow]:
    kind, n, k, extra, method = task
    if kind == "poi":
        return count_poi_classes(n, extra, method)
    if kind == "atom-boolean":
        return [count_bruhat_atom_boolean(n, k, method)]
    if kind == "atom-lattice":
        return [count_bruhat_atom_lattice(n, k, method)]
    if kind == "weak-atom":
        return [count_weak_atom(n, k, extra, method)]
    if kind == "support":
        return [count_boolean_over_support(n, extra, method)]
    raise ValueError(f"unknown task {task!r}")


def census_rows(
    sections: Iterable[str],
    ns: Iterable[int],
    mode: str = "predicate",
    structural_cap: int = STRUCTURAL_CAP,
    lattice_cap: int = 7,
    workers: int = 1,
) -> list[CensusRow]:
    """Rows for the requested sections over a degree range, in a fixed order.

    Structural mode silently restricts to ``n <= structural_cap`` (default 5;
    6 is the allowed maximum and must be asked for explicitly).  In predicate
    mode the expensive atom-lattice sweep is restricted to ``lattice_cap``.
    """
    if mode not in ("predicate", "structural"):
        raise ValueError(f"unknown mode {mode!r}")
    if structural_cap > STRUCTURAL_MAX:
        raise ValueError(f"structural_cap above hard limit {STRUCTURAL_MAX}")
    ns = sorted(set(ns))
    for n in ns:
        if not 2 <= n <= PREDICATE_CAP:
            raise ValueError(f"degree {n} out of range 2..{PREDICATE_CAP}")
    if mode == "structural":
        ns = [n for n in ns if n <= structural_cap]
    tasks: list[tuple] = []
    for section in sections:
        tasks.extend(_section_tasks(section, ns, mode, lattice_cap))
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def verify(
    ns: Iterable[int],
    mode: str = "predicate",
    structural_cap: int = STRUCTURAL_CAP,
    lattice_cap: int = 7,
    workers: int = 1,
) -> tuple[list[CensusRow], bool]:
    """Run every census section across ``ns``; ok is True when every row
    matches its formula.

    In ``both`` mode the predicate and structural sweeps both run and, where
    they cover the same cell, their counted values must also agree.
    """
    if mode == "both":
        pred_rows, pred_ok = verify(ns, "predicate", structural_cap, lattice_cap, workers)
        struct_rows, struct_ok = verify(ns, "structural", structural_cap, lattice_cap, workers)

        def key(r: CensusRow):
            return (r.n, r.k, r.order, r.cls)

        by_key = {key(r): r.counted for r in pred_rows}
        cross = all(by_key.get(key(r), r.counted) == r.counted for r in struct_rows)
        return pred_rows + struct_rows, pred_ok and struct_ok and cross
    rows = census_rows(SECTIONS, ns, mode, structural_cap, lattice_cap, workers)
    return rows, all(r.match for r in rows)


def rows_to_csv(rows) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "k", "order", "class", "counted", "formula", "match"])
    for r in rows:
        writer.writerow(
            [r.n, "" if r.k is None else r.k, r.order, r.cls, r.counted, r.formula, r.match]
        )
    return buf.getvalue()
