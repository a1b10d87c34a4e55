"""Finite posets: reachability, lattice property checks, isomorphism, IO.

A :class:`FinitePoset` is built from hashable labels plus cover pairs and
re-indexed internally along a fixed linear extension (ascending height,
ties by label text), so index order is always compatible with the order
relation.  Up-sets and down-sets are Python-int bitmasks; ``i <= j`` is one
shift-and-mask.

Property checks follow the textbook definitions directly:

* lattice      — every pair has a least upper and greatest lower bound
                 (tables built pairwise; a unique minimal upper bound that
                 fails to sit below the rest means no join, fail fast);
* modular      — a <= c implies a v (b ^ c) = (a v b) ^ c on all triples;
* distributive — x ^ (y v z) = (x ^ y) v (x ^ z) on all triples;
* boolean      — element count is 2**atoms and mapping each element to its
                 atom down-set is an order embedding onto the subset lattice.

The triple loops are batched through numpy one slice at a time with early
exit, which keeps few-hundred-element posets around a second at worst.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable

import numpy as np

_UNSET = object()


@dataclass(frozen=True)
class LatticeReport:
    """Outcome of classifying one poset (or one closed-form prediction).

    ``rank`` is None when the poset is not graded-bounded (or a predicate
    route did not compute it); likewise ``atom_count``.
    """

    is_lattice: bool
    is_modular: bool
    is_distributive: bool
    is_boolean: bool
    rank: int | None = None
    atom_count: int | None = None

    @property
    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.is_lattice, self.is_modular, self.is_distributive, self.is_boolean)

    def as_dict(self) -> dict:
        return {
            "is_lattice": self.is_lattice,
            "is_modular": self.is_modular,
            "is_distributive": self.is_distributive,
            "is_boolean": self.is_boolean,
            "rank": self.rank,
            "atom_count": self.atom_count,
        }


class FinitePoset:
    """Finite poset given by labels and (lower, upper) cover pairs.

    >>> P = FinitePoset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    >>> P.size
    4
    >>> P.leq("a", "d"), P.leq("b", "c")
    (True, False)
    """

    __slots__ = (
        "labels",
        "_pos",
        "_upper",
        "_lower",
        "_up",
        "_down",
        "_height",
        "_tables",
        "_leq_matrix",
    )

    def __init__(
        self,
        labels: Iterable[Hashable],
        cover_pairs: Iterable[tuple[Hashable, Hashable]],
    ) -> None:
        raw = list(labels)
        if len(set(raw)) != len(raw):
            raise ValueError("duplicate labels")
        if not raw:
            raise ValueError("poset needs at least one element")
        pos0 = {lab: i for i, lab in enumerate(raw)}
        m = len(raw)
        upper0: list[list[int]] = [[] for _ in range(m)]
        lower0: list[list[int]] = [[] for _ in range(m)]
        for lo, hi in cover_pairs:
            if lo not in pos0 or hi not in pos0:
                raise ValueError(f"cover pair ({lo!r}, {hi!r}) uses unknown label")
            if lo == hi:
                raise ValueError(f"self-cover at {lo!r}")
            a, b = pos0[lo], pos0[hi]
            if b not in upper0[a]:
                upper0[a].append(b)
                lower0[b].append(a)

        # longest-path heights; doubles as the acyclicity check
        indeg = [len(lower0[i]) for i in range(m)]
        height0 = [0] * m
        queue = [i for i in range(m) if indeg[i] == 0]
        done = 0
        while queue:
            nxt: list[int] = []
            for i in queue:
                done += 1
                for j in upper0[i]:
                    height0[j] = max(height0[j], height0[i] + 1)
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        nxt.append(j)
            queue = nxt
        if done != m:
            raise ValueError("cover relation has a cycle")

        order = sorted(range(m), key=lambda i: (height0[i], str(raw[i])))
        newpos = {old: new for new, old in enumerate(order)}
        self.labels: tuple = tuple(raw[i] for i in order)
        self._pos = {lab: i for i, lab in enumerate(self.labels)}
        self._upper = tuple(
            tuple(sorted(newpos[j] for j in upper0[old])) for old in order
        )
        self._lower = tuple(
            tuple(sorted(newpos[j] for j in lower0[old])) for old in order
        )
        self._height = tuple(height0[i] for i in order)

        down = [0] * m
        for i in range(m):  # ascending = linear extension
            mask = 1 << i
            for j in self._lower[i]:
                mask |= down[j]
            down[i] = mask
        up = [0] * m
        for i in range(m - 1, -1, -1):
            mask = 1 << i
            for j in self._upper[i]:
                mask |= up[j]
            up[i] = mask
        self._down = tuple(down)
        self._up = tuple(up)
        self._tables = _UNSET
        self._leq_matrix = None

    # -- basic queries ----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        return self._pos[label]

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self._down[j] >> i & 1)

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return self.leq_idx(self._pos[a], self._pos[b])

    def upper_covers_idx(self, i: int) -> tuple[int, ...]:
        return self._upper[i]

    def lower_covers_idx(self, i: int) -> tuple[int, ...]:
        return self._lower[i]

    def cover_pairs_idx(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.size) for j in self._upper[i]]

    def height_idx(self, i: int) -> int:
        return self._height[i]

    def minimum_idx(self) -> int | None:
        sources = [i for i in range(self.size) if not self._lower[i]]
        return sources[0] if len(sources) == 1 else None

    def maximum_idx(self) -> int | None:
        sinks = [i for i in range(self.size) if not self._upper[i]]
        return sinks[0] if len(sinks) == 1 else None

    def is_bounded(self) -> bool:
        return self.minimum_idx() is not None and self.maximum_idx() is not None

    def atoms_idx(self) -> tuple[int, ...]:
        bot = self.minimum_idx()
        return self._upper[bot] if bot is not None else ()

    def is_graded(self) -> bool:
        """Bounded, with every cover raising longest-path height by one."""
        if not self.is_bounded():
            return False
        return all(
            self._height[j] == self._height[i] + 1
            for i in range(self.size)
            for j in self._upper[i]
        )

    def rank(self) -> int | None:
        if not self.is_graded():
            return None
        top = self.maximum_idx()
        assert top is not None
        return self._height[top]

    def __repr__(self) -> str:  # pragma: no cover
        return f"FinitePoset(size={self.size})"

    # -- lattice tables ---------------------------------------------------

    def _meet_join(self):
        """(meet, join) int32 tables, or None when some pair lacks one."""
        if self._tables is not _UNSET:
            return self._tables
        result = None
        if self.is_bounded():
            m = self.size
            up, down = self._up, self._down
            join = np.empty((m, m), dtype=np.int32)
            meet = np.empty((m, m), dtype=np.int32)
            ok = True
            for a in range(m):
                join[a, a] = meet[a, a] = a
                ua, da = up[a], down[a]
                for b in range(a):
                    common_up = ua & up[b]
                    t = (common_up & -common_up).bit_length() - 1
                    if common_up & ~up[t]:
                        ok = False  # a second minimal upper bound exists
                        break
                    join[a, b] = join[b, a] = t
                    common_down = da & down[b]
                    s = common_down.bit_length() - 1
                    if common_down & ~down[s]:
                        ok = False
                        break
                    meet[a, b] = meet[b, a] = s
                if not ok:
                    break
            if ok:
                result = (meet, join)
        self._tables = result
        return result

    def leq_matrix(self) -> np.ndarray:
        if self._leq_matrix is None:
            m = self.size
            mat = np.zeros((m, m), dtype=bool)
            for j in range(m):
                d = self._down[j]
                for i in range(m):
                    if d >> i & 1:
                        mat[i, j] = True
            self._leq_matrix = mat
        return self._leq_matrix


def is_lattice(P: FinitePoset) -> bool:
    """Every pair of elements has a join and a meet (so P is bounded).

    >>> chain = FinitePoset("abc", [("a", "b"), ("b", "c")])
    >>> is_lattice(chain)
    True
    """
    return P._meet_join() is not None


def meet_join_tables(P: FinitePoset) -> tuple[np.ndarray, np.ndarray] | None:
    """The (meet, join) tables over internal indices, or None."""
    return P._meet_join()


def _require_lattice(P: FinitePoset):
    tabs = P._meet_join()
    if tabs is None:
        raise ValueError("poset is not a lattice")
    return tabs


def is_modular(P: FinitePoset) -> bool:
    """Modular law on all triples: a <= c implies a v (b ^ c) = (a v b) ^ c."""
    meet, join = _require_lattice(P)
    L = P.leq_matrix()
    for a in range(P.size):
        cs = np.flatnonzero(L[a])
        lhs = join[a, meet[:, cs]]
        rhs = meet[join[a, :][:, None], cs[None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_distributive(P: FinitePoset) -> bool:
    """Distributive law on all triples: x ^ (y v z) = (x ^ y) v (x ^ z)."""
    meet, join = _require_lattice(P)
    for x in range(P.size):
        mx = meet[x]
        lhs = meet[x, join]
        rhs = join[mx[:, None], mx[None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def is_boolean(P: FinitePoset) -> bool:
    """Isomorphic to the lattice of subsets of its atom set.

    >>> single = FinitePoset(["e"], [])
    >>> is_boolean(single)
    True
    """
    if not P.is_bounded():
        return False
    atoms = P.atoms_idx()
    a = len(atoms)
    if P.size != 1 << a:
        return False
    sigs = []
    for x in range(P.size):
        sig = 0
        for t, at in enumerate(atoms):
            if P.leq_idx(at, x):
                sig |= 1 << t
        sigs.append(sig)
    if len(set(sigs)) != P.size:
        return False
    return all(
        P.leq_idx(i, j) == (sigs[i] | sigs[j] == sigs[j])
        for i in range(P.size)
        for j in range(P.size)
    )


def classify(P: FinitePoset) -> LatticeReport:
    """All four flags, each stronger one checked only if the weaker held.

    >>> bowtie = FinitePoset("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    >>> classify(bowtie).flags
    (False, False, False, False)
    """
    lat = is_lattice(P)
    mod = lat and is_modular(P)
    dist = mod and is_distributive(P)
    boo = dist and is_boolean(P)
    atom_count = len(P.atoms_idx()) if P.is_bounded() else 0
    return LatticeReport(lat, mod, dist, boo, rank=P.rank(), atom_count=atom_count)


# -- isomorphism ----------------------------------------------------------


def _refine_colors(P: FinitePoset, init: list) -> list[int]:
    colors = init
    while True:
        sig = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in P.lower_covers_idx(i))),
                tuple(sorted(colors[j] for j in P.upper_covers_idx(i))),
            )
            for i in range(P.size)
        ]
        relabel = {s: c for c, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def poset_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    """Order isomorphism via color refinement plus backtracking.

    >>> N5 = FinitePoset(["0", "a", "b", "c", "1"],
    ...                  [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")])
    >>> M3 = FinitePoset(["0", "x", "y", "z", "1"],
    ...                  [("0", "x"), ("0", "y"), ("0", "z"),
    ...                   ("x", "1"), ("y", "1"), ("z", "1")])
    >>> poset_isomorphic(N5, M3)
    False
    >>> poset_isomorphic(N5, N5)
    True
    """
    if P.size != Q.size:
        return False
    if len(P.cover_pairs_idx()) != len(Q.cover_pairs_idx()):
        return False
    init_p = [P.height_idx(i) for i in range(P.size)]
    init_q = [Q.height_idx(i) for i in range(Q.size)]
    cp = _refine_colors(P, init_p)
    cq = _refine_colors(Q, init_q)
    if sorted(cp) != sorted(cq):
        return False

    by_color_q: dict[int, list[int]] = {}
    for j, c in enumerate(cq):
        by_color_q.setdefault(c, []).append(j)
    # most-constrained first: rare colors early
    order = sorted(range(P.size), key=lambda i: (len(by_color_q[cp[i]]), cp[i]))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(depth: int) -> bool:
        if depth == P.size:
            return True
        i = order[depth]
        for j in by_color_q[cp[i]]:
            if j in used:
                continue
            ok = True
            for low in P.lower_covers_idx(i):
                if low in mapping and mapping[low] not in Q.lower_covers_idx(j):
                    ok = False
                    break
            if ok:
                for high in P.upper_covers_idx(i):
                    if high in mapping and mapping[high] not in Q.upper_covers_idx(j):
                        ok = False
                        break
            if ok:
                mapping[i] = j
                used.add(j)
                if backtrack(depth + 1):
                    return True
                del mapping[i]
                used.discard(j)
        return False

    return backtrack(0)


# -- cover-list text format ------------------------------------------------


def from_cover_lines(lines: Iterable[str]) -> FinitePoset:
    """Parse the plain text format: one ``a < b`` cover per line.

    Blank lines and ``#`` comments are skipped; a line holding a single
    token declares an isolated element.

    >>> from_cover_lines(["a < b", "b < c"]).size
    3
    """
    labels: list[str] = []
    seen: set[str] = set()
    pairs: list[tuple[str, str]] = []

    def note(tok: str) -> None:
        if tok not in seen:
            seen.add(tok)
            labels.append(tok)

    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            note(parts[0])
        elif len(parts) == 3 and parts[1] == "<":
            note(parts[0])
            note(parts[2])
            pairs.append((parts[0], parts[2]))
        else:
            raise ValueError(f"line {lineno}: expected 'a < b' or a bare element, got {raw!r}")
    return FinitePoset(labels, pairs)


def from_cover_file(path) -> FinitePoset:
    with open(path, "r", encoding="utf-8") as fh:
        return from_cover_lines(fh)


def to_cover_lines(P: FinitePoset) -> list[str]:
    """Serialize back to the cover-list format (round-trips with the parser)."""
    out = [f"{P.labels[i]} < {P.labels[j]}" for i, j in P.cover_pairs_idx()]
    covered = {i for i, _ in P.cover_pairs_idx()} | {j for _, j in P.cover_pairs_idx()}
    out.extend(str(P.labels[i]) for i in range(P.size) if i not in covered)
    return out
