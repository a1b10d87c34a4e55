import random

import networkx as nx
import pytest

from helpers import FIXTURES
from permorders import (
    FinitePoset,
    all_perms,
    classify,
    from_cover_file,
    from_cover_lines,
    ideal,
    identity,
    interval,
    is_boolean,
    is_distributive,
    is_lattice,
    is_modular,
    leq,
    length,
    longest_element,
    meet_join_tables,
    poset_isomorphic,
    to_cover_lines,
)

CAPTIONS = {
    "bowtie": (False, False, False, False),
    "pentagon": (True, False, False, False),
    "diamond3": (True, True, False, False),
    "capped_square": (True, True, True, False),
    "subsets4": (True, True, True, True),
    "crown": (False, False, False, False),
    "ring10": (True, False, False, False),
}


def load(name: str) -> FinitePoset:
    return from_cover_file(FIXTURES / f"{name}.txt")


def test_fixture_classifications():
    for name, flags in CAPTIONS.items():
        assert classify(load(name)).flags == flags, name


def test_fixture_shapes():
    assert load("subsets4").size == 16
    assert classify(load("subsets4")).rank == 4
    assert load("ring10").size == 10
    assert len(load("ring10").atoms_idx()) == 4
    assert load("crown").size == 6


def test_chain_and_singleton():
    chain = FinitePoset("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    rep = classify(chain)
    assert rep.flags == (True, True, True, False)
    single = FinitePoset(["e"], [])
    assert classify(single).flags == (True, True, True, True)
    assert classify(single).rank == 0


def test_two_element_boolean():
    two = FinitePoset(["lo", "hi"], [("lo", "hi")])
    assert classify(two).flags == (True, True, True, True)


def test_meet_join_tables():
    P = load("diamond3")
    meet, join = meet_join_tables(P)
    z = P.index("z")
    t = P.index("t")
    a, b = P.index("a"), P.index("b")
    assert join[a, b] == t and meet[a, b] == z
    assert join[z, a] == a and meet[t, b] == b
    assert meet_join_tables(load("crown")) is None
    assert meet_join_tables(load("bowtie")) is None


def test_law_checkers_require_lattice():
    crown = load("crown")
    with pytest.raises(ValueError):
        is_modular(crown)
    with pytest.raises(ValueError):
        is_distributive(crown)


def test_is_boolean_directly():
    assert is_boolean(load("subsets4"))
    assert not is_boolean(load("capped_square"))
    assert not is_boolean(load("bowtie"))


def test_lattice_flag_on_unbounded():
    assert not is_lattice(load("bowtie"))


def test_construction_validation():
    with pytest.raises(ValueError):
        FinitePoset(["a", "a"], [])
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [("a", "c")])
    with pytest.raises(ValueError):
        FinitePoset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(ValueError):
        FinitePoset([], [])


def test_cover_list_round_trip():
    for name in CAPTIONS:
        P = load(name)
        Q = from_cover_lines(to_cover_lines(P))
        assert poset_isomorphic(P, Q)
    iso = from_cover_lines(["a < b", "c"])
    assert iso.size == 3
    with pytest.raises(ValueError):
        from_cover_lines(["a << b"])


def test_classify_flag_hierarchy_on_intervals():
    perms = list(all_perms(4))
    rng = random.Random(3)
    for order in ("bruhat", "weak"):
        pairs = [(v, w) for v in perms for w in perms if leq(v, w, order)]
        for v, w in rng.sample(pairs, 40):
            rep = classify(interval(v, w, order))
            lat, mod, dist, boo = rep.flags
            assert (not mod or lat) and (not dist or mod) and (not boo or dist)
            if boo:
                # boolean intervals are graded with binomial level sizes
                assert rep.rank == rep.atom_count


def test_rank3_bruhat_interval_trichotomy():
    # every rank-3 Bruhat interval is a crown non-lattice, the cube, or the
    # ten-element ring
    ring = load("ring10")
    perms = list(all_perms(5))
    seen = set()
    for w in perms:
        for v in perms:
            if length(w) - length(v) == 3 and leq(v, w, "bruhat"):
                P = interval(v, w, "bruhat")
                rep = classify(P)
                if rep.is_boolean:
                    kind = "cube"
                    assert P.size == 8
                elif rep.is_lattice:
                    kind = "ring"
                    assert not rep.is_modular
                    assert poset_isomorphic(P, ring)
                else:
                    kind = "crown"
                seen.add(kind)
    assert seen == {"cube", "ring", "crown"}


def test_isomorphism_positive_and_negative():
    assert poset_isomorphic(load("ring10"), interval((1, 3, 2, 4), (3, 4, 1, 2), "bruhat"))
    hexagon = ideal((3, 2, 1), "weak")
    assert hexagon.size == 6
    assert not poset_isomorphic(hexagon, load("crown"))
    assert not poset_isomorphic(load("pentagon"), load("diamond3"))
    # the bounded crown is exactly the shape of the whole degree-3 order
    assert poset_isomorphic(load("crown"), ideal(longest_element(3), "bruhat"))


def test_isomorphism_against_networkx():
    def to_digraph(P):
        g = nx.DiGraph()
        g.add_nodes_from(range(P.size))
        g.add_edges_from(P.cover_pairs_idx())
        return g

    perms = list(all_perms(4))
    rng = random.Random(19)
    posets = []
    for _ in range(25):
        v, w = rng.choice(perms), rng.choice(perms)
        for order in ("bruhat", "weak"):
            if leq(v, w, order):
                posets.append(interval(v, w, order))
    for _ in range(150):
        P, Q = rng.choice(posets), rng.choice(posets)
        mine = poset_isomorphic(P, Q)
        ref = nx.is_isomorphic(to_digraph(P), to_digraph(Q))
        assert mine == ref


def test_ideal_of_boolean_element_is_cube():
    P = ideal((2, 1, 4, 3), "bruhat")
    rep = classify(P)
    assert rep.flags == (True, True, True, True)
    assert rep.rank == 2 and rep.atom_count == 2
