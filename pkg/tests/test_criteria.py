import random

import pytest

from permorders import (
    all_perms,
    boolean_over_support_bruhat,
    boolean_over_support_weak,
    bruhat_atom_interval_boolean,
    bruhat_atom_interval_class,
    bruhat_atom_interval_lattice,
    bruhat_leq,
    classify,
    classify_interval_report,
    classify_poi_report,
    generator,
    ideal,
    identity,
    interval,
    inverse,
    is_product_of_distinct_generators,
    length,
    multiply,
    poi_bruhat_class,
    poi_weak_class,
    poset_isomorphic,
    reduced_words,
    support,
    weak_interval_class,
    weak_leq,
)


def test_poi_bruhat_class_examples():
    assert poi_bruhat_class((3, 4, 1, 2)).flags == (False, False, False, False)
    assert poi_bruhat_class((2, 1, 4, 3)).flags == (True, True, True, True)
    rep = poi_bruhat_class(identity(4))
    assert rep.flags == (True, True, True, True)
    assert rep.rank == 0 and rep.atom_count == 0


def test_poi_weak_class_examples():
    assert poi_weak_class((3, 2, 1)).flags == (True, False, False, False)
    assert poi_weak_class((2, 4, 1, 3)).flags == (True, True, True, False)
    assert poi_weak_class((2, 1, 4, 3)).flags == (True, True, True, True)


def test_weak_interval_class_example():
    # v^-1 w = 1342, fully commutative but not free
    rep = weak_interval_class((2, 1, 3, 4), (2, 3, 4, 1))
    assert rep.flags == (True, True, True, False)
    assert rep.rank == 2
    with pytest.raises(ValueError):
        weak_interval_class((2, 1, 4, 3), (2, 3, 4, 1))


def test_atom_boolean_examples():
    assert bruhat_atom_interval_boolean(1, (2, 3, 4, 1))
    assert not bruhat_atom_interval_boolean(2, (3, 4, 1, 2))
    assert bruhat_atom_interval_boolean(2, generator(4, 2))  # single point
    with pytest.raises(ValueError):
        bruhat_atom_interval_boolean(2, (2, 1, 4, 3))  # s2 not below w
    with pytest.raises(ValueError):
        bruhat_atom_interval_boolean(5, (2, 1, 4, 3))


def test_atom_lattice_examples():
    assert bruhat_atom_interval_lattice(2, (3, 4, 1, 2))
    assert not bruhat_atom_interval_boolean(2, (3, 4, 1, 2))
    # both reduced words of 3214 must be scanned: only 212 shows the split
    assert bruhat_atom_interval_boolean(1, (3, 2, 1, 4))
    assert bruhat_atom_interval_lattice(1, (3, 2, 1, 4))
    P = interval(generator(4, 1), (3, 2, 1, 4), "bruhat")
    assert classify(P).flags == (True, True, True, True)


def test_boolean_over_support_examples():
    assert boolean_over_support_bruhat((3, 2, 1, 4))  # s1 s2 s1
    assert not boolean_over_support_bruhat((3, 4, 1, 2))
    assert boolean_over_support_bruhat((2, 1, 4, 3))
    assert boolean_over_support_bruhat(identity(4))
    assert boolean_over_support_weak((2, 1, 4, 3))
    assert not boolean_over_support_weak((2, 3, 4, 1))


def test_boolean_over_support_bruhat_structurally():
    # brute force the definition at n = 4
    for w in all_perms(4):
        brute = all(
            classify(interval(generator(4, k), w, "bruhat")).is_boolean
            for k in sorted(support(w))
        )
        assert boolean_over_support_bruhat(w) == brute, w


def test_poi_agreement_exhaustive():
    for n in (2, 3, 4, 5):
        for w in all_perms(n):
            assert poi_bruhat_class(w).flags == classify(ideal(w, "bruhat")).flags, w
            assert poi_weak_class(w).flags == classify(ideal(w, "weak")).flags, w


def test_atom_interval_agreement_exhaustive():
    for n in (2, 3, 4, 5):
        for w in all_perms(n):
            for k in sorted(support(w)):
                rep = bruhat_atom_interval_class(k, w)
                struct = classify(interval(generator(n, k), w, "bruhat"))
                assert rep.flags == struct.flags, (k, w)


def test_weak_interval_agreement_exhaustive():
    for n in (2, 3, 4):
        perms = list(all_perms(n))
        for v in perms:
            for w in perms:
                if weak_leq(v, w):
                    rep = weak_interval_class(v, w)
                    struct = classify(interval(v, w, "weak"))
                    assert rep.flags == struct.flags, (v, w)


def test_weak_interval_mirrors_quotient_ideal():
    # [v, w] in weak order is isomorphic to the ideal of v^-1 w
    perms = list(all_perms(5))
    rng = random.Random(23)
    pairs = [(v, w) for v in perms for w in perms if weak_leq(v, w)]
    for v, w in rng.sample(pairs, 400):
        P = interval(v, w, "weak")
        Q = ideal(multiply(inverse(v), w), "weak")
        assert poset_isomorphic(P, Q), (v, w)


def test_repeated_side_letter_never_gives_a_lattice():
    # if any reduced word of w repeats a letter strictly on one side of an
    # occurrence of s_k, then [s_k, w] is not a lattice
    for n in (3, 4, 5):
        for w in all_perms(n):
            if length(w) > n + 1:
                continue
            for k in sorted(support(w)):
                triggered = False
                for word in reduced_words(w):
                    for p, letter in enumerate(word):
                        if letter != k:
                            continue
                        for side in (word[:p], word[p + 1 :]):
                            if len(set(side)) != len(side):
                                triggered = True
                if triggered:
                    assert not classify(
                        interval(generator(n, k), w, "bruhat")
                    ).is_lattice, (k, w)


def test_sampled_agreement_s6():
    # one seeded pass over >= 10^4 mixed subjects in degree 6
    n = 6
    rng = random.Random(2024)
    perms = list(all_perms(n))
    subjects = 0

    for w in perms:  # all 720 Bruhat ideals
        assert poi_bruhat_class(w).flags == classify(ideal(w, "bruhat")).flags
        subjects += 1
    for w in perms:  # all 720 weak ideals
        assert poi_weak_class(w).flags == classify(ideal(w, "weak")).flags
        subjects += 1
    for w in perms:  # all Bruhat atom intervals: ~3.4k subjects
        for k in sorted(support(w)):
            rep = bruhat_atom_interval_class(k, w)
            struct = classify(interval(generator(n, k), w, "bruhat"))
            assert rep.flags == struct.flags, (k, w)
            subjects += 1
    for w in perms:  # all weak atom intervals
        for k in range(1, n):
            if w.index(k) > w.index(k + 1):
                rep = weak_interval_class(generator(n, k), w)
                struct = classify(interval(generator(n, k), w, "weak"))
                assert rep.flags == struct.flags, (k, w)
                subjects += 1
    # sampled general weak intervals: walk lower covers down from a random
    # top so every drawn pair is comparable
    from permorders import weak_covers_down

    for _ in range(3600):
        w = rng.choice(perms)
        v = w
        for _ in range(rng.randint(0, length(w))):
            downs = weak_covers_down(v)
            if not downs:
                break
            v = rng.choice(downs)
        assert weak_leq(v, w)
        assert weak_interval_class(v, w).flags == classify(interval(v, w, "weak")).flags
        subjects += 1
    assert subjects >= 10_000


def test_combined_reports():
    rep = classify_poi_report((3, 4, 1, 2), "bruhat", structural=True)
    assert rep.agree is True
    assert rep.predicate.flags == (False, False, False, False)
    rep = classify_interval_report(generator(4, 2), (3, 4, 1, 2), "bruhat", structural=True)
    assert rep.agree is True
    assert rep.predicate.flags == (True, False, False, False)
    assert rep.structural.rank == 3
    # general Bruhat bottoms have no closed rule
    rep = classify_interval_report((2, 1, 4, 3), (2, 3, 4, 1), "bruhat", structural=True)
    assert rep.predicate is None and rep.agree is None
    assert rep.structural is not None
    rep = classify_interval_report(identity(4), (2, 1, 4, 3), "bruhat")
    assert rep.predicate.flags == (True, True, True, True)
    assert rep.structural is None and rep.agree is None


def test_report_serialization():
    rep = classify_poi_report((2, 1, 4, 3), "weak", structural=True)
    d = rep.as_dict()
    assert d["order"] == "weak"
    assert d["agree"] is True
    assert d["predicate"]["is_boolean"] is True
    assert d["structural"]["rank"] == 2
