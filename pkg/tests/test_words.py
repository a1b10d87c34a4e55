import pytest

from permorders import (
    all_perms,
    canonical_word,
    evaluate,
    format_word,
    identity,
    is_product_of_distinct_generators,
    is_reduced,
    length,
    longest_element,
    move_closure,
    reduced_words,
    support,
)


def test_evaluate():
    assert evaluate((1, 2, 3), 4) == (2, 3, 4, 1)
    assert evaluate((2, 1, 3, 2), 4) == (3, 4, 1, 2)
    assert evaluate((2, 3, 1, 2), 4) == (3, 4, 1, 2)  # same element, other word
    assert evaluate((), 3) == (1, 2, 3)
    with pytest.raises(ValueError):
        evaluate((4,), 4)
    with pytest.raises(ValueError):
        evaluate((0,), 4)


def test_is_reduced():
    assert is_reduced((1, 3), 4)
    assert not is_reduced((1, 1), 4)
    assert not is_reduced((2, 1, 2, 1), 4)


def test_reduced_words_examples():
    assert reduced_words((2, 1, 4, 3)) == {(1, 3), (3, 1)}
    assert reduced_words((2, 3, 4, 1)) == {(1, 2, 3)}
    assert reduced_words((3, 2, 1)) == {(1, 2, 1), (2, 1, 2)}
    assert reduced_words(identity(3)) == {()}
    assert len(reduced_words(longest_element(4))) == 16


def test_reduced_words_are_reduced():
    for w in all_perms(4):
        words = reduced_words(w)
        for word in words:
            assert len(word) == length(w)
            assert evaluate(word, 4) == w
        assert len(words) == len(set(words))


def test_reduced_words_cap():
    with pytest.raises(ValueError):
        reduced_words(longest_element(7))  # length 21 > default cap 20
    assert reduced_words((2, 1), max_length=1) == {(1,)}


def test_canonical_word_is_lex_min():
    assert canonical_word((2, 1, 4, 3)) == (1, 3)
    assert canonical_word(identity(4)) == ()
    for n in (3, 4, 5):
        for w in all_perms(n):
            assert canonical_word(w) == min(reduced_words(w))


def test_move_closure():
    assert move_closure((1, 3), 4) == {(1, 3), (3, 1)}
    assert move_closure((1, 2, 1), 3) == {(1, 2, 1), (2, 1, 2)}
    assert move_closure((1, 2, 3), 4) == {(1, 2, 3)}
    with pytest.raises(ValueError):
        move_closure((1, 1), 3)


def test_move_closure_reaches_all_reduced_words():
    # every pair of reduced words is linked by commutation/braid moves
    for w in all_perms(4):
        words = reduced_words(w)
        assert move_closure(min(words), 4) == words


def test_support():
    assert support((3, 2, 1, 4)) == {1, 2}
    assert support(identity(4)) == frozenset()
    assert support((2, 1, 4, 3)) == {1, 3}
    for w in all_perms(5):
        letter_sets = {frozenset(word) for word in reduced_words(w)}
        assert letter_sets == {support(w)}  # same set from every word


def test_is_product_of_distinct_generators():
    assert is_product_of_distinct_generators((2, 3, 4, 1))
    assert not is_product_of_distinct_generators((3, 2, 1, 4))
    assert is_product_of_distinct_generators(identity(4))
    for w in all_perms(4):
        brute = any(len(set(word)) == len(word) for word in reduced_words(w))
        assert is_product_of_distinct_generators(w) == brute


def test_format_word():
    assert format_word((1, 2, 1)) == "[1,2,1]"
    assert format_word(()) == "[]"
