import math

import pytest
from hypothesis import given, strategies as st

from twobridge.slopes import INFINITY, ONE, ZERO, Slope
from twobridge.words import (
    CyclicWord,
    RelatorMethod,
    apply_automorphism,
    canonical_rotation,
    cyclic_equal,
    cyclic_reduce,
    format_word,
    free_reduce,
    half_relator,
    inverse_word,
    is_alternating,
    is_cyclically_alternating,
    is_cyclically_reduced,
    is_reduced,
    letter,
    parse_word,
    relator,
    relator_by_line_walk,
)
from twobridge.seqs import s_sequence_of_word

words = st.text(alphabet="aAbB", max_size=40)


def test_letter_values():
    assert letter("a", 1) == "a"
    assert letter("b", -1) == "B"
    with pytest.raises(ValueError):
        letter("c", 1)
    with pytest.raises(ValueError):
        letter("a", 2)


def test_half_relator_examples():
    assert half_relator(Slope(4, 7)) == "bABabA"
    assert half_relator(ONE) == ""
    with pytest.raises(ValueError):
        half_relator(Slope(3, 2))
    with pytest.raises(ValueError):
        half_relator(ZERO)


def test_half_relator_runs_palindromic():
    runs = s_sequence_of_word(half_relator(Slope(5, 17)))
    assert runs == runs[::-1]


def test_relator_examples():
    assert relator(Slope(4, 7)) == "abABabAbaBAbaB"
    assert relator(ZERO) == "ab"
    assert relator(INFINITY) == ""
    assert relator(ONE) == "aB"
    with pytest.raises(ValueError):
        relator(Slope(3, 2))
    with pytest.raises(ValueError):
        relator(Slope(-1, 3))


def test_relator_generators_agree():
    for p in range(1, 61):
        for q in range(1, p + 1):
            if math.gcd(q, p) == 1:
                r = Slope(q, p)
                u = relator(r, RelatorMethod.RILEY)
                assert u == relator(r, RelatorMethod.CEIL)
                assert u == relator_by_line_walk(r)
                assert len(u) == 2 * p
                assert is_cyclically_alternating(u)
                assert is_cyclically_reduced(u)


def test_relator_never_cyclically_equal_to_inverse():
    for p in range(2, 40):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                u = relator(Slope(q, p))
                assert not cyclic_equal(u, inverse_word(u))
                assert cyclic_equal(u, inverse_word(u), allow_inverse=True)


def test_free_reduce():
    assert free_reduce("abBa") == "aa"
    assert free_reduce("aA") == ""
    assert free_reduce("") == ""
    assert free_reduce("abAB") == "abAB"


def test_cyclic_reduce():
    assert cyclic_reduce("Babb").letters == canonical_rotation("ab")
    assert str(cyclic_reduce("Babb")) == "(ab)"
    assert cyclic_reduce("aA") == CyclicWord("")
    assert len(cyclic_reduce(relator(Slope(4, 7)))) == 14


def test_cyclic_word_equality_and_order():
    assert CyclicWord("ab") == CyclicWord("ba")
    assert CyclicWord("BA").letters == "AB"  # a < A < b < B
    assert CyclicWord("bA").letters == "Ab"
    assert hash(CyclicWord("ab")) == hash(CyclicWord("ba"))
    with pytest.raises(ValueError):
        CyclicWord("aA")
    with pytest.raises(ValueError):
        CyclicWord("baB")  # wrap-around cancellation


def test_cyclic_equal():
    assert cyclic_equal("ab", "ba")
    assert not cyclic_equal("ab", "aB")
    assert cyclic_equal("", "")
    assert cyclic_equal("ab", "BA", allow_inverse=True)


def test_apply_automorphism_examples():
    assert apply_automorphism("ab", "a", "b") == "ab"
    assert apply_automorphism(relator(ZERO), "a", "B") == relator(ONE)
    u = relator(Slope(4, 7))
    swapped = apply_automorphism(u, "b", "a")
    assert cyclic_equal(u, swapped, allow_inverse=True)
    with pytest.raises(ValueError):
        apply_automorphism("ab", "a", "A")
    with pytest.raises(ValueError):
        apply_automorphism("ab", "ab", "b")


def test_automorphism_shift_small():
    for p in range(1, 25):
        for q in range(1, p + 1):
            if math.gcd(q, p) == 1:
                s = Slope(q, p)
                shifted = apply_automorphism(relator(s), "a", "B")
                assert cyclic_equal(shifted, relator_by_line_walk(s + 1),
                                    allow_inverse=True)


def test_word_text_format():
    assert format_word("") == "1"
    assert format_word("abA") == "abA"
    assert parse_word("1") == ""
    assert parse_word("abAB") == "abAB"
    with pytest.raises(ValueError):
        parse_word("abc")


@given(words)
def test_free_reduce_is_reduced_and_idempotent(w):
    v = free_reduce(w)
    assert is_reduced(v)
    assert free_reduce(v) == v


@given(words)
def test_inverse_word_involution(w):
    assert inverse_word(inverse_word(w)) == w
    assert free_reduce(w + inverse_word(w)) == ""


@given(words, st.integers(0, 39))
def test_canonical_rotation_is_rotation_invariant(w, k):
    if w:
        rotated = w[k % len(w):] + w[:k % len(w)]
        assert canonical_rotation(rotated) == canonical_rotation(w)


@given(words)
def test_alternation_is_rotation_safe(w):
    if is_cyclically_alternating(w) and len(w) >= 2:
        assert all(is_alternating(rot)
                   for rot in (w[i:] + w[:i] for i in range(len(w))))
