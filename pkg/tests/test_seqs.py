import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twobridge.slopes import ONE, Slope, cf_expand, cf_value
from twobridge.seqs import (
    CyclicSequence,
    ceil_star,
    contains_cyclic_factor,
    count_cyclic_factor,
    cyclic_s_sequence,
    cyclic_s_sequence_of_word,
    cyclic_t_sequence,
    decompose,
    floor_star,
    format_sequence,
    s_sequence,
    s_sequence_by_ceiling_count,
    s_sequence_by_floor_difference,
    s_sequence_by_strip_count,
    s_sequence_of_word,
    t_sequence,
)
from twobridge.words import cyclic_reduce, relator


def test_floor_ceil_star():
    assert floor_star(2) == 1
    assert floor_star(Fraction(7, 4)) == 1
    assert ceil_star(3) == 4
    assert ceil_star(Fraction(7, 4)) == 2
    assert floor_star(Slope(7, 4)) == 1
    assert floor_star(0) == -1
    assert floor_star(Fraction(-3, 2)) == -2
    with pytest.raises(ValueError):
        floor_star(Slope(1, 0))


def test_s_sequence_of_word_examples():
    assert s_sequence_of_word(relator(Slope(4, 7))) == (2, 2, 2, 1, 2, 2, 2, 1)
    assert s_sequence_of_word("ab") == (2,)
    assert s_sequence_of_word("") == ()
    with pytest.raises(ValueError):
        s_sequence_of_word("abBa")


def test_s_sequence_of_relator_matches_slope():
    assert s_sequence_of_word(relator(Slope(10, 37))) == s_sequence(Slope(10, 37))


def test_s_sequence_examples():
    assert s_sequence(Slope(10, 37)) == (
        4, 4, 4, 3, 4, 4, 3, 4, 4, 3, 4, 4, 4, 3, 4, 4, 3, 4, 4, 3)
    assert s_sequence(Slope(8, 35)) == (
        5, 4, 5, 4, 4, 5, 4, 4, 5, 4, 5, 4, 4, 5, 4, 4)
    assert s_sequence(Slope(10, 7)) == (
        1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0)
    assert s_sequence(ONE) == (1, 1)
    with pytest.raises(ValueError):
        s_sequence(Slope(0, 1))


def test_s_sequence_formulas_agree():
    for p in range(1, 80):
        for q in range(1, 3 * p):
            if math.gcd(q, p) == 1:
                r = Slope(q, p)
                assert (s_sequence_by_floor_difference(r)
                        == s_sequence_by_ceiling_count(r)
                        == s_sequence_by_strip_count(r))


def test_cyclic_s_sequence_of_word():
    cw = cyclic_reduce("ab")
    assert cyclic_s_sequence_of_word(cw) == CyclicSequence((2,))
    cw = cyclic_reduce(relator(Slope(4, 7)))
    assert cyclic_s_sequence_of_word(cw) == cyclic_s_sequence(Slope(4, 7))
    with pytest.raises(ValueError):
        cyclic_s_sequence_of_word(cyclic_reduce("a"))


def test_t_sequence_examples():
    assert t_sequence(Slope(10, 37)) == (3, 2, 2, 3, 2, 2)
    assert t_sequence(Slope(8, 35)) == (1, 2, 2, 1, 2, 2)
    with pytest.raises(ValueError):
        t_sequence(Slope(1, 3))  # single-term expansion


def test_t_sequence_recursion():
    for p in range(2, 80):
        for q in range(1, p):
            if math.gcd(q, p) != 1:
                continue
            terms = cf_expand(Slope(q, p)).terms
            if len(terms) < 2:
                continue
            if terms[1] == 1:
                expected = s_sequence(cf_value(terms[2:]))
            else:
                expected = s_sequence(cf_value((terms[1] - 1,) + terms[2:]))[::-1]
            assert t_sequence(Slope(q, p)) == expected
            assert cyclic_t_sequence(Slope(q, p)) == CyclicSequence(expected)


def test_decompose_examples():
    d = decompose(Slope(10, 37))
    assert (d.s1, d.s2) == ((4, 4, 4), (3, 4, 4, 3, 4, 4, 3))
    d = decompose(Slope(8, 35))
    assert (d.s1, d.s2) == ((5, 4, 5), (4, 4, 5, 4, 4))
    d = decompose(Slope(1, 3))
    assert (d.s1, d.s2) == ((), (3,))
    with pytest.raises(ValueError):
        decompose(ONE)
    with pytest.raises(ValueError):
        decompose(Slope(3, 2))


def test_decompose_occurrence_counts():
    for p in range(2, 60):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                r = Slope(q, p)
                d = decompose(r)
                cs = cyclic_s_sequence(r)
                if d.s1:
                    assert count_cyclic_factor(cs, d.s1) == 2
                assert count_cyclic_factor(cs, d.s2) == 2


def test_contains_cyclic_factor_examples():
    d = decompose(Slope(10, 37))
    cs = cyclic_s_sequence(Slope(10, 37))
    assert contains_cyclic_factor(cs, d.s1 + d.s2)
    assert not contains_cyclic_factor(cyclic_s_sequence(Slope(2, 7)), (3, 3))
    assert contains_cyclic_factor(CyclicSequence((1, 2, 3)), (3, 1))
    with pytest.raises(ValueError):
        contains_cyclic_factor(CyclicSequence((1, 2)), ())
    with pytest.raises(ValueError):
        contains_cyclic_factor(CyclicSequence((1, 2)), (1, 2, 1))


def test_cyclic_sequence_semantics():
    assert CyclicSequence((4, 3, 4, 3)) == CyclicSequence((3, 4, 3, 4))
    assert CyclicSequence((1, 2, 3)).is_palindromic() is False
    assert CyclicSequence((1, 2, 1, 2)).is_palindromic() is True
    assert str(CyclicSequence((4, 4, 3))) == "((3,4,4))"
    assert format_sequence((4, 4, 3)) == "(4,4,3)"


def test_half_period_and_palindrome():
    for p in range(2, 60):
        for q in range(1, p):
            if math.gcd(q, p) == 1:
                r = Slope(q, p)
                s = s_sequence(r)
                assert len(s) == 2 * q
                assert s[:q] == s[q:]
                assert cyclic_s_sequence(r).is_palindromic()


def test_shift_and_exchange_identities():
    for p in range(2, 60):
        for q in range(1, p):
            if math.gcd(q, p) != 1:
                continue
            terms = cf_expand(Slope(q, p)).terms
            if len(terms) < 2:
                continue
            m = terms[0]
            c = p - m * q
            s = s_sequence(Slope(q, p))
            s_qc = s_sequence(Slope(q, c))
            assert s == tuple(x + m for x in s_qc)
            assert s_qc[0] == 1 and s_qc[-1] == 0
            s_rev = s_sequence(Slope(q, q - c))
            n = 2 * q
            assert all(s_rev[i] + s_qc[(q - i - 1) % n] == 1 for i in range(n))
            if terms[1] == 1:
                assert t_sequence(Slope(q, c)) == s_sequence(Slope(q - c, c))


def test_block_lengths_match_endpoint_denominators():
    # The two halves of the splitting measure the fundamental-domain
    # endpoints: sum(S1) = p2 + 1 and sum(S2) = p1 - 1 where r1 = q1/p1
    # and r2 = q2/p2 (multi-term expansions; S1 is empty otherwise).
    from twobridge.slopes import fundamental_endpoints
    for p in range(2, 80):
        for q in range(1, p):
            if math.gcd(q, p) != 1:
                continue
            r = Slope(q, p)
            if len(cf_expand(r)) < 2:
                continue
            d = decompose(r)
            r1, r2 = fundamental_endpoints(r)
            assert sum(d.s1) == r2.den + 1
            assert sum(d.s2) == r1.den - 1


@given(st.lists(st.integers(0, 30), min_size=1, max_size=20),
       st.integers(0, 19))
def test_cyclic_sequence_rotation_invariant(terms, k):
    terms = tuple(terms)
    k %= len(terms)
    assert CyclicSequence(terms) == CyclicSequence(terms[k:] + terms[:k])
