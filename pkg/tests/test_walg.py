"""The W algebra in harmonic generators, the module M, and the
structural operators (strips, inv, counit, degree functions)."""

from fractions import Fraction
from random import Random

import pytest

from harmstab import linalg
from harmstab.freealg import E0, E1, NCPoly, all_words, bracket
from harmstab.sampling import random_wpoly
from harmstab.walg import (
    MElem,
    Tensor2,
    WPoly,
    deg,
    deg1,
    deg1_prime,
    deg2,
    deg2_prime,
    deg_prime,
    epsilon,
    inv,
    m_from_y_alphabet,
    m_to_y_alphabet,
    partial,
    partial1,
    partial2,
    partial_prime,
    pi,
    sigma,
    to_m,
    w_from_v,
    w_to_v,
    y_embed,
    y_monomial,
    ytilde,
)

Y1 = ytilde(1)
Y2 = ytilde(2)
Y3 = ytilde(3)


def test_y_embed_examples():
    assert y_embed((2,)) == E0 * E1
    assert y_embed((1, 2)) == E1 * E0 * E1
    assert w_from_v(E1 * E1) == WPoly({(1, 1): 1})


def test_w_round_trip():
    rng = Random(3)
    for _ in range(20):
        a = random_wpoly(rng, 6, terms=4)
        assert w_from_v(w_to_v(a)) == a


def test_w_from_v_rejects_words_ending_in_e0():
    with pytest.raises(ValueError):
        w_from_v(E1 * E0)


def test_pi_examples():
    assert pi(E0 * E1) == Y2
    assert pi(E1 * E0).is_zero()
    assert pi(E0 * E1 + (E1 * E0).scale(3)) == Y2


def test_to_m_examples():
    assert to_m(E1 * E0).is_zero()
    assert to_m(E0 * E1) == MElem({(2,): 1})
    assert to_m(bracket(E0, E1)) == MElem({(2,): 1})


def test_index_conventions():
    assert ytilde(0) == WPoly({(): -1})
    assert ytilde(-3).is_zero()
    assert y_monomial((2, 0)) == WPoly({(2,): -1})
    assert y_monomial((2, -1)).is_zero()


def test_partial_examples():
    assert partial(2, Y1 * Y2) == Y1
    assert partial(1, Y1 * Y2).is_zero()
    assert partial(1, Y2 * Y1 + Y1.scale(3)) == Y2 + WPoly.one().scale(3)


def test_partial_leibniz():
    # partial(n, ab) = a*partial(n, b) + partial(n, a)*epsilon(b)
    rng = Random(11)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = random_wpoly(rng, 4)
        b = random_wpoly(rng, 4)
        assert partial(n, a * b) == a * partial(n, b) + partial(n, a).scale(epsilon(b))


def test_partial_prime_leibniz():
    rng = Random(12)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = random_wpoly(rng, 4)
        b = random_wpoly(rng, 4)
        assert partial_prime(n, a * b) == partial_prime(n, a) * b + partial_prime(
            n, b
        ).scale(epsilon(a))


def test_inv_epsilon_sigma_examples():
    assert inv(Y1 * Y2) == Y2 * Y1
    assert epsilon(WPoly.one().scale(5) + Y3) == 5
    assert sigma(Tensor2.of(Y1, Y2)) == Tensor2.of(Y2, Y1)


def test_partial_prime_is_conjugate_of_partial():
    rng = Random(13)
    for _ in range(30):
        n = rng.randint(1, 5)
        a = random_wpoly(rng, 8, terms=4)
        assert partial_prime(n, a) == inv(partial(n, inv(a)))


def test_degree_examples():
    assert deg(Y3 * Y1 + Y2) == 2
    assert deg(WPoly.one()) == 0
    assert deg1(Tensor2.of(Y2, ytilde(5))) == 2


def test_vanishing_bounds():
    rng = Random(14)
    for _ in range(25):
        a = random_wpoly(rng, 6, terms=4)
        assert partial(deg(a) + 1, a).is_zero()
        assert partial_prime(deg_prime(a) + 1, a).is_zero()
        t = Tensor2.of(a, random_wpoly(rng, 4))
        assert partial1(deg1(t) + 1, t).is_zero()
        assert partial2(deg2(t) + 1, t).is_zero()
        assert deg1_prime(t) <= 6 and deg2_prime(t) <= 4


def test_y_alphabet_dictionary():
    assert m_to_y_alphabet(MElem({(2,): 1})) == {(2,): Fraction(-1)}
    assert m_to_y_alphabet(MElem.unit()) == {(): Fraction(1)}
    assert m_to_y_alphabet(MElem({(1, 1): 1})) == {(1, 1): Fraction(1)}
    m = MElem({(2,): 1, (1, 1, 1): Fraction(1, 2)})
    assert m_from_y_alphabet(m_to_y_alphabet(m)) == m


def test_m_dimension_per_degree():
    # to_m on the word basis has rank 2^(d-1) with kernel V*e0
    for d in range(1, 11):
        ech = linalg.Echelon()
        kernel_words = 0
        for w in all_words(d):
            m = to_m(NCPoly.from_word(w))
            if m.is_zero():
                kernel_words += 1
            else:
                ech.insert(dict(m.items()))
        assert ech.rank == 2 ** (d - 1)
        assert kernel_words == 2 ** (d - 1)
