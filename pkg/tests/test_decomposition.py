"""Slot maps, the triple assembly H, the maps h, i, j, exactness of
(j, h), and the decomposition of the coproduct action."""

from fractions import Fraction
from random import Random

import pytest

from harmstab.coproducts import delta_seq, delta_w
from harmstab.decomposition import (
    HTriple,
    bound_N,
    bound_N_prime,
    coproduct_defect,
    in_im_j,
    map_H,
    map_L,
    map_Mi,
    map_R,
    map_h,
    map_h_eval,
    map_i_eval,
    map_j,
    stabilization_report,
    verify_decomposition,
)
from harmstab.derivations import act_w, theta
from harmstab.freealg import E0, E1, NCPoly, all_words, bracket
from harmstab.sampling import random_cert, random_htriple
from harmstab.walg import Tensor2, WPoly, ytilde

Y1 = ytilde(1)
Y2 = ytilde(2)
E0E1 = E0 * E1


def test_slot_map_examples():
    assert map_L(1, E1 * E1) == Tensor2.of(Y1, Y1).scale(2)
    assert map_L(1, E0E1) == -Tensor2.of(Y1, Y1)
    assert map_Mi(1, E0E1) == -(Y2 + Y1 * Y1)
    assert map_Mi(2, E0E1) == Y1
    assert map_R(2, E0E1).is_zero()


def test_slot_maps_reject_bad_input():
    with pytest.raises(ValueError):
        map_L(0, E0E1)
    with pytest.raises(ValueError):
        map_Mi(1, NCPoly.one())


def test_map_H_of_e0e1():
    t = map_H(E0E1)
    assert t.a == {0: -Tensor2.of(Y1, Y1)}
    assert t.b == {}
    assert t.z == {0: -(Y2 + Y1 * Y1), 1: Y1}


def test_map_H_of_e0():
    # (delta - id (x) 1 - 1 (x) id)(1) = -1 (x) 1 feeds both k=1 slots
    t = map_H(E0)
    minus_unit = -Tensor2.one()
    assert t.a == {1: minus_unit}
    assert t.b == {1: minus_unit}
    assert t.z == {}


def test_map_H_linear():
    rng = Random(31)
    for _ in range(10):
        from harmstab.sampling import random_word_poly

        v = random_word_poly(rng, 4)
        vp = random_word_poly(rng, 4)
        assert map_H(v + vp) == map_H(v) + map_H(vp) or (v + vp).is_zero()


def test_map_H_slot_homogeneity():
    # a degree-d basis word has exponent sum d+1, so slot k holds
    # weight d-k (a and b sides) and slot i holds weight d-i (z side)
    for d in range(1, 7):
        for w in all_words(d):
            t = map_H(NCPoly.from_word(w))
            for k, ak in t.a.items():
                for (u, v) in ak.support():
                    assert sum(u) + sum(v) == d - k
            for k, bk in t.b.items():
                for (u, v) in bk.support():
                    assert sum(u) + sum(v) == d - k
            for i, zi in t.z.items():
                assert zi.weights() == (d - i,)


def test_map_h_examples():
    cert = {0: Fraction(1), 2: Fraction(-3)}
    s = map_h(map_j(cert))
    assert all(s(n).is_zero() for n in range(1, 13))
    a_only = HTriple({0: Tensor2.one()}, {}, {})
    for n in range(1, 7):
        assert map_h_eval(a_only, n) == delta_seq(n)
    z_only = HTriple({}, {}, {0: Y1})
    for n in range(1, 7):
        yn = ytilde(n)
        assert map_h_eval(z_only, n) == Tensor2.of(Y1, yn) + Tensor2.of(yn, Y1)


def test_map_i_evaluation():
    s = map_h(map_H(E0E1))
    assert map_i_eval(s, (4,)) == s(4)
    assert map_i_eval(s, ()).is_zero()
    expected = s(1) * delta_w(Y1) + delta_w(Y1) * s(1)
    assert map_i_eval(s, (1, 1)) == expected


def test_map_j_shapes():
    t = map_j([1])
    assert t.a == {0: Tensor2.one()} and t.b == {0: Tensor2.one()} and t.z == {}
    assert map_j({}).is_zero()


def test_in_im_j_certificates():
    cert = {0: Fraction(2), 3: Fraction(-1, 2)}
    ok, recovered = in_im_j(map_j(cert))
    assert ok and recovered == cert
    ok, recovered = in_im_j(map_H(E0))
    assert ok and recovered == {1: Fraction(-1)}
    ok, _ = in_im_j(map_H(theta(bracket(E0, E1))))
    assert not ok


def test_H_of_corrected_bracket_slots():
    # a = 0, b_0 = 2 y1 (x) y1, z_0 = -2(y2 + y1^2), z_1 = 2 y1
    t = map_H(theta(bracket(E0, E1)))
    assert t.a == {}
    assert t.b == {0: Tensor2.of(Y1, Y1).scale(2)}
    assert t.z == {0: (Y2 + Y1 * Y1).scale(-2), 1: Y1.scale(2)}


def test_verify_decomposition_examples():
    assert verify_decomposition(E0E1, 6)
    assert verify_decomposition(theta(bracket(E0, E1)), 6)
    v = theta(bracket(E0, E1))
    s = map_h(map_H(v))
    for n in range(2, 7):
        value = s(n)
        assert value == act_w(v, ytilde(n))
        assert not value.is_zero()


def test_coproduct_defect_of_unit():
    assert coproduct_defect(WPoly.one()) == -Tensor2.one()


def test_exactness_both_ways():
    rng = Random(32)
    hits = 0
    for _ in range(80):
        if rng.random() < 0.3:
            t = map_j(random_cert(rng))
            hits += 1
        else:
            t = random_htriple(rng, 5)
        member, _ = in_im_j(t)
        window = 2 * bound_N(t) + 4
        vanishes = all(map_h_eval(t, n).is_zero() for n in range(1, window + 1))
        assert member == vanishes
    assert hits > 0


def test_stabilization_of_scalar_triples():
    rng = Random(33)
    for _ in range(10):
        t = map_j(random_cert(rng))
        rep = stabilization_report(t, k_max=4)
        assert rep["ok"]


def test_stabilization_single_slot():
    t = HTriple({0: Tensor2.of(Y1, Y1)}, {}, {})
    rep = stabilization_report(t, k_max=2)
    assert rep["ok"]


def test_stabilization_recovers_H_slots():
    t = map_H(E0E1)
    assert stabilization_report(t, k_max=3)["ok"]
    assert bound_N(t) >= 0 and bound_N_prime(t) >= 0


def test_stabilization_random_triples():
    rng = Random(34)
    for _ in range(15):
        t = random_htriple(rng, 5)
        assert stabilization_report(t, k_max=4)["ok"]
