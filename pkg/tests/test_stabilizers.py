"""Per-degree stabilizer subspaces and the graded equality between the
two coproduct stabilizers."""

from fractions import Fraction
from random import Random

import sympy

from harmstab.coproducts import m_basis
from harmstab.derivations import act_m, act_w, ihara_bracket, theta
from harmstab.freealg import (
    E0,
    E1,
    NCPoly,
    all_words,
    bracket,
    lyndon_basis,
)
from harmstab.stabilizers import (
    check_inclusion_aux,
    stab_m_lie,
    stab_report_json,
    stab_w_lie,
    stab_w_v0,
    subspace_element,
    verify_main_equality,
)
from harmstab.walg import MElem, ytilde


def _word_coords(v: NCPoly, d: int) -> dict:
    words = list(all_words(d))
    index = {w: j for j, w in enumerate(words)}
    return {index[w]: x for w, x in v.items()}


def test_stab_w_v0_degree_1():
    s = stab_w_v0(1)
    assert s.dim == 2
    assert s.contains(_word_coords(E0, 1))
    assert s.contains(_word_coords(E1, 1))


def test_stab_w_v0_degree_2_excludes_corrected_bracket():
    s = stab_w_v0(2)
    v = theta(bracket(E0, E1))
    assert not s.contains(_word_coords(v, 2))


def test_stab_w_lie_low_degrees():
    assert stab_w_lie(1).dim == 2
    assert stab_w_lie(2).dim == 0
    assert stab_w_lie(3).dim == 1


def test_stab_m_lie_low_degrees():
    s1 = stab_m_lie(1)
    assert s1.dim == 2
    assert stab_m_lie(2).dim == 0
    assert stab_m_lie(3).dim == 1


def test_theta_preimage_consistency():
    # x in the lie stabilizer iff theta(x) lies in the V0 stabilizer span
    for d in range(1, 7):
        word_space = stab_w_v0(d)
        lie_space = stab_w_lie(d)
        for vec in lie_space.vectors:
            x = subspace_element(lie_space, vec)
            tx = theta(x)
            if tx.is_zero():
                continue
            assert word_space.contains(_word_coords(tx, d))


def test_lie_closure_of_stabilizers():
    spaces = {d: stab_w_lie(d) for d in range(1, 8)}
    for d1 in range(1, 7):
        for d2 in range(1, 8 - d1):
            for va in spaces[d1].vectors:
                for vb in spaces[d2].vectors:
                    x = subspace_element(spaces[d1], va)
                    y = subspace_element(spaces[d2], vb)
                    br = ihara_bracket(x, y)
                    if br.is_zero():
                        continue
                    target = stab_w_lie(d1 + d2)
                    coords = {}
                    basis = lyndon_basis(d1 + d2)
                    # br expands over the lyndon basis; solve by elimination
                    residual = br
                    for j, el in enumerate(basis):
                        c = _leading_coeff(residual, el)
                        if c:
                            coords[j] = c
                            residual = residual - el.poly.scale(c)
                    assert residual.is_zero()
                    assert target.contains(coords)


def _leading_coeff(x: NCPoly, el) -> Fraction:
    # lyndon polys have coefficient 1 on their own word
    return x.coeff(el.word)


def test_truncated_action_agrees_with_exact_criterion():
    for d in range(1, 7):
        space = stab_w_lie(d)
        for vec in space.vectors:
            x = subspace_element(space, vec)
            tx = theta(x)
            for n in range(1, 9):
                assert act_w(tx, ytilde(n)).is_zero()


def test_stab_m_direct_definition_cross_check():
    for d in range(1, 5):
        space = stab_m_lie(d)
        for vec in space.vectors:
            x = subspace_element(space, vec)
            for w in range(0, d + 5):
                for c in m_basis(w):
                    assert act_m(x, MElem({c: 1})).is_zero()


def test_inclusion_into_primitive_preimage():
    for d in range(1, 7):
        assert check_inclusion_aux(d)


def test_main_equality_low_degrees():
    r1 = verify_main_equality(1)
    assert (r1["dim_stab_w"], r1["dim_stab_m"], r1["equal"]) == (2, 2, True)
    r2 = verify_main_equality(2)
    assert (r2["dim_stab_w"], r2["dim_stab_m"], r2["equal"]) == (0, 0, True)
    assert r1["inclusion_m_in_w"] and r2["inclusion_m_in_w"]


def test_stab_dims_against_truncated_sympy_oracle():
    # independent route: nullspace of the truncated linear system
    # act_w(theta(x), y[n]) = 0 for n <= d + 2, over the lyndon basis
    for d in range(1, 7):
        basis = lyndon_basis(d)
        columns = []
        for el in basis:
            tx = theta(el.poly)
            col = {}
            for n in range(1, d + 3):
                for key, x in act_w(tx, ytilde(n)).items():
                    col[(n, key)] = x
            columns.append(col)
        keys = sorted({k for col in columns for k in col})
        mat = sympy.zeros(len(keys), len(columns))
        for j, col in enumerate(columns):
            for i, key in enumerate(keys):
                x = col.get(key, Fraction(0))
                mat[i, j] = sympy.Rational(x.numerator, x.denominator)
        assert len(mat.nullspace()) == stab_w_lie(d).dim


def test_report_json_shape():
    rep = stab_report_json(3)
    assert rep["degree"] == 3
    assert rep["equal"] and rep["inclusion_aux"]
    assert rep["dim_stab_w"] == len(rep["basis_w"]) == 1
    assert rep["dim_stab_m"] == len(rep["basis_m"]) == 1


def test_subspace_equality_is_normal_form_equality():
    assert stab_w_lie(5) == stab_m_lie(5)
    assert stab_w_lie(5) != stab_w_lie(3)
