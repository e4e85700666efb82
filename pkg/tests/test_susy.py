"""Partner potentials and component equations of the 4x4 potential equation."""

import pytest

from lleq.equations import LleError
from lleq.matrices import OpMatrix, tensor
from lleq.operators import OperatorPoly, dx, f_sym, g_sym, i_dt, t_pow, x_pow
from lleq.parsing import parse_operator
from lleq.susy import (build_potential_operator, derive_components, partner_potentials,
                       prepotential_derivative, square_closed_form,
                       square_potential_operator, verify_susy)
from lleq.words import Word, letter_matrix, word_matrix

F = f_sym()


def test_build_potential_operator():
    d_op = build_potential_operator(F)
    expected = word_matrix(Word("QI")) - word_matrix(Word("XY")) * dx() \
        - word_matrix(Word("XA")) * F
    assert d_op == expected


def test_zero_prepotential_reduces_to_free():
    d_op = build_potential_operator(OperatorPoly.zero())
    assert d_op == word_matrix(Word("QI")) - word_matrix(Word("XY")) * dx()
    sq = square_potential_operator(OperatorPoly.zero())
    assert sq == OpMatrix.identity(4) * (i_dt() + dx(power=2))


def test_prepotential_rejected_forms():
    with pytest.raises(LleError):
        build_potential_operator(dx())
    with pytest.raises(LleError):
        build_potential_operator(t_pow())
    with pytest.raises(LleError):
        partner_potentials(F * dx())


def test_partner_potentials_formal():
    v_plus, v_minus = partner_potentials(F)
    assert v_plus == F * F + f_sym(1)
    assert v_minus == F * F - f_sym(1)


def test_partner_potentials_inverse_x():
    f = parse_operator("g*x^-1")
    assert prepotential_derivative(f) == -g_sym() * x_pow(-2)
    v_plus, v_minus = partner_potentials(f)
    assert v_plus == (g_sym(2) - g_sym()) * x_pow(-2)
    assert v_minus == (g_sym(2) + g_sym()) * x_pow(-2)


def test_partner_potentials_zero():
    assert partner_potentials(OperatorPoly.zero()) == (OperatorPoly.zero(),
                                                       OperatorPoly.zero())


def test_square_matches_closed_form():
    for f in (F, parse_operator("g*x^-1"), parse_operator("x"), OperatorPoly.zero()):
        assert square_potential_operator(f) == square_closed_form(f)


def test_square_closed_form_structure():
    sq = square_potential_operator(F)
    fp = f_sym(1)
    expected = OpMatrix.identity(4) * (i_dt() + dx(power=2) - F * F) \
        - tensor(letter_matrix("I"), letter_matrix("X")) * fp
    assert sq == expected


def test_components_first_order_forms():
    cs = derive_components(F)
    algebraic = {(t, s): op for t, s, op in cs.algebraic}
    assert algebraic[(3, 2)] == dx() + F
    assert algebraic[(4, 1)] == dx() - F
    first = {(t, s): op for t, s, op in cs.first_order}
    assert first[(1, 4)] == -dx() - F
    assert first[(2, 3)] == -dx() + F


def test_components_schrodinger_forms():
    cs = derive_components(F)
    v_plus, v_minus = partner_potentials(F)
    sch = dict(cs.schrodinger)
    assert sch[1] == -dx(power=2) + v_plus
    assert sch[2] == -dx(power=2) + v_minus
    assert sch[3] == -dx(power=2) + v_plus
    assert sch[4] == -dx(power=2) + v_minus


def test_second_order_follows_from_first_order():
    # substitution residual: composing the first-order relations must land
    # exactly on the recorded second-order operators
    cs = derive_components(parse_operator("g*x^-1"))
    algebraic = {(t, s): op for t, s, op in cs.algebraic}
    first = {(t, s): op for t, s, op in cs.first_order}
    sch = dict(cs.schrodinger)
    assert (first[(1, 4)] * algebraic[(4, 1)] - sch[1]).is_zero()
    assert (first[(2, 3)] * algebraic[(3, 2)] - sch[2]).is_zero()
    assert (algebraic[(3, 2)] * first[(2, 3)] - sch[3]).is_zero()
    assert (algebraic[(4, 1)] * first[(1, 4)] - sch[4]).is_zero()


def test_diagonal_carries_partner_potentials():
    sq = square_potential_operator(F)
    v_plus, v_minus = partner_potentials(F)
    base = i_dt() + dx(power=2)
    assert sq.rows[0][0] == base - v_plus
    assert sq.rows[1][1] == base - v_minus
    assert sq.rows[2][2] == base - v_plus
    assert sq.rows[3][3] == base - v_minus
    assert all(sq.rows[i][j].is_zero() for i in range(4) for j in range(4) if i != j)


@pytest.mark.parametrize("expr", ["f", "g*x^-1", "x", "0", "x^2 + f'"])
def test_verify_susy_all_green(expr):
    rep = verify_susy(parse_operator(expr))
    assert rep.ok, rep.render()
