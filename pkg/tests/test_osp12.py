"""osp(1|2) realization: generators, grading, closure, Jacobi, split."""

import itertools
from fractions import Fraction

import pytest

from lleq.matrices import OpMatrix, commutator, tensor
from lleq.operators import dx, g_sym, i_dt, lam_sym, x_pow
from lleq.osp12 import (GENERATOR_ORDER, aux_lambda, aux_r, build_generators,
                        graded_bracket, graded_jacobi_residual, grading_report,
                        hamiltonian_split, scaling_dimension, solve_span,
                        verify_closure, _coefficient_vector)
from lleq.parsing import parse_operator
from lleq.scalars import GaussianRational
from lleq.susy import build_potential_operator
from lleq.words import letter_matrix

GENS = build_generators()


def test_aux_matrices():
    lam = aux_lambda()
    assert lam.rows[0][0] == lam_sym()
    assert lam.rows[1][1] == lam_sym() + Fraction(1, 2)
    assert lam.rows[0][1].is_zero() and lam.rows[1][0].is_zero()
    r = aux_r()
    assert r.rows[1][0] == 2 * lam_sym()
    assert (r @ r).is_zero()


def test_omega_squares_to_h():
    om = GENS["Omega"].matrix
    assert om @ om == GENS["H"].matrix


def test_omega_matches_susy_operator():
    assert GENS["Omega"].matrix == build_potential_operator(parse_operator("g*x^-1"))


def test_h_at_zero_coupling_is_free():
    h0 = GENS["H"].matrix.substitute(g=0)
    assert h0 == OpMatrix.identity(4) * (i_dt() + dx(power=2))


def test_scaling_dimensions():
    rep = grading_report(GENS)
    assert rep.ok, rep.render()
    for name, want in (("H", 1), ("Omega", Fraction(1, 2)), ("Dil", 0),
                       ("Xi", Fraction(-1, 2)), ("K", -1)):
        res = scaling_dimension(GENS[name].matrix)
        assert res.homogeneous and res.weight == want


def test_h_plus_k_is_inhomogeneous():
    res = scaling_dimension(GENS["H"].matrix + GENS["K"].matrix)
    assert not res.homogeneous
    assert set(res.weights) == {Fraction(1), Fraction(-1)}


def test_closure_report_all_green():
    table, rep = verify_closure(GENS)
    assert rep.ok, rep.render()
    assert len(table) == 15


def test_expected_bracket_relations():
    gens = GENS
    two_dil = gens["Dil"].matrix * 2
    assert graded_bracket(gens["Dil"], gens["H"]) == -gens["H"].matrix
    assert graded_bracket(gens["Dil"], gens["K"]) == gens["K"].matrix
    assert graded_bracket(gens["H"], gens["K"]) == two_dil
    assert graded_bracket(gens["Dil"], gens["Omega"]) == \
        gens["Omega"].matrix * Fraction(-1, 2)
    assert graded_bracket(gens["Dil"], gens["Xi"]) == gens["Xi"].matrix * Fraction(1, 2)
    assert graded_bracket(gens["H"], gens["Omega"]).is_zero()
    assert graded_bracket(gens["Omega"], gens["Omega"]) == gens["H"].matrix * 2
    assert graded_bracket(gens["Omega"], gens["Xi"]) == two_dil
    assert graded_bracket(gens["Xi"], gens["Xi"]) == gens["K"].matrix * 2
    assert graded_bracket(gens["K"], gens["Xi"]).is_zero()


def test_recorded_brackets():
    # the two relations left open by the source material, recorded exactly
    assert graded_bracket(GENS["H"], GENS["Xi"]) == GENS["Omega"].matrix
    assert graded_bracket(GENS["K"], GENS["Omega"]) == -GENS["Xi"].matrix


def test_bracket_coefficients_free_of_g_and_lam():
    vectors = [_coefficient_vector(GENS[k].matrix) for k in GENERATOR_ORDER]
    for i, a in enumerate(GENERATOR_ORDER):
        for b in GENERATOR_ORDER[i:]:
            coeffs = solve_span(vectors, _coefficient_vector(
                graded_bracket(GENS[a], GENS[b])))
            assert coeffs is not None
            # coefficients are plain Gaussian rationals, so no g or lam
            assert all(isinstance(c, GaussianRational) for c in coeffs)


def test_closure_coefficients_stable_under_lambda_substitution():
    # substituting two different numeric values of lam yields the same table
    def table_at(lam_value):
        subs = {name: type(g)(g.name, g.parity, g.scaling_dim,
                              g.matrix.substitute(lam=lam_value))
                for name, g in GENS.items()}
        table, rep = verify_closure(subs)
        assert rep.ok
        return [(e.bracket_text(), e.expansion_text()) for e in table]

    assert table_at(0) == table_at(Fraction(3, 2))


def test_graded_jacobi_all_triples():
    for names in itertools.combinations_with_replacement(GENERATOR_ORDER, 3):
        res = graded_jacobi_residual(*(GENS[n] for n in names))
        assert res.is_zero(), names


def test_bracket_weights_add():
    for i, a in enumerate(GENERATOR_ORDER):
        for b in GENERATOR_ORDER[i:]:
            br = graded_bracket(GENS[a], GENS[b])
            if br.is_zero():
                continue
            res = scaling_dimension(br)
            assert res.homogeneous
            assert res.weight == GENS[a].scaling_dim + GENS[b].scaling_dim


def test_even_triple_closes_sl2():
    vectors = [_coefficient_vector(GENS[k].matrix) for k in ("H", "Dil", "K")]
    for a, b in (("H", "Dil"), ("H", "K"), ("Dil", "K")):
        coeffs = solve_span(vectors, _coefficient_vector(
            commutator(GENS[a].matrix, GENS[b].matrix)))
        assert coeffs is not None


def test_susy_square_at_inverse_x_matches_h():
    # the squared potential operator at f = g/x is exactly the H generator
    from lleq.susy import square_potential_operator
    assert square_potential_operator(parse_operator("g*x^-1")) == GENS["H"].matrix


def test_hamiltonian_split():
    left, bold_h = hamiltonian_split()
    assert left == OpMatrix.identity(4) * i_dt()
    expected = OpMatrix.identity(4) * (-dx(power=2) + g_sym(2) * x_pow(-2)) \
        - tensor(letter_matrix("I"), letter_matrix("X")) * (g_sym() * x_pow(-2))
    assert bold_h == expected
    assert (left - bold_h) == GENS["H"].matrix
    assert bold_h.substitute(g=0) == OpMatrix.identity(4) * (-dx(power=2))


def test_scaling_dimension_rejects_prepotential():
    from lleq.operators import f_sym
    m = OpMatrix.identity(4) * f_sym()
    with pytest.raises(ValueError):
        scaling_dimension(m)
