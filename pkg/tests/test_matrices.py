"""Matrix layer: products, tensor law, commutators, exact determinants."""

import random
from fractions import Fraction

import pytest

from lleq.matrices import OpMatrix, anticommutator, commutator, det_exact, tensor
from lleq.operators import OperatorPoly, dt, dx, i_dt, t_pow, x_pow
from lleq.scalars import GR_I, GaussianRational
from lleq.words import Word, letter_matrix, word_matrix


def _random_const_matrix(rng, n=2):
    return OpMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])


def _random_op_matrix(rng, n=2):
    atoms = (dt(), dx(), t_pow(), x_pow(), OperatorPoly.coerce(1))
    def entry():
        e = OperatorPoly.coerce(rng.randint(-2, 2))
        for _ in range(rng.randint(0, 2)):
            e = e * rng.choice(atoms)
        return e
    return OpMatrix([[entry() for _ in range(n)] for _ in range(n)])


def test_shape_validation():
    with pytest.raises(ValueError):
        OpMatrix([[1, 0], [0, 1], [1, 1]])
    with pytest.raises(ValueError):
        OpMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])  # 3 is not a power of two


def test_mixed_product_law_constant_entries():
    rng = random.Random(11)
    for _ in range(25):
        a, b, c, d = (_random_const_matrix(rng) for _ in range(4))
        assert tensor(a, b) @ tensor(c, d) == tensor(a @ c, b @ d)


def test_commutator_antisymmetry_and_self():
    rng = random.Random(5)
    for _ in range(20):
        a = _random_op_matrix(rng, 2)
        b = _random_op_matrix(rng, 2)
        assert commutator(a, a).is_zero()
        assert commutator(a, b) == -commutator(b, a)


def test_jacobi_identity_on_random_matrices():
    rng = random.Random(23)
    for _ in range(12):
        a, b, c = (_random_op_matrix(rng, 4) for _ in range(3))
        j = commutator(a, commutator(b, c)) \
            + commutator(b, commutator(c, a)) \
            + commutator(c, commutator(a, b))
        assert j.is_zero()


def test_anticommutator_examples():
    assert anticommutator(letter_matrix("Q"), letter_matrix("X")).is_zero()
    q = letter_matrix("Q")
    assert (q @ q) == OpMatrix.identity(2) * i_dt()


def test_left_and_right_scalar_multiplication_differ():
    m = word_matrix(Word("Q"))
    left = t_pow() * m   # coefficients multiply from the left
    right = m * t_pow()
    assert left != right
    assert left.rows[1][0] == t_pow() * i_dt()
    assert right.rows[1][0] == i_dt() * t_pow()


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        OpMatrix.identity(2) @ OpMatrix.identity(4)
    with pytest.raises(ValueError):
        OpMatrix.identity(2) + OpMatrix.identity(4)


def test_det_exact():
    one = GaussianRational(1)
    i = GR_I
    rows = [[GaussianRational(0) - i, one],
            [GaussianRational(4), i]]
    # det [[-i, 1], [E, i]] = 1 - E at E = 4
    assert det_exact(rows) == GaussianRational(-3)
    assert det_exact([[one, one], [one, one]]) == GaussianRational(0)
    rows3 = [[GaussianRational(Fraction(1, 2)), GaussianRational(0)],
             [GaussianRational(7), GaussianRational(4)]]
    assert det_exact(rows3) == GaussianRational(2)
