"""Potential terms for the 4x4 equation: prepotential, partner potentials,
component equations and the squared-operator identity.

The basic equation is QI psi = XY dx psi + XA f(x) psi for a prepotential
f(x); squaring the operator produces two Schrodinger partners with
V_plus = f^2 + f' on components 1 and 3 and V_minus = f^2 - f' on 2 and 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .equations import LLESpec, LleError, build_operator
from .matrices import OpMatrix, tensor
from .operators import OperatorPoly, dx, i_dt
from .reporting import Check, VerificationReport
from .words import Word, letter_matrix


class PartnerPotentials(NamedTuple):
    v_plus: OperatorPoly
    v_minus: OperatorPoly


@dataclass(frozen=True)
class ComponentSystem:
    """Scalar relations extracted from the 4-component equation D psi = 0.

    algebraic:   (target, source, op) meaning psi_target = op psi_source
    first_order: (target, source, op) meaning i*dt psi_target = op psi_source
    schrodinger: (component, op) meaning i*dt psi_i = op psi_i, derived by
                 exact substitution of the algebraic into the first-order
                 relations.
    """

    algebraic: tuple
    first_order: tuple
    schrodinger: tuple

    def lines(self):
        for tgt, src, op in self.algebraic:
            yield f"psi{tgt} = ({op.render()}) psi{src}"
        for tgt, src, op in self.first_order:
            yield f"i*dt psi{tgt} = ({op.render()}) psi{src}"
        for comp, op in self.schrodinger:
            yield f"i*dt psi{comp} = ({op.render()}) psi{comp}"


def _check_prepotential(f: OperatorPoly) -> OperatorPoly:
    f = OperatorPoly.coerce(f)
    if not f.is_function_only():
        raise LleError("the prepotential must be a function of x alone "
                       "(no derivatives, no t dependence)")
    return f


def potential_spec(f) -> LLESpec:
    """The 4x4 potential equation as a generic specification."""
    f = _check_prepotential(f)
    return LLESpec(Word("QI"), (Word("XY"),),
                   potential_terms=((Word("XA"), f),), name="potential-4x4")


def build_potential_operator(f) -> OpMatrix:
    """D = QI - XY dx - XA f(x)."""
    return build_operator(potential_spec(f))


def prepotential_derivative(f) -> OperatorPoly:
    """f'(x), computed by the ring's rewriting: [dx, f] = f'."""
    f = _check_prepotential(f)
    return dx() * f - f * dx()


def partner_potentials(f) -> PartnerPotentials:
    """V_plus_minus = f^2 +- f'."""
    f = _check_prepotential(f)
    fp = prepotential_derivative(f)
    f2 = f * f
    return PartnerPotentials(f2 + fp, f2 - fp)


def square_potential_operator(f) -> OpMatrix:
    """D^2, computed by exact matrix multiplication."""
    d_op = build_potential_operator(f)
    return d_op @ d_op


def square_closed_form(f) -> OpMatrix:
    """The diagonal form (i*dt + dx^2 - f^2) - (I x X) f' the square must equal."""
    f = _check_prepotential(f)
    fp = prepotential_derivative(f)
    scalar_part = i_dt() + dx(power=2) - f * f
    i_x = tensor(letter_matrix("I"), letter_matrix("X"))
    return OpMatrix.identity(4) * scalar_part - i_x * fp


def derive_components(f) -> ComponentSystem:
    """Expand D psi = 0 row by row and substitute to second order."""
    f = _check_prepotential(f)
    d_op = build_potential_operator(f)
    rows = d_op.rows
    # rows 1, 2 are algebraic in psi3, psi4; rows 3, 4 are first order in time
    for i, unit_col in ((0, 2), (1, 3)):
        if rows[i][unit_col] != OperatorPoly.coerce(1):
            raise LleError("unexpected block structure in the potential operator")
    op32 = -rows[0][1]   # psi3 = (dx + f) psi2
    op41 = -rows[1][0]   # psi4 = (dx - f) psi1
    for i, idt_col in ((2, 0), (3, 1)):
        if rows[i][idt_col] != i_dt():
            raise LleError("unexpected block structure in the potential operator")
    op14 = -rows[2][3]   # i*dt psi1 = -(dx + f) psi4
    op23 = -rows[3][2]   # i*dt psi2 = -(dx - f) psi3
    schrodinger = (
        (1, op14 * op41),
        (2, op23 * op32),
        (3, op32 * op23),
        (4, op41 * op14),
    )
    return ComponentSystem(
        algebraic=((3, 2, op32), (4, 1, op41)),
        first_order=((1, 4, op14), (2, 3, op23)),
        schrodinger=schrodinger,
    )


def verify_susy(f) -> VerificationReport:
    """All exact consistency checks for a given prepotential."""
    f = _check_prepotential(f)
    checks = []
    square = square_potential_operator(f)
    closed = square_closed_form(f)
    checks.append(Check("D^2 equals its closed diagonal form",
                        square == closed,
                        "" if square == closed else (square - closed).render_entries(limit=6)))
    v_plus, v_minus = partner_potentials(f)
    base = i_dt() + dx(power=2)
    expected_diag = (base - v_plus, base - v_minus, base - v_plus, base - v_minus)
    diag_ok = all(square.rows[i][i] == expected_diag[i] for i in range(4))
    checks.append(Check("diagonal carries (V+, V-, V+, V-)", diag_ok))
    off_ok = all(square.rows[i][j].is_zero() for i in range(4) for j in range(4) if i != j)
    checks.append(Check("squared operator is diagonal", off_ok))
    comps = derive_components(f)
    sch = dict(comps.schrodinger)
    neg_dx2 = -dx(power=2)
    checks.append(Check("i*dt psi1 = -dx^2 psi1 + V+ psi1", sch[1] == neg_dx2 + v_plus))
    checks.append(Check("i*dt psi2 = -dx^2 psi2 + V- psi2", sch[2] == neg_dx2 + v_minus))
    checks.append(Check("i*dt psi3 = -dx^2 psi3 + V+ psi3", sch[3] == neg_dx2 + v_plus))
    checks.append(Check("i*dt psi4 = -dx^2 psi4 + V- psi4", sch[4] == neg_dx2 + v_minus))
    return VerificationReport("supersymmetric potential checks", tuple(checks))
