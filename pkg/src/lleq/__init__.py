"""lleq: exact symbolic workbench for Levy-Leblond square-root operators.

Construct tensor-word gamma matrices over the alphabet X, Y, A, I, Q, verify
Clifford relations and square-root identities, classify the free equations as
Majorana / Majorana-Weyl / Dirac / Weyl / quaternionic spinors, derive
supersymmetric partner potentials from a prepotential, and check the osp(1|2)
superconformal realization induced by the inverse-square potential.  All
arithmetic is exact (Gaussian rationals over the formal symbols g and lam).
"""

from .clifford import CliffordSet, Signature, base_set, extend, named_sets, verify_clifford
from .commutant import (CommutantBasis, DivisionAlgebraTag, classify_division_algebra,
                        commutant_basis, commutant_dimension_bruteforce, expand_time_word)
from .equations import (GOLDEN_TABLE, LLESpec, LleError, SpinorClass, TABLE_ORDER,
                        build_operator, catalog, classify, dispersion_check,
                        generate_table, verify_square_root, weyl_slot)
from .matrices import OpMatrix, anticommutator, commutator, det_exact, tensor
from .operators import OperatorPoly, dt, dx, f_sym, g_sym, i_dt, lam_sym, symbol_eval, \
    t_pow, x_pow
from .parsing import ParseError, parse_operator
from .scalars import GaussianRational, Scalar
from .susy import (ComponentSystem, PartnerPotentials, build_potential_operator,
                   derive_components, partner_potentials, square_potential_operator,
                   verify_susy)
from .words import (PairRelation, Word, WordError, letter_matrix, pair_relation,
                    square_sign, word_matrix, word_product)

__version__ = "0.1.0"
