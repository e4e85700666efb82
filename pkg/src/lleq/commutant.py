"""Schur-lemma commutant computation and R/C/H division-algebra classification.

The commutant of a set of constant matrices is the solution space of the
linear system S*M = M*S, solved here exactly over the rationals with a sparse
reduced-row-echelon elimination.  A second, deliberately naive dense solver
(`commutant_dimension_bruteforce`) serves as an independent oracle for small
sizes and never shares code with the sparse path.

Time words enter through `expand_time_word`: a constant S commutes with the
operator matrix of a Q-leading word exactly when it commutes with both the
Y- and the A-substituted constant words, because the two constant parts of Q
carry independent operator coefficients (1 and i*dt).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .scalars import rational_sqrt
from .words import Word, WordError, const_matrix, square_sign, word_product


def _as_frac_matrix(m):
    rows = tuple(tuple(Fraction(v) for v in row) for row in m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("commutant inputs must be square matrices")
    return rows


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _mat_eq_zero(a):
    return all(v == 0 for row in a for v in row)


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def commutes(a, b) -> bool:
    """Exact check: a*b == b*a for two square matrices of equal size."""
    a = _as_frac_matrix(a)
    b = _as_frac_matrix(b)
    return _mat_eq_zero(_mat_sub(_mat_mul(a, b), _mat_mul(b, a)))


def _flatten(m):
    return {i * len(m) + j: v for i, row in enumerate(m) for j, v in enumerate(row) if v}


def _unflatten(vec, n):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for idx, v in vec.items():
        rows[idx // n][idx % n] = v
    return tuple(tuple(r) for r in rows)


class _SparseRref:
    """Reduced row echelon form over Fraction with dict-of-columns rows."""

    def __init__(self):
        self.pivots = {}  # pivot column -> row dict, normalised to 1 at the pivot

    def reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        while row:
            hit = None
            for c in row:
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                break
            factor = row[hit]
            for c, v in self.pivots[hit].items():
                nv = row.get(c, Fraction(0)) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def insert(self, row: dict) -> bool:
        """Reduce and insert; returns True when the row added a new pivot."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = Fraction(1) / row[p]
        row = {c: v * inv for c, v in row.items()}
        for prow in self.pivots.values():
            if p in prow:
                f = prow[p]
                for c, v in row.items():
                    nv = prow.get(c, Fraction(0)) - f * v
                    if nv:
                        prow[c] = nv
                    else:
                        prow.pop(c, None)
        self.pivots[p] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _commutation_rows(mats, n):
    """Rows of the linear system S*M - M*S = 0 over the n^2 unknowns S_ij."""
    for m in mats:
        cols_of = [[k for k in range(n) if m[k][j]] for j in range(n)]
        rows_of = [[k for k in range(n) if m[i][k]] for i in range(n)]
        for i in range(n):
            for j in range(n):
                row = {}
                for k in cols_of[j]:
                    c = i * n + k
                    row[c] = row.get(c, Fraction(0)) + m[k][j]
                for k in rows_of[i]:
                    c = k * n + j
                    row[c] = row.get(c, Fraction(0)) - m[i][k]
                row = {c: v for c, v in row.items() if v}
                if row:
                    yield row


@dataclass(frozen=True)
class CommutantBasis:
    """Basis of {S : S*M = M*S for every input M}; contains the identity."""

    matrices: tuple
    n: int

    @property
    def dimension(self) -> int:
        return len(self.matrices)

    def _span_rref(self) -> _SparseRref:
        rref = _SparseRref()
        for m in self.matrices:
            rref.insert(_flatten(m))
        return rref

    def contains(self, mat) -> bool:
        mat = _as_frac_matrix(mat)
        return not self._span_rref().reduce(_flatten(mat))

    def closed_under_multiplication(self) -> bool:
        rref = self._span_rref()
        for a in self.matrices:
            for b in self.matrices:
                if rref.reduce(_flatten(_mat_mul(a, b))):
                    return False
        return True


def commutant_basis(mats) -> CommutantBasis:
    """Exact basis of the joint commutant of a nonempty list of matrices."""
    mats = [_as_frac_matrix(m) for m in mats]
    if not mats:
        raise ValueError("commutant of an empty matrix list is undefined")
    n = len(mats[0])
    if any(len(m) != n for m in mats):
        raise ValueError("commutant inputs must share one size")
    rref = _SparseRref()
    for row in _commutation_rows(mats, n):
        rref.insert(row)
    free = [c for c in range(n * n) if c not in rref.pivots]
    basis = []
    for fc in free:
        vec = {fc: Fraction(1)}
        for pc, prow in rref.pivots.items():
            coef = prow.get(fc)
            if coef:
                vec[pc] = -coef
        basis.append(_unflatten(vec, n))
    for b in basis:
        for m in mats:
            if not _mat_eq_zero(_mat_sub(_mat_mul(b, m), _mat_mul(m, b))):
                raise AssertionError("commutant solver produced a non-commuting element")
    return CommutantBasis(tuple(basis), n)


def commutant_dimension_bruteforce(mats) -> int:
    """Independent oracle: dense textbook row echelon over the full system.

    Intended for small sizes; builds the complete (len(mats)*n^2) x n^2
    matrix and counts rank with no sparsity tricks.
    """
    mats = [_as_frac_matrix(m) for m in mats]
    n = len(mats[0])
    ncols = n * n
    dense = []
    for m in mats:
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * ncols
                for k in range(n):
                    row[i * n + k] += m[k][j]
                    row[k * n + j] -= m[i][k]
                dense.append(row)
    rank = 0
    col = 0
    r = 0
    while r < len(dense) and col < ncols:
        pivot = None
        for rr in range(r, len(dense)):
            if dense[rr][col] != 0:
                pivot = rr
                break
        if pivot is None:
            col += 1
            continue
        dense[r], dense[pivot] = dense[pivot], dense[r]
        pv = dense[r][col]
        dense[r] = [v / pv for v in dense[r]]
        for rr in range(len(dense)):
            if rr != r and dense[rr][col] != 0:
                f = dense[rr][col]
                dense[rr] = [a - f * b for a, b in zip(dense[rr], dense[r])]
        rank += 1
        r += 1
        col += 1
    return ncols - rank


def expand_time_word(w: Word):
    """Replace the leading Q by Y and by A; commutant-equivalent constant pair."""
    if w.is_constant():
        raise WordError(f"word {w} carries no Q to expand")
    rest = w.letters[1:]
    return Word("Y" + rest), Word("A" + rest)


@dataclass(frozen=True)
class DivisionAlgebraTag:
    """Schur classification of a commutant algebra.

    kind is one of "R", "C", "H", or the diagnostics "split" (reducible
    representation) and "unknown".  Witnesses are the commutant words with
    square -1 (the complex structure J, or the three imaginary quaternion
    units); the sign table records J_i * J_j = sign * J_k for i != j.
    """

    kind: str
    dimension: int
    witnesses: tuple = ()
    sign_table: tuple = ()
    split_witness: str | None = None
    note: str = ""

    def witness_names(self):
        return tuple(str(w) for w in self.witnesses)


def _commutant_words(basis: CommutantBasis):
    """Constant words (as Word) whose matrices lie in the commutant span."""
    n = basis.n
    k = n.bit_length() - 1
    if 2 ** k != n:
        return []
    rref = basis._span_rref()
    found = []
    for letters in itertools.product("XYAI", repeat=k):
        w = Word("".join(letters))
        if not rref.reduce(_flatten(_as_frac_matrix(const_matrix(w)))):
            found.append(w)
    return found


def classify_division_algebra(basis: CommutantBasis) -> DivisionAlgebraTag:
    """R/C/H tag with witnesses, or a split/unknown diagnostic (never a crash)."""
    dim = basis.dimension
    words = _commutant_words(basis)
    minus = sorted((w for w in words if square_sign(w) == -1), key=str)
    plus = sorted((w for w in words if square_sign(w) == 1 and set(w.letters) != {"I"}),
                  key=str)
    if dim == 1:
        return DivisionAlgebraTag("R", 1)

    if dim == 2:
        if minus:
            return DivisionAlgebraTag("C", 2, witnesses=(minus[0],))
        if plus:
            return DivisionAlgebraTag("split", 2, split_witness=str(plus[0]),
                                      note="traceless commutant element squares to +1")
        return _classify_dim2_generic(basis)

    if dim == 4 and len(minus) >= 3 and not plus:
        units = tuple(minus[:3])
        table = []
        ok = True
        for i, j in itertools.permutations(range(3), 2):
            sign, prod = word_product(units[i], units[j])
            if prod not in units or prod in (units[i], units[j]):
                ok = False
                break
            table.append((i, j, sign, units.index(prod)))
        if ok and all(square_sign(u) == -1 for u in units):
            return DivisionAlgebraTag("H", 4, witnesses=units, sign_table=tuple(table))

    if plus:
        return DivisionAlgebraTag("split", dim, split_witness=str(plus[0]),
                                  note="commutant contains a nontrivial involution")
    return DivisionAlgebraTag("unknown", dim,
                              note=f"commutant dimension {dim} admits no R/C/H witness")


def _classify_dim2_generic(basis: CommutantBasis) -> DivisionAlgebraTag:
    """Fallback for 2-dimensional commutants without a word witness."""
    n = basis.n
    ident = _identity(n)
    cand = None
    for b in basis.matrices:
        trace = sum(b[i][i] for i in range(n))
        tr_part = tuple(tuple(b[i][j] - (trace / n if i == j else 0) for j in range(n))
                        for i in range(n))
        if not _mat_eq_zero(tr_part):
            cand = tr_part
            break
    if cand is None:
        return DivisionAlgebraTag("unknown", 2, note="no traceless element found")
    sq = _mat_mul(cand, cand)
    alpha = sq[0][0]
    if not _mat_eq_zero(_mat_sub(sq, tuple(tuple(alpha * v for v in row) for row in ident))):
        return DivisionAlgebraTag("split", 2,
                                  note="traceless element squares outside the line of the identity")
    if alpha >= 0:
        return DivisionAlgebraTag("split", 2, note="traceless commutant element squares to +1")
    root = rational_sqrt(-alpha)
    if root is None:
        return DivisionAlgebraTag("unknown", 2,
                                  note="complex structure needs an irrational normalisation")
    return DivisionAlgebraTag("C", 2, note="witness is a non-word rational matrix")


