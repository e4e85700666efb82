"""Square matrices of exact differential operators, plus exact determinants."""

from __future__ import annotations

from .operators import OperatorPoly, symbol_eval
from .scalars import GR_ONE, GR_ZERO, GaussianRational


class OpMatrix:
    """n x n matrix of OperatorPoly entries, n a power of two; immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rr = tuple(tuple(OperatorPoly.coerce(e) for e in row) for row in rows)
        n = len(rr)
        if n == 0 or any(len(row) != n for row in rr):
            raise ValueError("OpMatrix must be square and nonempty")
        if n & (n - 1):
            raise ValueError(f"OpMatrix size must be a power of two, got {n}")
        self.rows = rr

    @property
    def n(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "OpMatrix":
        return OpMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(n: int) -> "OpMatrix":
        return OpMatrix([[0] * n for _ in range(n)])

    @staticmethod
    def diagonal(entries) -> "OpMatrix":
        entries = list(entries)
        n = len(entries)
        return OpMatrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __matmul__(self, other: "OpMatrix") -> "OpMatrix":
        if not isinstance(other, OpMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        n = self.n
        return OpMatrix([
            [sum((self.rows[i][k] * other.rows[k][j] for k in range(n)),
                 OperatorPoly.zero()) for j in range(n)]
            for i in range(n)
        ])

    def __add__(self, other):
        if not isinstance(other, OpMatrix):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        return OpMatrix([[a + b for a, b in zip(ra, rb)]
                         for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, OpMatrix):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return OpMatrix([[-e for e in row] for row in self.rows])

    def __mul__(self, other):
        """Entrywise right multiplication by a scalar or operator."""
        try:
            p = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return OpMatrix([[e * p for e in row] for row in self.rows])

    def __rmul__(self, other):
        """Entrywise left multiplication; order matters for operator factors."""
        try:
            p = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return OpMatrix([[p * e for e in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, OpMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.rows for e in row)

    def substitute(self, g=None, lam=None) -> "OpMatrix":
        return OpMatrix([[e.substitute(g=g, lam=lam) for e in row] for row in self.rows])

    def nonzero_entries(self):
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                if not e.is_zero():
                    yield i, j, e

    def render_entries(self, limit: int | None = None) -> str:
        parts = []
        for i, j, e in self.nonzero_entries():
            parts.append(f"({i},{j}): {e.render()}")
            if limit is not None and len(parts) >= limit:
                parts.append("...")
                break
        return "; ".join(parts) if parts else "0"

    def __repr__(self):
        return f"OpMatrix({self.n}x{self.n})"


def tensor(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    """Kronecker product; first factor carries the slow (block) index."""
    na, nb = a.n, b.n
    out = []
    for i in range(na):
        for k in range(nb):
            out.append([a.rows[i][j] * b.rows[k][l] for j in range(na) for l in range(nb)])
    return OpMatrix(out)


def commutator(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    return a @ b - b @ a


def anticommutator(a: OpMatrix, b: OpMatrix) -> OpMatrix:
    return a @ b + b @ a


def symbol_matrix(m: OpMatrix, energy, momenta):
    """Entrywise plane-wave substitution; returns rows of GaussianRational."""
    out = []
    for row in m.rows:
        vals = []
        for e in row:
            s = symbol_eval(e, energy, momenta)
            vals.append(s.constant_value())
        out.append(vals)
    return out


def det_exact(rows) -> GaussianRational:
    """Determinant of a square GaussianRational matrix by exact elimination."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = GR_ONE
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return GR_ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det = det * pv
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / pv
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det
