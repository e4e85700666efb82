"""Exact scalars: Gaussian rationals, extended polynomially by the formal symbols g and lam.

Every coefficient in the workbench lives here.  There is deliberately no
floating point anywhere: ``GaussianRational`` is a + b*i with ``Fraction``
parts, and ``Scalar`` is a polynomial in the coupling constant ``g`` and the
scaling parameter ``lam`` over Gaussian rationals, kept in expanded canonical
form so that equality is plain dictionary equality.
"""

from __future__ import annotations

from fractions import Fraction


def _frac(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"expected int or Fraction, got {type(v).__name__}")


class GaussianRational:
    """Exact complex number a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @staticmethod
    def coerce(v) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        return GaussianRational(_frac(v))

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            return GR_ONE / (self ** (-n))
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def render(self) -> str:
        """Canonical text form: "3", "-1/2", "i", "-2*i", "(1+i)", "(1/2-3*i)"."""
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        im = "i" if abs(self.im) == 1 else f"{abs(self.im)}*i"
        sign = "+" if self.im > 0 else "-"
        return f"({self.re}{sign}{im})"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


class Scalar:
    """Polynomial in g and lam with GaussianRational coefficients.

    Stored as {(g_power, lam_power): GaussianRational} with no zero values;
    treat instances as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        tt = {}
        if terms:
            for key, val in terms.items():
                val = GaussianRational.coerce(val)
                if val:
                    tt[key] = tt[key] + val if key in tt else val
        self.terms = {k: v for k, v in tt.items() if v}

    @staticmethod
    def coerce(v) -> "Scalar":
        if isinstance(v, Scalar):
            return v
        if isinstance(v, (int, Fraction, GaussianRational)):
            return Scalar({(0, 0): GaussianRational.coerce(v)})
        raise TypeError(f"cannot coerce {type(v).__name__} to Scalar")

    @staticmethod
    def const(v) -> "Scalar":
        return Scalar.coerce(v)

    @staticmethod
    def g(power: int = 1) -> "Scalar":
        return Scalar({(power, 0): GR_ONE})

    @staticmethod
    def lam(power: int = 1) -> "Scalar":
        return Scalar({(0, power): GR_ONE})

    def __add__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return Scalar(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for (g1, l1), c1 in self.terms.items():
            for (g2, l2), c2 in other.terms.items():
                k = (g1 + g2, l1 + l2)
                v = c1 * c2
                out[k] = out[k] + v if k in out else v
        return Scalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # division by a nonzero constant only
        other = GaussianRational.coerce(other)
        return Scalar({k: v / other for k, v in self.terms.items()})

    def __neg__(self):
        return Scalar({k: -v for k, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative scalar powers are not supported")
        out = Scalar.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self) -> GaussianRational:
        if not self.terms:
            return GR_ZERO
        if not self.is_constant():
            raise ValueError(f"scalar {self.render()} is not constant")
        return self.terms[(0, 0)]

    def substitute(self, g=None, lam=None) -> "Scalar":
        """Substitute exact values for g and/or lam."""
        out = {}
        for (gp, lp), c in self.terms.items():
            val = c
            key_g, key_l = gp, lp
            if g is not None:
                val = val * GaussianRational.coerce(g) ** gp if gp else val
                key_g = 0
            if lam is not None:
                val = val * GaussianRational.coerce(lam) ** lp if lp else val
                key_l = 0
            k = (key_g, key_l)
            out[k] = out[k] + val if k in out else val
        return Scalar(out)

    def _pieces(self):
        """Yield (GaussianRational, g_power, lam_power) in canonical order."""
        for (gp, lp) in sorted(self.terms, reverse=True):
            yield self.terms[(gp, lp)], gp, lp

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = [render_product(c, _monomial_factors(gp, lp)) for c, gp, lp in self._pieces()]
        return join_sum(pieces)

    def __repr__(self):
        return f"Scalar<{self.render()}>"


def _monomial_factors(gp: int, lp: int):
    out = []
    if gp:
        out.append("g" if gp == 1 else f"g^{gp}")
    if lp:
        out.append("lam" if lp == 1 else f"lam^{lp}")
    return out


def render_product(coeff: GaussianRational, factors) -> str:
    """Render coeff * factor1 * factor2 ..., suppressing unit coefficients."""
    factors = list(factors)
    if not factors:
        return coeff.render()
    if coeff == GR_ONE:
        return "*".join(factors)
    if coeff == -GR_ONE:
        return "-" + "*".join(factors)
    return "*".join([coeff.render()] + factors)


def join_sum(pieces) -> str:
    """Join rendered terms with " + " / " - ", folding leading minus signs."""
    out = []
    for p in pieces:
        if not out:
            out.append(p)
        elif p.startswith("-"):
            out.append(" - " + p[1:])
        else:
            out.append(" + " + p)
    return "".join(out)


def rational_sqrt(fr: Fraction):
    """Exact square root of a nonnegative rational, or None if irrational."""
    if fr < 0:
        return None
    from math import isqrt

    num, den = fr.numerator, fr.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
