"""Noncommutative ring of exact differential operators in t and x.

An ``OperatorPoly`` is a finite sum of terms

    Scalar * (t^a x^b f^(j1)^m1 f^(j2)^m2 ...) * (dt^p dx1^q1 dx2^q2 ...)

kept normal-ordered: every function factor stands left of every derivative
factor.  Multiplication rewrites with

    dt * t^a   -> t^a dt + a t^(a-1)          (iterated)
    dx * x^b   -> x^b dx + b x^(b-1)          (all integer b, so 1/x works)
    dx * f^(j) -> f^(j) dx + f^(j+1)

while dt commutes with x-dependent factors and dx_k commutes with t and with
the other directions.  t powers are nonnegative; x powers range over all
integers; the prepotential tower f, f', f'', ... is formal and univariate in
the first spatial direction.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from .scalars import GR_I, GR_ONE, GaussianRational, Scalar, join_sum, render_product


class FuncMono(NamedTuple):
    """Commuting function monomial t^t_pow * x^x_pow * prod f^(j)^m."""

    t_pow: int
    x_pow: int
    f_pows: tuple  # ((j, m), ...) sorted by j, all m > 0


class DerivMono(NamedTuple):
    """Commuting derivative monomial dt^dt_pow * prod dx_k^dx_pows[k-1]."""

    dt_pow: int
    dx_pows: tuple  # trailing zeros trimmed


FM_ONE = FuncMono(0, 0, ())
DM_ONE = DerivMono(0, ())


def _trim(dx: tuple) -> tuple:
    n = len(dx)
    while n and dx[n - 1] == 0:
        n -= 1
    return tuple(dx[:n])


def _fm_mul(a: FuncMono, b: FuncMono) -> FuncMono:
    if a is FM_ONE:
        return b
    if b is FM_ONE:
        return a
    fp = dict(a.f_pows)
    for j, m in b.f_pows:
        fp[j] = fp.get(j, 0) + m
    return FuncMono(a.t_pow + b.t_pow, a.x_pow + b.x_pow,
                    tuple(sorted((j, m) for j, m in fp.items() if m)))


def _dm_mul(a: DerivMono, b: DerivMono) -> DerivMono:
    if a is DM_ONE:
        return b
    if b is DM_ONE:
        return a
    n = max(len(a.dx_pows), len(b.dx_pows))
    ax = a.dx_pows + (0,) * (n - len(a.dx_pows))
    bx = b.dx_pows + (0,) * (n - len(b.dx_pows))
    return DerivMono(a.dt_pow + b.dt_pow, _trim(tuple(p + q for p, q in zip(ax, bx))))


def _fm_dx(fm: FuncMono):
    """Product-rule derivative of a function monomial along x: [(int, FuncMono), ...]."""
    out = []
    if fm.x_pow:
        out.append((fm.x_pow, FuncMono(fm.t_pow, fm.x_pow - 1, fm.f_pows)))
    for j, m in fm.f_pows:
        fp = dict(fm.f_pows)
        fp[j] = m - 1
        fp[j + 1] = fp.get(j + 1, 0) + 1
        out.append((m, FuncMono(fm.t_pow, fm.x_pow,
                                tuple(sorted((jj, mm) for jj, mm in fp.items() if mm)))))
    return out


def _push(d: DerivMono, f: FuncMono):
    """Normal-order (derivatives d) * (functions f).

    Returns [(Fraction, FuncMono, DerivMono), ...] whose sum equals d∘f.
    """
    if f is FM_ONE or (f.t_pow == 0 and f.x_pow == 0 and not f.f_pows):
        return [(Fraction(1), f, d)]
    q = d.dx_pows[0] if d.dx_pows else 0
    rest = d.dx_pows[1:] if d.dx_pows else ()
    # move dx (first direction) one step at a time across x^b and the f tower
    cur = {(f, 0): Fraction(1)}
    for _ in range(q):
        nxt = {}
        for (fm, e), c in cur.items():
            key = (fm, e + 1)
            nxt[key] = nxt.get(key, Fraction(0)) + c
            for dc, dfm in _fm_dx(fm):
                key = (dfm, e)
                nxt[key] = nxt.get(key, Fraction(0)) + c * dc
        cur = {k: v for k, v in nxt.items() if v}
    # move dt across t^a in closed form
    out = []
    p = d.dt_pow
    for (fm, e), c in cur.items():
        a = fm.t_pow
        for k in range(min(p, a) + 1):
            cc = c * comb(p, k) * comb(a, k) * factorial(k)
            out.append((cc,
                        FuncMono(a - k, fm.x_pow, fm.f_pows),
                        DerivMono(p - k, _trim((e,) + rest))))
    return out


def _as_scalar(v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, (int, Fraction, GaussianRational)):
        return Scalar.coerce(v)
    return None


class OperatorPoly:
    """Normal-ordered element of the operator ring; treat as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        tt = {}
        if terms:
            for key, val in terms.items():
                val = _as_scalar(val)
                if val is None:
                    raise TypeError("operator coefficients must be exact scalars")
                if val:
                    tt[key] = tt[key] + val if key in tt else val
        self.terms = {k: v for k, v in tt.items() if v}

    # ---- constructors -------------------------------------------------

    @staticmethod
    def coerce(v) -> "OperatorPoly":
        if isinstance(v, OperatorPoly):
            return v
        s = _as_scalar(v)
        if s is None:
            raise TypeError(f"cannot coerce {type(v).__name__} to OperatorPoly")
        return OperatorPoly({(DM_ONE, FM_ONE): s})

    @staticmethod
    def zero() -> "OperatorPoly":
        return OperatorPoly()

    # ---- ring operations ----------------------------------------------

    def __add__(self, other):
        try:
            other = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return OperatorPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return OperatorPoly.coerce(other) - self

    def __neg__(self):
        return OperatorPoly({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        try:
            other = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = {}
        for (d1, f1), c1 in self.terms.items():
            for (d2, f2), c2 in other.terms.items():
                base = c1 * c2
                for cc, fmid, dmid in _push(d1, f2):
                    key = (_dm_mul(dmid, d2), _fm_mul(f1, fmid))
                    val = base * cc
                    acc[key] = acc[key] + val if key in acc else val
        return OperatorPoly(acc)

    def __rmul__(self, other):
        try:
            other = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative operator powers are not supported")
        out = OperatorPoly.coerce(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        try:
            other = OperatorPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # ---- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_function_only(self) -> bool:
        """True when the operator is a pure multiplication operator in x."""
        return all(d is DM_ONE or (d.dt_pow == 0 and not d.dx_pows) for d, _ in self.terms) and \
            all(f.t_pow == 0 for _, f in self.terms)

    def is_constant_coefficient(self) -> bool:
        return all(f.t_pow == 0 and f.x_pow == 0 and not f.f_pows for _, f in self.terms)

    def substitute(self, g=None, lam=None) -> "OperatorPoly":
        return OperatorPoly({k: v.substitute(g=g, lam=lam) for k, v in self.terms.items()})

    # ---- rendering -------------------------------------------------------

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (d, f) in sorted(self.terms, key=_term_order, reverse=True):
            coeff = self.terms[(d, f)]
            factors = _mono_factors(f, d)
            for c, gp, lp in coeff._pieces():
                gl = []
                if gp:
                    gl.append("g" if gp == 1 else f"g^{gp}")
                if lp:
                    gl.append("lam" if lp == 1 else f"lam^{lp}")
                pieces.append(render_product(c, gl + factors))
        return join_sum(pieces)

    def __repr__(self):
        return f"OperatorPoly<{self.render()}>"


def _term_order(key):
    """Canonical term order for rendering: derivatives first, then functions,
    with lower prepotential derivatives ranked above higher ones (so f^2
    prints before f')."""
    d, f = key
    return (d, f.t_pow, f.x_pow, tuple((-j, m) for j, m in f.f_pows))


def _f_name(j: int) -> str:
    if j <= 2:
        return "f" + "'" * j
    return f"f^({j})"


def _dx_name(k: int) -> str:
    return {1: "dx", 2: "dy", 3: "dz", 4: "dw"}.get(k, f"dx{k}")


def _mono_factors(f: FuncMono, d: DerivMono):
    out = []
    if f.t_pow:
        out.append("t" if f.t_pow == 1 else f"t^{f.t_pow}")
    if f.x_pow:
        out.append("x" if f.x_pow == 1 else f"x^{f.x_pow}")
    for j, m in f.f_pows:
        name = _f_name(j)
        out.append(name if m == 1 else f"{name}^{m}")
    if d.dt_pow:
        out.append("dt" if d.dt_pow == 1 else f"dt^{d.dt_pow}")
    for k, q in enumerate(d.dx_pows, start=1):
        if q:
            name = _dx_name(k)
            out.append(name if q == 1 else f"{name}^{q}")
    return out


# ---- builders ------------------------------------------------------------

def const(v) -> OperatorPoly:
    return OperatorPoly.coerce(v)


def i_const() -> OperatorPoly:
    return OperatorPoly.coerce(GR_I)


def g_sym(power: int = 1) -> OperatorPoly:
    return OperatorPoly.coerce(Scalar.g(power))


def lam_sym(power: int = 1) -> OperatorPoly:
    return OperatorPoly.coerce(Scalar.lam(power))


def t_pow(a: int = 1) -> OperatorPoly:
    if a < 0:
        raise ValueError("t admits only nonnegative powers")
    return OperatorPoly({(DM_ONE, FuncMono(a, 0, ())): GR_ONE})


def x_pow(b: int = 1) -> OperatorPoly:
    return OperatorPoly({(DM_ONE, FuncMono(0, b, ())): GR_ONE})


def f_sym(j: int = 0, power: int = 1) -> OperatorPoly:
    if j < 0 or power < 0:
        raise ValueError("prepotential indices and powers must be nonnegative")
    if power == 0:
        return OperatorPoly.coerce(1)
    return OperatorPoly({(DM_ONE, FuncMono(0, 0, ((j, power),))): GR_ONE})


def dt(power: int = 1) -> OperatorPoly:
    if power < 0:
        raise ValueError("derivative powers must be nonnegative")
    return OperatorPoly({(DerivMono(power, ()), FM_ONE): GR_ONE})


def dx(direction: int = 1, power: int = 1) -> OperatorPoly:
    if direction < 1:
        raise ValueError("spatial directions are numbered from 1")
    if power < 0:
        raise ValueError("derivative powers must be nonnegative")
    pows = (0,) * (direction - 1) + (power,)
    return OperatorPoly({(DerivMono(0, _trim(pows)), FM_ONE): GR_ONE})


def i_dt() -> OperatorPoly:
    """The operator i*dt, the square of the letter Q."""
    return i_const() * dt()


def symbol_eval(p: OperatorPoly, energy, momenta) -> Scalar:
    """Plane-wave substitution dt -> -i*E, dx_k -> i*k_k.

    Only constant-coefficient operators are accepted; with this convention
    i*dt evaluates to E.
    """
    if not p.is_constant_coefficient():
        raise ValueError("symbol evaluation requires a constant-coefficient operator")
    e_val = GaussianRational.coerce(energy)
    ks = [GaussianRational.coerce(k) for k in momenta]
    out = Scalar.coerce(0)
    for (d, _f), c in p.terms.items():
        val = Scalar.coerce(1)
        if d.dt_pow:
            val = val * ((-GR_I) * e_val) ** d.dt_pow
        for idx, q in enumerate(d.dx_pows):
            if q:
                if idx >= len(ks):
                    raise ValueError(f"momentum vector too short for direction {idx + 1}")
                val = val * (GR_I * ks[idx]) ** q
        out = out + c * val
    return out
