"""Free Levy-Leblond equations: construction, verification and classification.

An LLESpec packages one square-root equation T psi = sum_k S_k dx_k psi
(+ optional potential words); the canonical operator form is

    D = T - sum_k S_k * dx_k - sum_j P_j * f_j(x),      D psi = 0.

For a valid free specification D squares to (i*dt + sum_k dx_k^2) times the
identity, which is the matrix Schrodinger operator.  Classification combines
the division algebra of the reduction structure algebra (even products of
the space words the maximal tower equation adds to this one) with the
chirality slot into the spinor types M, MW, D, W, H.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from . import commutant as cm
from .matrices import OpMatrix, det_exact, symbol_matrix
from .operators import OperatorPoly, dx, i_dt
from .reporting import Check, VerificationReport
from .scalars import GR_ONE, GaussianRational
from .words import (PairRelation, Word, const_matrix, pair_relation,
                    square_sign, word_matrix, word_product)


class LleError(ValueError):
    """Invalid equation specification."""


@dataclass(frozen=True)
class LLESpec:
    """One Levy-Leblond equation: time word, space words, optional potentials.

    Construction enforces only structural shape (word lengths, Q placement,
    constancy).  The algebraic soundness conditions, space words squaring to
    +1 and all pairs anticommuting, are deliberately left to
    `algebra_report`: a broken candidate equation must remain constructible
    so that verification can exhibit its nonzero residuals.
    """

    time_word: Word
    space_words: tuple
    potential_terms: tuple = ()
    name: str | None = None

    def __post_init__(self):
        tw = self.time_word if isinstance(self.time_word, Word) else Word(str(self.time_word))
        sw = tuple(w if isinstance(w, Word) else Word(str(w)) for w in self.space_words)
        pt = tuple((w if isinstance(w, Word) else Word(str(w)), OperatorPoly.coerce(fn))
                   for w, fn in self.potential_terms)
        object.__setattr__(self, "time_word", tw)
        object.__setattr__(self, "space_words", sw)
        object.__setattr__(self, "potential_terms", pt)
        if tw.is_constant():
            raise LleError(f"time word {tw} must carry the operator letter Q")
        if not sw:
            raise LleError("an equation needs at least one space word")
        k = len(tw)
        for w in sw:
            if len(w) != k:
                raise LleError(f"space word {w} does not match the time word length")
            if not w.is_constant():
                raise LleError(f"space word {w} must be constant")
        for w, fn in pt:
            if len(w) != k:
                raise LleError(f"potential word {w} does not match the time word length")
            if not w.is_constant():
                raise LleError(f"potential word {w} must be constant")
            if not fn.is_function_only():
                raise LleError("potential coefficients must be functions of x only")

    @property
    def n(self) -> int:
        return self.time_word.size

    @property
    def d(self) -> int:
        return len(self.space_words)

    def is_free(self) -> bool:
        return not self.potential_terms

    def label(self) -> str:
        return self.name or f"{self.time_word}={'+'.join(map(str, self.space_words))}"


def algebra_report(spec: LLESpec) -> VerificationReport:
    """Square signs and pairwise anticommutation of the equation words."""
    checks = []
    for w in spec.space_words:
        sign = square_sign(w)
        checks.append(Check(f"{w}^2 = +1", sign == 1,
                            "" if sign == 1 else f"square is {sign:+d}"))
    words = (spec.time_word,) + spec.space_words
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            rel = pair_relation(words[i], words[j])
            ok = rel is PairRelation.ANTICOMMUTE
            checks.append(Check(f"{{{words[i]},{words[j]}}} = 0", ok,
                                "" if ok else f"relation is {rel.value}"))
    return VerificationReport(f"word algebra for {spec.label()}", tuple(checks))


def build_operator(spec: LLESpec) -> OpMatrix:
    """The canonical first-order operator D with D psi = 0."""
    out = word_matrix(spec.time_word)
    for k, w in enumerate(spec.space_words, start=1):
        out = out - word_matrix(w) * dx(k)
    for w, fn in spec.potential_terms:
        out = out - word_matrix(w) * fn
    return out


def schrodinger_operator(spec: LLESpec) -> OpMatrix:
    """(i*dt + sum_k dx_k^2) times the identity."""
    p = i_dt()
    for k in range(1, spec.d + 1):
        p = p + dx(k, 2)
    return OpMatrix.identity(spec.n) * p


def verify_square_root(spec: LLESpec) -> VerificationReport:
    """Check D^2 = i*dt + laplacian, exactly."""
    if not spec.is_free():
        raise LleError("square-root verification applies to free equations")
    d_op = build_operator(spec)
    residual = d_op @ d_op - schrodinger_operator(spec)
    ok = residual.is_zero()
    detail = "" if ok else f"residual {residual.render_entries(limit=6)}"
    return VerificationReport(
        f"square root check for {spec.label()}",
        (Check("D^2 = i*dt + laplacian", ok, detail),),
    )


def weyl_slot(spec: LLESpec):
    """Smallest slot >= 2 where every word carries Y or A; None when absent."""
    words = (spec.time_word,) + spec.space_words
    k = len(spec.time_word)
    for j in range(1, k):  # 0-based index, slot number is j + 1
        if all(w.letters[j] in "YA" for w in words):
            return j + 1
    return None


def system_matrices(spec: LLESpec):
    """Constant matrices a classification structure must commute with."""
    wy, wa = cm.expand_time_word(spec.time_word)
    mats = [const_matrix(wy), const_matrix(wa)]
    mats.extend(const_matrix(w) for w in spec.space_words)
    return mats


def tower_space_words(time_word: Word):
    """Maximal space-word family the recursive construction pairs with a time word.

    Slots where the time word carries Y or A are copied verbatim (they carry
    chirality); the remaining slots run through the staircase X..X, X..XY,
    X..YI, .., YI..I of the recursive Clifford tower.  The family has m + 1
    members for m free slots, which is the largest number of space directions
    the tower supports at this size and chirality.
    """
    if time_word.is_constant():
        raise LleError("tower construction needs a Q-leading time word")
    tail = time_word.letters[1:]
    free = [j for j, ch in enumerate(tail) if ch == "I"]
    m = len(free)
    words = []
    for i in range(m + 1):
        # staircase over the free slots: i = 0 is all X, then X^(m-i) Y I^(i-1)
        pattern = ["X"] * (m - i) + (["Y"] + ["I"] * (i - 1) if i else [])
        letters = ["X"]
        it = iter(pattern)
        for ch in tail:
            letters.append(next(it) if ch == "I" else ch)
        words.append(Word("".join(letters)))
    return tuple(words)


def completion_words(spec: LLESpec):
    """Space words the maximal tower equation adds to this one.

    Products of pairs of these carry the complex or quaternionic structure a
    dimensional reduction leaves on the spinor.  For space words outside the
    tower family the completion is searched greedily (documented order) up to
    the tower capacity.
    """
    tower = tower_space_words(spec.time_word)
    own = set(spec.space_words)
    if own <= set(tower):
        comp = tuple(w for w in tower if w not in own)
    else:
        comp = _greedy_completion(spec, capacity=len(tower) - spec.d)
    for w in comp:
        words = (spec.time_word,) + spec.space_words + tuple(x for x in comp if x != w)
        for other in words:
            if pair_relation(w, other) is not PairRelation.ANTICOMMUTE:
                raise LleError(f"completion word {w} fails to anticommute with {other}")
    return comp


_RANK = {"X": 0, "Y": 1, "I": 2, "A": 3}


def _greedy_completion(spec: LLESpec, capacity: int):
    import itertools as it

    k = len(spec.time_word)
    chosen = []
    current = [spec.time_word] + list(spec.space_words)
    candidates = sorted(
        (Word("".join(ls)) for ls in it.product("XYAI", repeat=k)),
        key=lambda w: [_RANK[c] for c in w.letters])
    for w in candidates:
        if len(chosen) >= max(capacity, 0):
            break
        if square_sign(w) != 1 or w in current:
            continue
        if all(pair_relation(w, other) is PairRelation.ANTICOMMUTE
               for other in current + chosen):
            chosen.append(w)
    return tuple(chosen)


def structure_basis(spec: LLESpec) -> cm.CommutantBasis:
    """Internal-structure algebra left on the spinor by dimensional reduction.

    The identity together with all even products of the completion words; the
    even products commute with every word of the equation (each factor
    anticommutes with each of them), so the span embeds in the commutant.
    This is the algebra whose division type classifies the spinor.
    """
    import itertools as it

    comp = completion_words(spec)
    n = spec.n
    mats = [_frac_identity(n)]
    for size in range(2, len(comp) + 1, 2):
        for subset in it.combinations(comp, size):
            acc_sign, acc = 1, subset[0]
            for w in subset[1:]:
                s, acc = word_product(acc, w)
                acc_sign *= s
            mats.append(tuple(tuple(Fraction(acc_sign * v) for v in row)
                              for row in const_matrix(acc)))
    basis = cm.CommutantBasis(tuple(mats), n)
    for m in basis.matrices[1:]:
        for sysm in system_matrices(spec):
            if not cm.commutes(m, sysm):
                raise LleError("structure element fails to commute with the system")
    return basis


def _frac_identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class SpinorClass:
    """Classification record for one free equation."""

    kind: str  # M, MW, D, W, H
    n: int
    d: int
    chiral: bool
    division: cm.DivisionAlgebraTag
    structure_dimension: int
    completion: tuple = ()

    @property
    def size_label(self) -> str:
        return f"({self.n}×{self.n})"

    @property
    def spacetime_label(self) -> str:
        return f"(1+{self.d})"

    @property
    def real_components(self) -> int:
        return self.n // 2 if self.kind in ("MW", "W") else self.n

    @property
    def components_label(self) -> str:
        n = self.n
        if self.kind == "M":
            return f"{n} real components"
        if self.kind == "MW":
            return f"{n}/2 = {n // 2} real components"
        if self.kind == "D":
            return f"{n // 2}C ≡ {n} real components"
        if self.kind == "W":
            return f"{n // 4}C ≡ {n // 2} real components"
        if self.kind == "H":
            return f"{n // 4}H ≡ {n} real components"
        raise LleError(f"no component counting rule for kind {self.kind!r}")


_KIND_FROM_TAG = {
    ("R", False): "M",
    ("R", True): "MW",
    ("C", False): "D",
    ("C", True): "W",
    ("H", False): "H",
}


@functools.lru_cache(maxsize=256)
def classify(spec: LLESpec) -> SpinorClass:
    """Spinor type of a free equation.  Pure in its immutable input; memoized.

    The real/complex/quaternionic tag is carried by the structure algebra of
    the dimensional reduction (even products of the completion words, which
    commute with the whole equation); chirality is carried by the common Y/A
    slot.  Raw joint commutants of the equation words are intentionally not
    used here: dropping space words leaves a highly reducible word system
    whose full commutant mixes equivalent blocks and does not classify the
    spinor (`commutant_basis` still computes it, for callers who want it).
    """
    if not spec.is_free():
        raise LleError("classification applies to free equations")
    basis = structure_basis(spec)
    tag = cm.classify_division_algebra(basis)
    if tag.kind not in ("R", "C", "H"):
        raise LleError(f"unclassifiable structure algebra: kind {tag.kind}, {tag.note}")
    chiral = weyl_slot(spec) is not None
    key = (tag.kind, chiral)
    if key not in _KIND_FROM_TAG:
        raise LleError(f"no spinor type for division algebra {tag.kind} with chirality {chiral}")
    return SpinorClass(
        kind=_KIND_FROM_TAG[key],
        n=spec.n,
        d=spec.d,
        chiral=chiral,
        division=tag,
        structure_dimension=basis.dimension,
        completion=completion_words(spec),
    )


# ---- dispersion ------------------------------------------------------------


def _sample_momenta(d: int, count: int = 5):
    return [tuple(Fraction(s + j) for j in range(d)) for s in range(1, count + 1)]


def dispersion_check(spec: LLESpec) -> VerificationReport:
    """Sampled determinant check: det(symbol) = c * (E - |k|^2)^(n/2), |c| = 1.

    For each sampled momentum the determinant is a polynomial of degree n/2
    in E, so agreement with the model at n/2 + 1 off-shell energies plus the
    on-shell zero pins it down exactly.
    """
    if not spec.is_free():
        raise LleError("dispersion check applies to free equations")
    d_op = build_operator(spec)
    n = spec.n
    half = n // 2
    checks = []
    c_value = None
    for kvec in _sample_momenta(spec.d):
        ksq = sum(k * k for k in kvec)
        det_on = det_exact(symbol_matrix(d_op, ksq, kvec))
        checks.append(Check(
            f"det = 0 on shell at E=|k|^2={ksq}, k={tuple(map(str, kvec))}",
            not det_on, "" if not det_on else f"det = {det_on.render()}"))
        for delta in range(1, half + 2):
            energy = ksq + delta
            det_off = det_exact(symbol_matrix(d_op, energy, kvec))
            if not det_off:
                checks.append(Check(
                    f"det != 0 off shell at E={energy}, k={tuple(map(str, kvec))}", False))
                continue
            ratio = det_off / (GaussianRational.coerce(energy - ksq) ** half)
            if c_value is None:
                c_value = ratio
            checks.append(Check(
                f"det matches c*(E-|k|^2)^{half} at E={energy}, k={tuple(map(str, kvec))}",
                ratio == c_value,
                f"ratio {ratio.render()} vs c = {c_value.render()}"))
    if c_value is not None:
        unit = c_value * c_value.conjugate() == GR_ONE
        checks.append(Check("|c| = 1", unit, f"c = {c_value.render()}"))
    return VerificationReport(f"dispersion check for {spec.label()}", tuple(checks))


def dispersion_constant(spec: LLESpec) -> GaussianRational:
    """The unit-modulus constant c in det(symbol) = c (E - |k|^2)^(n/2)."""
    d_op = build_operator(spec)
    kvec = _sample_momenta(spec.d, count=1)[0]
    ksq = sum(k * k for k in kvec)
    det_off = det_exact(symbol_matrix(d_op, ksq + 1, kvec))
    return det_off


# ---- catalog and table -----------------------------------------------------


def _spec(name, time, spaces):
    return LLESpec(Word(time), tuple(Word(s) for s in spaces), name=name)


def catalog() -> dict:
    """The eleven inequivalent free equations at sizes 2, 4, 8, 16."""
    return {
        "eq6": _spec("eq6", "Q", ["X"]),
        "eq7": _spec("eq7", "QI", ["XX", "XY"]),
        "eq8": _spec("eq8", "QY", ["XY"]),
        "eq9": _spec("eq9", "QII", ["XXX", "XXY", "XYI"]),
        "eq10": _spec("eq10", "QII", ["XYI"]),
        "eq11": _spec("eq11", "QYI", ["XYX", "XYY"]),
        "eq12": _spec("eq12", "QIII", ["XXXX", "XXXY", "XXYI", "XYII"]),
        "eq13": _spec("eq13", "QIII", ["XXYI", "XYII"]),
        "eq14": _spec("eq14", "QYII", ["XYXX", "XYXY", "XYYI"]),
        "eq15": _spec("eq15", "QYII", ["XYYI"]),
        "eq16": _spec("eq16", "QIII", ["XYII"]),
    }


# display order groups the catalog by matrix size and spinor type
TABLE_ORDER = ("eq6", "eq7", "eq8", "eq9", "eq11", "eq10",
               "eq12", "eq14", "eq13", "eq15", "eq16")

# embedded golden rows: (key, size, type, spacetime, components)
GOLDEN_TABLE = (
    ("eq6", "(2×2)", "M", "(1+1)", "2 real components"),
    ("eq7", "(4×4)", "M", "(1+2)", "4 real components"),
    ("eq8", "(4×4)", "MW", "(1+1)", "4/2 = 2 real components"),
    ("eq9", "(8×8)", "M", "(1+3)", "8 real components"),
    ("eq11", "(8×8)", "MW", "(1+2)", "8/2 = 4 real components"),
    ("eq10", "(8×8)", "D", "(1+1)", "4C ≡ 8 real components"),
    ("eq12", "(16×16)", "M", "(1+4)", "16 real components"),
    ("eq14", "(16×16)", "MW", "(1+3)", "16/2 = 8 real components"),
    ("eq13", "(16×16)", "D", "(1+2)", "8C ≡ 16 real components"),
    ("eq15", "(16×16)", "W", "(1+1)", "4C ≡ 8 real components"),
    ("eq16", "(16×16)", "H", "(1+1)", "4H ≡ 16 real components"),
)


def generate_table():
    """Classify the whole catalog; rows ordered as in GOLDEN_TABLE."""
    cat = catalog()
    rows = []
    for key in TABLE_ORDER:
        sc = classify(cat[key])
        rows.append((key, sc.size_label, sc.kind, sc.spacetime_label, sc.components_label))
    return rows
