"""Tensor words over the five-letter alphabet X, Y, A, I, Q.

A word names a Kronecker product of 2x2 blocks; dropping the tensor symbol,
"QII" stands for Q (x) I (x) I.  The four constant letters are signed
permutations, so every Q-free word is a signed permutation matrix and squares
to plus or minus the identity.  Q is the operator letter [[0, 1], [i*dt, 0]],
the square root of i*dt; it is only admitted in the first slot, which is
where every construction in the workbench places it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .matrices import OpMatrix
from .operators import OperatorPoly, i_dt

LETTERS = "XYAIQ"
CONSTANT_LETTERS = "XYAI"

# column action of the constant letters: letter maps e_j -> sign[j] * e_perm[j]
_LETTER_PERM = {
    "X": ((0, 1), (1, -1)),
    "Y": ((1, 0), (1, 1)),
    "A": ((1, 0), (-1, 1)),
    "I": ((0, 1), (1, 1)),
}

_LETTER_SQUARE = {"X": 1, "Y": 1, "A": -1, "I": 1}

# product table for the constant letters: (a, b) -> (sign, c) with a.b = sign*c
_LETTER_MUL = {}
for _a in CONSTANT_LETTERS:
    for _b in CONSTANT_LETTERS:
        _pa, _sa = _LETTER_PERM[_a]
        _pb, _sb = _LETTER_PERM[_b]
        _perm = tuple(_pa[_pb[j]] for j in range(2))
        _sign = tuple(_sb[j] * _sa[_pb[j]] for j in range(2))
        for _c in CONSTANT_LETTERS:
            _pc, _sc = _LETTER_PERM[_c]
            if _perm == _pc and (_sign == _sc or _sign == tuple(-s for s in _sc)):
                _LETTER_MUL[(_a, _b)] = (1 if _sign == _sc else -1, _c)
                break
del _a, _b, _c, _pa, _sa, _pb, _sb, _pc, _sc, _perm, _sign


class WordError(ValueError):
    """Malformed word or unsupported word operation."""


class PairRelation(enum.Enum):
    COMMUTE = "commute"
    ANTICOMMUTE = "anticommute"
    NEITHER = "neither"


@dataclass(frozen=True)
class Word:
    """Nonempty letter sequence; serialises as a plain uppercase string."""

    letters: str

    def __post_init__(self):
        if not self.letters:
            raise WordError("empty word")
        for ch in self.letters:
            if ch not in LETTERS:
                raise WordError(f"unknown letter {ch!r} in word {self.letters!r}")
        qs = self.letters.count("Q")
        if qs > 1:
            raise WordError(f"word {self.letters!r} carries more than one Q")
        if qs == 1 and self.letters[0] != "Q":
            raise WordError(f"word {self.letters!r} must carry Q in the first slot")

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)

    @property
    def size(self) -> int:
        """Matrix size named by the word."""
        return 2 ** len(self.letters)

    def is_constant(self) -> bool:
        return "Q" not in self.letters


def _letter_relation(a: str, b: str) -> PairRelation:
    if a == "Q" or b == "Q":
        other = b if a == "Q" else a
        if other in ("Q", "I"):
            return PairRelation.COMMUTE
        if other == "X":
            return PairRelation.ANTICOMMUTE
        return PairRelation.NEITHER  # Q against Y or A
    if a == b or a == "I" or b == "I":
        return PairRelation.COMMUTE
    return PairRelation.ANTICOMMUTE


def pair_relation(u: Word, v: Word) -> PairRelation:
    """Slotwise (anti)commutation of two equal-length words.

    When every slot pair either commutes or anticommutes, the words commute
    or anticommute according to the parity of anticommuting slots; a slot
    where Q meets Y or A makes the relation NEITHER.
    """
    if len(u) != len(v):
        raise WordError(f"length mismatch: {u} vs {v}")
    anti = 0
    for a, b in zip(u.letters, v.letters):
        rel = _letter_relation(a, b)
        if rel is PairRelation.NEITHER:
            return PairRelation.NEITHER
        if rel is PairRelation.ANTICOMMUTE:
            anti += 1
    return PairRelation.ANTICOMMUTE if anti % 2 else PairRelation.COMMUTE


def square_sign(w: Word) -> int:
    """+1 if w squares to the identity, -1 if to minus the identity."""
    if not w.is_constant():
        raise WordError(f"square sign is defined for constant words only, got {w}")
    sign = 1
    for ch in w.letters:
        sign *= _LETTER_SQUARE[ch]
    return sign


def word_product(u: Word, v: Word):
    """Slotwise product of constant words: returns (sign, Word)."""
    if len(u) != len(v):
        raise WordError(f"length mismatch: {u} vs {v}")
    if not (u.is_constant() and v.is_constant()):
        raise WordError("word products are defined for constant words only")
    sign = 1
    letters = []
    for a, b in zip(u.letters, v.letters):
        s, c = _LETTER_MUL[(a, b)]
        sign *= s
        letters.append(c)
    return sign, Word("".join(letters))


def signed_perm(w: Word):
    """Column action of a constant word: (perm, signs) with M e_j = signs[j] e_perm[j]."""
    if not w.is_constant():
        raise WordError(f"signed permutation form needs a constant word, got {w}")
    perm, signs = (0,), (1,)
    for ch in w.letters:
        lp, ls = _LETTER_PERM[ch]
        perm = tuple(perm[j] * 2 + lp[jl] for j in range(len(perm)) for jl in range(2))
        signs = tuple(signs[j] * ls[jl] for j in range(len(signs)) for jl in range(2))
    return perm, signs


def const_matrix(w: Word):
    """Dense integer matrix of a constant word (rows of -1/0/1)."""
    perm, signs = signed_perm(w)
    n = len(perm)
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        rows[perm[j]][j] = signs[j]
    return tuple(tuple(r) for r in rows)


def letter_matrix(letter: str) -> OpMatrix:
    """The 2x2 matrix (or operator matrix, for Q) named by a single letter."""
    if letter == "Q":
        return OpMatrix([[0, 1], [i_dt(), 0]])
    if letter not in CONSTANT_LETTERS:
        raise WordError(f"unknown letter {letter!r}")
    return OpMatrix(const_matrix(Word(letter)))


def word_matrix(w: Word) -> OpMatrix:
    """Operator matrix named by a word (Kronecker product in sequence order)."""
    if w.is_constant():
        return OpMatrix(const_matrix(w))
    rest = w.letters[1:]
    if rest:
        block = const_matrix(Word(rest))
    else:
        block = ((1,),)
    m = len(block)
    idt = i_dt()
    zero = OperatorPoly.zero()
    rows = []
    for i in range(m):
        rows.append([zero] * m + [OperatorPoly.coerce(block[i][j]) for j in range(m)])
    for i in range(m):
        rows.append([idt * block[i][j] for j in range(m)] + [zero] * m)
    return OpMatrix(rows)
