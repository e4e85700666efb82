"""Recursive construction and verification of Clifford generator sets in word form.

Cl(p, q) is presented by words whose matrices pairwise anticommute, with p
generators squaring to the identity and q squaring to minus the identity.
The tower starts from the three single-letter words {X, Y, A} = Cl(2, 1) and
extends one level at a time: prefix X to every generator and append Y I^k and
A I^k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .reporting import Check, VerificationReport
from .words import PairRelation, Word, pair_relation, square_sign


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("signature counts must be nonnegative")

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class CliffordSet:
    generators: tuple
    signature: Signature

    def __post_init__(self):
        gens = tuple(Word(str(w)) if not isinstance(w, Word) else w for w in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a Clifford set needs at least one generator")
        k = len(gens[0])
        for w in gens:
            if len(w) != k:
                raise ValueError("generators must share a common word length")
            if not w.is_constant():
                raise ValueError(f"Clifford generators must be constant words, got {w}")
        if self.signature.p + self.signature.q != len(gens):
            raise ValueError("signature does not count the generators")

    @property
    def word_length(self) -> int:
        return len(self.generators[0])

    @property
    def matrix_size(self) -> int:
        return 2 ** self.word_length


def base_set() -> CliffordSet:
    """Cl(2, 1) on the three single-letter words."""
    return CliffordSet((Word("X"), Word("Y"), Word("A")), Signature(2, 1))


def extend(s: CliffordSet) -> CliffordSet:
    """One recursion level: Cl(p, q) -> Cl(p+1, q+1), doubling the matrix size."""
    k = s.word_length
    tail = "I" * k
    gens = tuple(Word("X" + w.letters) for w in s.generators)
    gens += (Word("Y" + tail), Word("A" + tail))
    return CliffordSet(gens, Signature(s.signature.p + 1, s.signature.q + 1))


def verify_clifford(s: CliffordSet) -> VerificationReport:
    """Check all pairwise anticommutators and all squares against the signature."""
    checks = []
    gens = s.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            rel = pair_relation(gens[i], gens[j])
            checks.append(Check(
                name=f"{{{gens[i]},{gens[j]}}} = 0",
                passed=rel is PairRelation.ANTICOMMUTE,
                detail="" if rel is PairRelation.ANTICOMMUTE else f"relation is {rel.value}",
            ))
    plus_left, minus_left = s.signature.p, s.signature.q
    for w in gens:
        sign = square_sign(w)
        if sign == 1 and plus_left > 0:
            plus_left -= 1
            checks.append(Check(f"{w}^2 = +1", True))
        elif sign == -1 and minus_left > 0:
            minus_left -= 1
            checks.append(Check(f"{w}^2 = -1", True))
        else:
            want = "+1" if sign == -1 else "-1"
            checks.append(Check(
                f"{w}^2 = {'+1' if sign == 1 else '-1'}",
                False,
                f"signature {s.signature} has no remaining {'+1' if sign == 1 else '-1'} slot"
                f" (needs another {want} generator)",
            ))
    return VerificationReport(f"Clifford set, signature {s.signature}", tuple(checks))


def square_split(s: CliffordSet):
    """Partition generators into space-like (square +1) and time-like (square -1)."""
    space = tuple(w for w in s.generators if square_sign(w) == 1)
    time = tuple(w for w in s.generators if square_sign(w) == -1)
    return space, time


def _words(*names):
    return tuple(Word(n) for n in names)


def named_sets() -> dict:
    """The catalogued presentations, addressable by name."""
    cl21 = base_set()
    cl32 = extend(cl21)
    cl43_set1 = extend(cl32)
    cl43_set2 = CliffordSet(
        _words("XYX", "XYY", "XYA", "XXI", "XAI", "YII", "AII"),
        Signature(4, 3),
    )
    return {
        "Cl(2,1)": cl21,
        "Cl(3,2)": cl32,
        "Cl(4,3)-set1": cl43_set1,
        "Cl(4,3)-set2": cl43_set2,
    }
