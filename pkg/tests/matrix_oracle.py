"""Brute-force matrix oracle for the word algebra, independent of lleq.

Words are represented as polynomials in z = i*dt with integer numpy
coefficient matrices: a constant word is [M], a Q-leading word is
[E12 (x) rest, E21 (x) rest].  Products convolve coefficients with plain
matrix multiplication, so every check here is dumb, dense and exact.
"""

import numpy as np

LETTER = {
    "X": np.array([[1, 0], [0, -1]], dtype=np.int64),
    "Y": np.array([[0, 1], [1, 0]], dtype=np.int64),
    "A": np.array([[0, 1], [-1, 0]], dtype=np.int64),
    "I": np.eye(2, dtype=np.int64),
}
E12 = np.array([[0, 1], [0, 0]], dtype=np.int64)
E21 = np.array([[0, 0], [1, 0]], dtype=np.int64)


def zpoly(word: str):
    """[deg0, deg1, ...] numpy coefficients of the word's operator matrix."""
    if word[0] == "Q":
        coeffs = [E12.copy(), E21.copy()]
    else:
        coeffs = [LETTER[word[0]].copy()]
    for ch in word[1:]:
        coeffs = [np.kron(c, LETTER[ch]) for c in coeffs]
    return coeffs


def zmul(a, b):
    n = a[0].shape[0]
    out = [np.zeros((n, n), dtype=np.int64) for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca @ cb
    return out


def zis_zero(a):
    return all(not c.any() for c in a)


def zsub(a, b):
    m = max(len(a), len(b))
    n = a[0].shape[0]
    out = []
    for i in range(m):
        ca = a[i] if i < len(a) else np.zeros((n, n), dtype=np.int64)
        cb = b[i] if i < len(b) else np.zeros((n, n), dtype=np.int64)
        out.append(ca - cb)
    return out


def zadd(a, b):
    return zsub(a, [-c for c in b])


def relation(u: str, v: str) -> str:
    """'commute', 'anticommute' or 'neither' by direct dense computation."""
    zu, zv = zpoly(u), zpoly(v)
    uv, vu = zmul(zu, zv), zmul(zv, zu)
    if zis_zero(zsub(uv, vu)):
        return "commute"
    if zis_zero(zadd(uv, vu)):
        return "anticommute"
    return "neither"


def const_mat(word: str):
    assert "Q" not in word
    return zpoly(word)[0]


def all_words(length: int, with_q: bool = True):
    from itertools import product

    words = ["".join(p) for p in product("XYAI", repeat=length)]
    if with_q and length >= 1:
        words += ["Q" + "".join(p) for p in product("XYAI", repeat=length - 1)]
    return words
