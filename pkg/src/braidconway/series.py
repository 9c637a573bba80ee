"""Degree-truncated power series in the non-commuting chord symbols A, B, C.

Words are strings over the alphabet {A, B, C} standing for the chords
A = t12, B = t23, C = t13; the degree of a word is its length.  Coefficients
are exact Python ints on the algebraic paths and complex floats on the
numeric (associator) path -- any ring with +, * and equality works.

`magnus3` sends a combed braid tail * x12^e to the ordered product of
geometric factors (1 + letter)^exponent, the universal finite-type invariant
of pure 3-braids.  `mu3_positive`/`nu3` are the subsequence sum and its
signed left inverse on positive words, kept as independent test oracles.
"""

from __future__ import annotations

import math
from typing import Mapping

from .braids import X12, X13, X23, CombedForm

ALPHABET = "ABC"
GEN_TO_LETTER = {X12: "A", X23: "B", X13: "C"}

SUBWORD_CAP = 16  # nu3/mu3_positive enumerate 2^len subsequences


def binom(a: int, k: int) -> int:
    """Binomial coefficient C(a, k) for integer a of any sign, k >= 0."""
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k) if k <= a else 0
    # C(a, k) = (-1)^k C(-a+k-1, k)
    return (-1) ** k * math.comb(-a + k - 1, k)


class Series:
    """Truncated series: a map word -> coefficient for words of degree <= trunc."""

    __slots__ = ("trunc", "terms")

    def __init__(self, trunc: int, terms: Mapping[str, object] | None = None):
        if trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        self.trunc = trunc
        self.terms: dict[str, object] = {}
        if terms:
            for word, c in terms.items():
                if len(word) <= trunc and c != 0:
                    self.terms[word] = c

    @classmethod
    def unit(cls, trunc: int) -> "Series":
        return cls(trunc, {"": 1})

    @classmethod
    def zero(cls, trunc: int) -> "Series":
        return cls(trunc)

    def coeff(self, word: str):
        return self.terms.get(word, 0)

    def _check(self, other: "Series"):
        if self.trunc != other.trunc:
            raise ValueError(
                f"truncation degrees differ: {self.trunc} != {other.trunc}"
            )

    def add(self, other: "Series") -> "Series":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return Series(self.trunc, out)

    def sub(self, other: "Series") -> "Series":
        return self.add(other.scalar_mul(-1))

    def scalar_mul(self, c) -> "Series":
        return Series(self.trunc, {w: c * v for w, v in self.terms.items()})

    def mul(self, other: "Series") -> "Series":
        self._check(other)
        out: dict[str, object] = {}
        for w1, c1 in self.terms.items():
            room = self.trunc - len(w1)
            for w2, c2 in other.terms.items():
                if len(w2) <= room:
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
        return Series(self.trunc, out)

    def truncate(self, n: int) -> "Series":
        return Series(n, {w: c for w, c in self.terms.items() if len(w) <= n})

    def degree_slice(self, d: int) -> dict[str, object]:
        return {w: c for w, c in self.terms.items() if len(w) == d}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series)
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*{w or '1'}" for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        )
        return f"Series(N={self.trunc}: {body or '0'})"


def geom_power(letter: str, a: int, trunc: int) -> Series:
    """(1 + letter)^a truncated; negative a expands the geometric series."""
    if letter not in ALPHABET:
        raise ValueError(f"unknown letter {letter!r}")
    if a == 0:
        raise ValueError("exponent must be nonzero")
    terms = {letter * k: binom(a, k) for k in range(trunc + 1)}
    return Series(trunc, terms)


def magnus3(cf: CombedForm, trunc: int) -> Series:
    """Magnus expansion of a combed braid: product of (1+t_ij)^a over its letters."""
    out = Series.unit(trunc)
    for gen, exp in cf.tail.letters:
        out = out.mul(geom_power(GEN_TO_LETTER[gen], exp, trunc))
    if cf.e12:
        out = out.mul(geom_power("A", cf.e12, trunc))
    return out


def _check_positive(word: str, cap: int):
    if any(l not in ALPHABET for l in word):
        raise ValueError("positive word must use letters A, B, C")
    if len(word) > cap:
        raise ValueError(f"word length {len(word)} exceeds subword cap {cap}")


def mu3_positive(word: str, trunc: int, cap: int = SUBWORD_CAP) -> Series:
    """Sum of all subsequences of a positive word: the product of (1 + letter)."""
    _check_positive(word, cap)
    out = Series.unit(trunc)
    for letter in word:
        out = out.mul(Series(trunc, {"": 1, letter: 1}))
    return out


def nu3(word: str, cap: int = SUBWORD_CAP) -> dict[str, int]:
    """Signed subsequence sum, the left inverse of mu3_positive.

    Expands the product of (letter - 1) over the letters of the word, so a
    subsequence w' of w appears with sign (-1)^(|w| - |w'|) and multiplicity.
    """
    _check_positive(word, cap)
    out: dict[str, int] = {"": 1}
    for letter in word:
        nxt: dict[str, int] = {}
        for w, c in out.items():
            nxt[w + letter] = nxt.get(w + letter, 0) + c
            nxt[w] = nxt.get(w, 0) - c
        out = {w: c for w, c in nxt.items() if c}
    return out


def nu3_linear(terms: Mapping[str, int], cap: int = SUBWORD_CAP) -> dict[str, int]:
    """Apply nu3 linearly to an integer combination of positive words."""
    out: dict[str, int] = {}
    for word, c in terms.items():
        for w, v in nu3(word, cap).items():
            out[w] = out.get(w, 0) + c * v
    return {w: c for w, c in out.items() if c}


def series_to_json(s: Series) -> dict:
    words = sorted(s.terms, key=lambda w: (len(w), w))
    return {"N": s.trunc, "terms": [{"word": w, "coeff": str(s.terms[w])} for w in words]}


def series_from_json(data: dict) -> Series:
    terms = {t["word"]: int(t["coeff"]) for t in data["terms"]}
    return Series(int(data["N"]), terms)
