"""Pure braid group P3: generator words and the combed normal form.

Elements are words in the three full-twist generators x12, x13, x23 with
integer exponents, multiplied by concatenation (top to bottom).  P3 splits
over the free group F2 = <x13, x23>, so every braid has a unique combed form

    tail(x13, x23) * x12^e .

Combing pushes each x12^{+-1} letter to the right; a letter it passes is
rewritten by the automorphism `conj_action` of F2.  The sign convention is
pinned by the worked identity  x12 x23 = x13 x23 x13^-1 x12,  which makes
conj_action(+1) conjugation by x13*x23 inside F2.  Note that under this
convention the full positive twist x12*x13*x23 is NOT central in the group
the normal form presents (x12^-1*x13*x23 is); see tests for the trade-off.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

X12 = (1, 2)
X13 = (1, 3)
X23 = (2, 3)
GENERATORS = (X12, X13, X23)

Gen = tuple[int, int]
Letter = tuple[Gen, int]

_TOKEN_RE = re.compile(r"^x(\d)(\d)(?:\^(-?\d+))?$")


def _merge(letters) -> tuple[Letter, ...]:
    """Freely reduce a letter sequence: merge adjacent equal generators, drop zeros.

    Stack invariant: adjacent stack entries always carry distinct generators, so
    each incoming letter merges with at most the current top.
    """
    out: list[Letter] = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            exp += out.pop()[1]
            if exp == 0:
                continue
        out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word in the generators of P3."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen}")
            if exp == 0:
                raise ValueError("zero exponent in braid word")
        for a, b in zip(self.letters, self.letters[1:]):
            if a[0] == b[0]:
                raise ValueError("braid word not freely merged")

    @classmethod
    def from_letters(cls, letters) -> "BraidWord":
        return cls(_merge(letters))

    @classmethod
    def identity(cls) -> "BraidWord":
        return cls(())

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord.from_letters(self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "BraidWord":
        if n < 0:
            return self.inverse() ** (-n)
        out = BraidWord.identity()
        for _ in range(n):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def exponent_sum(self, gen: Gen) -> int:
        return sum(e for g, e in self.letters if g == gen)

    def abelianization(self) -> tuple[int, int, int]:
        """Exponent sums of (x12, x13, x23); invariant under combing."""
        return tuple(self.exponent_sum(g) for g in GENERATORS)  # type: ignore[return-value]

    def sigma_length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            f"x{g[0]}{g[1]}" + (f"^{e}" if e != 1 else "") for g, e in self.letters
        )

    def to_json(self) -> list[list[int]]:
        return [[g[0], g[1], e] for g, e in self.letters]

    @classmethod
    def from_json(cls, data) -> "BraidWord":
        return cls.from_letters([((i, j), e) for i, j, e in data])


def parse_braid(text: str) -> BraidWord:
    """Parse whitespace-separated tokens `x{i}{j}` or `x{i}{j}^{e}` with 1<=i<j<=3."""
    letters: list[Letter] = []
    for tok in text.split():
        m = _TOKEN_RE.match(tok)
        if not m:
            raise ValueError(f"malformed braid token {tok!r}")
        i, j = int(m.group(1)), int(m.group(2))
        if not (1 <= i < j <= 3):
            raise ValueError(f"generator index out of range in {tok!r} (need 1<=i<j<=3)")
        exp = int(m.group(3)) if m.group(3) is not None else 1
        if exp == 0:
            raise ValueError(f"zero exponent in {tok!r}")
        letters.append(((i, j), exp))
    return BraidWord.from_letters(letters)


def multiply(a: BraidWord, b: BraidWord) -> BraidWord:
    return a * b


# Images of x13, x23 under conjugation by x12^{+1} / x12^{-1}, as (prefix, suffix)
# around the letter itself: x12^s y^e x12^-s = prefix . y^e . suffix.  The +1 row
# is conjugation by x13*x23, the -1 row by its inverse; both fix x13*x23.
_CONJ = {
    1: {
        X13: (((X13, 1), (X23, 1)), ((X23, -1), (X13, -1))),
        X23: (((X13, 1),), ((X13, -1),)),
    },
    -1: {
        X13: (((X23, -1),), ((X23, 1),)),
        X23: (((X23, -1), (X13, -1)), ((X13, 1), (X23, 1))),
    },
}


def conj_action(gen: Gen, sign: int = 1, by: int = 1) -> BraidWord:
    """The word over {x13, x23} equal to x12^{by} * gen^{sign} * x12^{-by}, by = +-1."""
    if gen == X12:
        raise ValueError("conj_action is defined on x13 and x23 only")
    if by not in (1, -1) or sign not in (1, -1):
        raise ValueError("sign and by must be +-1")
    prefix, suffix = _CONJ[by][gen]
    return BraidWord.from_letters(prefix + ((gen, sign),) + suffix)


def _conj_block(letters: tuple[Letter, ...], by: int) -> tuple[Letter, ...]:
    """Conjugate a whole F2 word by x12^{by}, by = +-1, and freely reduce."""
    table = _CONJ[by]
    images: list[Letter] = []
    for gen, exp in letters:
        prefix, suffix = table[gen]
        images.extend(prefix)
        images.append((gen, exp))
        images.extend(suffix)
    return _merge(images)


@dataclass(frozen=True)
class CombedForm:
    """Normal form tail * x12^e12 with the tail a reduced word over {x13, x23}."""

    tail: BraidWord
    e12: int

    def __post_init__(self):
        for gen, _ in self.tail.letters:
            if gen == X12:
                raise ValueError("combed tail must not contain x12")

    def word(self) -> BraidWord:
        w = self.tail
        if self.e12:
            w = w * BraidWord(((X12, self.e12),))
        return w

    def __str__(self) -> str:
        head = str(self.tail) if self.tail.letters else "1"
        if self.e12 == 0:
            return head
        if not self.tail.letters:
            return f"x12^{self.e12}"
        return f"{head} · x12^{self.e12}"


def comb(w: BraidWord) -> CombedForm:
    """Push every x12 letter to the right, rewriting what it passes by conj_action."""
    tail: tuple[Letter, ...] = ()
    e12 = 0
    for gen, exp in w.letters:
        if gen == X12:
            e12 += exp
        else:
            block: tuple[Letter, ...] = ((gen, exp),)
            by = 1 if e12 > 0 else -1
            for _ in range(abs(e12)):
                block = _conj_block(block, by)
            tail = _merge(tail + block)
    return CombedForm(BraidWord(tail), e12)


def comb_json(cf: CombedForm) -> dict:
    return {"tail": cf.tail.to_json(), "x12_exponent": cf.e12}
