"""The algebra of horizontal chord diagrams on three strands.

Monomials in A = t12, B = t23, C = t13 modulo the infinitesimal pure-braid
relations, which on three strands collapse to [A,B] = [B,C] = [C,A].  Words
with every A at the end ("descending" diagrams) form a basis; `reduce` rewrites
an arbitrary word into that basis with the two rules

    AB -> BA + BC - CB        AC -> CA - BC + CB

applied at the leftmost A-redex.  The basis theorem makes the result
independent of the rewriting schedule (see tests).

Thread-safety note: the module-level memo table only ever maps a word to its
finished reduction, so concurrent readers at worst recompute an entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from .series import Series

DiagramPoly = dict[str, int]

# AX -> replacement words with signs, X in {B, C}
_RULES = {
    "B": (("BA", 1), ("BC", 1), ("CB", -1)),
    "C": (("CA", 1), ("BC", -1), ("CB", 1)),
}

_reduce_memo: dict[str, DiagramPoly] = {}


def split_descending(word: str) -> tuple[str, int]:
    """Split a descending word into its {B,C} head and trailing A-count."""
    n = len(word)
    a = 0
    while a < n and word[n - 1 - a] == "A":
        a += 1
    head = word[: n - a]
    if "A" in head:
        raise ValueError(f"word {word!r} is not descending")
    return head, a


def is_descending(word: str) -> bool:
    i = word.find("A")
    return i < 0 or set(word[i:]) == {"A"}


def _add_scaled(acc: DiagramPoly, terms: Mapping[str, int], c: int) -> None:
    for w, v in terms.items():
        nv = acc.get(w, 0) + c * v
        if nv:
            acc[w] = nv
        else:
            acc.pop(w, None)


def reduce_word(word: str, leftmost: bool = True) -> DiagramPoly:
    """Rewrite a single word into the descending basis.

    The redex count (pairs A-before-{B,C}) drops on the swapped term while the
    two correction terms lose an A, so recursion terminates.
    """
    if leftmost and word in _reduce_memo:
        return _reduce_memo[word]
    positions = range(len(word) - 1) if leftmost else range(len(word) - 2, -1, -1)
    redex = next(
        (i for i in positions if word[i] == "A" and word[i + 1] != "A"), None
    )
    if redex is None:
        return {word: 1}
    head, x, tail = word[:redex], word[redex + 1], word[redex + 2 :]
    acc: DiagramPoly = {}
    for repl, sign in _RULES[x]:
        _add_scaled(acc, reduce_word(head + repl + tail, leftmost), sign)
    if leftmost:
        _reduce_memo[word] = acc
    return acc


def reduce(x: Union[str, Series, Mapping[str, int]]) -> DiagramPoly:
    """Linear extension of reduce_word to series and integer combinations."""
    if isinstance(x, str):
        return dict(reduce_word(x))
    terms = x.terms if isinstance(x, Series) else x
    acc: DiagramPoly = {}
    for word, c in terms.items():
        _add_scaled(acc, reduce_word(word), c)
    return acc


def diagram_mul(p: Mapping[str, int], q: Mapping[str, int]) -> DiagramPoly:
    """Product of two basis combinations, reduced back to the basis."""
    acc: DiagramPoly = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            _add_scaled(acc, reduce_word(w1 + w2), c1 * c2)
    return acc


@dataclass(frozen=True)
class DiagramCode:
    """Classification of a descending diagram for the Conway symbol.

    kind is "unit" (empty diagram), "zero" (the symbol vanishes on it), or
    "code" with parts (c1,...,ck) encoding C^c1 B ... C^c(k-1) B C^ck, primed
    when a final B follows.
    """

    kind: str
    parts: tuple[int, ...] = ()
    primed: bool = False

    def __str__(self) -> str:
        if self.kind == "unit":
            return "[]"
        if self.kind == "zero":
            return "0"
        return "[" + ",".join(map(str, self.parts)) + "]" + ("'" if self.primed else "")


UNIT = DiagramCode("unit")
ZERO = DiagramCode("zero")


def classify(word: str) -> DiagramCode:
    """Classify a descending word; words with trailing A's, a leading B, or a
    BB factor are in the kernel of the symbol."""
    head, a = split_descending(word)
    if a > 0:
        return ZERO
    if not head:
        return UNIT
    if head.startswith("B") or "BB" in head:
        return ZERO
    runs = head.split("B")
    primed = runs[-1] == ""
    if primed:
        runs = runs[:-1]
    parts = tuple(len(r) for r in runs)
    return DiagramCode("code", parts, primed)


def code_to_word(code: DiagramCode) -> str:
    if code.kind != "code":
        raise ValueError("only proper codes correspond to words")
    if not code.parts or any(c < 1 for c in code.parts):
        raise ValueError(f"invalid code parts {code.parts}")
    word = "B".join("C" * c for c in code.parts)
    return word + "B" if code.primed else word


def format_diagram(word: str) -> str:
    """Run-length display of a diagram word, e.g. 'C^3 B C^3'."""
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return " ".join(out)
