"""The symbol of the Conway polynomial on three-strand chord diagrams.

`chi` evaluates the linear map that factors the Conway polynomial of the
short-circuit closure through the Magnus expansion.  On the descending basis
it is given by a closed rule: diagrams with a trailing chord A, a leading B,
or a BB factor are sent to 0, and the surviving codes [c1,...,ck] go to

    (-1)^(k-1) * (prod_{i<k} p1 * p_{ci-1}) * p_{ck},

primed codes being t^-2 times the code extended by 1.  The polynomial family
p_s satisfies p_0 = 1, p_1 = t^2, p_{s+2} = t^2 (p_s + p_{s+1}); q_s is the
Conway polynomial of the (2, 2s+1) torus knot.  Closed binomial forms of both
are kept as independent check paths.
"""

from __future__ import annotations

import functools
import math
from typing import Mapping, Union

from .braids import X13, BraidWord, comb
from .diagrams import DiagramCode, classify, reduce as diagram_reduce
from .polynomials import ONE, ZERO, EvenPoly
from .series import Series, binom


@functools.lru_cache(maxsize=None)
def p_poly(k: int) -> EvenPoly:
    """Recursive family p_0 = 1, p_1 = t^2, p_{s+2} = t^2 (p_s + p_{s+1})."""
    if k < 0:
        raise ValueError("index must be >= 0")
    if k == 0:
        return ONE
    if k == 1:
        return EvenPoly.t_power(1)
    return p_poly(k - 2).add(p_poly(k - 1)).times_t2()


def p_closed(k: int) -> EvenPoly:
    """Closed form: sum over k/2 <= j <= k of C(j, 2j-k) t^(2j)."""
    if k < 0:
        raise ValueError("index must be >= 0")
    coeffs = [0] * (k + 1)
    for j in range((k + 1) // 2, k + 1):
        coeffs[j] = math.comb(j, 2 * j - k)
    return EvenPoly.make(coeffs)


@functools.lru_cache(maxsize=None)
def q_poly(s: int) -> EvenPoly:
    """Conway polynomial of the (2, 2s+1) torus knot: sum of C(s+j, s-j) t^(2j)."""
    if s < 0:
        raise ValueError("index must be >= 0")
    return EvenPoly.make(math.comb(s + j, s - j) for j in range(s + 1))


@functools.lru_cache(maxsize=None)
def chi_code(code: DiagramCode) -> EvenPoly:
    """Value of the symbol on a classified descending diagram."""
    if code.kind == "unit":
        return ONE
    if code.kind == "zero":
        return ZERO
    if code.primed:
        return chi_code(DiagramCode("code", code.parts + (1,), False)).div_t2()
    parts = code.parts
    out = ONE if len(parts) % 2 else ONE.scale(-1)
    for c in parts[:-1]:
        out = out.times_t2().mul(p_poly(c - 1))  # the p1 factor is the t^2 shift
    return out.mul(p_poly(parts[-1]))


def chi_word(word: str) -> EvenPoly:
    """Symbol of a single word over {A, B, C} (reduced to the basis first)."""
    out = ZERO
    for w, c in diagram_reduce(word).items():
        out = out.add(chi_code(classify(w)).scale(c))
    return out


def chi_series(terms: Union[Series, Mapping[str, int]]) -> EvenPoly:
    """Linear extension of the symbol to an exact-coefficient combination."""
    if isinstance(terms, Series):
        terms = terms.terms
    out = ZERO
    for w, c in terms.items():
        if c:
            out = out.add(chi_word(w).scale(c))
    return out


def chi_braid(w: BraidWord, trunc: int) -> EvenPoly:
    """Conway polynomial of a braid via the symbol of its Magnus expansion.

    Only the coefficients of t^(2j) with 2j <= trunc are reported: the symbol
    of a degree-d diagram has lowest exponent >= d, so those coefficients are
    unchanged by any higher truncation.

    The Magnus expansion of a combed braid is supported on {B,C}-words times a
    trailing A-block, which is already descending; the A-block and every word
    in the kernel of the symbol (leading B or internal BB, both stable under
    appending letters) are pruned as the product is built.
    """
    if trunc < 0:
        raise ValueError("truncation degree must be >= 0")
    cf = comb(w)
    support: dict[str, int] = {"": 1}
    for gen, exp in cf.tail.letters:
        nxt: dict[str, int] = {}
        if gen == X13:  # append C-runs
            for word, c in support.items():
                room = trunc - len(word)
                for k in range(room + 1):
                    b = binom(exp, k)
                    if b:
                        nw = word + "C" * k
                        nxt[nw] = nxt.get(nw, 0) + c * b
        else:  # append at most one B: more gives BB, and B after '' leads with B
            for word, c in support.items():
                nxt[word] = nxt.get(word, 0) + c
                if word and not word.endswith("B") and len(word) < trunc:
                    nw = word + "B"
                    nxt[nw] = nxt.get(nw, 0) + c * exp
        support = {w_: c for w_, c in nxt.items() if c}
    out = ZERO
    for word, c in support.items():
        out = out.add(chi_code(classify(word)).scale(c))
    return out.truncate(trunc // 2)


def chi(x, trunc: int | None = None) -> EvenPoly:
    """Evaluate the symbol on a braid word, a series, a combination, or a word."""
    if isinstance(x, BraidWord):
        if trunc is None:
            raise ValueError("a truncation degree is required for braid input")
        return chi_braid(x, trunc)
    if isinstance(x, str):
        return chi_word(x)
    return chi_series(x)


def partition_transform(code: DiagramCode) -> tuple[int, ...]:
    """Unordered partition (1^(k-1), c1-1, ..., c_{k-1}-1, ck) with zero parts
    dropped; the symbol is (-1)^(k-1) times the product of p over the parts."""
    if code.kind != "code" or code.primed:
        raise ValueError("partition transform is defined for unprimed codes")
    parts = (1,) * (len(code.parts) - 1)
    parts += tuple(c - 1 for c in code.parts[:-1]) + (code.parts[-1],)
    return tuple(sorted(p for p in parts if p > 0))


def binomial_identity_check(n: int, j: int) -> bool:
    """Alternating binomial product sum against its closed form, exact."""
    if not (0 <= j <= n - 1):
        raise ValueError("need 0 <= j <= n-1")
    lhs = sum(
        (-1) ** s * math.comb(n - 1, s) * math.comb(s + j, 2 * j)
        for s in range(j, n)
    )
    rhs = (-1) ** (n - 1) * binom(j, 2 * j - n + 1)
    return lhs == rhs


def telescoping_check(n: int) -> bool:
    """Inclusion-exclusion of the q-family partial sums collapses to p_{n-1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    acc = ZERO
    partial = ZERO
    for l in range(1, n + 1):
        partial = partial.add(q_poly(l - 1))  # sum of q_0..q_{l-1}
        acc = acc.add(partial.scale((-1) ** (n - l) * math.comb(n, l)))
    return acc == p_poly(n - 1)


def alternating_p_sum(kmax: int) -> EvenPoly:
    """Partial sum of (-1)^k p_k; all coefficients t^(2j), 1 <= j <= kmax/2, vanish."""
    out = ZERO
    for k in range(kmax + 1):
        out = out.add(p_poly(k).scale((-1) ** k))
    return out
