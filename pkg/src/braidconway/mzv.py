"""Multiple zeta values, the Drinfeld associator, and the conjecture numerics.

zeta(l1,...,lk) is the nested sum over n1 > ... > nk >= 1 of prod ni^-li,
convergent for l1 >= 2.  Values are computed by splitting the iterated
integral at 1/2 (Hölder convolution): writing the composition as a 0/1 word,

    zeta(w) = sum_{j} Li(rev complement w[:j]; 1/2) * Li(w[j:]; 1/2),

where both factors are multiple polylogarithms at 1/2 and converge like 2^-N.

The associator is the series sum_w (-1)^{depth(w)} reg(w) * w over words in
a, b, where reg is the shuffle-regularized zeta value of the word with the
divergent single letters sent to 0.  Feeding each word through the chord
algebra (a -> A, b -> B) and the Conway symbol produces the conjectured
generating function: collecting c_w * chi(w) by powers of t, the t^(2n)
coefficient equals the alternating depth-sum of zeta values
`conjecture_rhs(n)` (the angular normalizations of the variables cancel
against the zeta-weight grading; see chi_on_associator).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .diagrams import classify, reduce_word
from .symbol import chi_code

Composition = tuple[int, ...]

MAX_WEIGHT = 20
ASSOCIATOR_DEGREE_CAP = 12


class PrecisionError(ValueError):
    """Requested numeric accuracy cannot be met."""


def _check_composition(c: Composition):
    if not c or any(int(l) != l or l < 1 for l in c):
        raise ValueError(f"composition must be positive integers, got {c}")
    if c[0] < 2:
        raise ValueError(f"composition {c} is divergent (first part must be >= 2)")
    if sum(c) > MAX_WEIGHT:
        raise ValueError(f"weight {sum(c)} exceeds supported maximum {MAX_WEIGHT}")


def _composition_to_word01(c: Composition) -> tuple[int, ...]:
    """zeta(s1,...,sk) as the integral word 0^(s1-1) 1 ... 0^(sk-1) 1."""
    out: list[int] = []
    for s in c:
        out.extend([0] * (s - 1))
        out.append(1)
    return tuple(out)


def _word01_to_indices(w: tuple[int, ...]) -> Composition:
    """Inverse of _composition_to_word01; w must end with 1."""
    out: list[int] = []
    run = 0
    for l in w:
        if l == 0:
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _li_half(s: Composition, terms: int) -> float:
    """Multiple polylogarithm sum_{n1>...>nr} (1/2)^n1 / prod ni^si."""
    if not s:
        return 1.0
    # inner[m] = sum over n_i <= m of 1/n^s_i * inner_{i+1}(n-1), built inside out
    inner = [1.0] * (terms + 1)
    for si in reversed(s[1:]):
        acc = 0.0
        nxt = [0.0] * (terms + 1)
        for n in range(1, terms + 1):
            acc += inner[n - 1] / n**si
            nxt[n] = acc
        inner = nxt
    total = 0.0
    half = 1.0
    for n in range(1, terms + 1):
        half *= 0.5
        total += half * inner[n - 1] / n ** s[0]
    return total


def zeta(c: Composition, eps: float = 1e-8) -> float:
    """Multiple zeta value with absolute error below eps (double precision)."""
    c = tuple(int(l) for l in c)
    _check_composition(c)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if eps < 1e-12:
        raise PrecisionError("requested precision is unattainable in double precision")
    terms = max(64, int(-math.log2(eps)) + 24)
    word = _composition_to_word01(c)
    n = len(word)
    total = 0.0
    for j in range(n + 1):
        left = tuple(1 - l for l in reversed(word[:j]))
        right = word[j:]
        total += _li_half(_word01_to_indices(left) if left else (), terms) * _li_half(
            _word01_to_indices(right) if right else (), terms
        )
    return total


def compositions_min2(m: int, k: int) -> list[Composition]:
    """Ordered compositions of m into exactly k parts, each part >= 2."""
    if k == 0:
        return [()] if m == 0 else []
    if m < 2 * k:
        return []
    out = []
    for first in range(2, m - 2 * (k - 1) + 1):
        for rest in compositions_min2(m - first, k - 1):
            out.append((first,) + rest)
    return out


def zeta_depth_sum(m: int, k: int, eps: float = 1e-8) -> float:
    """Sum of zeta over all depth-k compositions of m with parts >= 2."""
    return sum(zeta(c, eps) for c in compositions_min2(m, k))


def conjecture_rhs(n: int, eps: float = 1e-8) -> float:
    """Alternating depth sum: sum_{k=1}^{n} (-1)^k * (all zeta of weight n+k, depth k)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum((-1) ** k * zeta_depth_sum(n + k, k, eps) for k in range(1, n + 1))


# --- shuffle algebra and regularization -----------------------------------

RegValue = dict[Composition, Fraction]  # regularized value as a zeta combination


def shuffle_words(u: str, v: str) -> dict[str, int]:
    """All interleavings of u and v with multiplicity."""
    out: dict[str, int] = {}

    @functools.lru_cache(maxsize=None)
    def go(i: int, j: int) -> tuple[tuple[str, int], ...]:
        if i == len(u):
            return ((v[j:], 1),)
        if j == len(v):
            return ((u[i:], 1),)
        acc: dict[str, int] = {}
        for w, c in go(i + 1, j):
            acc[u[i] + w] = acc.get(u[i] + w, 0) + c
        for w, c in go(i, j + 1):
            acc[v[j] + w] = acc.get(v[j] + w, 0) + c
        return tuple(acc.items())

    for w, c in go(0, 0):
        out[w] = out.get(w, 0) + c
    go.cache_clear()
    return out


def _is_convergent(word: str) -> bool:
    return word == "" or (word.startswith("a") and word.endswith("b"))


def _word_to_composition(word: str) -> Composition:
    """Convergent word a^(s1-1) b ... a^(sk-1) b -> (s1,...,sk)."""
    out: list[int] = []
    run = 0
    for l in word:
        if l == "a":
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


def _add_reg(acc: RegValue, val: RegValue, c: Fraction) -> None:
    for comp, v in val.items():
        nv = acc.get(comp, Fraction(0)) + c * v
        if nv:
            acc[comp] = nv
        else:
            acc.pop(comp, None)


@functools.lru_cache(maxsize=None)
def shuffle_regularize(word: str) -> tuple[tuple[Composition, Fraction], ...]:
    """Shuffle-regularized zeta value of a word over {a, b}.

    Convergent words (empty, or starting with a and ending with b) map to
    their own composition.  Otherwise the single divergent letter shuffled
    into the rest of the word gives a relation whose regularized value is 0:
    for word = b*u with L leading b's,

        0 = reg(b) reg(u) = L * reg(word) + sum of insertions past the run,

    and every insertion past the run has fewer leading b's, so the recursion
    terminates; trailing a's are symmetric.  The divergent letters themselves
    regularize to 0.
    """
    if _is_convergent(word):
        comp = _word_to_composition(word) if word else ()
        return ((comp, Fraction(1)),)
    letters = set(word)
    if letters <= {"a"} or letters <= {"b"}:
        return ()
    if word.startswith("b"):
        u, letter = word[1:], "b"
        run = len(word) - len(word.lstrip("b"))
    else:  # ends with 'a'
        u, letter = word[:-1], "a"
        run = len(word) - len(word.rstrip("a"))
    counts: dict[str, int] = {}
    for pos in range(len(u) + 1):
        cand = u[:pos] + letter + u[pos:]
        counts[cand] = counts.get(cand, 0) + 1
    if counts.pop(word) != run:
        raise AssertionError("insertion multiplicity must equal the run length")
    acc: RegValue = {}
    for cand, mult in counts.items():
        _add_reg(acc, dict(shuffle_regularize(cand)), Fraction(-mult, run))
    return tuple(acc.items())


def reg_value(word: str, eps: float = 1e-8) -> float:
    """Numeric shuffle-regularized zeta value of a word over {a, b}."""
    return sum(
        float(c) * (zeta(comp, eps) if comp else 1.0)
        for comp, c in shuffle_regularize(word)
    )


# --- the associator and the conjecture left-hand side ----------------------


@dataclass(frozen=True)
class AssociatorSeries:
    """Truncated associator: numeric and exact coefficients per {a,b}-word."""

    degree: int
    coeffs: dict[str, float]
    exact: dict[str, tuple[tuple[Composition, Fraction], ...]]

    def coeff(self, word: str) -> float:
        return self.coeffs.get(word, 0.0)


def _words_ab(degree: int):
    yield ""
    for d in range(1, degree + 1):
        for tup in itertools.product("ab", repeat=d):
            yield "".join(tup)


def associator(degree: int, eps: float = 1e-8) -> AssociatorSeries:
    """Associator coefficients through the given degree.

    The coefficient of a word w is (-1)^(number of b's) times its
    shuffle-regularized zeta value; convergent words contribute their own
    composition, so e.g. coeff(ab) = -zeta(2).
    """
    if degree > ASSOCIATOR_DEGREE_CAP:
        raise ValueError(f"degree {degree} exceeds cap {ASSOCIATOR_DEGREE_CAP}")
    coeffs: dict[str, float] = {}
    exact: dict[str, tuple[tuple[Composition, Fraction], ...]] = {}
    for word in _words_ab(degree):
        reg = shuffle_regularize(word)
        if not reg:
            continue
        sign = (-1) ** word.count("b")
        exact[word] = tuple((comp, sign * c) for comp, c in reg)
        value = sign * sum(
            float(c) * (zeta(comp, eps) if comp else 1.0) for comp, c in reg
        )
        if value != 0.0:
            coeffs[word] = value
    return AssociatorSeries(degree, coeffs, exact)


_AB_TO_CHORDS = str.maketrans("ab", "AB")


def chi_on_associator(degree: int, eps: float = 1e-8) -> list[float]:
    """Coefficients of T^2, T^4, ..., T^degree of the symbol on the associator.

    Each word contributes its associator coefficient times the t^(2j)
    coefficients of the symbol of the matching chord word; the angular
    normalization of the associator variables cancels against the zeta weight
    grading, so the T^(2n) coefficient is the plain real sum of
    c_w * chi(w)[t^(2n)].  A degree-d word reaches only t^d..t^(2d), so words
    of degree n <= d <= 2n contribute to T^(2n) and truncation at `degree` is
    exact for every reported coefficient.
    """
    if degree % 2 or degree < 2:
        raise ValueError("degree must be even and >= 2")
    phi = associator(degree, eps)
    acc = [0.0] * (degree // 2 + 1)
    for word, c in phi.coeffs.items():
        if not word:
            continue
        for reduced, mult in reduce_word(word.translate(_AB_TO_CHORDS)).items():
            val = chi_code(classify(reduced))
            for j, coeff in enumerate(val.coeffs):
                if coeff and j <= degree // 2:
                    acc[j] += c * mult * coeff
    return acc[1:]


def chi_on_associator_by_weight(degree: int, n: int, eps: float = 1e-8) -> dict[int, float]:
    """T^(2n) contribution split by word degree (zeta weight); the conjecture
    refines to: the weight-m slice equals (-1)^(m-n) times the depth-(m-n) sum
    of weight-m zeta values."""
    if not 1 <= n <= degree // 2:
        raise ValueError("need 1 <= n <= degree/2")
    phi = associator(degree, eps)
    out: dict[int, float] = {}
    for word, c in phi.coeffs.items():
        if not word:
            continue
        total = 0.0
        for reduced, mult in reduce_word(word.translate(_AB_TO_CHORDS)).items():
            total += mult * chi_code(classify(reduced)).coeff(n)
        if total:
            out[len(word)] = out.get(len(word), 0.0) + c * total
    return out
