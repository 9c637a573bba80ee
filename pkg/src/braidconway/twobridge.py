"""Independent Conway-polynomial oracle through two-bridge knots.

The short-circuit closure of a pure 3-braid is a rational (2-bridge) knot.
Reading the combed tail as alternating twist blocks x13^a1 x23^b1 ... gives a
continued fraction with denominators (2a1, -2b1, ..., last+1); its value p/q
names the knot, whose Alexander polynomial is computed by the exponent-sum
staircase formula

    Delta(t) = sum_{i=0}^{p-1} (-1)^i t^{eps_i},   eps_i = sum_{j<=i} (-1)^(floor(j*q/p))

for an odd representative q in (0, 2p).  Converting the symmetrized Delta into
the basis (t - 2 + 1/t)^j yields the Conway polynomial exactly.

Conway polynomials of knots are mirror-insensitive, so the choice among the
equivalent fraction representatives cannot change the output.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .braids import X13, X23, BraidWord, CombedForm, comb
from .polynomials import ONE, EvenPoly, LaurentPoly


def closure_word(cf: CombedForm) -> tuple[int, ...]:
    """Twist blocks surviving the closure: the x12 block and a leading x23
    block bound regions the closure arcs cancel, so both are dropped.

    Returns alternating exponents (a1, b1, a2, ...) starting with an x13
    block; odd length means a trailing x13 block.
    """
    letters = cf.tail.letters
    if letters and letters[0][0] == X23:
        letters = letters[1:]
    for pos, (gen, _) in enumerate(letters):
        expected = X13 if pos % 2 == 0 else X23
        if gen != expected:
            raise AssertionError("combed tail does not alternate")  # unreachable
    return tuple(e for _, e in letters)


def word_to_cf(blocks: tuple[int, ...]) -> tuple[int, ...]:
    """Continued-fraction denominators of the closure: (2a1, -2b1, ...) with
    the final entry bumped by one (both the b-ending and a-ending forms)."""
    if not blocks:
        return ()
    if any(b == 0 for b in blocks):
        raise ValueError("alternating word entries must be nonzero")
    cf = [2 * e if i % 2 == 0 else -2 * e for i, e in enumerate(blocks)]
    cf[-1] += 1
    return tuple(cf)


def cf_to_fraction(cf: tuple[int, ...]) -> Fraction | None:
    """Evaluate c1 + 1/(c2 + 1/(...)) right to left over the projective line.

    Returns None for the empty fraction and for an infinite value; both encode
    the unknot downstream.
    """
    if not cf:
        return None
    p, q = cf[-1], 1
    for c in reversed(cf[:-1]):
        p, q = c * p + q, p
    if q == 0:
        return None
    return Fraction(p, q)


def _normalized_parameters(fr: Fraction) -> tuple[int, int]:
    """Determinant P = |numerator| and an odd staircase parameter in (0, 2P).

    Representatives q and q + P name the same unoriented knot, so parity can
    always be fixed; a negative fraction is replaced by its mirror.
    """
    p, q = fr.numerator, fr.denominator
    if p == 0:
        raise ValueError("fraction 0 does not name a knot")
    if p < 0:
        p, q = -p, -q
    if p % 2 == 0:
        raise ValueError(f"even determinant {p}: a two-component link, not a knot")
    if p == 1:
        return 1, 1
    q %= p
    if q % 2 == 0:
        q += p
    return p, q


def alexander_2bridge(fr: Fraction) -> LaurentPoly:
    """Alexander polynomial of the two-bridge knot named by the fraction,
    symmetrized about exponent 0 and normalized to value +1 at t = 1."""
    p, q = _normalized_parameters(fr)
    raw: dict[int, int] = {}
    eps = 0
    raw[0] = 1
    sign = -1
    for i in range(1, p):
        eps += -1 if (i * q // p) % 2 else 1
        raw[eps] = raw.get(eps, 0) + sign
        sign = -sign
    poly = LaurentPoly.from_dict(raw)
    if not poly.coeffs:
        return LaurentPoly((1,), 0)
    span = poly.min_exp + poly.max_exp
    if span % 2:
        raise ValueError("staircase sum has odd exponent span; not a knot polynomial")
    centered = LaurentPoly(poly.coeffs, poly.min_exp - span // 2)
    if not centered.is_symmetric():
        raise ValueError("staircase sum is not palindromic; not a knot polynomial")
    value = centered.eval_at_1()
    if value == -1:
        centered = LaurentPoly(tuple(-c for c in centered.coeffs), centered.min_exp)
    elif value != 1:
        raise ValueError(f"Alexander value at 1 is {value}, expected +-1")
    return centered


def conway_from_alexander(delta: LaurentPoly) -> EvenPoly:
    """Exact change of basis: write the symmetric Delta in powers of
    z^2 = t - 2 + 1/t, giving the Conway polynomial in z."""
    if not delta.is_symmetric():
        raise ValueError("Alexander input must be symmetric")
    # remaining[e] for e >= 0 (symmetric side)
    remaining = {e: delta.coeff(e) for e in range(0, max(delta.max_exp, 0) + 1)}
    jmax = max(delta.max_exp, 0)
    out = [0] * (jmax + 1)
    for j in range(jmax, 0, -1):
        c = remaining.get(j, 0)
        if c == 0:
            continue
        out[j] = c
        # (t - 2 + 1/t)^j has coefficient (-1)^(j-m) C(2j, j-m) at t^m
        for m in range(0, j + 1):
            remaining[m] = remaining.get(m, 0) - c * (-1) ** (j - m) * math.comb(
                2 * j, j - m
            )
    out[0] = remaining.get(0, 0)
    if any(v for e, v in remaining.items() if e > 0):
        raise ValueError("no exact Conway representation")  # unreachable for knots
    result = EvenPoly.make(out)
    if result.coeff(0) != 1:
        raise ValueError("Conway polynomial of a knot must have constant term 1")
    return result


def conway_of_fraction(fr: Fraction | None) -> EvenPoly:
    """Conway polynomial of the two-bridge knot of a reduced fraction."""
    if fr is None or abs(fr.numerator) == 1:
        return ONE
    return conway_from_alexander(alexander_2bridge(fr))


def conway_of_braid(w: BraidWord) -> EvenPoly:
    """Conway polynomial of the short-circuit closure of a pure 3-braid."""
    blocks = closure_word(comb(w))
    return conway_of_fraction(cf_to_fraction(word_to_cf(blocks)))


def mirror_braid(w: BraidWord) -> BraidWord:
    """The braid whose closure is the mirror knot.

    Mirroring a diagram negates every crossing; for x12 and x23 that is plain
    exponent negation, but the mirrored x13 twist passes the middle strand on
    the other side, giving the conjugate x23^-1 x13^-1 x23.  Plain exponent
    negation is not the mirror: the closure of x13 is a trefoil while the
    closure of x13^-1 is the unknot.
    """
    letters: list = []
    for gen, exp in w.letters:
        if gen == X13:
            letters += [(X23, -1), (X13, -exp), (X23, 1)]
        else:
            letters.append((gen, -exp))
    return BraidWord.from_letters(letters)


def closure_stages(w: BraidWord) -> dict:
    """All intermediate data of the oracle chain, for inspection and JSON output."""
    cf = comb(w)
    blocks = closure_word(cf)
    denominators = word_to_cf(blocks)
    fr = cf_to_fraction(denominators)
    return {
        "combed": cf,
        "blocks": blocks,
        "cf": denominators,
        "fraction": fr,
        "conway": conway_of_fraction(fr),
    }
