"""Batch verification drivers: the two Conway pipelines against each other,
plus the exact polynomial identity suite."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .braids import GENERATORS, X13, X23, BraidWord
from .polynomials import EvenPoly
from .symbol import (
    alternating_p_sum,
    binomial_identity_check,
    chi_braid,
    chi_word,
    p_closed,
    p_poly,
    q_poly,
    telescoping_check,
)
from .twobridge import conway_of_braid, conway_of_fraction

SIGNED_LETTERS = tuple((g, s) for g in GENERATORS for s in (1, -1))


def all_braid_words(max_len: int):
    """Every word of length <= max_len over the six signed generators."""
    for n in range(max_len + 1):
        for seq in itertools.product(SIGNED_LETTERS, repeat=n):
            yield BraidWord.from_letters(seq)


def random_braid_word(rng: random.Random, max_len: int, max_exp: int) -> BraidWord:
    n = rng.randint(1, max_len)
    exps = [e for e in range(-max_exp, max_exp + 1) if e]
    return BraidWord.from_letters(
        (rng.choice(GENERATORS), rng.choice(exps)) for _ in range(n)
    )


def compare_pipelines(w: BraidWord, depth_cap: int | None = None, chi_fn=chi_braid):
    """Compare the symbol-of-Magnus pipeline with the two-bridge oracle.

    Returns (ok, full, oracle, symbol_value).  All oracle coefficients plus one
    beyond are compared; when a depth cap is given, comparison stops at t^(2*cap)
    (the symbol side costs ~phi^N at truncation N) and full=False signals the
    partial check.
    """
    oracle = conway_of_braid(w)
    j_needed = len(oracle.coeffs)  # oracle degree/2 plus one zero coefficient
    j_check = j_needed if depth_cap is None else min(j_needed, depth_cap)
    full = j_check == j_needed
    symbol = chi_fn(w, 2 * j_check)
    ok = all(symbol.coeff(j) == oracle.coeff(j) for j in range(j_check + 1))
    return ok, full, oracle, symbol


@dataclass
class EquivalenceReport:
    checked: int = 0
    full: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def run_equivalence(
    max_len: int = 4,
    samples: int = 0,
    seed: int = 0,
    sample_len: int = 10,
    max_exp: int = 3,
    depth_cap: int | None = 10,
    chi_fn=chi_braid,
) -> EquivalenceReport:
    """Exhaustive short words plus seeded random words through both pipelines."""
    report = EquivalenceReport()

    def check(w: BraidWord):
        ok, full, oracle, symbol = compare_pipelines(w, depth_cap, chi_fn)
        report.checked += 1
        report.full += full
        if not ok:
            report.mismatches.append(
                f"{w or '1'}: oracle {oracle} vs symbol {symbol}"
            )

    for w in all_braid_words(max_len):
        check(w)
    rng = random.Random(seed)
    for _ in range(samples):
        check(random_braid_word(rng, sample_len, max_exp))
    return report


def _oracle_table(max_len: int) -> dict[str, EvenPoly]:
    """Conway polynomial of the closure of every positive {B,C}-word braid."""
    table: dict[str, EvenPoly] = {}
    letter_gen = {"B": X23, "C": X13}
    for n in range(max_len + 1):
        for tup in itertools.product("BC", repeat=n):
            word = "".join(tup)
            braid = BraidWord.from_letters((letter_gen[l], 1) for l in word)
            table[word] = conway_of_braid(braid)
    return table


def definitional_identity_report(max_len: int = 10) -> list[str]:
    """Check the subword-sum definition of the symbol on positive {B,C}-words:
    chi(w) must equal sum over subwords w' of (-1)^(|w|-|w'|) nabla(closure(w')).
    Returns the words where it fails."""
    table = _oracle_table(max_len)
    bad = []
    for word in table:
        n = len(word)
        total = EvenPoly()
        for mask in range(1 << n):
            sub = "".join(word[i] for i in range(n) if mask >> i & 1)
            sign = (-1) ** (n - bin(mask).count("1"))
            total = total.add(table[sub].scale(sign))
        if total != chi_word(word):
            bad.append(word)
    return bad


def identity_suite(
    p_max: int = 40,
    telescope_max: int = 25,
    binomial_max: int = 40,
    alternating_max: int = 30,
    torus_max: int = 10,
) -> list[tuple[str, bool]]:
    """The exact polynomial identity checks, each reduced to a single flag."""
    results = []
    results.append(
        ("p recursion equals closed form", all(p_poly(k) == p_closed(k) for k in range(p_max + 1)))
    )
    results.append(
        ("telescoping collapse to p", all(telescoping_check(n) for n in range(1, telescope_max + 1)))
    )
    results.append(
        (
            "alternating binomial product sum",
            all(
                binomial_identity_check(n, j)
                for n in range(1, binomial_max + 1)
                for j in range(n)
            ),
        )
    )
    alternating_ok = True
    for kmax in range(alternating_max + 1):
        s = alternating_p_sum(kmax)
        alternating_ok &= all(s.coeff(j) == 0 for j in range(1, kmax // 2 + 1))
    results.append(("alternating p-sum vanishing", alternating_ok))
    results.append(
        (
            "torus knot calibration",
            all(
                conway_of_fraction(Fraction(2 * s + 1, 1)) == q_poly(s)
                for s in range(1, torus_max + 1)
            ),
        )
    )
    return results
