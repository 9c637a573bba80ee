import itertools
import random

import pytest

from braidconway.braids import parse_braid
from braidconway.diagrams import DiagramCode, classify
from braidconway.polynomials import ONE, ZERO, EvenPoly
from braidconway.series import magnus3
from braidconway.braids import comb
from braidconway.symbol import (
    alternating_p_sum,
    binomial_identity_check,
    chi,
    chi_braid,
    chi_code,
    chi_series,
    chi_word,
    p_closed,
    p_poly,
    partition_transform,
    q_poly,
    telescoping_check,
)


def ep(*coeffs):
    return EvenPoly.make(coeffs)


def test_p_examples():
    assert p_poly(0) == ONE
    assert p_poly(1) == ep(0, 1)
    assert p_poly(3) == ep(0, 0, 2, 1)  # 2t^4 + t^6


def test_p_closed_examples():
    assert p_closed(2) == ep(0, 1, 1)
    assert p_closed(0) == ONE
    assert p_closed(4) == ep(0, 0, 1, 3, 1)


def test_p_recursion_matches_closed_form():
    for k in range(41):
        assert p_poly(k) == p_closed(k)


def test_q_examples():
    assert q_poly(0) == ONE
    assert q_poly(1) == ep(1, 1)
    assert q_poly(2) == ep(1, 3, 1)


def test_chi_code_examples():
    assert chi_code(DiagramCode("code", (1,))) == ep(0, 1)  # t^2
    assert chi_code(DiagramCode("code", (1,), True)) == ep(0, -1)  # -t^2
    expected = p_poly(1).mul(p_poly(2)).mul(p_poly(3)).scale(-1)
    assert chi_code(DiagramCode("code", (3, 3))) == expected


def test_chi_code_primed_rule_exact():
    rng = random.Random(31)
    for _ in range(40):
        parts = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 4)))
        primed = chi_code(DiagramCode("code", parts, True))
        extended = chi_code(DiagramCode("code", parts + (1,), False))
        assert primed.times_t2() == extended


def test_chi_word_examples():
    assert chi_word("B") == ZERO
    assert chi_word("BC") == ZERO
    assert chi_word("") == ONE
    assert chi_word("C") == ep(0, 1)
    assert chi_word("CB") == ep(0, -1)
    assert chi_word("AB") == ep(0, 1)  # reduces to BA + BC - CB


def test_chi_braid_examples():
    assert chi_braid(parse_braid("x13"), 4) == ep(1, 1)
    assert chi_braid(parse_braid("x13 x23"), 6) == ONE
    assert chi_braid(parse_braid(""), 2) == ONE
    assert chi_braid(parse_braid("x13 x23^-1"), 6) == ep(1, 2)
    assert chi_braid(parse_braid("x12 x23"), 6) == ep(1, -1)  # figure-eight closure


def test_chi_braid_matches_generic_path():
    # the pruned product must agree with reduce-then-evaluate on the raw series
    rng = random.Random(32)
    gens = ["x12", "x13", "x23"]
    for _ in range(40):
        text = " ".join(
            f"{rng.choice(gens)}^{rng.choice([-2, -1, 1, 2])}"
            for _ in range(rng.randint(0, 5))
        )
        w = parse_braid(text)
        n = 8
        full = chi_series(magnus3(comb(w), n)).truncate(n // 2)
        assert chi_braid(w, n) == full


def test_chi_dispatch():
    assert chi(parse_braid("x13"), 4) == ep(1, 1)
    assert chi("BC") == ZERO
    assert chi({"C": 1, "": 1}) == ep(1, 1)
    with pytest.raises(ValueError):
        chi(parse_braid("x13"))
    with pytest.raises(ValueError):
        chi(parse_braid("x13"), -1)


def test_chi_numeric_coefficients():
    # the symbol extends to numeric (complex) combinations coefficient-wise
    val = chi({"C": 0.5 + 0j, "": 1 + 0j, "CB": 1j})
    assert val.coeff(0) == 1.0
    assert val.coeff(1) == 0.5 - 1j


def test_chi_braid_stabilization():
    rng = random.Random(33)
    gens = ["x12", "x13", "x23"]
    for _ in range(20):
        text = " ".join(rng.choice(gens) + rng.choice(["", "^-1"]) for _ in range(4))
        w = parse_braid(text)
        lo, hi = chi_braid(w, 6), chi_braid(w, 10)
        assert lo == hi.truncate(3)


def test_chi_vanishes_on_words_ending_in_A():
    # rewriting keeps a trailing A trailing, so these die under rule one
    for w in ("A", "BA", "ABA", "CABA", "ACA", "AABBA"):
        assert chi_word(w) == ZERO


def test_partition_transform():
    assert partition_transform(DiagramCode("code", (3, 3))) == (1, 2, 3)
    assert partition_transform(DiagramCode("code", (1,))) == (1,)
    assert partition_transform(DiagramCode("code", (1, 1, 1))) == (1, 1, 1)
    with pytest.raises(ValueError):
        partition_transform(DiagramCode("code", (1,), True))


def test_partition_transform_factors_chi():
    rng = random.Random(34)
    for _ in range(50):
        parts = tuple(rng.randint(1, 5) for _ in range(rng.randint(1, 4)))
        code = DiagramCode("code", parts)
        prod = ONE
        for m in partition_transform(code):
            prod = prod.mul(p_poly(m))
        assert chi_code(code) == prod.scale((-1) ** (len(parts) - 1))


def test_binomial_identity():
    assert binomial_identity_check(1, 0)
    assert binomial_identity_check(3, 1)
    assert binomial_identity_check(10, 4)
    for n in range(1, 20):
        for j in range(n):
            assert binomial_identity_check(n, j)


def test_telescoping_identity():
    assert telescoping_check(1)
    assert telescoping_check(2)
    assert telescoping_check(6)
    for n in range(1, 15):
        assert telescoping_check(n)


def test_alternating_sum_unknot_property():
    for kmax in range(31):
        s = alternating_p_sum(kmax)
        for j in range(1, kmax // 2 + 1):
            assert s.coeff(j) == 0


def test_chi_lowest_exponent_bound():
    # on a degree-d diagram the symbol starts at t^d or higher
    for n in range(1, 9):
        for tup in itertools.product("BC", repeat=n):
            w = "".join(tup)
            val = chi_word(w)
            if val:
                low = next(j for j, c in enumerate(val.coeffs) if c)
                assert 2 * low >= n


def test_evenpoly_json_and_str():
    poly = ep(1, 2, 0, -1)
    assert EvenPoly.from_json(poly.to_json()) == poly
    assert str(poly) == "1 + 2t^2 - t^6"
    assert str(ZERO) == "0"
    assert str(ep(0, -1)) == "- t^2"
