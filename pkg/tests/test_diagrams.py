import itertools
import random

import pytest

from braidconway.diagrams import (
    UNIT,
    ZERO,
    DiagramCode,
    classify,
    code_to_word,
    diagram_mul,
    format_diagram,
    is_descending,
    reduce,
    reduce_word,
)


def test_reduce_examples():
    assert reduce_word("BA") == {"BA": 1}
    assert reduce_word("AB") == {"BA": 1, "BC": 1, "CB": -1}
    assert reduce_word("AC") == {"CA": 1, "BC": -1, "CB": 1}


def test_reduce_is_descending_and_degree_preserving():
    rng = random.Random(21)
    for _ in range(100):
        w = "".join(rng.choice("ABC") for _ in range(rng.randint(0, 8)))
        out = reduce_word(w)
        assert all(is_descending(u) for u in out)
        assert all(len(u) == len(w) for u in out)


def test_reduce_idempotent_on_descending():
    for w in ("", "A", "CBA", "BCB", "CCBCCAA"):
        assert reduce_word(w) == {w: 1}


def test_reduce_schedule_independent():
    for n in range(0, 7):
        for tup in itertools.product("ABC", repeat=n):
            w = "".join(tup)
            assert reduce_word(w, leftmost=True) == reduce_word(w, leftmost=False)


def test_reduce_multiplicative():
    rng = random.Random(22)
    for _ in range(60):
        u = "".join(rng.choice("ABC") for _ in range(rng.randint(0, 4)))
        v = "".join(rng.choice("ABC") for _ in range(rng.randint(0, 4)))
        assert reduce(u + v) == diagram_mul(reduce(u), reduce(v))


def test_reduce_linear_extension():
    assert reduce({"AB": 2, "BA": -2}) == {"BC": 2, "CB": -2}


def test_classify_examples():
    assert classify("") == UNIT
    assert classify("CCCBCCC") == DiagramCode("code", (3, 3), False)
    assert classify("CB") == DiagramCode("code", (1,), True)
    assert classify("CA") == ZERO  # trailing A
    assert classify("BC") == ZERO  # leading B
    assert classify("CBBC") == ZERO  # BB factor


def test_classify_code_bijection():
    # every non-unit, non-zero descending {B,C} word maps to a valid code and back
    for n in range(1, 9):
        for tup in itertools.product("BC", repeat=n):
            w = "".join(tup)
            code = classify(w)
            if code.kind == "code":
                assert all(c >= 1 for c in code.parts)
                assert code_to_word(code) == w
            else:
                assert code == ZERO and (w.startswith("B") or "BB" in w)


def test_format_helpers():
    assert format_diagram("CCCBCCC") == "C^3 B C^3"
    assert str(DiagramCode("code", (3, 3))) == "[3,3]"
    assert str(DiagramCode("code", (1, 2), True)) == "[1,2]'"
    with pytest.raises(ValueError):
        code_to_word(UNIT)
