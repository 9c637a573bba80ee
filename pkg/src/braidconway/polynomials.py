"""Exact polynomial types: even polynomials in the Conway variable t and
symmetric integer Laurent polynomials (Alexander normal forms)."""

from __future__ import annotations

from dataclasses import dataclass


def _strip(coeffs) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class EvenPoly:
    """Integer polynomial in t with only even exponents: coeffs[j] * t^(2j)."""

    coeffs: tuple[int, ...] = ()

    @classmethod
    def make(cls, coeffs) -> "EvenPoly":
        return cls(_strip(coeffs))

    @classmethod
    def t_power(cls, j: int, c: int = 1) -> "EvenPoly":
        """c * t^(2j)."""
        return cls.make([0] * j + [c])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    @property
    def deg_t(self) -> int:
        """Degree in t (-1 for the zero polynomial)."""
        return 2 * (len(self.coeffs) - 1) if self.coeffs else -1

    def add(self, other: "EvenPoly") -> "EvenPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return EvenPoly.make(self.coeff(j) + other.coeff(j) for j in range(n))

    def sub(self, other: "EvenPoly") -> "EvenPoly":
        return self.add(other.scale(-1))

    def scale(self, c: int) -> "EvenPoly":
        return EvenPoly.make(c * v for v in self.coeffs)

    def mul(self, other: "EvenPoly") -> "EvenPoly":
        if not self.coeffs or not other.coeffs:
            return EvenPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return EvenPoly.make(out)

    def times_t2(self) -> "EvenPoly":
        return EvenPoly.make((0,) + self.coeffs)

    def div_t2(self) -> "EvenPoly":
        """Exact division by t^2; raises if the constant term is nonzero."""
        if self.coeffs and self.coeffs[0] != 0:
            raise ValueError("polynomial not divisible by t^2")
        return EvenPoly(self.coeffs[1:])

    def truncate(self, jmax: int) -> "EvenPoly":
        return EvenPoly.make(self.coeffs[: jmax + 1])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "1" if j == 0 else ("t^%d" % (2 * j))
            if j > 0 and abs(c) != 1:
                mono = f"{abs(c)}{mono}"
            elif j == 0:
                mono = str(abs(c))
            parts.append(("- " if c < 0 else "+ " if parts else "") + mono)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"var": "t", "even": True, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "EvenPoly":
        return cls.make(int(c) for c in data["coeffs"])


ZERO = EvenPoly()
ONE = EvenPoly((1,))


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial: coeffs[k] * t^(min_exp + k)."""

    coeffs: tuple[int, ...]
    min_exp: int

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "LaurentPoly":
        d = {e: c for e, c in d.items() if c}
        if not d:
            return cls((), 0)
        lo, hi = min(d), max(d)
        return cls(tuple(d.get(e, 0) for e in range(lo, hi + 1)), lo)

    def coeff(self, e: int) -> int:
        k = e - self.min_exp
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def eval_at_1(self) -> int:
        return sum(self.coeffs)

    def is_symmetric(self) -> bool:
        """Palindromic about exponent 0."""
        return all(self.coeff(e) == self.coeff(-e) for e in range(self.min_exp, self.max_exp + 1))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.min_exp + k
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if abs(c) != 1 or e == 0:
                mono = f"{abs(c)}{mono}" if e != 0 else str(abs(c))
            parts.append(("- " if c < 0 else "+ " if parts else "") + mono)
        return " ".join(parts)
