"""Exact integer polynomials in one variable."""

from __future__ import annotations

import json


class Polynomial:
    """Immutable polynomial with Python-int coefficients, lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "x"):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_dict(cls, mapping, var: str = "x") -> "Polynomial":
        if not mapping:
            return cls((), var)
        top = max(int(e) for e in mapping)
        cs = [0] * (top + 1)
        for e, c in mapping.items():
            cs[int(e)] += int(c)
        return cls(cs, var)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "x") -> "Polynomial":
        return cls([0] * degree + [coeff], var)

    @classmethod
    def linear(cls, constant: int, var: str = "x") -> "Polynomial":
        """``var + constant``."""
        return cls((constant, 1), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_dict(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self.coeffs) if c}

    def to_json(self) -> str:
        return json.dumps({str(e): c for e, c in self.to_dict().items()})

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial((other,), self.var)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def product(factors, var: str = "x") -> Polynomial:
    acc = Polynomial((1,), var)
    for f in factors:
        acc = acc * f
    return acc
