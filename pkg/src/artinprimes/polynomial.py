"""Univariate integer polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial with coefficients in ascending degree.

    ``coeffs[0]`` is the constant term.  Trailing zeros are stripped on
    construction; the result must have degree at least one.
    """

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ValueError("zero polynomial")
        if len(cs) == 1:
            raise ValueError("constant polynomial (degree 0)")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, *coeffs: int) -> "Polynomial":
        return cls(reversed(coeffs))

    @classmethod
    def linear(cls, a: int, b: int) -> "Polynomial":
        """``a*x + b``"""
        return cls((b, a))

    @classmethod
    def quadratic(cls, a: int, b: int, c: int) -> "Polynomial":
        """``a*x^2 + b*x + c``"""
        return cls((c, b, a))

    @classmethod
    def binomial_cubic(cls, a: int, b: int) -> "Polynomial":
        """``a*x^3 + b``"""
        return cls((b, 0, 0, a))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    @property
    def content(self) -> int:
        return math.gcd(*self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mod(self, x: int, m: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % m
        return acc

    def values_mod(self, m: int) -> list:
        """``[f(r) mod m for r in range(m)]``"""
        cs = [c % m for c in reversed(self.coeffs)]
        out = []
        for r in range(m):
            acc = 0
            for c in cs:
                acc = (acc * r + c) % m
            out.append(acc)
        return out

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def shift(self, d: int) -> "Polynomial":
        """Return ``f(x + d)``."""
        # Horner with (x + d) as the variable.
        out = [0]
        for c in reversed(self.coeffs):
            nxt = [0] * (len(out) + 1)
            for i, v in enumerate(out):
                nxt[i] += v * d
                nxt[i + 1] += v
            nxt[0] += c
            out = nxt
        return Polynomial(out)

    def add_constant(self, t: int) -> "Polynomial":
        cs = list(self.coeffs)
        cs[0] += t
        return Polynomial(cs)

    # Shape queries -----------------------------------------------------

    def is_binomial_cubic(self) -> bool:
        return self.degree == 3 and self.coeffs[1] == 0 and self.coeffs[2] == 0

    def as_linear(self) -> Tuple[int, int]:
        if self.degree != 1:
            raise ValueError(f"not linear: {self}")
        return self.coeffs[1], self.coeffs[0]

    def as_quadratic(self) -> Tuple[int, int, int]:
        if self.degree != 2:
            raise ValueError(f"not quadratic: {self}")
        c, b, a = self.coeffs
        return a, b, c

    def depressed_cubic(self) -> Optional[Tuple[int, int, int]]:
        """Return ``(a, d, b)`` with ``f(x) = a*(x + d)^3 + b``, or None.

        Only integer shifts ``d`` are recognised.
        """
        if self.degree != 3:
            return None
        c0, c1, c2, a = self.coeffs
        d, r = divmod(c2, 3 * a)
        if r:
            return None
        if c1 != 3 * a * d * d:
            return None
        return a, d, c0 - a * d ** 3

    @property
    def discriminant(self) -> int:
        """Discriminant for degree 2 (``b^2 - 4ac``) or degree 3."""
        if self.degree == 2:
            a, b, c = self.as_quadratic()
            return b * b - 4 * a * c
        if self.degree == 3:
            d, c, b, a = self.coeffs
            return (b * b * c * c - 4 * a * c ** 3 - 4 * b ** 3 * d
                    - 27 * a * a * d * d + 18 * a * b * c * d)
        raise ValueError("discriminant implemented for degree 2 and 3 only")

    def reduce_mod(self, q: int) -> list:
        """Coefficients mod q, ascending, trailing zeros stripped (may be empty)."""
        cs = [c % q for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cs

    def __str__(self) -> str:
        from .polytext import render_poly
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def as_polynomial(f) -> Polynomial:
    """Accept a Polynomial, a coefficient sequence, or polynomial text."""
    if isinstance(f, Polynomial):
        return f
    if isinstance(f, str):
        from .polytext import parse_poly
        return parse_poly(f)
    if isinstance(f, Sequence):
        return Polynomial(f)
    raise TypeError(f"cannot interpret {f!r} as a polynomial")
