"""The representation q = A^2 + 3B^2 of primes q = 1 mod 3."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .primes import is_prime
from .symbols import sqrt_mod

EXHAUSTIVE_BELOW = 64


@dataclass(frozen=True)
class JacobsthalRep:
    """``q = A^2 + 3 B^2`` normalised by ``A = -1 mod 3`` and ``B > 0``."""

    q: int
    A: int
    B: int

    def __post_init__(self):
        if self.A * self.A + 3 * self.B * self.B != self.q or self.A % 3 != 2 or self.B <= 0:
            raise ValueError(f"invalid representation {self}")


def _normalise(q: int, x: int, y: int) -> JacobsthalRep:
    A = x if x % 3 == 2 else -x
    return JacobsthalRep(q, A, abs(y))


def _exhaustive(q: int):
    for y in range(1, isqrt(q // 3) + 1):
        rest = q - 3 * y * y
        x = isqrt(rest)
        if x * x == rest:
            return x, y
    return None


def _cornacchia(q: int):
    r = sqrt_mod(-3, q)
    if 2 * r > q:
        r = q - r
    a, b = q, r
    limit = isqrt(q)
    while b > limit:
        a, b = b, a % b
    rest = q - b * b
    if rest % 3:
        return None
    y = isqrt(rest // 3)
    if 3 * y * y != rest:
        return None
    return b, y


def represent_3B2(q: int, method: str = "auto") -> JacobsthalRep:
    """The unique (A, B) with q = A^2 + 3 B^2, A = -1 mod 3, B > 0.

    Cornacchia's algorithm on x^2 + 3y^2, or an exhaustive search over
    ``B`` for ``q < EXHAUSTIVE_BELOW`` (``method="exhaustive"`` forces it).
    """
    if q % 3 != 1:
        raise ValueError(f"q = {q} is not 1 mod 3")
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    if method == "exhaustive" or (method == "auto" and q < EXHAUSTIVE_BELOW):
        sol = _exhaustive(q)
    else:
        sol = _cornacchia(q)
        if sol is None:
            sol = _exhaustive(q)
    if sol is None:  # pragma: no cover - excluded by the theory of x^2 + 3y^2
        raise ArithmeticError(f"no representation found for {q}")
    return _normalise(q, *sol)
