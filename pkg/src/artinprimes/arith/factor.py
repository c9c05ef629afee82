"""Integer factorization under an explicit effort budget.

Trial division up to ``trial_bound``, then Brent's variant of Pollard rho.
The rho polynomial is ``x^2 + c`` with start value 2 and ``c`` running
through ``rho_seed, rho_seed + 1, ...``; together with the iteration cap
this makes every run reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Dict, Optional, Tuple

from .primes import is_prime, primes_up_to
from .symbols import integer_root


@dataclass(frozen=True)
class FactorBudget:
    trial_bound: int = 1 << 16
    rho_iterations: int = 400_000  # per composite cofactor, summed over rho restarts
    rho_seed: int = 1

    def to_dict(self) -> dict:
        return {"trial_bound": self.trial_bound, "rho_iterations": self.rho_iterations,
                "rho_seed": self.rho_seed}


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True)
class Factorization:
    """``n = cofactor * prod(p**e)``; ``cofactor`` is 1 or an unsplit composite."""

    n: int
    prime_powers: Tuple[Tuple[int, int], ...]
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)

    def reassemble(self) -> int:
        out = self.cofactor
        for p, e in self.prime_powers:
            out *= p ** e
        return out

    def to_dict(self) -> dict:
        return {
            "n": str(self.n),
            "prime_powers": [[str(p), e] for p, e in self.prime_powers],
            "cofactor": str(self.cofactor),
            "complete": self.complete,
        }


def _brent(n: int, c: int, cap: int, m: int = 64) -> Tuple[Optional[int], int]:
    """One Brent rho run; returns (nontrivial factor or None, iterations used)."""
    y, r, q, g = 2, 1, 1, 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            used += min(m, r - k)
            g = gcd(q, n)
            k += m
        r *= 2
        if g == 1 and used >= cap:
            return None, used
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            used += 1
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else None), used


def _perfect_power(n: int) -> Optional[Tuple[int, int]]:
    for k in range(2, n.bit_length() + 1):
        r = integer_root(n, k)
        if r < 2:
            break
        if r ** k == n:
            return r, k
    return None


def rho_split(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Optional[int]:
    """A nontrivial factor of the composite n, or None when the cap is hit."""
    if n % 2 == 0:
        return 2
    remaining = budget.rho_iterations
    c = budget.rho_seed
    while remaining > 0:
        g, used = _brent(n, c, remaining)
        remaining -= used
        if g is not None:
            return g
        c += 1
    return None


def factorize(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    found: Dict[int, int] = {}
    m = n
    bound = min(budget.trial_bound, isqrt(m))
    for p in primes_up_to(max(bound, 2)).tolist():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    cofactor = 1
    stack = [(m, 1)] if m > 1 else []
    while stack:
        k, mult = stack.pop()
        if k == 1:
            continue
        if is_prime(k):
            found[k] = found.get(k, 0) + mult
            continue
        pw = _perfect_power(k)
        if pw is not None:
            stack.append((pw[0], mult * pw[1]))
            continue
        g = rho_split(k, budget)
        if g is None:
            cofactor *= k ** mult
            continue
        stack.append((g, mult))
        stack.append((k // g, mult))
    return Factorization(n, tuple(sorted(found.items())), cofactor)
