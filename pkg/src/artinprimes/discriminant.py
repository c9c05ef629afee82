"""Fundamental discriminants and the inert fraction tau_D^-(f).

``tau(f, D)`` is the fraction of D-allowable residues r with
(D / f(r)) = -1; it equals 1 exactly when every prime produced by f in
an allowable class is inert in Q(sqrt(D)).  Two evaluations are offered:
brute force over r mod |D|, and Moree's formula through the 2-adic
weights ``alphas(f)`` and a_{D1}(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterator, List, Optional

from .arith import DEFAULT_BUDGET, FactorBudget, factorize, is_square, kronecker
from .arith import squarefree_part as _squarefree_part
from .charsums import a_d
from .polynomial import Polynomial

BRUTE_FORCE_LIMIT = 10 ** 6


def _is_squarefree_small(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    fac = factorize(n)
    if not fac.complete:
        raise ArithmeticError(f"could not factor {n}")
    return all(e == 1 for _, e in fac.prime_powers)


def is_fundamental(D: int) -> bool:
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _is_squarefree_small(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _is_squarefree_small(m)
    return False


def odd_part(D: int) -> int:
    """Largest odd divisor of |D|; for fundamental D this is D1."""
    n = abs(D)
    while n and n % 2 == 0:
        n //= 2
    return n


def disc_of_sqrt(g: int, budget: FactorBudget = DEFAULT_BUDGET) -> int:
    """Discriminant of Q(sqrt(g))."""
    if g == 0 or is_square(g):
        raise ValueError(f"g = {g} is zero or a perfect square")
    g1 = _squarefree_part(g, budget)
    return g1 if g1 % 4 == 1 else 4 * g1


def minimal_g(D: int) -> int:
    """The square-free g whose field Q(sqrt(g)) has discriminant D."""
    if not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    return D if D % 4 == 1 else D // 4


# alpha vector ----------------------------------------------------------------

@dataclass(frozen=True)
class AlphaVector:
    a1: Fraction
    a3: Fraction
    a5: Fraction
    a7: Fraction

    def as_tuple(self):
        return (self.a1, self.a3, self.a5, self.a7)

    def to_dict(self) -> dict:
        return {f"alpha_{j}": str(v) for j, v in zip((1, 3, 5, 7), self.as_tuple())}


def alphas(f: Polynomial) -> AlphaVector:
    odd = sum(1 for v in f.values_mod(2) if v == 1)
    if odd == 0:
        raise ZeroDivisionError(f"{f} takes only even values")
    counts = {j: 0 for j in (1, 3, 5, 7)}
    for v in f.values_mod(8):
        if v in counts:
            counts[v] += 1
    return AlphaVector(*(Fraction(counts[j], 4 * odd) for j in (1, 3, 5, 7)))


# tau ---------------------------------------------------------------------

@dataclass(frozen=True)
class TauResult:
    value: Fraction
    method: str  # "formula" or "brute-force"

    def to_dict(self) -> dict:
        return {"value": str(self.value), "method": self.method}


@lru_cache(maxsize=512)
def _character_table(D: int) -> tuple:
    return tuple(kronecker(D, n) for n in range(abs(D)))


def tau_brute(f: Polynomial, D: int, limit: int = BRUTE_FORCE_LIMIT) -> Fraction:
    m = abs(D)
    if m > limit:
        raise ValueError(f"|D| = {m} exceeds the brute-force bound {limit}")
    chi = _character_table(D)
    minus = allowed = 0
    for v in f.values_mod(m):
        if gcd(v, m) == 1:
            allowed += 1
            if chi[v] == -1:
                minus += 1
    if allowed == 0:
        raise ZeroDivisionError(f"no {m}-allowable class for {f}")
    return Fraction(minus, allowed)


def tau_formula(f: Polynomial, D: int, method: str = "auto") -> Fraction:
    D1 = odd_part(D)
    if D1 == 1:
        raise ValueError(f"D = {D} has D1 = 1; use the brute-force method")
    a = a_d(f, D1, method)
    if D % 2:
        return (1 - a) / 2
    al = alphas(f)
    if D % 8 == 4:
        w = al.a3 + al.a7 - al.a1 - al.a5
    elif D % 32 == 8:
        w = al.a3 + al.a5 - al.a1 - al.a7
    elif D % 32 == 24:
        w = al.a5 + al.a7 - al.a1 - al.a3
    else:
        raise ValueError(f"{D} is not a fundamental discriminant")
    return (1 + w * a) / 2


def tau(f: Polynomial, D: int, method: str = "auto",
        limit: int = BRUTE_FORCE_LIMIT) -> TauResult:
    """tau_D^-(f); ``method`` is ``formula``, ``brute-force`` or ``auto``.

    ``auto`` uses the formula when D1 > 1 and brute force otherwise.
    """
    if not is_fundamental(D):
        raise ValueError(f"{D} is not a fundamental discriminant")
    if method == "auto":
        method = "formula" if odd_part(D) > 1 else "brute-force"
    if method == "formula":
        return TauResult(tau_formula(f, D), "formula")
    if method in ("brute-force", "brute"):
        return TauResult(tau_brute(f, D, limit), "brute-force")
    raise ValueError(f"unknown method {method!r}")


# candidate discriminants ------------------------------------------------------

def disc_bound(f: Polynomial) -> int:
    """The integer every D with tau = 1 must divide, by the shape of f."""
    if f.degree == 1:
        a, _ = f.as_linear()
        return abs(a)
    if f.degree == 2:
        a, b, c = f.as_quadratic()
        return abs(24 * a * f.discriminant)
    if f.degree == 3:
        dep = f.depressed_cubic()
        if dep is not None:
            return abs(56 * dep[0])
    raise ValueError(f"no finite discriminant criterion for {f}")


def fundamental_divisors(N: int, max_abs: Optional[int] = None,
                         budget: FactorBudget = DEFAULT_BUDGET) -> List[int]:
    """Every fundamental discriminant D != 1 with |D| dividing N, sorted by (|D|, D)."""
    N = abs(N)
    if N == 0:
        raise ValueError("N = 0")
    fac = factorize(N, budget)
    if not fac.complete:
        raise ArithmeticError(f"could not factor {N} within budget")
    v2 = dict(fac.prime_powers).get(2, 0)
    odd_primes = [p for p, _ in fac.prime_powers if p != 2]
    cap = max_abs if max_abs is not None else N
    out = []
    for s in _squarefree_divisors(odd_primes, cap):
        sgn = 1 if s % 4 == 1 else -1
        if s > 1:
            out.append(sgn * s)
        if v2 >= 2 and 4 * s <= cap:
            out.append(-4 * sgn * s)
        if v2 >= 3 and 8 * s <= cap:
            out.extend((-8 * s, 8 * s))
    return sorted(out, key=lambda D: (abs(D), D))


def _squarefree_divisors(primes: List[int], cap: int) -> Iterator[int]:
    def rec(i: int, acc: int):
        if i == len(primes):
            yield acc
            return
        yield from rec(i + 1, acc)
        if acc * primes[i] <= cap:
            yield from rec(i + 1, acc * primes[i])
    yield from rec(0, 1)


def candidate_discs(f: Polynomial, max_abs: Optional[int] = None,
                    budget: FactorBudget = DEFAULT_BUDGET) -> List[int]:
    """Fundamental D that could have tau_D^-(f) = 1 (divisors of disc_bound(f))."""
    return fundamental_divisors(disc_bound(f), max_abs, budget)
