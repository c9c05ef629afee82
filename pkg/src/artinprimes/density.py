"""Truncated Euler products: delta(f), C(f), the Artin constant.

Every product is accumulated in log space as an exact integer sum of
fixed-point logarithms with 112 fractional bits, so the result is
deterministic and a million factors lose fewer than 2^-85 in the log.  Exact per-prime factors are available
as Fractions through :func:`delta_factor` and friends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from .arith import (DEFAULT_BUDGET, count_roots, first_primes, is_prime, kronecker,
                    legendre, primes_up_to)
from .arith import is_squarefree
from .polynomial import Polynomial


@dataclass(frozen=True)
class Truncation:
    """Either the first ``prime_count`` primes (from 2) or all primes ``<= prime_bound``."""

    prime_count: Optional[int] = None
    prime_bound: Optional[int] = None

    def __post_init__(self):
        if (self.prime_count is None) == (self.prime_bound is None):
            raise ValueError("give exactly one of prime_count and prime_bound")
        if (self.prime_count or self.prime_bound) < 1:
            raise ValueError("truncation must be positive")

    def primes(self) -> np.ndarray:
        if self.prime_count is not None:
            return first_primes(self.prime_count)
        return primes_up_to(self.prime_bound)

    def to_dict(self) -> dict:
        if self.prime_count is not None:
            return {"prime_count": self.prime_count}
        return {"prime_bound": self.prime_bound}


def as_truncation(t) -> Truncation:
    if isinstance(t, Truncation):
        return t
    if isinstance(t, int):
        return Truncation(prime_bound=t)
    if isinstance(t, dict):
        return Truncation(**t)
    raise TypeError(f"cannot interpret {t!r} as a truncation")


@dataclass(frozen=True)
class DensityEstimate:
    value: float
    log_value: float
    kind: str
    truncation: Truncation
    prime_bound: int  # largest prime covered
    factors_used: int  # primes whose factor entered the product
    tail: bool = False  # analytic tail folded in
    extra: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "value": repr(self.value),
            "log_value": repr(self.log_value),
            "kind": self.kind,
            "truncation": self.truncation.to_dict(),
            "prime_bound": str(self.prime_bound),
            "factors_used": self.factors_used,
            "tail": self.tail,
        }
        out.update(self.extra)
        return out


FIXED_BITS = 112
_GUARD = 16
_ONE = 1 << FIXED_BITS


def _atanh_fixed(p: int, s: int, bits: int = FIXED_BITS) -> int:
    """2 atanh(p/s) scaled by 2^bits and rounded, for 0 <= p < s."""
    total, k = 0, 1
    term = (p << (bits + _GUARD)) // s
    p2, s2 = p * p, s * s
    while term:
        total += term // k
        term = term * p2 // s2
        k += 2
    return (2 * total + (1 << (_GUARD - 1))) >> _GUARD


_LOG2_WIDE = _atanh_fixed(1, 3, FIXED_BITS + 32)
_LOG2 = (_LOG2_WIDE + (1 << 31)) >> 32


def _log_fixed(num: int, den: int) -> int:
    """log(num/den) scaled by 2^FIXED_BITS, for positive integers."""
    shift = 0
    while num > 2 * den:
        den *= 2
        shift += 1
    while 2 * num < den:
        num *= 2
        shift -= 1
    p, s = num - den, num + den
    body = _atanh_fixed(p, s) if p >= 0 else -_atanh_fixed(-p, s)
    return body + ((shift * _LOG2_WIDE + (1 << 31)) >> 32)


def _log1m(num: int, den: int) -> int:
    """log(1 - num/den) in fixed point, for 0 <= num < den."""
    return _log_fixed(den - num, den)


def _finish(fixed: int) -> Tuple[float, float]:
    """(exp, log) of a fixed-point logarithm, each rounded once to a float."""
    import mpmath

    with mpmath.workprec(FIXED_BITS + 16):
        x = mpmath.mpf(fixed) / _ONE
        return float(mpmath.exp(x)), float(x)


# Artin constant -------------------------------------------------------------

def _lucas(k: int) -> int:
    a, b = 2, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@lru_cache(maxsize=4)
def artin_constant_limit(dps: int = 30):
    """The full Artin constant prod_q (1 - 1/(q(q-1))) as an mpmath number.

    Uses log(1 - 1/(q(q-1))) = -sum_{k>=2} (L_k - 1)/k q^-k with Lucas
    numbers L_k, and the prime zeta function for primes above 100.
    """
    import mpmath

    with mpmath.workdps(dps + 10):
        small = [int(p) for p in primes_up_to(100)]
        total = mpmath.fsum(mpmath.log(1 - mpmath.mpf(1) / (q * (q - 1))) for q in small)
        k = 2
        while True:
            tail_k = mpmath.primezeta(k) - mpmath.fsum(mpmath.mpf(q) ** -k for q in small)
            term = (_lucas(k) - 1) * tail_k / k
            total -= term
            if abs(term) < mpmath.mpf(10) ** (-(dps + 5)):
                break
            k += 1
        return +mpmath.exp(total)


def _euler_factor_artin(q: int) -> Tuple[int, int]:
    return 1, q * (q - 1)


def artin_constant(truncation) -> DensityEstimate:
    """prod_{q <= truncation} (1 - 1/(q(q-1)))."""
    tr = as_truncation(truncation)
    ps = tr.primes()
    total = sum(_log1m(1, q * (q - 1)) for q in ps.tolist())
    v, s = _finish(total)
    return DensityEstimate(v, s, "artin_constant", tr, int(ps[-1]) if len(ps) else 0, len(ps))


# delta(f): per-prime factors -------------------------------------------------

def delta_counts_general(f: Polynomial, q: int) -> Tuple[int, int]:
    """(#{f(s) = 1}, #{f(s) != 0}) mod q from root counts."""
    n1 = count_roots(f, q, 1)
    nz = q - count_roots(f, q, 0)
    return n1, nz


def delta_counts_linear(a: int, b: int, q: int) -> Tuple[int, int]:
    if a % q == 0:
        if b % q == 0:
            return 0, 0
        return (q, q) if (b - 1) % q == 0 else (0, q)
    return 1, q - 1


def delta_counts_quadratic(a: int, b: int, c: int, q: int) -> Tuple[int, int]:
    """Counts for an odd prime q from the Legendre-symbol closed form."""
    if a % q == 0:
        if b % q:
            return 1, q - 1
        if c % q == 0:
            return 0, 0
        return (q, q) if (c - 1) % q == 0 else (0, q)
    return (1 + legendre(b * b - 4 * a * (c - 1), q),
            q - 1 - legendre(b * b - 4 * a * c, q))


def delta_counts_cubic(a: int, b: int, q: int) -> Tuple[int, int]:
    """Counts for a x^3 + b at an odd prime q by cubic residuosity, no scan."""
    if a % q == 0:
        if b % q == 0:
            return 0, 0
        n1 = q if (b - 1) % q == 0 else 0  # f is the constant b mod q
        return n1, q
    cube_class = q % 3 == 1
    # a s^3 = t has one root when t = 0 or cubing is a bijection (q = 2 mod 3),
    # otherwise three or none as a^2 t is a cube or not
    if (b - 1) % q == 0 or not cube_class:
        n1 = 1
    else:
        n1 = 3 if pow(a * a * (b - 1), (q - 1) // 3, q) == 1 else 0
    if b % q == 0 or not cube_class:
        n0 = 1
    else:
        n0 = 3 if pow(a * a * b, (q - 1) // 3, q) == 1 else 0
    return n1, q - n0


def _closed_form_counter(f: Polynomial):
    if f.degree == 1:
        a, b = f.as_linear()
        return "delta_linear", lambda q: delta_counts_linear(a, b, q)
    if f.degree == 2:
        a, b, c = f.as_quadratic()
        return "delta_quadratic", lambda q: delta_counts_quadratic(a, b, c, q)
    if f.degree == 3:
        dep = f.depressed_cubic()
        if dep is not None:
            a, _, b = dep
            return "delta_cubic", lambda q: delta_counts_cubic(a, b, q)
    raise ValueError(f"no closed form for delta of {f}")


def delta_factor(f: Polynomial, q: int, method: str = "general") -> Fraction:
    """The exact Euler factor of delta(f) at the odd prime q."""
    if method == "general":
        n1, nz = delta_counts_general(f, q)
    elif method == "closed_form":
        n1, nz = _closed_form_counter(f)[1](q)
    else:
        raise ValueError(f"unknown method {method!r}")
    if nz == 0:
        raise ZeroDivisionError(f"N_{q}(f) = {q} for {f}")
    return 1 - Fraction(n1, q * nz)


def _accumulate(counter, primes: Iterable[int], f_desc: str) -> Tuple[int, int]:
    """Fixed-point log of the product and the number of factors != 1."""
    total = used = 0
    for q in primes:
        n1, nz = counter(q)
        if nz == 0:
            raise ZeroDivisionError(f"N_{q}(f) = {q} for {f_desc}")
        if n1:
            total += _log1m(n1, q * nz)
            used += 1
    return total, used


def delta(f: Polynomial, truncation, method: str = "general",
          tail: bool = False) -> DensityEstimate:
    """Truncated delta(f) = prod_{q > 2} (1 - #{f = 1} / (q #{f != 0})).

    ``method="closed_form"`` uses the shape-specific counts (linear,
    quadratic, binomial cubic up to shift).  ``tail=True`` (linear only)
    replaces the truncated product over q not dividing a by its exact
    limit, derived from the Artin constant.
    """
    tr = as_truncation(truncation)
    odd = [q for q in tr.primes().tolist() if q > 2]
    if method == "general":
        kind = "delta_general"
        counter = lambda q: delta_counts_general(f, q)
    elif method == "closed_form":
        kind, counter = _closed_form_counter(f)
    else:
        raise ValueError(f"unknown method {method!r}")
    if tail:
        if f.degree != 1:
            raise ValueError("analytic tail is available for linear f only")
        a, b = f.as_linear()
        s, used = _linear_with_tail(a, b, include_two=False)
        return DensityEstimate(math.exp(s), s, kind, tr, 0, used, tail=True)
    total, used = _accumulate(counter, odd, str(f))
    v, s = _finish(total)
    return DensityEstimate(v, s, kind, tr, odd[-1] if odd else 0, used)


def _prime_divisors(n: int) -> list:
    from .arith import factorize
    fac = factorize(abs(n))
    if not fac.complete:
        raise ArithmeticError(f"could not factor {n}")
    return list(fac.primes)


def _linear_with_tail(a: int, b: int, include_two: bool) -> Tuple[float, int]:
    """log of prod_{q | (a, b-1)} (1 - 1/q) * prod_{q not | a} (1 - 1/(q(q-1)))."""
    import mpmath

    with mpmath.workdps(40):
        log_A = mpmath.log(artin_constant_limit())
        total = log_A
        used = 0
        for q in _prime_divisors(a if include_two else 2 * a) if a > 1 or not include_two else []:
            total -= mpmath.log(1 - mpmath.mpf(1) / (q * (q - 1)))
        for q in _prime_divisors(gcd(a, b - 1)) if gcd(a, b - 1) > 1 else []:
            if q == 2 and not include_two:
                continue
            total += mpmath.log(1 - mpmath.mpf(1) / q)
            used += 1
        return float(total), used


def delta_g_linear(a: int, b: int, g: int, truncation,
                   tail: bool = False) -> DensityEstimate:
    """delta_g(ax + b) = prod_{q | (a,b-1)} (1 - 1/q) prod_{q not | a} (1 - 1/(q(q-1))) (1 - (g/b)).

    Both products run over all primes, q = 2 included.
    """
    if a <= 0 or gcd(a, b) != 1:
        raise ValueError("need a > 0 and gcd(a, b) = 1")
    if not is_squarefree(g):
        raise ValueError(f"g = {g} is not square-free")
    tr = as_truncation(truncation)
    chi = kronecker(g, b)
    extra = {"kronecker_g_b": chi}
    if chi == 1:
        return DensityEstimate(0.0, -math.inf, "delta_g_linear", tr, 0, 0, tail, extra)
    if tail:
        s, used = _linear_with_tail(a, b, include_two=True)
        bound = 0
    else:
        ps = tr.primes().tolist()
        total, used = _accumulate(lambda q: delta_counts_linear(a, b, q), ps, f"{a}x+{b}")
        bound = ps[-1]
        if chi == -1:
            total += _LOG2
        v, s = _finish(total)
        return DensityEstimate(v, s, "delta_g_linear", tr, bound, used, tail, extra)
    s += math.log(1 - chi)
    return DensityEstimate(math.exp(s), s, "delta_g_linear", tr, bound, used, tail, extra)


# Bateman-Horn constant -----------------------------------------------------------

def bh_factor(f: Polynomial, q: int, method: str = "general") -> Fraction:
    """(q - N_q(f)) / (q - 1)."""
    if method == "closed_form" and q > 2:
        dep = f.depressed_cubic()
        if dep is None:
            raise ValueError(f"no closed form for C(f) of {f}")
        a, _, b = dep
        if a % q == 0 or (q % 3 == 1 and pow(a * a * b, (q - 1) // 3, q) != 1
                          and b % q != 0):
            return Fraction(q, q - 1)  # no roots
        if q % 3 == 1 and b % q != 0:
            return Fraction(q - 3, q - 1)  # three roots
        return Fraction(1)
    n = count_roots(f, q, 0)
    return Fraction(q - n, q - 1)


def bateman_horn_C(f: Polynomial, truncation, method: str = "general") -> DensityEstimate:
    """Truncated C(f) = (1/deg f) prod_q (q - N_q(f)) / (q - 1), q = 2 included.

    ``method="closed_form"`` applies the binomial-cubic case form at odd q.
    """
    tr = as_truncation(truncation)
    ps = tr.primes().tolist()
    total = -_log_fixed(f.degree, 1)
    used = 0
    for q in ps:
        if method == "closed_form" and q > 2:
            fac = bh_factor(f, q, "closed_form")
            num, den = fac.numerator, fac.denominator
        else:
            n = count_roots(f, q, 0)
            num, den = q - n, q - 1
        if num == 0:
            raise ZeroDivisionError(f"N_{q}(f) = {q} for {f}")
        if num != den:
            total += _log_fixed(num, den)
            used += 1
    v, s = _finish(total)
    return DensityEstimate(v, s, "bateman_horn", tr, ps[-1] if ps else 0, used)


# empirical density and diagnostics ----------------------------------------------

@dataclass(frozen=True)
class EmpiricalDelta:
    estimate: DensityEstimate
    artin: int
    primes: int
    unknown: int
    X: int

    def to_dict(self) -> dict:
        d = self.estimate.to_dict()
        d.update({"artin": self.artin, "primes": self.primes, "unknown": self.unknown,
                  "X": str(self.X)})
        return d


def empirical_delta(f: Polynomial, g: int, X: int, budget=DEFAULT_BUDGET) -> EmpiricalDelta:
    """Fraction of primes among f(0..X) that have g as a primitive root.

    Primes whose p - 1 could not be factored within budget are counted as
    ``unknown`` and left out of both numerator and denominator.  A prime
    p dividing g is never an Artin prime; p = 2 with g odd always is.
    """
    from .artin import is_artin_prime

    if X < 0:
        raise ValueError("X must be >= 0")
    total = artin = unknown = 0
    for n in range(X + 1):
        p = f(n)
        if p < 2 or not is_prime(p):
            continue
        if g % p == 0:
            total += 1
            continue
        if p == 2:
            total += 1
            artin += 1
            continue
        st = is_artin_prime(p, g, budget, check_prime=False)
        if st.status == "unknown":
            unknown += 1
            continue
        total += 1
        artin += st.status == "artin"
    if total == 0:
        raise ZeroDivisionError(f"no primes with known status among f(0..{X})")
    v = artin / total
    est = DensityEstimate(v, math.log(v) if v else -math.inf, "empirical",
                          Truncation(prime_bound=max(X, 1)), 0, total,
                          extra={"n_max": str(X)})
    return EmpiricalDelta(est, artin, total, unknown, X)


def expected_length(d: float) -> float:
    """delta / (1 - delta), the mean length of an Artin run at density delta."""
    if not 0 <= d < 1:
        raise ValueError("delta must lie in [0, 1)")
    return d / (1 - d)


def allowable_classes(f: Polynomial, m: int) -> list:
    return [r for r, v in enumerate(f.values_mod(m)) if gcd(v, m) == 1]


def class_distribution(f: Polynomial, m: int, X: int) -> Dict[int, float]:
    """For each m-allowable class r, the share of prime values f(n), n <= X, with n = r mod m."""
    if m < 2:
        raise ValueError("m must be >= 2")
    classes = allowable_classes(f, m)
    if not classes:
        raise ValueError(f"no {m}-allowable class for {f}")
    hits = {r: 0 for r in classes}
    total = 0
    for n in range(X + 1):
        v = f(n)
        if v > 1 and is_prime(v):
            total += 1
            r = n % m
            if r in hits:
                hits[r] += 1
    if total == 0:
        raise ZeroDivisionError(f"no prime values among f(0..{X})")
    return {r: hits[r] / total for r in classes}
