"""Quadratic character sums with polynomial arguments.

Jacobsthal sums for cubes, complete sums of (f(m)/q) for linear and
binomial cubic f, and the normalised sums a_d(f) over odd square-free d.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import (DEFAULT_BUDGET, factorize, is_prime, kronecker, legendre,
                    represent_3B2)
from .arith.symbols import jacobi
from .polynomial import Polynomial

SCAN_LIMIT = 10 ** 6


def _check_q1mod3(q: int, E: int) -> None:
    if q % 3 != 1 or not is_prime(q):
        raise ValueError(f"q = {q} must be a prime = 1 mod 3")
    if E % q == 0:
        raise ValueError(f"q = {q} divides E = {E}")


def jacobsthal_phi3_sum(q: int, E: int) -> int:
    """sum_{u=1}^{q-1} (u/q)((u^3 + E)/q), term by term."""
    return sum(legendre(u, q) * legendre(u * u * u + E, q) for u in range(1, q))


def psi3_sum(q: int, E: int) -> int:
    """sum_{u=1}^{q-1} ((u^3 + E)/q), term by term."""
    return sum(legendre(u * u * u + E, q) for u in range(1, q))


def jacobsthal_phi3(q: int, E: int) -> int:
    """Closed-form Jacobsthal sum phi_{q,3}(E) from q = A^2 + 3B^2.

    The branch is picked by the cube-class indicator E^((q-1)/3) mod q,
    which is 1, (A - B)/2B or (-A - B)/2B.
    """
    _check_q1mod3(q, E)
    rep = represent_3B2(q)
    A, B = rep.A, rep.B
    t = pow(E, (q - 1) // 3, q)
    if t == 1:
        return -1 + 2 * A
    inv2B = pow(2 * B, -1, q)
    if t == (A - B) * inv2B % q:
        return -1 - A - 3 * B
    if t == (-A - B) * inv2B % q:
        return -1 - A + 3 * B
    raise ArithmeticError(f"cube class of {E} mod {q} not matched")  # pragma: no cover


def psi3(q: int, E: int) -> int:
    """psi_{q,3}(E) = (E/q) * phi_{q,3}(E^-1 mod q)."""
    _check_q1mod3(q, E)
    return legendre(E, q) * jacobsthal_phi3(q, pow(E, -1, q))


def char_sum_scan(f: Polynomial, q: int) -> int:
    return sum(legendre(v, q) for v in f.values_mod(q))


def char_sum(f: Polynomial, q: int) -> int:
    """sum_{m mod q} (f(m)/q) for f = a x + b or f = a x^3 + b, q an odd prime."""
    if q == 2 or not is_prime(q):
        raise ValueError(f"q = {q} must be an odd prime")
    if f.degree == 1:
        a, b = f.as_linear()
    elif f.is_binomial_cubic():
        a, b = f.coeffs[3], f.coeffs[0]
    else:
        raise ValueError(f"closed form needs a x + b or a x^3 + b, got {f}")
    if gcd(a, b) != 1:
        raise ValueError(f"coefficients of {f} are not coprime")
    if a % q == 0:
        return q * legendre(b, q)
    if f.degree == 1 or b % q == 0 or q == 3 or q % 3 == 2:
        return 0
    abar = pow(a, -1, q)
    bbar = pow(b, -1, q)
    return legendre(b, q) * (1 + jacobsthal_phi3(q, abar * abar * bbar % q))


# a_d(f) ------------------------------------------------------------------

def a_d_scan(f: Polynomial, d: int) -> Fraction:
    """Normalised sum over r mod d, evaluated directly with the Jacobi symbol."""
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d = {d} must be odd and positive")
    if d == 1:
        return Fraction(1)
    total = 0
    count = 0
    for v in f.values_mod(d):
        if gcd(v, d) == 1:
            count += 1
            total += jacobi(v, d)
    if count == 0:
        raise ZeroDivisionError(f"every residue mod {d} has f(r) sharing a factor with {d}")
    return Fraction(total, count)


def _a_q_linear(a: int, b: int, q: int) -> Fraction:
    if a % q == 0:
        if b % q == 0:
            raise ZeroDivisionError(f"{q} divides both coefficients")
        return Fraction(legendre(b, q))
    return Fraction(0)


def _a_q_cubic(a: int, b: int, q: int) -> Fraction:
    if a % q == 0:
        if b % q == 0:
            raise ZeroDivisionError(f"{q} divides both coefficients")
        return Fraction(legendre(b, q))
    if b % q == 0 or q == 3 or q % 3 == 2:
        return Fraction(0)
    abar, bbar = pow(a, -1, q), pow(b, -1, q)
    num = legendre(b, q) * (1 + jacobsthal_phi3(q, abar * abar * bbar % q))
    residue = pow(a * a * b, (q - 1) // 3, q) == 1
    return Fraction(num, q - 3 if residue else q)


def _a_q_quadratic(a: int, b: int, c: int, q: int) -> Fraction:
    # one prime of the product formula for a_{D1}(ax^2 + bx + c)
    d = b * b - 4 * a * c
    if a % q == 0 and d % q == 0:
        if c % q == 0:
            raise ZeroDivisionError(f"{q} divides every coefficient")
        return Fraction(kronecker(c, q))
    val = Fraction(kronecker(a, q))
    if a % q and d % q:
        val *= Fraction(-1, q - 1 - legendre(d, q))
    return val


def a_q(f: Polynomial, q: int, method: str = "auto") -> Fraction:
    """a_q(f) for an odd prime q: closed form where one exists, else a scan."""
    if method == "scan":
        return a_d_scan(f, q)
    if f.degree == 1:
        a, b = f.as_linear()
        if gcd(a, b) == 1:
            return _a_q_linear(a, b, q)
    elif f.degree == 2:
        return _a_q_quadratic(*f.as_quadratic(), q)
    elif f.degree == 3:
        dep = f.depressed_cubic()
        if dep is not None and gcd(dep[0], dep[2]) == 1:
            return _a_q_cubic(dep[0], dep[2], q)
    if method == "fast":
        raise ValueError(f"no closed form for a_q of {f}")
    if q >= SCAN_LIMIT:
        raise ValueError(f"q = {q} too large to scan and no closed form for {f}")
    return a_d_scan(f, q)


def a_d(f: Polynomial, d: int, method: str = "auto", budget=DEFAULT_BUDGET) -> Fraction:
    """a_d(f) = sum_{r mod d} (f(r)/d) / #{r mod d : (f(r), d) = 1}.

    Computed as the product of a_q(f) over the prime factors q of the odd
    square-free d; ``method="scan"`` evaluates the defining sum directly.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError(f"d = {d} must be odd and positive")
    if d == 1:
        return Fraction(1)
    if method == "scan" and d < SCAN_LIMIT:
        return a_d_scan(f, d)
    fac = factorize(d, budget)
    if not fac.complete:
        raise ArithmeticError(f"could not factor d = {d}")
    if any(e > 1 for _, e in fac.prime_powers):
        raise ValueError(f"d = {d} is not square-free")
    out = Fraction(1)
    for q, _ in fac.prime_powers:
        out *= a_q(f, q, method)
    return out
