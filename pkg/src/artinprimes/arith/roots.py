"""Counting solutions of f(s) = t mod q, and the Bouniakowsky conditions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from ..polynomial import Polynomial
from .primes import is_prime
from .symbols import is_perfect_cube, is_square, legendre

SCAN_THRESHOLD = 50


# Dense polynomial arithmetic over F_q, ascending coefficient lists.

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: List[int], m: List[int], q: int) -> List[int]:
    a = list(a)
    inv = pow(m[-1], -1, q)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        coef = a[-1] * inv % q
        shift = len(a) - 1 - dm
        if coef:
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - coef * c) % q
        a.pop()
        _trim(a)
    return a


def _polymulmod(a: List[int], b: List[int], m: List[int], q: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    return _polymod(_trim(out), m, q)


def _polygcd(a: List[int], b: List[int], q: int) -> List[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _polymod(a, b, q)
    return a


def _x_pow_mod(e: int, m: List[int], q: int) -> List[int]:
    result = _polymod([1], m, q)
    base = _polymod([0, 1], m, q)
    while e:
        if e & 1:
            result = _polymulmod(result, base, m, q)
        base = _polymulmod(base, base, m, q)
        e >>= 1
    return result


def _distinct_roots_gcd(a: List[int], q: int) -> int:
    """deg gcd(a, x^q - x) for monic-able a of degree >= 1."""
    xq = _x_pow_mod(q, a, q)
    xq = xq + [0] * max(0, 2 - len(xq))
    xq[1] = (xq[1] - 1) % q
    return len(_polygcd(a, _trim(xq), q)) - 1


def count_roots_scan(f: Polynomial, q: int, target: int = 0) -> int:
    t = target % q
    return sum(1 for v in f.values_mod(q) if v == t)


def _cubic_case_count(a: int, b: int, q: int) -> int:
    """#{s mod q : a s^3 + b = 0} by the binomial-cubic case analysis (q odd)."""
    if a % q == 0:
        return q if b % q == 0 else 0
    if b % q == 0:
        return 1
    if q == 3 or q % 3 == 2:
        return 1
    return 3 if pow(a * a * b, (q - 1) // 3, q) == 1 else 0


def count_roots(f: Polynomial, q: int, target: int = 0, method: str = "auto") -> int:
    """#{s mod q : f(s) = target mod q} for a prime q.

    ``method`` is ``scan`` (evaluate every residue), ``fast`` (closed forms
    for degree <= 2 and shifted binomial cubics, otherwise
    deg gcd(f - t, x^q - x)), or ``auto`` (scan below SCAN_THRESHOLD).
    """
    if method == "scan" or (method == "auto" and q < SCAN_THRESHOLD):
        return count_roots_scan(f, q, target)
    if method not in ("auto", "fast"):
        raise ValueError(f"unknown method {method!r}")
    g = f.add_constant(-target) if f.degree else f
    red = g.reduce_mod(q)
    if not red:
        return q
    deg = len(red) - 1
    if deg == 0:
        return 0
    if deg == 1:
        return 1
    if deg == 2 and q != 2:
        c, b, a = red
        return 1 + legendre(b * b - 4 * a * c, q)
    if deg == 3 and q != 2:
        dep = g.depressed_cubic()
        if dep is not None:
            a, d, b = dep
            return _cubic_case_count(a, b, q)
    return _distinct_roots_gcd(red, q)


# Bouniakowsky conditions ---------------------------------------------------

@dataclass(frozen=True)
class CandidateCheck:
    """Outcome of the prime-producing test: ``condition`` names the first failure."""

    ok: bool
    condition: Optional[str] = None  # "i", "ii" or "iii"
    detail: str = ""
    partial: bool = False  # irreducibility only partially checked (degree >= 4)
    prime: Optional[int] = None  # the q with N_q(f) = q for condition (iii)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "condition": self.condition, "detail": self.detail,
                "partial": self.partial, "prime": self.prime}


def has_rational_root(f: Polynomial) -> bool:
    """Exact rational-root test via high-precision real roots."""
    import mpmath

    cs = f.coeffs
    if cs[0] == 0:
        return True
    lead = abs(f.leading)
    # a root p/q has q | lead, so precision well below 1/(2 lead^2) recovers it
    size = max(len(str(abs(c))) for c in cs)
    dps = 2 * len(str(lead)) + size + 30
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(reversed(cs)), maxsteps=400, extraprec=4 * dps)
        tol = mpmath.mpf(10) ** (-(dps // 3))
        for r in roots:
            if abs(mpmath.im(r)) > tol * max(1, abs(r)):
                continue
            x = mpmath.re(r)
            man, exp = mpmath.mpf(x).man_exp
            approx = Fraction(int(man)) * (Fraction(2) ** int(exp))
            cand = approx.limit_denominator(lead)
            num, den = cand.numerator, cand.denominator
            if sum(c * num ** k * den ** (f.degree - k) for k, c in enumerate(cs)) == 0:
                return True
    return False


def is_prime_producing_candidate(f: Polynomial) -> CandidateCheck:
    if f.leading <= 0:
        return CandidateCheck(False, "i", "leading coefficient not positive")
    if f.content > 1:
        return CandidateCheck(False, "ii", f"content {f.content} > 1")
    partial = f.degree >= 4
    if f.degree == 2:
        if is_square(f.discriminant):
            return CandidateCheck(False, "ii", "discriminant is a square")
    elif f.degree == 3 and f.discriminant == 0:
        return CandidateCheck(False, "ii", "repeated root")
    elif f.degree >= 3 and has_rational_root(f):
        return CandidateCheck(False, "ii", "rational root")
    for q in range(2, f.degree + 1):
        if is_prime(q) and count_roots_scan(f, q) == q:
            return CandidateCheck(False, "iii", f"N_{q}(f) = {q}", partial, q)
    return CandidateCheck(True, None, "irreducibility partially checked" if partial else "",
                          partial)


def binomial_cubic_is_degenerate(a: int, b: int) -> bool:
    """True when a^2 b is a perfect cube (so a x^3 + b has a rational root)."""
    return is_perfect_cube(a * a * b)
