"""Prime sieves and primality testing.

``is_prime`` is deterministic below 2**64 (Miller-Rabin with the first
twelve prime bases).  Above that it is the Baillie-PSW test: a strong
base-2 probable-prime test followed by a strong Lucas test with
Selfridge parameters.  No BPSW pseudoprime is known, but none is proven
not to exist, so a ``True`` above 2**64 means "probable prime".
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .symbols import is_square, jacobi


def sieve(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p::2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


@lru_cache(maxsize=8)
def _cached_sieve(limit: int) -> np.ndarray:
    arr = sieve(limit)
    arr.setflags(write=False)
    return arr


def primes_up_to(limit: int) -> np.ndarray:
    return _cached_sieve(int(limit))


def first_primes(count: int) -> np.ndarray:
    """The first ``count`` primes, starting from 2."""
    if count <= 0:
        return np.zeros(0, dtype=np.int64)
    if count < 6:
        bound = 13
    else:
        ln = math.log(count)
        bound = int(count * (ln + math.log(ln))) + 10
    ps = primes_up_to(bound)
    return ps[:count]


_SMALL = [int(p) for p in sieve(1000)]
_MR64_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if is_square(n):
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    inv2 = (n + 1) // 2
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U = U * V % n
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = (P * U + V) * inv2 % n, (D * U + P * V) * inv2 % n
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if V == 0:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL:
        if n % p == 0:
            return n == p
    if n < 1_000_000:
        return True
    if n < 1 << 64:
        return all(_strong_probable_prime(n, a) for a in _MR64_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def next_prime(n: int) -> int:
    """Smallest prime > n."""
    n += 1
    while not is_prime(n):
        n += 1
    return n


def prime_factors_small(n: int) -> list:
    """Distinct prime factors by trial division; for small n only."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out
