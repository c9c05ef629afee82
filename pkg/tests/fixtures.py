"""Deterministic polynomial fixture sets shared by the test modules."""

import random
from math import gcd

from artinprimes.arith import is_prime_producing_candidate
from artinprimes.discriminant import is_fundamental
from artinprimes.polynomial import Polynomial

HAND_PICKED = [
    Polynomial.linear(105, 2), Polynomial.linear(2, 1), Polynomial.linear(15, 2),
    Polynomial.linear(1, 0), Polynomial.linear(60, 7),
    Polynomial.quadratic(326, 0, 3), Polynomial.quadratic(10, 0, 7),
    Polynomial.quadratic(1, 0, 1), Polynomial.quadratic(1, 1, 41),
    Polynomial.quadratic(163, 0, 5), Polynomial.quadratic(2, 0, 3),
    Polynomial.binomial_cubic(60, 29), Polynomial.binomial_cubic(1, 2),
    Polynomial.binomial_cubic(15, 2), Polynomial.binomial_cubic(4, 7),
    Polynomial.binomial_cubic(60, 29).shift(3),
]


def _random_grid(seed: int, per_degree: int, bound: int):
    rng = random.Random(seed)
    out = []
    for deg in (1, 2, 3):
        got = 0
        while got < per_degree:
            cs = [rng.randint(-bound, bound) for _ in range(deg)] + [rng.randint(1, bound)]
            f = Polynomial(cs)
            if is_prime_producing_candidate(f).ok:
                out.append(f)
                got += 1
    return out


def _binomial_grid(seed: int, count: int, bound: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b = rng.randint(1, bound), rng.randint(-bound, bound)
        if b and gcd(a, b) == 1:
            f = Polynomial.binomial_cubic(a, b)
            if is_prime_producing_candidate(f).ok:
                out.append(f)
    return out


#: degrees 1-3, |coefficients| <= 60, Bouniakowsky candidates
GRID = HAND_PICKED + _random_grid(20240, 25, 60) + _binomial_grid(77, 25, 60)

#: sub-families with a finite discriminant criterion
LINEAR = [f for f in GRID if f.degree == 1]
QUADRATIC = [f for f in GRID if f.degree == 2]
BINOMIAL_CUBIC = [f for f in GRID if f.degree == 3 and f.depressed_cubic() is not None]


def fundamental_discs(limit: int):
    return [D for D in range(-limit, limit + 1) if is_fundamental(D)]


def takes_odd_value(f: Polynomial) -> bool:
    return any(v % 2 for v in f.values_mod(2))
