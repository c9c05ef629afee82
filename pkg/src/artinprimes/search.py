"""Search pipelines: polynomial construction, discriminant filter, density, length.

Each pipeline builds prime producing polynomials of one shape, keeps the
fundamental discriminants D with tau_D^-(f) = 1, attaches the smallest
|g| with disc(Q(sqrt g)) = D, scores by delta and optionally measures the
Artin length.  Emission order is fixed: delta descending, then |a|
ascending, then the polynomial text and D.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from .arith import (DEFAULT_BUDGET, FactorBudget, factorize, is_perfect_cube, is_prime,
                    is_prime_producing_candidate, is_square, kronecker, primes_up_to)
from .artin import LengthReport, length
from .density import DensityEstimate, Truncation, as_truncation, delta
from .discriminant import (candidate_discs, disc_of_sqrt, is_fundamental, minimal_g, tau,
                           tau_brute)
from .polynomial import Polynomial

CONFIG_VERSION = 1
SHAPES = ("linear", "quadratic", "cubic")


class ConfigError(ValueError):
    pass


# configuration ---------------------------------------------------------------

@dataclass
class LinearParams:
    a_values: List[int] = field(default_factory=list)
    a_prime_bound: Optional[int] = None  # adds a = product of the odd primes <= bound
    b_values: List[int] = field(default_factory=list)
    B_range: Optional[Tuple[int, int]] = None  # b = B + 1 for start <= B < stop
    shared_prime_floor: int = 0  # primes of (a, b - 1) must be >= this; 0 disables


@dataclass
class QuadraticParams:
    deltas: List[int] = field(default_factory=list)
    b_values: List[int] = field(default_factory=lambda: [0])
    small_prime_bound: int = 0  # a may not have odd prime factors <= this


@dataclass
class CubicParams:
    A_values: List[int] = field(default_factory=list)
    A_prime_bound: Optional[int] = None  # adds A = 3 * product of primes = 2 mod 3 up to bound
    B_values: List[int] = field(default_factory=list)
    B_range: Optional[Tuple[int, int]] = None
    min_spf: int = 2  # smallest prime factor of B must be at least this
    alpha_range: Tuple[int, int] = (0, 4)  # inclusive
    score_primes: int = 20  # number of q = 1 mod 3 used to score (A, B)
    min_score: int = 0


@dataclass
class SearchConfig:
    shape: str
    linear: LinearParams = field(default_factory=LinearParams)
    quadratic: QuadraticParams = field(default_factory=QuadraticParams)
    cubic: CubicParams = field(default_factory=CubicParams)
    truncation: Dict[str, int] = field(default_factory=lambda: {"prime_bound": 10 ** 5})
    max_disc: Optional[int] = None  # cap on |D|
    brute_verify_limit: int = 10 ** 5  # re-check tau = 1 by brute force when |D| <= this
    run_length: bool = False
    max_n: int = 10 ** 5
    factor_budget: Dict[str, int] = field(default_factory=lambda: DEFAULT_BUDGET.to_dict())
    shifts: List[int] = field(default_factory=list)
    scales: List[int] = field(default_factory=list)
    version: int = CONFIG_VERSION

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.version != CONFIG_VERSION:
            raise ConfigError(f"unsupported config version {self.version}")
        if self.shape not in SHAPES:
            raise ConfigError(f"shape must be one of {SHAPES}, got {self.shape!r}")
        try:
            as_truncation(dict(self.truncation))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad truncation: {exc}") from None
        for name in ("max_n", "brute_verify_limit"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative")
        if self.max_disc is not None and self.max_disc < 1:
            raise ConfigError("max_disc must be positive")
        if any(k < 1 for k in self.scales):
            raise ConfigError("scales must be positive")
        if self.shape == "quadratic":
            if not self.quadratic.deltas:
                raise ConfigError("quadratic search needs at least one Delta")
            if any(b % 2 for b in self.quadratic.b_values):
                raise ConfigError("quadratic b values must be even")
        if self.shape == "cubic":
            lo, hi = self.cubic.alpha_range
            if lo < 0 or hi < lo:
                raise ConfigError("alpha_range must satisfy 0 <= lo <= hi")
        if self.shape == "linear" and any(a <= 0 for a in self.linear.a_values):
            raise ConfigError("linear a values must be positive")

    @property
    def budget(self) -> FactorBudget:
        return FactorBudget(**self.factor_budget)

    @property
    def trunc(self) -> Truncation:
        return as_truncation(dict(self.truncation))

    def to_dict(self) -> dict:
        d = asdict(self)
        # big integers travel as strings
        def enc(x):
            if isinstance(x, bool) or x is None:
                return x
            if isinstance(x, int):
                return str(x)
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            return x
        return enc(d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchConfig":
        def dec(x):
            if isinstance(x, str):
                try:
                    return int(x)
                except ValueError:
                    return x
            if isinstance(x, list):
                return [dec(v) for v in x]
            if isinstance(x, dict):
                return {k: dec(v) for k, v in x.items()}
            return x
        d = dec(dict(d))
        try:
            lin = dict(d.pop("linear", {}))
            if lin.get("B_range") is not None:
                lin["B_range"] = tuple(lin["B_range"])
            cub = dict(d.pop("cubic", {}))
            if cub.get("B_range") is not None:
                cub["B_range"] = tuple(cub["B_range"])
            if "alpha_range" in cub:
                cub["alpha_range"] = tuple(cub["alpha_range"])
            return cls(linear=LinearParams(**lin), quadratic=QuadraticParams(**d.pop("quadratic", {})),
                       cubic=CubicParams(**cub), **d)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> "SearchConfig":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON: {exc}") from None


# candidates ------------------------------------------------------------------

@dataclass(frozen=True)
class SearchCandidate:
    f: Polynomial
    D: int
    g: int
    delta: DensityEstimate
    length: Optional[LengthReport] = None
    variation: Optional[Tuple[str, int]] = None  # ("shift", d) or ("scale", k)

    def sort_key(self):
        return (-self.delta.value, abs(self.f.leading), str(self.f), abs(self.D), self.D, self.g)

    def to_dict(self) -> dict:
        return {
            "f": str(self.f),
            "D": str(self.D),
            "g": str(self.g),
            "delta": self.delta.to_dict(),
            "length": self.length.to_dict() if self.length else None,
            "variation": list(self.variation) if self.variation else None,
        }

    def row(self) -> dict:
        """The four table columns f, g, length, delta."""
        return {"f": str(self.f), "g": str(self.g),
                "length": "" if self.length is None else str(self.length.length),
                "delta": f"{self.delta.value:.6f}"}


Reject = Callable[[str, str], None]


def _noop(_what: str, _why: str) -> None:
    pass


def _discs_with_tau_one(f: Polynomial, cfg: SearchConfig, reject: Reject) -> List[int]:
    out = []
    for D in candidate_discs(f, cfg.max_disc, cfg.budget):
        if tau(f, D).value != 1:
            reject(f"{f} D={D}", "tau != 1")
            continue
        if abs(D) <= cfg.brute_verify_limit and tau_brute(f, D) != 1:
            raise AssertionError(f"tau formula and brute force disagree for {f}, D={D}")
        out.append(D)
    return out


def _evaluate(f: Polynomial, cfg: SearchConfig, reject: Reject) -> List[SearchCandidate]:
    chk = is_prime_producing_candidate(f)
    if not chk.ok:
        reject(str(f), f"not prime producing: {chk.condition} {chk.detail}".strip())
        return []
    discs = _discs_with_tau_one(f, cfg, reject)
    if not discs:
        return []
    dens = delta(f, cfg.trunc, method="closed_form")
    out = []
    for D in discs:
        g = minimal_g(D)
        rep = length(f, g, cfg.max_n, cfg.budget) if cfg.run_length else None
        out.append(SearchCandidate(f, D, g, dens, rep))
    return out


def _emit(cands: Iterable[SearchCandidate]) -> Iterator[SearchCandidate]:
    yield from sorted(cands, key=SearchCandidate.sort_key)


def odd_primorial(y: int) -> int:
    """Product of the odd primes <= y."""
    return prod(int(q) for q in primes_up_to(y) if q > 2)


# linear ---------------------------------------------------------------------

def _linear_a_values(p: LinearParams) -> List[int]:
    vals = list(p.a_values)
    if p.a_prime_bound is not None:
        vals.append(odd_primorial(p.a_prime_bound))
    return list(dict.fromkeys(vals))


def _linear_b_values(p: LinearParams) -> List[int]:
    vals = list(p.b_values)
    if p.B_range is not None:
        vals.extend(B + 1 for B in range(*p.B_range))
    return list(dict.fromkeys(vals))


def search_linear(cfg: SearchConfig, on_reject: Reject = _noop) -> Iterator[SearchCandidate]:
    p = cfg.linear
    cands = []
    for a in _linear_a_values(p):
        for b in _linear_b_values(p):
            f = Polynomial.linear(a, b)
            if gcd(a, b) != 1:
                on_reject(str(f), "gcd(a, b) != 1")
                continue
            if p.shared_prime_floor:
                shared = gcd(a, b - 1)
                fac = factorize(shared, cfg.budget) if shared > 1 else None
                if fac is not None and (not fac.complete or min(fac.primes) < p.shared_prime_floor):
                    on_reject(str(f), "a and b - 1 share a small prime")
                    continue
            cands.extend(_evaluate(f, cfg, on_reject))
    return _emit(cands)


# quadratic ----------------------------------------------------------------------

def _divisors(n: int, budget: FactorBudget) -> List[int]:
    fac = factorize(n, budget)
    if not fac.complete:
        raise ArithmeticError(f"could not factor {n} within budget")
    divs = [1]
    for q, e in fac.prime_powers:
        divs = [d * q ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def quadratic_splits(Delta: int, b: int, small_prime_bound: int = 0,
                     budget: FactorBudget = DEFAULT_BUDGET,
                     on_reject: Reject = _noop) -> List[Polynomial]:
    """Every ax^2 + bx + c with a(c - 1) = b'^2 - Delta (b = 2b') meeting the side conditions."""
    if b % 2:
        raise ValueError("b must be even")
    N = (b // 2) ** 2 - Delta
    if N <= 0:
        raise ValueError(f"b'^2 - Delta = {N} must be positive")
    small = [q for q in primes_up_to(max(small_prime_bound, 2)).tolist() if 2 < q <= small_prime_bound]
    out = []
    for a in _divisors(N, budget):
        c = N // a + 1
        f = Polynomial.quadratic(a, b, c)
        if gcd(gcd(a, b), c) != 1:
            on_reject(str(f), "gcd(a, b, c) != 1")
        elif gcd(a + b, c) % 2 == 0:
            on_reject(str(f), "2 divides (a + b, c)")
        elif is_square(b * b - 4 * a * c):
            on_reject(str(f), "b^2 - 4ac is a square")
        elif any(a % q == 0 for q in small):
            on_reject(str(f), "a has a small odd prime factor")
        else:
            out.append(f)
    return out


def inert_run(Delta: int, start: int = 3, limit: int = 10 ** 6) -> int:
    """Number of consecutive primes q >= start with (Delta/q) = -1."""
    run = 0
    for q in primes_up_to(limit).tolist():
        if q < start:
            continue
        if kronecker(Delta, q) != -1:
            return run
        run += 1
    return run


def search_quadratic(cfg: SearchConfig, on_reject: Reject = _noop) -> Iterator[SearchCandidate]:
    p = cfg.quadratic
    cands = []
    for Delta in p.deltas:
        for b in p.b_values:
            for f in quadratic_splits(Delta, b, p.small_prime_bound, cfg.budget, on_reject):
                cands.extend(_evaluate(f, cfg, on_reject))
    return _emit(cands)


# cubic ------------------------------------------------------------------------

def cubic_A(bound: int) -> int:
    """3 times the product of the primes q = 2 mod 3 with q <= bound (q odd)."""
    return 3 * prod(q for q in primes_up_to(bound).tolist() if q % 3 == 2 and q > 2)


def cubic_score(A: int, B: int, count: int) -> int:
    """How many of the first ``count`` primes q = 1 mod 3 have (A^2 B)^((q-1)/3) != 1 mod q."""
    score = seen = 0
    q = 7
    while seen < count:
        if is_prime(q):
            seen += 1
            if (A * A * B) % q and pow(A * A * B, (q - 1) // 3, q) != 1:
                score += 1
        q += 6
    return score


def cubic_coefficients(A: int, B: int, alpha: int) -> Tuple[int, int]:
    """(a, b) = (2^alpha A, 2^alpha B + 1), or ValueError naming the failed condition."""
    a, b = 2 ** alpha * A, 2 ** alpha * B + 1
    if gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    if is_perfect_cube(a * a * b):
        raise ValueError(f"a^2 b = {a * a * b} is a perfect cube")
    return a, b


def _smallest_prime_factor(n: int, budget: FactorBudget) -> int:
    fac = factorize(abs(n), budget)
    if fac.prime_powers:
        return fac.prime_powers[0][0]
    return abs(n)


def search_cubic(cfg: SearchConfig, on_reject: Reject = _noop) -> Iterator[SearchCandidate]:
    p = cfg.cubic
    As = list(p.A_values)
    if p.A_prime_bound is not None:
        As.append(cubic_A(p.A_prime_bound))
    Bs = list(p.B_values)
    if p.B_range is not None:
        Bs.extend(range(*p.B_range))
    cands = []
    for A in dict.fromkeys(As):
        if A <= 0:
            on_reject(f"A={A}", "A must be positive")
            continue
        for B in dict.fromkeys(Bs):
            tag = f"A={A} B={B}"
            if B == 0 or gcd(A, B) != 1:
                on_reject(tag, "A and B not coprime")
                continue
            if abs(B) > 1 and _smallest_prime_factor(B, cfg.budget) < p.min_spf:
                on_reject(tag, "smallest prime factor of B too small")
                continue
            if cubic_score(A, B, p.score_primes) < p.min_score:
                on_reject(tag, "score below min_score")
                continue
            for alpha in range(p.alpha_range[0], p.alpha_range[1] + 1):
                try:
                    a, b = cubic_coefficients(A, B, alpha)
                except ValueError as exc:
                    on_reject(f"{tag} alpha={alpha}", str(exc))
                    continue
                cands.extend(_evaluate(Polynomial.binomial_cubic(a, b), cfg, on_reject))
    return _emit(cands)


def search(cfg: SearchConfig, on_reject: Reject = _noop) -> Iterator[SearchCandidate]:
    return {"linear": search_linear, "quadratic": search_quadratic,
            "cubic": search_cubic}[cfg.shape](cfg, on_reject)


# variations ---------------------------------------------------------------------

def scan_variations(seed: SearchCandidate, d_values: Iterable[int] = (), k_values: Iterable[int] = (),
                    max_n: int = 10 ** 5, budget: FactorBudget = DEFAULT_BUDGET,
                    workers: int = 1) -> Iterator[SearchCandidate]:
    """Re-run the length for f(x + d) against g and for f against k^2 g.

    delta is unchanged by a shift (the residues of f(x + d) mod q are a
    permutation of those of f), so the seed's estimate is carried over;
    tau is re-verified for every shift.  Scaling g by a square keeps D.
    """
    for d in d_values:
        f1 = seed.f.shift(d)
        if tau(f1, seed.D).value != 1:
            raise AssertionError(f"tau changed under shift d={d}")
        yield SearchCandidate(f1, seed.D, seed.g, seed.delta,
                              length(f1, seed.g, max_n, budget, workers=workers), ("shift", d))
    for k in k_values:
        g1 = k * k * seed.g
        if disc_of_sqrt(g1, budget) != seed.D:
            raise AssertionError(f"disc of sqrt({g1}) differs from {seed.D}")
        yield SearchCandidate(seed.f, seed.D, g1, seed.delta,
                              length(seed.f, g1, max_n, budget, workers=workers), ("scale", k))


def candidate_is_valid(c: SearchCandidate, brute_limit: int = 10 ** 5) -> bool:
    """Check the candidate invariants: admissible f, tau = 1, disc(Q(sqrt g)) = D."""
    if not is_prime_producing_candidate(c.f).ok or not is_fundamental(c.D):
        return False
    if tau(c.f, c.D).value != 1:
        return False
    if abs(c.D) <= brute_limit and tau_brute(c.f, c.D) != Fraction(1):
        return False
    return disc_of_sqrt(c.g) == c.D
