"""Primitive-root tests and Artin prime production lengths."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .arith import DEFAULT_BUDGET, FactorBudget, Factorization, factorize, is_prime
from .polynomial import Polynomial

ARTIN = "artin"
NOT_ARTIN = "not_artin"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ArtinStatus:
    status: str
    p: int
    g: int
    witness: Optional[int] = None  # prime q | p-1 with g^((p-1)/q) = 1 mod p
    factorization: Optional[Factorization] = None

    @property
    def is_artin(self) -> bool:
        return self.status == ARTIN

    def verify(self) -> bool:
        """Re-check a not_artin witness with one modular exponentiation."""
        if self.status != NOT_ARTIN:
            return True
        q = self.witness
        return (self.p - 1) % q == 0 and pow(self.g, (self.p - 1) // q, self.p) == 1

    def to_dict(self) -> dict:
        out = {"status": self.status, "p": str(self.p), "g": str(self.g)}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        if self.status == UNKNOWN and self.factorization is not None:
            out["factorization"] = self.factorization.to_dict()
        return out


def is_artin_prime(p: int, g: int, budget: FactorBudget = DEFAULT_BUDGET,
                   check_prime: bool = True) -> ArtinStatus:
    """Is g a primitive root mod the prime p (p not dividing 2g)?

    g fails exactly when some prime q | p - 1 has g^((p-1)/q) = 1 mod p.
    When p - 1 is only partly factored and every known q passes, the
    answer is ``unknown`` and carries the partial factorization.
    """
    if check_prime and not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if (2 * g) % p == 0:
        raise ValueError(f"p = {p} divides 2g = {2 * g}")
    fac = factorize(p - 1, budget)
    for q in fac.primes:
        if pow(g, (p - 1) // q, p) == 1:
            return ArtinStatus(NOT_ARTIN, p, g, witness=q)
    if not fac.complete:
        return ArtinStatus(UNKNOWN, p, g, factorization=fac)
    return ArtinStatus(ARTIN, p, g)


def _multiplicative_order(g: int, p: int) -> int:
    """Order of g mod p by scanning divisors of p - 1; an oracle for small p."""
    n = p - 1
    divs = sorted(d for i in range(1, int(n ** 0.5) + 1) if n % i == 0 for d in {i, n // i})
    for d in divs:
        if pow(g, d, p) == 1:
            return d
    raise ArithmeticError("unreachable")  # pragma: no cover


# length scans -----------------------------------------------------------

@dataclass(frozen=True)
class Failure:
    n: int
    p: int
    witness: int

    def to_dict(self) -> dict:
        return {"n": str(self.n), "p": str(self.p), "witness": str(self.witness)}


@dataclass(frozen=True)
class Skip:
    n: int
    p: int
    reason: str  # "divides_g", "is_two", "unknown_factorization"

    def to_dict(self) -> dict:
        return {"n": str(self.n), "p": str(self.p), "reason": self.reason}


@dataclass(frozen=True)
class LengthReport:
    """Outcome of an Artin-length scan over n = start, start + 1, ...

    ``length`` counts consecutive qualifying primes that are Artin primes.
    The scan ends at the first non-Artin prime (``failure``), at a prime
    whose p - 1 could not be factored (``unknown``; the scan stops rather
    than guess), or at ``max_n`` (``scan_bound_hit``).  ``next_n`` is where
    a resumed scan picks up.
    """

    length: int
    primes_found: int
    failure: Optional[Failure] = None
    skipped: Tuple[Skip, ...] = ()
    scan_bound_hit: bool = False
    unknown: Optional[ArtinStatus] = None
    unknown_n: Optional[int] = None
    next_n: int = 0
    g: int = 0

    @property
    def stop_reason(self) -> str:
        if self.failure is not None:
            return "failure"
        if self.unknown is not None:
            return "unknown"
        return "max_n"

    def to_dict(self) -> dict:
        out = {
            "length": self.length,
            "primes_found": self.primes_found,
            "failure": self.failure.to_dict() if self.failure else None,
            "skipped": [s.to_dict() for s in self.skipped],
            "scan_bound_hit": self.scan_bound_hit,
            "unknown": self.unknown.to_dict() if self.unknown else None,
            "unknown_n": None if self.unknown_n is None else str(self.unknown_n),
            "next_n": str(self.next_n),
            "g": str(self.g),
            "stop_reason": self.stop_reason,
        }
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "LengthReport":
        fail = d.get("failure")
        return cls(
            length=int(d["length"]),
            primes_found=int(d["primes_found"]),
            failure=Failure(int(fail["n"]), int(fail["p"]), int(fail["witness"])) if fail else None,
            skipped=tuple(Skip(int(s["n"]), int(s["p"]), s["reason"]) for s in d.get("skipped", ())),
            scan_bound_hit=bool(d.get("scan_bound_hit", False)),
            unknown_n=None if d.get("unknown_n") is None else int(d["unknown_n"]),
            next_n=int(d.get("next_n", 0)),
            g=int(d.get("g", 0)),
        )


def _classify(polys: Sequence[Tuple[int, ...]], g: int, n: int, budget: FactorBudget):
    """Evaluate every polynomial at n; returns a list of (p, kind, status)."""
    out = []
    for coeffs in polys:
        p = 0
        for c in reversed(coeffs):
            p = p * n + c
        if p < 2 or not is_prime(p):
            out.append((p, "composite", None))
        elif p == 2:
            out.append((p, "is_two", None))
        elif g % p == 0:
            out.append((p, "divides_g", None))
        else:
            out.append((p, "prime", is_artin_prime(p, g, budget, check_prime=False)))
    return out


def _classify_chunk(args):
    polys, g, start, stop, budget = args
    return [_classify(polys, g, n, budget) for n in range(start, stop)]


def _stream(polys, g, start, max_n, budget, workers, chunk):
    if workers <= 1:
        for n in range(start, max_n + 1):
            yield n, _classify(polys, g, n, budget)
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        n = start
        while n <= max_n:
            jobs = []
            for w in range(workers):
                a = n + w * chunk
                if a > max_n:
                    break
                jobs.append((polys, g, a, min(a + chunk, max_n + 1), budget))
            for job, res in zip(jobs, ex.map(_classify_chunk, jobs)):
                for k, item in enumerate(res):
                    yield job[2] + k, item
            n = jobs[-1][3]


def _scan(polys: List[Polynomial], g: int, max_n: int, budget: FactorBudget,
          resume: Optional[LengthReport], workers: int, chunk: int) -> LengthReport:
    length = resume.length if resume else 0
    found = resume.primes_found if resume else 0
    start = resume.next_n if resume else 0
    # an unknown at n = start is retried, so its skip record is dropped
    skipped = [s for s in resume.skipped
               if not (s.reason == "unknown_factorization" and s.n >= start)] if resume else []
    coeffs = [f.coeffs for f in polys]
    stream = _stream(coeffs, g, start, max_n, budget, workers, chunk)
    try:
        for n, items in stream:
            if any(kind == "composite" for _, kind, _ in items):
                continue
            found += 1
            bad = [(p, kind) for p, kind, _ in items if kind in ("is_two", "divides_g")]
            if bad:
                skipped.extend(Skip(n, p, kind) for p, kind in bad)
                continue
            for p, _, st in items:
                if st.status == NOT_ARTIN:
                    return LengthReport(length, found, Failure(n, p, st.witness), tuple(skipped),
                                        next_n=n + 1, g=g)
            for p, _, st in items:
                if st.status == UNKNOWN:
                    skipped.append(Skip(n, p, "unknown_factorization"))
                    return LengthReport(length, found - 1, None, tuple(skipped),
                                        unknown=st, unknown_n=n, next_n=n, g=g)
            length += 1
    finally:
        stream.close()
    return LengthReport(length, found, None, tuple(skipped), scan_bound_hit=True,
                        next_n=max_n + 1, g=g)


def length(f: Polynomial, g: int, max_n: int = 10 ** 6,
           budget: FactorBudget = DEFAULT_BUDGET, resume: Optional[LengthReport] = None,
           workers: int = 1, chunk: int = 2000) -> LengthReport:
    """Artin prime production length of f for g, scanning n = 0 .. max_n.

    Non-positive and composite values are ignored; the prime 2 and primes
    dividing g are skipped and recorded; repeated prime values count each
    time they occur.
    """
    return _scan([f], g, max_n, budget, resume, workers, chunk)


def pair_length(f1: Polynomial, f2: Polynomial, g: int, max_n: int = 10 ** 6,
                budget: FactorBudget = DEFAULT_BUDGET, resume: Optional[LengthReport] = None,
                workers: int = 1, chunk: int = 2000) -> LengthReport:
    """Consecutive n with f1(n), f2(n) both prime, coprime to 2g, and both Artin primes for g."""
    return _scan([f1, f2], g, max_n, budget, resume, workers, chunk)
