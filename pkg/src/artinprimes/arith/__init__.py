"""Integer arithmetic: symbols, primality, factorization, root counting."""

from .factor import DEFAULT_BUDGET, FactorBudget, Factorization, factorize, rho_split
from .forms import JacobsthalRep, represent_3B2
from .primes import first_primes, is_prime, next_prime, primes_up_to, sieve
from .roots import (CandidateCheck, binomial_cubic_is_degenerate, count_roots,
                    count_roots_scan, has_rational_root, is_prime_producing_candidate)
from .symbols import (integer_root, is_perfect_cube, is_square, jacobi, kronecker,
                      legendre, sqrt_mod)


def squarefree_part(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> int:
    """Square-free part of n with the sign of n; raises if n cannot be factored."""
    if n == 0:
        raise ValueError("square-free part of 0")
    fac = factorize(abs(n), budget)
    if not fac.complete:
        raise ArithmeticError(f"could not factor {n} within budget")
    out = 1
    for p, e in fac.prime_powers:
        if e % 2:
            out *= p
    return out if n > 0 else -out


def is_squarefree(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> bool:
    if n == 0:
        return False
    fac = factorize(abs(n), budget)
    if not fac.complete:
        raise ArithmeticError(f"could not factor {n} within budget")
    return all(e == 1 for _, e in fac.prime_powers)


__all__ = [
    "CandidateCheck", "DEFAULT_BUDGET", "FactorBudget", "Factorization", "JacobsthalRep",
    "binomial_cubic_is_degenerate", "count_roots", "count_roots_scan", "factorize",
    "first_primes", "has_rational_root", "integer_root", "is_perfect_cube", "is_prime",
    "is_prime_producing_candidate", "is_square", "is_squarefree", "jacobi", "kronecker",
    "legendre", "next_prime", "primes_up_to", "represent_3B2", "rho_split", "sieve",
    "sqrt_mod", "squarefree_part",
]
