from fractions import Fraction
from math import gcd

import pytest

from artinprimes.arith import primes_up_to
from artinprimes.charsums import (a_d, a_d_scan, a_q, char_sum, char_sum_scan, jacobsthal_phi3,
                                  jacobsthal_phi3_sum, psi3, psi3_sum)
from artinprimes.polynomial import Polynomial

from fixtures import GRID

Q1MOD3 = [q for q in primes_up_to(500).tolist() if q % 3 == 1]


@pytest.mark.parametrize("E,want", [(1, 3), (2, -6), (4, 0)])
def test_phi3_examples(E, want):
    assert jacobsthal_phi3(7, E) == want == jacobsthal_phi3_sum(7, E)


@pytest.mark.parametrize("E,want", [(2, 0), (1, 3), (6, psi3_sum(7, 6))])
def test_psi3_examples(E, want):
    assert psi3(7, E) == want


def test_phi3_formula_equals_sum_below_500():
    for q in Q1MOD3:
        for E in range(1, q):
            assert jacobsthal_phi3(q, E) == jacobsthal_phi3_sum(q, E), (q, E)


def test_psi3_equals_direct_sum_below_500():
    for q in Q1MOD3:
        for E in range(1, q):
            assert psi3(q, E) == psi3_sum(q, E), (q, E)


@pytest.mark.parametrize("q,E", [(5, 1), (7, 14), (9, 1), (6, 1)])
def test_phi3_errors(q, E):
    with pytest.raises(ValueError):
        jacobsthal_phi3(q, E)


def test_char_sum_examples():
    assert char_sum(Polynomial.binomial_cubic(1, 2), 7) == 1
    assert char_sum(Polynomial.linear(15, 2), 3) == -3
    assert char_sum(Polynomial.binomial_cubic(1, 1), 5) == 0


def test_char_sum_closed_forms_match_scan():
    for q in primes_up_to(200).tolist()[1:]:
        for a in range(1, 13):
            for b in range(-12, 13):
                if b == 0 or gcd(a, b) != 1:
                    continue
                for f in (Polynomial.linear(a, b), Polynomial.binomial_cubic(a, b)):
                    assert char_sum(f, q) == char_sum_scan(f, q), (f, q)


def test_char_sum_rejects_other_shapes():
    with pytest.raises(ValueError):
        char_sum(Polynomial.quadratic(1, 0, 1), 7)
    with pytest.raises(ValueError):
        char_sum(Polynomial.linear(6, 4), 7)


def test_a_d_examples():
    f = Polynomial.binomial_cubic(60, 29)
    assert a_d(f, 3) == -1 == a_d_scan(f, 3)
    assert a_d(f, 7) == Fraction(1, 7) == a_d_scan(f, 7)
    assert a_d(f, 15) == -1 == a_d_scan(f, 15)
    assert a_d(Polynomial.quadratic(326, 0, 3), 163) == -1
    assert a_d(f, 1) == 1


def test_a_d_errors():
    with pytest.raises(ValueError):
        a_d(Polynomial.linear(1, 0), 4)
    with pytest.raises(ValueError):
        a_d(Polynomial.linear(1, 0), 9)
    with pytest.raises(ZeroDivisionError):
        a_d_scan(Polynomial.quadratic(3, 3, 3).add_constant(0), 3)


ODD_SQUAREFREE = [d for d in range(3, 106, 2)
                  if all(d % (p * p) for p in (3, 5, 7))]


def _coprime_pairs():
    out = []
    for d1 in ODD_SQUAREFREE:
        for d2 in ODD_SQUAREFREE:
            if d1 < d2 and d1 * d2 <= 105 * 105 and gcd(d1, d2) == 1 and d1 * d2 < 3000:
                out.append((d1, d2))
    return out


def test_a_d_multiplicative_by_scan():
    pairs = _coprime_pairs()
    for f in GRID[::3]:
        for d1, d2 in pairs[::7]:
            try:
                lhs = a_d_scan(f, d1 * d2)
            except ZeroDivisionError:
                continue
            assert lhs == a_d_scan(f, d1) * a_d_scan(f, d2), (f, d1, d2)


def test_closed_form_a_q_matches_scan_below_300():
    for f in GRID:
        for q in primes_up_to(300).tolist()[1:]:
            try:
                want = a_d_scan(f, q)
            except ZeroDivisionError:
                with pytest.raises(ZeroDivisionError):
                    a_q(f, q)
                continue
            got = a_q(f, q)
            assert got == want, (str(f), q)
            assert abs(got) <= 1
