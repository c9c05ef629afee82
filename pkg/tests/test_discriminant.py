from fractions import Fraction

import pytest

from artinprimes.arith import factorize
from artinprimes.discriminant import (alphas, candidate_discs, disc_bound, disc_of_sqrt,
                                      fundamental_divisors, is_fundamental, minimal_g, odd_part,
                                      tau, tau_brute, tau_formula)
from artinprimes.polynomial import Polynomial

from fixtures import BINOMIAL_CUBIC, GRID, LINEAR, QUADRATIC, fundamental_discs, takes_odd_value

F = Fraction


def naive_fundamental(D):
    if D in (0, 1):
        return False
    def sqfree(n):
        n = abs(n)
        return all(n % (k * k) for k in range(2, int(n ** 0.5) + 2) if k * k <= n)
    if D % 4 == 1:
        return sqfree(D)
    if D % 4 == 0:
        return (D // 4) % 4 in (2, 3) and sqfree(D // 4)
    return False


def test_is_fundamental_examples():
    assert is_fundamental(5)
    assert not is_fundamental(9)
    assert is_fundamental(-20)
    assert not is_fundamental(1) and not is_fundamental(0) and not is_fundamental(-4 * 4)


def test_is_fundamental_matches_naive():
    for D in range(-2000, 2001):
        assert is_fundamental(D) == naive_fundamental(D), D


@pytest.mark.parametrize("g,D", [(5, 5), (326, 1304), (12, 12), (-1, -4), (2, 8), (-3, -3),
                                 (1304, 1304), (-326, -1304)])
def test_disc_of_sqrt(g, D):
    assert disc_of_sqrt(g) == D


@pytest.mark.parametrize("g", [9, 0, 1, 144])
def test_disc_of_sqrt_errors(g):
    with pytest.raises(ValueError):
        disc_of_sqrt(g)


def test_minimal_g_inverts_disc_of_sqrt():
    for D in fundamental_discs(500):
        g = minimal_g(D)
        assert disc_of_sqrt(g) == D
        assert all(disc_of_sqrt(h) != D for h in range(-abs(g) + 1, abs(g)) if h not in (0, 1)
                   and not (h > 0 and int(h ** 0.5) ** 2 == h))


def test_alphas_examples():
    assert alphas(Polynomial.quadratic(326, 0, 3)).as_tuple() == (F(1, 2), F(1, 2), 0, 0)
    assert alphas(Polynomial.binomial_cubic(60, 29)).as_tuple() == (F(1, 2), 0, F(1, 2), 0)
    # 2x + 1 takes every odd residue mod 8 once as s runs mod 8
    assert alphas(Polynomial.linear(2, 1)).as_tuple() == (F(1, 4),) * 4
    with pytest.raises(ZeroDivisionError):
        alphas(Polynomial.linear(2, 2))


def test_alphas_sum_to_one():
    for f in GRID:
        if takes_odd_value(f):
            assert sum(alphas(f).as_tuple()) == 1


def test_tau_examples():
    assert tau(Polynomial.quadratic(326, 0, 3), 1304, "formula").value == 1
    assert tau(Polynomial.quadratic(326, 0, 3), 1304, "brute-force").value == 1
    assert tau(Polynomial.linear(105, 2), 5).value == 1
    assert tau(Polynomial.linear(105, 2), 105).value == 0
    for D in (-3, 5, -7, 13, -15, 21):
        assert tau(Polynomial.linear(1, 0), D, "formula").value == F(1, 2)
        assert tau_brute(Polynomial.linear(1, 0), D) == F(1, 2)


def test_tau_auto_and_errors():
    f = Polynomial.quadratic(1, 0, 1)
    assert tau(f, -4).method == "brute-force"
    assert tau(f, -3).method == "formula"
    with pytest.raises(ValueError):
        tau_formula(f, 8)
    with pytest.raises(ValueError):
        tau(f, 9)
    with pytest.raises(ZeroDivisionError):
        tau_brute(Polynomial.linear(3, 3).add_constant(0), -3)


def test_tau_formula_equals_brute_force_on_grid():
    discs = [D for D in fundamental_discs(200) if odd_part(D) > 1]
    checked = 0
    for f in GRID:
        if not takes_odd_value(f):
            continue
        for D in discs:
            try:
                want = tau_brute(f, D)
            except ZeroDivisionError:
                continue
            assert tau_formula(f, D) == want, (str(f), D)
            assert 0 <= want <= 1
            checked += 1
    assert checked > 5000


def test_tau_one_discs_divide_bound():
    discs = fundamental_discs(500)
    violations = []
    for family in (LINEAR, QUADRATIC, BINOMIAL_CUBIC):
        for f in family:
            N = disc_bound(f)
            for D in discs:
                try:
                    t = tau_brute(f, D)
                except ZeroDivisionError:
                    continue
                if t == 1 and N % D:
                    violations.append((str(f), D))
    assert violations == []


def test_candidate_discs_examples():
    assert candidate_discs(Polynomial.linear(105, 2)) == [-3, 5, -7, -15, 21, -35, 105]
    assert 1304 in candidate_discs(Polynomial.quadratic(326, 0, 3))
    c = candidate_discs(Polynomial.binomial_cubic(60, 29))
    assert {-3, 5, 8, -15, -20} <= set(c)
    assert disc_bound(Polynomial.binomial_cubic(60, 29)) == 3360
    with pytest.raises(ValueError):
        candidate_discs(Polynomial.from_descending(1, 1, 1, 1))


def test_candidate_discs_complete_and_sound():
    for N in list(range(1, 400)) + [3360, 105 * 8, 24 * 326 * 3912]:
        got = fundamental_divisors(N)
        want = sorted((D for D in range(-N, N + 1) if D and N % D == 0 and naive_fundamental(D)),
                      key=lambda D: (abs(D), D)) if N < 5000 else None
        if want is not None:
            assert got == want, N
        assert all(is_fundamental(D) and N % D == 0 for D in got)
    assert fundamental_divisors(3360, max_abs=20) == [-3, -4, 5, -7, -8, 8, 12, -15, -20]


def test_tau_shift_invariant():
    f = Polynomial.binomial_cubic(60, 29)
    for d in (-5, 1, 17):
        for D in (-3, -15, 12, 60, 5):
            assert tau_brute(f.shift(d), D) == tau_brute(f, D)
    assert factorize(3360).complete
