"""Fraction tau of allowable classes inert in Q(sqrt D), by formula and by brute force."""

from artinprimes.discriminant import candidate_discs, odd_part, tau
from artinprimes.polynomial import Polynomial

for f in (Polynomial.linear(105, 2), Polynomial.quadratic(326, 0, 3),
          Polynomial.binomial_cubic(60, 29)):
    print(f)
    for D in candidate_discs(f, max_abs=60):
        brute = tau(f, D, "brute-force").value
        note = ""
        if odd_part(D) > 1:
            assert tau(f, D, "formula").value == brute
            note = "formula agrees"
        print(f"  D={D:5d}  tau={str(brute):6s} {note}")
