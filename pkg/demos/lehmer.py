"""Density, inert discriminant and production length of 326x^2 + 3 for g = 326."""

from artinprimes.artin import length
from artinprimes.density import delta, expected_length
from artinprimes.discriminant import disc_of_sqrt, tau
from artinprimes.polynomial import Polynomial

f = Polynomial.quadratic(326, 0, 3)
g = 326
d = delta(f, 10 ** 6)
D = disc_of_sqrt(g)
print(f"f = {f}")
print(f"delta(f), q <= 10^6      {d.value:.6f}")
print(f"expected length          {expected_length(d.value):.1f}")
print(f"D = disc of Q(sqrt {g})  {D}, tau = {tau(f, D).value}")
rep = length(f, g)
print(f"length                   {rep.length}")
print(f"first failure            n={rep.failure.n} p={rep.failure.p} q={rep.failure.witness}")
