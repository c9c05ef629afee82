"""Jacobsthal sums phi_{q,3}(E) from q = A^2 + 3B^2, checked against the defining sum."""

from artinprimes.arith import primes_up_to, represent_3B2
from artinprimes.charsums import jacobsthal_phi3, jacobsthal_phi3_sum

for q in [q for q in primes_up_to(60).tolist() if q % 3 == 1]:
    rep = represent_3B2(q)
    vals = [jacobsthal_phi3(q, E) for E in range(1, 7)]
    assert vals == [jacobsthal_phi3_sum(q, E) for E in range(1, 7)]
    print(f"q={q:3d}  A={rep.A:3d} B={rep.B:2d}  phi(E=1..6) = {vals}")
