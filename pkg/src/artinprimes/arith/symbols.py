"""Quadratic residue symbols and modular square roots."""

from math import isqrt

# (2/n) for n mod 8
_TWO = (0, 1, 0, -1, 0, -1, 0, 1)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n > 0."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive modulus, got {n}")
    a %= n
    k = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n & 7 in (3, 5):
                k = -k
        if a & n & 2:
            k = -k
        a, n = n % a, a
    return k if n == 1 else 0


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n), defined for every integer pair.

    (D/0) is 1 for D = +-1 and 0 otherwise; (D/2) follows D mod 8;
    (D/-1) is the sign of D.
    """
    if n == 0:
        return 1 if abs(D) == 1 else 0
    if D % 2 == 0 and n % 2 == 0:
        return 0
    k = 1
    if n < 0:
        n = -n
        if D < 0:
            k = -k
    v = (n & -n).bit_length() - 1
    n >>= v
    if v & 1:
        k *= _TWO[D & 7]
    if n == 1:
        return k
    return k * jacobi(D, n)


def legendre(a: int, p: int) -> int:
    """Legendre symbol for an odd prime p (delegates to the Jacobi symbol)."""
    return jacobi(a, p)


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def integer_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_perfect_cube(n: int) -> bool:
    r = integer_root(abs(n), 3)
    return r ** 3 == abs(n)


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a modulo the odd prime p (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
