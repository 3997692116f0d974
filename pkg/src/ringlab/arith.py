"""Integer helpers: extended gcd, trial-division factorization, CRT.

Everything here is exact big-integer arithmetic; factorization is plain
trial division, which is all the desk-scale inputs need.
"""

from __future__ import annotations

import math


def int_egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g and g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; units map to {}."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def radical(n: int) -> int:
    """Product of the distinct primes dividing n (squarefree kernel)."""
    return math.prod(factor_int(n))


def crt(residues: list[int], moduli: list[int]) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; result in [0, prod)."""
    x, m = 0, 1
    for r, q in zip(residues, moduli):
        g, u, _ = int_egcd(m, q)
        if g != 1:
            raise ValueError("moduli not coprime")
        x = (x + (r - x) * u % q * m) % (m * q)
        m *= q
    return x % m
