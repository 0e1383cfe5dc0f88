"""Small integer helpers: primality, factorization, divisor lists.

Everything here is plain trial division; inputs stay desk-scale (the
moduli and evaluation values that show up never exceed a few digits).
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factor_int expects a positive integer")
    out: dict[int, int] = {}
    x = n
    p = 2
    while p * p <= x:
        while x % p == 0:
            out[p] = out.get(p, 0) + 1
            x //= p
        p = 3 if p == 2 else p + 2
    if x > 1:
        out[x] = out.get(x, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factor_int(n)) if n > 1 else []


def divisors(n: int) -> list[int]:
    """All positive divisors of n != 0, ascending."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no finite divisor list")
    ds = [1]
    for p, e in factor_int(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)
