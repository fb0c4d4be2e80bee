"""Slow brute-force reference implementations.

None of these touch the factorization of p - 1 or the fast order test;
they exist to check the fast paths at small scale.
"""
from __future__ import annotations


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_trial(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def order_by_powers(u: int, p: int) -> int:
    """Smallest k >= 1 with u**k = 1 mod p, by walking the powers."""
    u %= p
    x, k = u, 1
    while x != 1:
        x = x * u % p
        k += 1
        if k > p:
            raise ValueError(f"{u} is not a unit mod {p}")
    return k


def orders_table(p: int) -> dict[int, int]:
    return {u: order_by_powers(u, p) for u in range(1, p)}


def least_primitive_root_enum(p: int) -> int:
    return next(u for u in range(2, p) if order_by_powers(u, p) == p - 1)


def least_prime_primitive_root_enum(p: int) -> int:
    q = 2
    while True:
        if q % p and is_prime_trial(q) and order_by_powers(q, p) == p - 1:
            return q
        q += 1


def least_nonresidue_by_squares(p: int) -> int:
    squares = {x * x % p for x in range(1, p)}
    return next(n for n in range(2, p) if n not in squares)


def legendre_by_squares(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in {x * x % p for x in range(1, p)} else -1
