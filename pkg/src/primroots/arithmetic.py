"""Exact integer arithmetic: primality, factorization, sieves and the
multiplicative functions mu, phi, omega and Lambda.

Everything here works on Python ints, so 64-bit inputs never overflow.
Sieves return numpy arrays.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded

# Mertens constant: lim sum_{p<=x} 1/p - log log x
MERTENS_B1 = 0.2614972128476427837554268386
EULER_GAMMA = 0.5772156649015328606065120901

# Largest sieve limit accepted by default (~400 MB of int64 primes).
MAX_SIEVE_LIMIT = 10**9

UINT64_MAX = 2**64 - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Witnesses 2..37 make Miller-Rabin exact below 3.3e24, which covers 64 bits.
_MR_BASES = _SMALL_PRIMES
_TRIAL_LIMIT = 1000


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64.

    >>> [k for k in range(20) if is_prime(k)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its prime factorization.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    increasing primes.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"FactoredInteger needs n >= 1, got {self.n}")
        prev = 1
        acc = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError(f"malformed factor list {self.factors!r}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            acc *= p**e
            prev = p
        if acc != self.n:
            raise ValueError(f"factors multiply to {acc}, not {self.n}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __int__(self):
        return self.n

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    if n % 2 == 0:
        return 2
    # Deterministic sequence of (c, y0) seeds so runs are reproducible.
    for c in range(1, 200):
        y, r, q, g = 2, 1, 1, 1
        m = 128
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"Pollard rho failed to split {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factor(n: int) -> FactoredInteger:
    """Factor ``n >= 1``: trial division by primes below 1000, then
    Pollard-Brent on the cofactor with every piece certified by is_prime."""
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    found: dict[int, int] = {}
    m = n
    for p in _trial_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        _split(m, found)
    return FactoredInteger(n, tuple(sorted(found.items())))


@lru_cache(maxsize=1)
def _trial_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in prime_sieve(_TRIAL_LIMIT))


def _as_factored(f) -> FactoredInteger:
    return f if isinstance(f, FactoredInteger) else factor(f)


def mobius(f: FactoredInteger | int) -> int:
    f = _as_factored(f)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def euler_phi(f: FactoredInteger | int) -> int:
    f = _as_factored(f)
    phi = f.n
    for p, _ in f.factors:
        phi = phi // p * (p - 1)
    return phi


def omega(f: FactoredInteger | int) -> int:
    """Number of distinct prime factors; omega(1) = 0."""
    return len(_as_factored(f).factors)


def divisors(f: FactoredInteger | int) -> list[int]:
    """All positive divisors, ascending."""
    f = _as_factored(f)
    out = [1]
    for p, e in f.factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def squarefree_divisors(f: FactoredInteger | int) -> list[int]:
    """Divisors d with mu(d) != 0, ascending. There are 2**omega(n) of them."""
    f = _as_factored(f)
    out = []
    for picks in product((0, 1), repeat=len(f.factors)):
        d = 1
        for (p, _), take in zip(f.factors, picks):
            if take:
                d *= p
        out.append(d)
    return sorted(out)


def von_mangoldt(n: int) -> float:
    """log p when n = p**k with k >= 1, else 0.0."""
    if n < 1:
        raise ValueError(f"von_mangoldt needs n >= 1, got {n}")
    f = factor(n)
    if len(f.factors) == 1:
        return math.log(f.factors[0][0])
    return 0.0


# --------------------------------------------------------------------------
# Sieves


def _base_sieve(limit: int) -> np.ndarray:
    """Plain Eratosthenes for small limits; returns primes <= limit."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mark = np.ones(limit + 1, dtype=bool)
    mark[:2] = False
    mark[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if mark[p]:
            mark[p * p :: 2 * p] = False
    return np.flatnonzero(mark).astype(np.int64)


def iter_prime_segments(lo: int, hi: int, segment: int = 1 << 21) -> Iterator[np.ndarray]:
    """Yield ascending numpy arrays of the primes in [lo, hi], one per segment.

    Only odd numbers are stored, so each segment costs ``segment // 2`` bytes.
    """
    lo = max(lo, 2)
    if hi < lo:
        return
    if lo <= 2:
        yield np.array([2], dtype=np.int64)
        lo = 3
    if hi < lo:
        return
    base = _base_sieve(math.isqrt(hi))[1:]  # odd base primes
    start = lo | 1  # first odd >= lo
    while start <= hi:
        stop = min(start + segment, hi + 1)  # exclusive
        count = (stop - start + 1) // 2
        mark = np.ones(count, dtype=bool)
        for p in base:
            p = int(p)
            pp = p * p
            if pp >= stop:
                break
            first = max(pp, (start + p - 1) // p * p)
            if first % 2 == 0:
                first += p
            if first < stop:
                mark[(first - start) // 2 :: p] = False
        primes = start + 2 * np.flatnonzero(mark).astype(np.int64)
        if primes.size:
            yield primes
        start = stop if stop % 2 else stop + 1


def prime_sieve(limit: int, max_limit: int = MAX_SIEVE_LIMIT) -> np.ndarray:
    """All primes <= limit, ascending, via a segmented sieve."""
    if limit > max_limit:
        raise BudgetExceeded(f"sieve limit {limit} exceeds budget {max_limit}")
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    if limit < 1 << 22:
        return _base_sieve(limit)
    parts = list(iter_prime_segments(2, limit))
    return np.concatenate(parts)


def primes_between(lo: int, hi: int) -> np.ndarray:
    """Primes in the closed interval [lo, hi]."""
    parts = list(iter_prime_segments(lo, hi))
    if not parts:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(parts)


def omega_sieve(limit: int) -> np.ndarray:
    """Array ``w`` with ``w[n] = omega(n)`` for 0 <= n <= limit (w[0] = 0)."""
    if limit > max(MAX_SIEVE_LIMIT // 10, 1):
        raise BudgetExceeded(f"omega sieve limit {limit} too large")
    w = np.zeros(limit + 1, dtype=np.int8)
    for p in prime_sieve(limit):
        w[p::p] += 1
    return w


def mangoldt_table(limit: int) -> np.ndarray:
    """Float array ``lam`` with ``lam[n] = Lambda(n)`` for n <= limit."""
    lam = np.zeros(limit + 1, dtype=np.float64)
    if limit < 2:
        return lam
    primes = prime_sieve(limit)
    lam[primes] = np.log(primes.astype(np.float64))
    for p in primes[: np.searchsorted(primes, math.isqrt(limit), side="right")]:
        p = int(p)
        pk = p * p
        logp = math.log(p)
        while pk <= limit:
            lam[pk] = logp
            pk *= p
    return lam


def prime_powers(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Ascending prime powers n <= limit and their Lambda(n) values."""
    lam = mangoldt_table(limit)
    n = np.flatnonzero(lam)
    return n, lam[n]


# --------------------------------------------------------------------------
# omega statistics


@dataclass(frozen=True)
class OmegaStatsRow:
    x: int
    mean_omega: float
    predicted: float
    deviation: float


def omega_average(x: int) -> OmegaStatsRow:
    """Exact mean of omega(n) over 1 <= n <= x against log log x + B1."""
    if x < 3:
        raise ValueError("omega_average needs x >= 3 so that log log x is defined")
    w = omega_sieve(x)
    mean = int(w.sum(dtype=np.int64)) / x
    predicted = math.log(math.log(x)) + MERTENS_B1
    return OmegaStatsRow(x, mean, predicted, mean - predicted)


def omega_extremal_ratio(limit: int) -> tuple[int, float]:
    """Max of omega(n) * log log n / log n over 3 <= n <= limit.

    Returns ``(argmax, value)``. This measures how close omega(n) gets to its
    extremal order log n / log log n.
    """
    w = omega_sieve(limit)[3:].astype(np.float64)
    n = np.arange(3, limit + 1, dtype=np.float64)
    logn = np.log(n)
    ratio = w * np.log(logn) / logn
    i = int(np.argmax(ratio))
    return i + 3, float(ratio[i])
