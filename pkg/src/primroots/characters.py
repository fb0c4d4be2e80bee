"""Multiplicative structure modulo a prime.

Orders, discrete logarithms, Dirichlet characters of prescribed order,
searches for the least primitive root / prime primitive root / quadratic
nonresidue, and two independent evaluations of the primitive-root
indicator: one through Moebius-weighted character sums and one through a
direct order test.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .arithmetic import (
    FactoredInteger,
    divisors,
    euler_phi,
    factor,
    is_prime,
    mobius,
    prime_sieve,
    squarefree_divisors,
)
from .errors import NumericalDrift, SearchCapExceeded

# Below this size a full discrete-log table is built once per modulus.
LOG_TABLE_LIMIT = 1 << 20
DRIFT_TOL = 1e-9
DEFAULT_SEARCH_CAP = 10**6


@dataclass(frozen=True)
class PrimeModulus:
    """A certified odd prime ``p`` with the factorization of ``p - 1`` and
    its least primitive root ``tau``.

    Build one with :meth:`of`; the bare constructor trusts its arguments
    apart from cheap consistency checks.
    """

    p: int
    pm1: FactoredInteger
    tau: int

    def __post_init__(self):
        if self.p < 3:
            raise ValueError(f"PrimeModulus needs an odd prime, got {self.p}")
        if self.pm1.n != self.p - 1:
            raise ValueError(f"pm1 factors {self.pm1.n}, expected {self.p - 1}")
        if not 1 <= self.tau < self.p:
            raise ValueError(f"tau={self.tau} out of range")

    @classmethod
    def of(cls, p: int, pm1: FactoredInteger | None = None) -> "PrimeModulus":
        p = int(p)
        if p < 3 or not is_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        if pm1 is None:
            pm1 = factor(p - 1)
        return cls(p, pm1, least_primitive_root(p, pm1))

    @property
    def q(self) -> int:
        """Order of the unit group, p - 1."""
        return self.p - 1


def _modulus(m: PrimeModulus | int) -> PrimeModulus:
    return m if isinstance(m, PrimeModulus) else PrimeModulus.of(m)


def _unit(u: int, p: int) -> int:
    r = u % p
    if r == 0:
        raise ValueError(f"{u} is not a unit modulo {p}")
    return r


def is_primitive_root(u: int, p: int, pm1: FactoredInteger) -> bool:
    """Test u^((p-1)/r) != 1 for every prime r | p - 1."""
    u %= p
    if u == 0:
        return False
    q = p - 1
    for r, _ in pm1.factors:
        if pow(u, q // r, p) == 1:
            return False
    return True


def multiplicative_order(u: int, m: PrimeModulus | int) -> int:
    """Exact order of u modulo p, found by stripping prime factors of p - 1."""
    m = _modulus(m)
    p = m.p
    u = _unit(u, p)
    order = m.q
    for r, e in m.pm1.factors:
        order //= r**e
        x = pow(u, order, p)
        while x != 1:
            x = pow(x, r, p)
            order *= r
    return order


def _prime_and_pm1(p, pm1):
    if isinstance(p, PrimeModulus):
        return p.p, p.pm1
    return int(p), pm1


def least_primitive_root(p: int | PrimeModulus, pm1: FactoredInteger | None = None) -> int:
    """Smallest g >= 2 (g = 1 only for p = 2) generating (Z/pZ)^*."""
    if isinstance(p, PrimeModulus):
        return p.tau
    if p == 2:
        return 1
    if pm1 is None:
        pm1 = factor(p - 1)
    g = 2
    while not is_primitive_root(g, p, pm1):
        g += 1
    return g


@lru_cache(maxsize=8)
def _primes_below(limit: int) -> tuple[int, ...]:
    return tuple(int(q) for q in prime_sieve(limit))


def least_prime_primitive_root(
    p: int | PrimeModulus, pm1: FactoredInteger | None = None, cap: int | None = None
) -> int:
    """Smallest prime q that is a primitive root modulo p.

    The candidate primes are scanned in ascending order up to ``cap``
    (default ``max(10**6, p)``); running out raises SearchCapExceeded.
    """
    p, pm1 = _prime_and_pm1(p, pm1)
    if pm1 is None:
        pm1 = factor(p - 1)
    if cap is None:
        cap = max(DEFAULT_SEARCH_CAP, p)
    # Scan a short prime list first; the answer is almost always tiny.
    for limit in (1 << 12, cap):
        limit = min(limit, cap)
        for q in _primes_below(limit):
            if q != p and is_primitive_root(q, p, pm1):
                return q
        if limit >= cap:
            break
    raise SearchCapExceeded(f"no prime primitive root of {p} below {cap}")


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) for an odd prime p via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def least_quadratic_nonresidue(p: int | PrimeModulus) -> int:
    """Smallest n >= 2 with (n/p) = -1. It is always prime."""
    p, _ = _prime_and_pm1(p, None)
    if p < 3:
        raise ValueError("least quadratic nonresidue needs an odd prime")
    e = (p - 1) // 2
    n = 2
    while pow(n, e, p) != p - 1:
        n += 1
    return n


# --------------------------------------------------------------------------
# discrete logarithms


@lru_cache(maxsize=64)
def _log_table(p: int, tau: int) -> np.ndarray:
    table = np.zeros(p, dtype=np.int64)
    x = 1
    for v in range(p - 1):
        table[x] = v
        x = x * tau % p
    return table


def bsgs_log(u: int, tau: int, p: int) -> int:
    """Baby-step giant-step: v in [0, p-1) with tau^v = u (mod p)."""
    u = _unit(u, p)
    n = p - 1
    s = math.isqrt(n - 1) + 1 if n > 1 else 1
    baby = {}
    x = 1
    for j in range(s):
        baby.setdefault(x, j)
        x = x * tau % p
    giant = pow(tau, -s, p)
    y = u
    for i in range(s + 1):
        j = baby.get(y)
        if j is not None:
            return (i * s + j) % n
        y = y * giant % p
    raise ValueError(f"{u} is not a power of {tau} modulo {p}")


def discrete_log(u: int, m: PrimeModulus | int) -> int:
    """log_tau(u) in [0, p - 1) with tau the least primitive root."""
    m = _modulus(m)
    u = _unit(u, m.p)
    if m.p < LOG_TABLE_LIMIT:
        return int(_log_table(m.p, m.tau)[u])
    return bsgs_log(u, m.tau, m.p)


# --------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    """Dirichlet character chi(u) = exp(2 pi i k log(u) / d) modulo p.

    ``order`` is the exact order d (a divisor of p - 1) and ``index`` is k
    with gcd(k, d) = 1. The principal character has d = k = 1.
    """

    modulus: PrimeModulus
    order: int
    index: int

    def __post_init__(self):
        d, k = self.order, self.index
        if d < 1 or self.modulus.q % d:
            raise ValueError(f"order {d} does not divide {self.modulus.q}")
        if not 1 <= k <= d or math.gcd(k, d) != 1:
            raise ValueError(f"index {k} does not give a character of order {d}")

    @property
    def is_principal(self) -> bool:
        return self.order == 1

    def __call__(self, u: int) -> complex:
        return character_eval(self, u)

    def power(self, e: int) -> "Character":
        """chi**e, reduced to (exact order, coprime index) form."""
        d, k = self.order, self.index * e % self.order
        if k == 0:
            return Character(self.modulus, 1, 1)
        g = math.gcd(k, d)
        return Character(self.modulus, d // g, k // g)


def character_eval(chi: Character, u: int) -> complex:
    p = chi.modulus.p
    if u % p == 0:
        return 0j
    if chi.order == 1:
        return 1 + 0j
    v = discrete_log(u, chi.modulus) % chi.order
    return cmath.exp(2j * math.pi * chi.index * v / chi.order)


def characters_of_order(m: PrimeModulus | int, d: int) -> list[Character]:
    """The phi(d) characters of exact order d modulo p."""
    m = _modulus(m)
    if d < 1 or m.q % d:
        raise ValueError(f"{d} does not divide p - 1 = {m.q}")
    return [Character(m, d, k) for k in _coprime_indices(d)]


def all_characters(m: PrimeModulus | int) -> list[Character]:
    m = _modulus(m)
    return [chi for d in divisors(m.pm1) for chi in characters_of_order(m, d)]


@lru_cache(maxsize=4096)
def _coprime_indices(d: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, d + 1) if math.gcd(k, d) == 1)


def order_character_sum(d: int, v: int) -> complex:
    """Sum of chi(u) over the characters of exact order d, given v = log u.

    Equal to [sum over characters_of_order] but vectorised over k.
    """
    if d == 1:
        return 1 + 0j
    ks = np.asarray(_coprime_indices(d), dtype=np.float64)
    return complex(np.exp(2j * np.pi * ks * (v % d) / d).sum())


@lru_cache(maxsize=4096)
def _psi_weights(pm1: FactoredInteger) -> tuple[tuple[int, Fraction], ...]:
    """(d, phi(q)/q * mu(d)/phi(d)) for the squarefree divisors d of q."""
    q = pm1.n
    density = Fraction(euler_phi(pm1), q)
    return tuple(
        (d, density * Fraction(mobius(d), euler_phi(d)))
        for d in squarefree_divisors(pm1)
    )


def _snap(z: complex, targets, tol: float, what: str) -> float:
    if abs(z.imag) > tol:
        raise NumericalDrift(f"{what}: imaginary residue {z.imag:.3e}")
    x = z.real
    if targets is not None and min(abs(x - t) for t in targets) > tol:
        raise NumericalDrift(f"{what}: {x!r} is not within {tol} of {targets}")
    return x


def psi_char_sum(u: int, m: PrimeModulus | int, tol: float = DRIFT_TOL) -> float:
    """Primitive-root indicator as a Moebius-weighted sum of characters.

    Only squarefree d contribute since mu(d) = 0 otherwise. The weights
    stay exact Fractions until the final multiply.
    """
    m = _modulus(m)
    v = discrete_log(u, m)
    total = 0j
    for d, w in _psi_weights(m.pm1):
        total += float(w) * order_character_sum(d, v)
    return _snap(total, (0.0, 1.0), tol, f"psi_char_sum({u}, {m.p})")


def psi_direct(u: int, m: PrimeModulus | int) -> int:
    """1 if u has order p - 1, else 0."""
    m = _modulus(m)
    return int(multiplicative_order(u, m) == m.q)


def psi_table(m: PrimeModulus | int) -> list[tuple[int, float, int]]:
    """``(u, psi_char_sum(u), psi_direct(u))`` for every unit u."""
    m = _modulus(m)
    return [(u, psi_char_sum(u, m), psi_direct(u, m)) for u in range(1, m.p)]


class Orthogonality(NamedTuple):
    sum_all: complex
    expected: float


def character_orthogonality_check(m: PrimeModulus | int, u: int) -> Orthogonality:
    """Sum of chi(u) over the whole character group, and its predicted value
    (p - 1 when u = 1 mod p, else 0)."""
    m = _modulus(m)
    v = discrete_log(u, m)
    total = sum((order_character_sum(d, v) for d in divisors(m.pm1)), 0j)
    expected = float(m.q) if u % m.p == 1 else 0.0
    return Orthogonality(total, expected)


def max_order_character_sum(m: PrimeModulus | int, u: int) -> complex:
    """Sum of chi(u) over characters of order exactly p - 1 only.

    This is a Ramanujan sum c_{p-1}(log u), not the full orthogonality
    sum; it is kept as a diagnostic and is not asserted anywhere.
    """
    m = _modulus(m)
    return order_character_sum(m.q, discrete_log(u, m))


def shifted_character_sum(chi: Character, u: int) -> complex:
    """Diagnostic: sum of chi(a * u) for 1 <= a < p - 1."""
    p = chi.modulus.p
    return sum((character_eval(chi, a * u) for a in range(1, p - 1)), 0j)
