"""Truncated Dirichlet series built from the von Mangoldt function and the
primitive-root indicator.

The central object is the finite sum

    S(p, x, s) = sum_{n <= x} Psi(n) Lambda(n) / n**s

where Psi marks primitive roots modulo p. Expanding Psi into characters
splits S into a principal piece (close to kappa2(p) at s = 2) and a
nonprincipal piece that shrinks like 2**omega(p-1) / x**(s-1).
:func:`decomposition_check` evaluates S both ways and compares.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arithmetic import EULER_GAMMA, euler_phi, mobius, prime_powers, squarefree_divisors
from .characters import (
    DRIFT_TOL,
    Character,
    PrimeModulus,
    order_character_sum,
    character_eval,
    discrete_log,
    psi_direct,
)
from .errors import DecompositionMismatch, NumericalDrift

GLAISHER_A = 1.2824271291006226368753425688697917

DECOMPOSITION_TOL = 1e-9


def zeta_log_derivative_at_2() -> float:
    """-zeta'(2)/zeta(2) = sum Lambda(n)/n**2 = 0.569960993094...

    Uses zeta'(2)/zeta(2) = gamma + log(2 pi) - 12 log A with A the
    Glaisher-Kinkelin constant.
    """
    return 12.0 * math.log(GLAISHER_A) - EULER_GAMMA - math.log(2.0 * math.pi)


def _prime_of(m) -> int:
    return m.p if isinstance(m, PrimeModulus) else int(m)


def kappa2(m: PrimeModulus | int) -> float:
    """-zeta'(2)/zeta(2) minus the prime-power terms at p:
    sum_{k>=1} log p / p**(2k) = log p / (p**2 - 1)."""
    p = _prime_of(m)
    return zeta_log_derivative_at_2() - math.log(p) / (p * p - 1)


def _check_args(x, s):
    if s <= 1:
        raise ValueError(f"s must exceed 1, got {s}")


@lru_cache(maxsize=8)
def _prime_power_terms(x: int):
    if x < 2:
        return np.zeros(0, dtype=np.int64), np.zeros(0)
    return prime_powers(x)


def _terms(p: int, x: float, s: float):
    """(n, Lambda(n) / n**s) over prime powers n <= x coprime to p."""
    n, lam = _prime_power_terms(int(math.floor(x)))
    keep = n % p != 0
    n = n[keep]
    return n, lam[keep] / n.astype(np.float64) ** s


def principal_partial_sum(m: PrimeModulus | int, x: float, s: float = 2.0) -> float:
    """sum_{n <= x, p does not divide n} Lambda(n) / n**s."""
    _check_args(x, s)
    p = _prime_of(m)
    _, w = _terms(p, x, s)
    return math.fsum(w)


def weighted_psi_lambda_sum(m: PrimeModulus | int, x: float, s: float = 2.0) -> float:
    """sum_{n <= x} Psi(n) Lambda(n) / n**s with Psi from the direct order test."""
    _check_args(x, s)
    m = m if isinstance(m, PrimeModulus) else PrimeModulus.of(m)
    n, w = _terms(m.p, x, s)
    return math.fsum(wi for ni, wi in zip(n.tolist(), w.tolist()) if psi_direct(ni, m))


def _residue_weights(p: int, x: float, s: float) -> dict[int, list[float]]:
    n, w = _terms(p, x, s)
    by_residue: dict[int, list[float]] = defaultdict(list)
    for r, wi in zip((n % p).tolist(), w.tolist()):
        by_residue[r].append(wi)
    return by_residue


def nonprincipal_partial_sum(
    m: PrimeModulus | int, x: float, s: float = 2.0, tol: float = DRIFT_TOL
) -> float:
    """sum_{n<=x} Lambda(n)/n**s * sum_{1<d|p-1} mu(d)/phi(d) sum_{ord chi=d} chi(n).

    Terms are grouped by residue class so each character is evaluated
    once per class. The phi(p-1)/(p-1) prefactor is not applied.
    """
    _check_args(x, s)
    m = m if isinstance(m, PrimeModulus) else PrimeModulus.of(m)
    weights = [(d, mobius(d) / euler_phi(d)) for d in squarefree_divisors(m.pm1) if d > 1]
    re_parts, im_parts = [], []
    for r, ws in _residue_weights(m.p, x, s).items():
        v = discrete_log(r, m)
        coeff = sum((c * order_character_sum(d, v) for d, c in weights), 0j)
        mass = math.fsum(ws)
        re_parts.append(mass * coeff.real)
        im_parts.append(mass * coeff.imag)
    imag = math.fsum(im_parts)
    if abs(imag) > tol:
        raise NumericalDrift(f"nonprincipal sum p={m.p} x={x}: imaginary residue {imag:.3e}")
    return math.fsum(re_parts)


def chebyshev_psi_chi(chi: Character, x: float) -> complex:
    """psi_chi(x) = sum_{n <= x} chi(n) Lambda(n)."""
    if x < 2:
        return 0j
    p = chi.modulus.p
    n, lam = _prime_power_terms(int(math.floor(x)))
    total = defaultdict(list)
    for r, li in zip((n % p).tolist(), lam.tolist()):
        if r:
            total[r].append(li)
    re, im = [], []
    for r, ls in total.items():
        z = character_eval(chi, r) * math.fsum(ls)
        re.append(z.real)
        im.append(z.imag)
    return complex(math.fsum(re), math.fsum(im))


@dataclass(frozen=True)
class PartialSumReport:
    """Both evaluations of sum_{n<=x} Psi(n) Lambda(n)/n**s at (p, x, s).

    ``principal_part`` and ``nonprincipal_part`` already carry the
    phi(p-1)/(p-1) density factor, so they add up to ``weighted_total``.
    ``principal_raw`` and ``nonprincipal_raw`` are the unscaled sums.
    ``tail_estimate`` is log(x) / x**(s-1), the size of the truncation
    error of the principal sum; ``kappa2_gap`` is principal_raw - kappa2
    (only meaningful at s = 2).
    """

    p: int
    x: float
    s: float
    weighted_total: float
    principal_part: float
    nonprincipal_part: float
    kappa2: float
    tail_estimate: float
    density: float
    principal_raw: float
    nonprincipal_raw: float
    kappa2_gap: float
    mismatch: float


def decomposition_check(
    m: PrimeModulus | int, x: float, s: float = 2.0, tol: float = DECOMPOSITION_TOL
) -> PartialSumReport:
    """Evaluate the weighted sum directly and through its character
    expansion; raise DecompositionMismatch if they differ by more than tol."""
    _check_args(x, s)
    m = m if isinstance(m, PrimeModulus) else PrimeModulus.of(m)
    density = euler_phi(m.pm1) / m.q
    direct = weighted_psi_lambda_sum(m, x, s)
    principal = principal_partial_sum(m, x, s)
    nonprincipal = nonprincipal_partial_sum(m, x, s)
    split = density * principal + density * nonprincipal
    gap = abs(direct - split)
    if gap > tol:
        raise DecompositionMismatch(
            f"p={m.p} x={x} s={s}: direct {direct!r} vs decomposed {split!r}"
        )
    k2 = kappa2(m)
    tail = math.log(x) / x ** (s - 1) if x > 1 else 0.0
    return PartialSumReport(
        p=m.p,
        x=x,
        s=s,
        weighted_total=direct,
        principal_part=density * principal,
        nonprincipal_part=density * nonprincipal,
        kappa2=k2,
        tail_estimate=tail,
        density=density,
        principal_raw=principal,
        nonprincipal_raw=nonprincipal,
        kappa2_gap=principal - k2,
        mismatch=gap,
    )
