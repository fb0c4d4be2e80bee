import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from primroots import oracles
from primroots.arithmetic import (
    EULER_GAMMA,
    MERTENS_B1,
    FactoredInteger,
    divisors,
    euler_phi,
    factor,
    is_prime,
    iter_prime_segments,
    mangoldt_table,
    mobius,
    omega,
    omega_average,
    omega_extremal_ratio,
    omega_sieve,
    prime_sieve,
    primes_between,
    squarefree_divisors,
    von_mangoldt,
)
from primroots.errors import BudgetExceeded


# -- is_prime -----------------------------------------------------------------

def test_is_prime_small_cases():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(0)


def test_is_prime_agrees_with_trial_division():
    for n in range(20000):
        assert is_prime(n) == oracles.is_prime_trial(n), n


# Mersenne exponents below 64 (published table); 2**p - 1 is prime exactly for these.
MERSENNE_EXPONENTS = {2, 3, 5, 7, 13, 17, 19, 31, 61}


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61])
def test_mersenne_table(p):
    assert is_prime(2**p - 1) == (p in MERSENNE_EXPONENTS)


def test_is_prime_64bit_edges():
    assert is_prime(2**64 - 59)  # largest 64-bit prime
    assert not is_prime(2**64 - 1)
    # strong pseudoprime to every base 2..23; needs the longer witness list
    assert not is_prime(3825123056546413051)


# -- factor -------------------------------------------------------------------

def test_factor_examples():
    assert factor(12).factors == ((2, 2), (3, 1))
    assert factor(1).factors == ()
    assert factor(2310).factors == ((2, 1), (3, 1), (5, 1), (7, 1), (11, 1))
    assert factor(2310).factors == tuple(oracles.factor_trial(2310))


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor(0)


def test_factor_large_semiprimes():
    p, q = 4294967291, 4294967279  # two primes just below 2**32
    assert factor(p * q).factors == ((q, 1), (p, 1))
    f = factor(2**64 - 1)
    assert f.primes == (3, 5, 17, 257, 641, 65537, 6700417)


def test_factored_integer_invariants():
    with pytest.raises(ValueError):
        FactoredInteger(12, ((2, 1), (3, 1)))
    with pytest.raises(ValueError):
        FactoredInteger(12, ((3, 1), (2, 2)))
    with pytest.raises(ValueError):
        FactoredInteger(8, ((4, 1), (2, 1)))


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=1, max_value=2**64 - 1))
def test_factor_reassembles(n):
    f = factor(n)
    assert math.prod(p**e for p, e in f.factors) == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_prime(p) for p in f.primes)


# -- multiplicative functions ---------------------------------------------------

def _brute(n):
    divs = [d for d in range(1, n + 1) if n % d == 0]
    prime_divs = [d for d in divs if oracles.is_prime_trial(d)]
    sq = any(n % (p * p) == 0 for p in prime_divs)
    mu = 0 if sq else (-1) ** len(prime_divs)
    phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
    return mu, phi, len(prime_divs), divs


def test_examples_mu_phi_omega():
    assert mobius(30) == -1
    assert mobius(12) == 0
    assert mobius(1) == 1
    assert euler_phi(7) == 6
    assert euler_phi(12) == 4
    assert euler_phi(2310) == sum(1 for k in range(1, 2311) if math.gcd(k, 2310) == 1) == 480
    assert omega(12) == 2
    assert omega(1) == 0
    assert omega(2310) == 5


def test_multiplicative_functions_against_brute_force():
    for n in range(1, 1500):
        mu, phi, w, divs = _brute(n)
        f = factor(n)
        assert (mobius(f), euler_phi(f), omega(f)) == (mu, phi, w), n
        assert divisors(f) == divs


def test_reassembly_and_omega_up_to_1e5():
    w = omega_sieve(10**5)
    for n in range(1, 10**5 + 1):
        f = factor(n)
        assert math.prod(p**e for p, e in f.factors) == n
        assert omega(f) == w[n]


def test_mobius_totient_identity():
    for n in range(1, 10**4 + 1):
        f = factor(n)
        total = sum(Fraction(mobius(d), d) for d in divisors(f))
        assert n * total == euler_phi(f)


def test_mobius_sum_over_divisors():
    for n in range(1, 5000):
        s = sum(mobius(d) for d in divisors(n))
        assert s == (1 if n == 1 else 0)


def test_squarefree_divisor_count():
    for n in (1, 12, 30, 2310, 9699690):
        assert len(squarefree_divisors(n)) == 2 ** omega(n)


def test_von_mangoldt_examples():
    assert von_mangoldt(8) == pytest.approx(math.log(2), abs=0)
    assert von_mangoldt(6) == 0.0
    assert von_mangoldt(7) == math.log(7)
    assert von_mangoldt(1) == 0.0


def test_von_mangoldt_support_is_prime_powers():
    lam = mangoldt_table(5000)
    for n in range(1, 5001):
        assert (von_mangoldt(n) > 0) == (omega(n) == 1)
        assert lam[n] == pytest.approx(von_mangoldt(n), abs=1e-15)


# -- sieves ---------------------------------------------------------------------

def test_prime_sieve_examples():
    assert prime_sieve(10).tolist() == [2, 3, 5, 7]
    assert prime_sieve(2).tolist() == [2]


def test_prime_count_1e6():
    from sympy import primepi

    assert len(prime_sieve(10**6)) == int(primepi(10**6)) == 78498


def test_segmented_matches_bit_sieve():
    limit = 5 * 10**6
    bits = bytearray([1]) * (limit + 1)
    bits[0] = bits[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if bits[p]:
            bits[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    oracle = np.flatnonzero(np.frombuffer(bits, dtype=np.uint8))
    segs = np.concatenate(list(iter_prime_segments(2, limit, segment=1 << 16)))
    assert np.array_equal(segs, oracle)
    assert np.array_equal(prime_sieve(limit), oracle)


@pytest.mark.parametrize("lo,hi", [(0, 1), (24, 28), (2, 2), (3, 3), (10**6, 10**6 + 100), (999_983, 999_983)])
def test_primes_between(lo, hi):
    expected = [n for n in range(lo, hi + 1) if oracles.is_prime_trial(n)]
    assert primes_between(lo, hi).tolist() == expected


def test_sieve_budget():
    with pytest.raises(BudgetExceeded):
        prime_sieve(10**12)


# -- omega statistics -----------------------------------------------------------

def test_omega_average_small():
    # omega(1..10) = 0,1,1,1,1,2,1,1,1,2
    values = [omega(n) for n in range(1, 11)]
    assert values == [0, 1, 1, 1, 1, 2, 1, 1, 1, 2]
    assert omega_average(10).mean_omega == sum(values) / 10 == 1.1
    assert omega_average(3).mean_omega == pytest.approx(2 / 3, abs=1e-15)


def test_omega_average_1e6():
    row = omega_average(10**6)
    assert abs(row.mean_omega - (math.log(math.log(10**6)) + MERTENS_B1)) < 0.05
    assert row.deviation == row.mean_omega - row.predicted


def test_omega_average_rejects_small_x():
    with pytest.raises(ValueError):
        omega_average(2)


def test_extremal_omega_ratio_bounded():
    n, r = omega_extremal_ratio(10**6)
    assert r <= 2
    assert n == 510510  # primorial 2*3*5*7*11*13*17


# -- constants ------------------------------------------------------------------

def test_euler_gamma_from_harmonic_series():
    n = 10**6
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    # Euler-Maclaurin correction for H_n - log n
    gamma = h - math.log(n) - 1 / (2 * n) + 1 / (12 * n * n)
    assert abs(gamma - EULER_GAMMA) < 1e-12


def test_mertens_constant_from_primes():
    # B1 = gamma + sum_p (log(1 - 1/p) + 1/p); the tail beyond y is < 1/(y log y)
    primes = prime_sieve(10**6).astype(np.float64)
    s = math.fsum((np.log1p(-1 / primes) + 1 / primes).tolist())
    assert abs(EULER_GAMMA + s - MERTENS_B1) < 1e-6


def test_constants_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    assert abs(float(mpmath.mertens) - MERTENS_B1) < 1e-15
    assert abs(float(mpmath.euler) - EULER_GAMMA) < 1e-15
