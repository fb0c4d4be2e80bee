import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from primroots import oracles
from primroots.arithmetic import divisors, euler_phi, prime_sieve
from primroots.characters import (
    Character,
    PrimeModulus,
    all_characters,
    bsgs_log,
    character_eval,
    character_orthogonality_check,
    characters_of_order,
    discrete_log,
    least_prime_primitive_root,
    least_primitive_root,
    least_quadratic_nonresidue,
    legendre_symbol,
    max_order_character_sum,
    multiplicative_order,
    psi_char_sum,
    psi_direct,
    psi_table,
    shifted_character_sum,
)
from primroots.errors import NumericalDrift, SearchCapExceeded

ODD_PRIMES_500 = prime_sieve(500).tolist()[1:]
ODD_PRIMES_1000 = prime_sieve(1000).tolist()[1:]


@pytest.fixture(scope="module")
def m7():
    return PrimeModulus.of(7)


@pytest.fixture(scope="module")
def m41():
    return PrimeModulus.of(41)


def test_prime_modulus_construction(m7):
    assert m7.p == 7 and m7.tau == 3 and m7.pm1.n == 6
    with pytest.raises(ValueError):
        PrimeModulus.of(9)
    with pytest.raises(ValueError):
        PrimeModulus.of(2)


def test_prime_modulus_tau_is_minimal():
    for p in ODD_PRIMES_500:
        m = PrimeModulus.of(p)
        assert oracles.order_by_powers(m.tau, p) == p - 1
        assert all(oracles.order_by_powers(u, p) != p - 1 for u in range(1, m.tau))


# -- orders and roots -----------------------------------------------------------

def test_order_examples(m7, m41):
    assert multiplicative_order(2, m7) == 3
    assert multiplicative_order(1, m7) == 1
    assert multiplicative_order(6, m41) == 40
    assert oracles.order_by_powers(6, 41) == 40
    with pytest.raises(ValueError):
        multiplicative_order(0, m7)
    with pytest.raises(ValueError):
        multiplicative_order(14, m7)


def test_orders_match_power_walk():
    for p in ODD_PRIMES_500[:60]:
        m = PrimeModulus.of(p)
        for u, k in oracles.orders_table(p).items():
            assert multiplicative_order(u, m) == k


@pytest.mark.parametrize("p,g,gs,n", [(3, 2, 2, 2), (7, 3, 3, 3), (41, 6, 7, 3)])
def test_root_examples(p, g, gs, n):
    assert least_primitive_root(p) == g == oracles.least_primitive_root_enum(p)
    assert least_prime_primitive_root(p) == gs == oracles.least_prime_primitive_root_enum(p)
    assert least_quadratic_nonresidue(p) == n == oracles.least_nonresidue_by_squares(p)


def test_prime_root_cap():
    # g*(41) = 7, so a cap below 7 cannot find it
    with pytest.raises(SearchCapExceeded):
        least_prime_primitive_root(41, cap=6)
    assert least_prime_primitive_root(41, cap=7) == 7


def test_roots_of_a_large_prime():
    from sympy.ntheory import primitive_root

    p = 1_000_000_007
    assert least_primitive_root(p) == primitive_root(p) == 5
    assert least_prime_primitive_root(p) == 5


def test_chain_small_primes():
    for p in ODD_PRIMES_1000:
        n, g, gs = least_quadratic_nonresidue(p), least_primitive_root(p), least_prime_primitive_root(p)
        assert n <= g <= gs


# -- Legendre symbol --------------------------------------------------------------

def test_legendre_examples():
    assert legendre_symbol(3, 7) == -1 == oracles.legendre_by_squares(3, 7)
    assert legendre_symbol(4, 7) == 1
    assert legendre_symbol(7, 7) == 0


def test_legendre_matches_squares():
    for p in ODD_PRIMES_500[:40]:
        for a in range(-p, 2 * p):
            assert legendre_symbol(a, p) == oracles.legendre_by_squares(a, p)


# -- discrete logs ----------------------------------------------------------------

def test_discrete_log_examples(m7):
    assert discrete_log(m7.tau, m7) == 1
    assert discrete_log(1, m7) == 0
    assert discrete_log(2, m7) == 2
    with pytest.raises(ValueError):
        discrete_log(7, m7)


def test_table_and_bsgs_agree():
    for p in ODD_PRIMES_500[::7]:
        m = PrimeModulus.of(p)
        for u in range(1, p):
            v = discrete_log(u, m)
            assert pow(m.tau, v, p) == u
            assert bsgs_log(u, m.tau, p) == v


def test_bsgs_on_large_prime():
    m = PrimeModulus.of(1_000_003)  # above the log-table limit
    for u in (2, 3, 999_999, 123_456):
        v = discrete_log(u, m)
        assert 0 <= v < m.q and pow(m.tau, v, m.p) == u


# -- characters -------------------------------------------------------------------

def test_character_examples(m7):
    chi0 = characters_of_order(m7, 1)[0]
    assert chi0(5) == 1
    quad = Character(m7, 2, 1)
    assert character_eval(quad, 7) == 0
    assert character_eval(quad, 3) == pytest.approx(-1, abs=1e-12)
    assert character_eval(quad, 3).real == pytest.approx(legendre_symbol(3, 7))


def test_characters_of_order_counts(m7):
    assert len(characters_of_order(m7, 2)) == 1
    assert len(characters_of_order(m7, 6)) == 2
    cubic = characters_of_order(m7, 3)
    assert len(cubic) == 2
    for chi in cubic:
        for u in range(1, 7):
            assert character_eval(chi, u) ** 3 == pytest.approx(1, abs=1e-12)
    with pytest.raises(ValueError):
        characters_of_order(m7, 4)


def test_character_rejects_bad_index(m7):
    with pytest.raises(ValueError):
        Character(m7, 6, 2)
    with pytest.raises(ValueError):
        Character(m7, 5, 1)


def test_values_are_roots_of_unity():
    for p in (11, 13, 31):
        m = PrimeModulus.of(p)
        for chi in all_characters(m):
            for u in range(1, p):
                z = character_eval(chi, u)
                assert abs(z) == pytest.approx(1, abs=1e-12)
                assert z**chi.order == pytest.approx(1, abs=1e-9)
            assert character_eval(chi, p) == 0
            assert character_eval(chi, 2 * p) == 0


def test_character_group_size():
    for p in ODD_PRIMES_500[:30]:
        assert len(all_characters(p)) == p - 1


def test_multiplicativity_random_characters():
    rng = random.Random(1234)
    for _ in range(100):
        p = rng.choice(ODD_PRIMES_500)
        m = PrimeModulus.of(p)
        d = rng.choice(divisors(m.pm1))
        chi = rng.choice(characters_of_order(m, d))
        for _ in range(20):
            u, v = rng.randrange(1, p), rng.randrange(1, p)
            assert character_eval(chi, u * v) == pytest.approx(
                character_eval(chi, u) * character_eval(chi, v), abs=1e-12
            )


def test_exact_order_of_characters():
    for p in (13, 31, 61, 181):
        m = PrimeModulus.of(p)
        for chi in all_characters(m):
            d = chi.order
            assert chi.power(d).is_principal
            for e in divisors(d):
                if e < d:
                    assert not chi.power(e).is_principal
                    # pointwise check that chi^e differs from chi_0 somewhere
                    assert any(abs(character_eval(chi, u) ** e - 1) > 1e-9 for u in range(1, p))


def test_power_matches_pointwise():
    m = PrimeModulus.of(31)
    for chi in all_characters(m):
        for e in (2, 3, 5, 7):
            che = chi.power(e)
            for u in range(1, 31):
                assert character_eval(che, u) == pytest.approx(character_eval(chi, u) ** e, abs=1e-9)


def test_quadratic_character_is_legendre():
    for p in ODD_PRIMES_1000:
        m = PrimeModulus.of(p)
        quad = characters_of_order(m, 2)[0]
        for u in range(1, p):
            assert character_eval(quad, u).real == pytest.approx(legendre_symbol(u, p), abs=1e-12)


# -- orthogonality ----------------------------------------------------------------

def test_orthogonality_examples(m7):
    s, e = character_orthogonality_check(m7, 1)
    assert s == pytest.approx(6) and e == 6
    s, e = character_orthogonality_check(m7, 3)
    assert abs(s) < 1e-9 and e == 0
    s, e = character_orthogonality_check(5, 2)
    assert abs(s) < 1e-9 and e == 0


def test_orthogonality_against_explicit_character_list():
    # sum the Character objects one by one: independent of the vectorised path
    for p in (5, 7, 11, 13, 29):
        m = PrimeModulus.of(p)
        chars = all_characters(m)
        for u in range(1, p):
            explicit = sum(character_eval(chi, u) for chi in chars)
            s, e = character_orthogonality_check(m, u)
            assert s == pytest.approx(explicit, abs=1e-9)
            assert abs(s - e) < 1e-9


def test_full_group_orthogonality():
    for p in ODD_PRIMES_500:
        m = PrimeModulus.of(p)
        for u in range(1, p):
            s, e = character_orthogonality_check(m, u)
            assert abs(s - e) < 1e-9


def test_max_order_variant_is_a_ramanujan_sum():
    # the sum over characters of order exactly p - 1 is c_{p-1}(log u) = mu(q/g) phi(q)/phi(q/g)
    from primroots.arithmetic import mobius

    for p in (7, 11, 13, 31):
        m = PrimeModulus.of(p)
        q = p - 1
        for u in range(1, p):
            g = math.gcd(q, discrete_log(u, m))
            expected = mobius(q // g) * euler_phi(q) / euler_phi(q // g)
            assert max_order_character_sum(m, u) == pytest.approx(expected, abs=1e-9)


def test_shifted_sum_diagnostic_runs(m7):
    z = shifted_character_sum(Character(m7, 2, 1), 3)
    assert isinstance(z, complex)


# -- characteristic function --------------------------------------------------------

def test_psi_examples(m7, m41):
    assert psi_char_sum(3, m7) == pytest.approx(1, abs=1e-9)
    assert psi_char_sum(1, m7) == pytest.approx(0, abs=1e-9)
    assert psi_char_sum(2, m7) == pytest.approx(0, abs=1e-9)
    assert psi_direct(3, m7) == 1
    assert psi_direct(1, m7) == 0
    assert psi_direct(6, m41) == 1


def test_psi_drift_is_detected():
    # with a zero tolerance, rounding noise in the character sums must trip the check
    m = PrimeModulus.of(41)
    raised = 0
    for u in range(1, 41):
        try:
            psi_char_sum(u, m, tol=0.0)
        except NumericalDrift:
            raised += 1
    assert raised > 0


def test_primitive_root_count():
    for p in ODD_PRIMES_1000:
        m = PrimeModulus.of(p)
        assert sum(psi_direct(u, m) for u in range(1, p)) == euler_phi(p - 1)


def test_psi_table_rows(m7):
    rows = psi_table(m7)
    assert [(u, d) for u, _, d in rows] == [(1, 0), (2, 0), (3, 1), (4, 0), (5, 1), (6, 0)]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ODD_PRIMES_1000), st.integers(min_value=1))
def test_psi_char_sum_matches_direct(p, u):
    u = u % p or 1
    m = PrimeModulus.of(p)
    v = psi_char_sum(u, m)
    assert round(v) == psi_direct(u, m)
    assert abs(v - psi_direct(u, m)) < 1e-9


def test_root_functions_accept_a_modulus(m41):
    assert least_primitive_root(m41) == 6
    assert least_prime_primitive_root(m41) == 7
    assert least_quadratic_nonresidue(m41) == 3
