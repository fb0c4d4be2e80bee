"""Verification checks behind ``primroots verify`` and the acceptance tests.

Each ``check_*`` function returns a :class:`CheckResult`. Checks defined on
a fixed set of primes only look at the part of that set inside [lo, hi]
and report SKIP when nothing is left.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import NamedTuple

from . import oracles
from .arithmetic import MERTENS_B1, omega, omega_average, primes_between
from .characters import (
    DRIFT_TOL,
    PrimeModulus,
    least_prime_primitive_root,
    least_primitive_root,
    least_quadratic_nonresidue,
    multiplicative_order,
    psi_char_sum,
    psi_direct,
)
from .errors import DecompositionMismatch, NumericalDrift
from .lseries import decomposition_check, kappa2, principal_partial_sum
from .survey import AVERAGE_NRES_LIMIT, average_nres, omega_exponent_scan, survey_range

PSI_PMAX = 1000
DECOMP_PMAX = 200
DECOMP_XS = (10, 100, 1000)
DECOMP_TOL = 1e-9
NONPRINCIPAL_C = 50.0
KAPPA_PRIMES = (3, 7, 101)
KAPPA_X = 10**5
KAPPA_C = 10.0
CASE1_LO = 10**6
CASE1_MAX_FRACTION = 0.01
NRES_LIMIT = 10**6
NRES_TOL = 0.02
OMEGA_X = 10**6
OMEGA_TOL = 0.05
OMEGA_EXPONENT_MAX = 4.0
ORACLE_PMAX = 200


class CheckResult(NamedTuple):
    number: int
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def line(self) -> str:
        return f"[{self.status}] {self.number:>2} {self.name}: {self.detail}"


def _result(number, name, passed, detail) -> CheckResult:
    return CheckResult(number, name, "PASS" if passed else "FAIL", detail)


def _skip(number, name) -> CheckResult:
    return CheckResult(number, name, "SKIP", "no primes of the criterion inside the range")


def _odd_primes(lo, hi) -> list[int]:
    return [p for p in primes_between(max(lo, 3), hi).tolist()]


def check_psi_equivalence(lo=3, hi=PSI_PMAX) -> CheckResult:
    name = "psi char-sum equals direct order test"
    primes = _odd_primes(lo, min(hi, PSI_PMAX))
    if not primes:
        return _skip(1, name)
    bad, worst, n = [], 0.0, 0
    for p in primes:
        m = PrimeModulus.of(p)
        for u in range(1, p):
            n += 1
            try:
                v = psi_char_sum(u, m, tol=DRIFT_TOL)
            except NumericalDrift:
                bad.append((p, u))
                continue
            d = psi_direct(u, m)
            worst = max(worst, abs(v - d))
            if round(v) != d or abs(v - d) >= DRIFT_TOL:
                bad.append((p, u))
    return _result(1, name, not bad,
                   f"{n} residues over {len(primes)} primes, mismatches={len(bad)}, max drift={worst:.2e}")


@dataclass
class SweepStats:
    count: int = 0
    case2_violations: int = 0
    chain_violations: int = 0
    case1_count: int = 0
    case1_failures: int = 0
    max_ratio2: float = 0.0


def sweep(lo, hi, epsilon=1.0, jobs=1, cap=None) -> SweepStats:
    st = SweepStats()
    for r in survey_range(max(lo, 3), hi, epsilon, jobs, cap=cap):
        st.count += 1
        if not r.g_star <= r.bound_case2:
            st.case2_violations += 1
        if not r.n_qr <= r.g <= r.g_star:
            st.chain_violations += 1
        st.max_ratio2 = max(st.max_ratio2, r.ratio2)
        if r.p >= CASE1_LO:
            st.case1_count += 1
            if r.g_star > r.bound_case1:
                st.case1_failures += 1
    return st


def check_case2(st: SweepStats) -> CheckResult:
    name = "g*(p) <= p^(5/ln ln p)"
    if not st.count:
        return _skip(2, name)
    return _result(2, name, st.case2_violations == 0,
                   f"{st.count} primes, violations={st.case2_violations}, max ratio={st.max_ratio2:.3g}")


def check_case1(st: SweepStats) -> CheckResult:
    name = "fraction of p >= 1e6 with g*(p) > (ln p)^(1+eps) below 1%"
    if not st.case1_count:
        return _skip(3, name)
    frac = st.case1_failures / st.case1_count
    return _result(3, name, frac < CASE1_MAX_FRACTION,
                   f"{st.case1_failures}/{st.case1_count} = {frac:.3e}")


def check_average_nres(hi=NRES_LIMIT) -> CheckResult:
    name = f"mean n(p) over odd p <= 1e6 within {NRES_TOL} of {AVERAGE_NRES_LIMIT}"
    if hi < NRES_LIMIT:
        return CheckResult(4, name, "SKIP", f"needs hi >= {NRES_LIMIT}")
    avg, count = average_nres(NRES_LIMIT)
    return _result(4, name, abs(avg - AVERAGE_NRES_LIMIT) < NRES_TOL,
                   f"mean={avg:.6f} over {count} primes, gap={avg - AVERAGE_NRES_LIMIT:+.6f}")


def check_kappa(lo=3, hi=max(KAPPA_PRIMES)) -> CheckResult:
    name = "|principal sum - kappa2(p)| <= 10 ln x / x at x = 1e5"
    ps = [p for p in KAPPA_PRIMES if lo <= p <= hi]
    if not ps:
        return _skip(5, name)
    bound = KAPPA_C * math.log(KAPPA_X) / KAPPA_X
    gaps = {p: abs(principal_partial_sum(p, KAPPA_X, 2.0) - kappa2(p)) for p in ps}
    detail = ", ".join(f"p={p} gap={g:.3e}" for p, g in gaps.items()) + f" (bound {bound:.3e})"
    return _result(5, name, all(g <= bound for g in gaps.values()), detail)


def decomposition_grid(lo=3, hi=DECOMP_PMAX):
    """PartialSumReports over primes p <= 200 in range and x in {10, 100, 1000}.

    A DecompositionMismatch is returned in place of its report.
    """
    out = []
    for p in _odd_primes(lo, min(hi, DECOMP_PMAX)):
        m = PrimeModulus.of(p)
        for x in DECOMP_XS:
            try:
                out.append(decomposition_check(m, x, 2.0, tol=DECOMP_TOL))
            except DecompositionMismatch as exc:
                out.append(exc)
    return out


def check_decomposition(grid) -> CheckResult:
    name = "direct and character-decomposed sums agree to 1e-9"
    if not grid:
        return _skip(6, name)
    bad = [g for g in grid if isinstance(g, Exception)]
    worst = max((g.mismatch for g in grid if not isinstance(g, Exception)), default=0.0)
    return _result(6, name, not bad,
                   f"{len(grid)} (p, x) pairs, mismatches={len(bad)}, max gap={worst:.2e}")


def check_nonprincipal_bound(grid) -> CheckResult:
    name = "|nonprincipal sum| * x / 2^omega(p-1) <= 50"
    reports = [g for g in grid if not isinstance(g, Exception)]
    if not reports:
        return _skip(7, name)
    ratios = [(abs(r.nonprincipal_raw) * r.x / 2 ** omega(r.p - 1), r.p, r.x) for r in reports]
    worst = max(ratios)
    over = sum(v > NONPRINCIPAL_C for v, _, _ in ratios)
    return _result(7, name, over == 0,
                   f"max ratio {worst[0]:.2f} at p={worst[1]}, x={worst[2]:g}; {over}/{len(ratios)} above {NONPRINCIPAL_C:g}")


def check_omega(hi=10**7) -> CheckResult:
    name = "mean omega(n) near ln ln x + B1, and omega exponent scan <= 4"
    parts, ok = [], True
    if hi >= OMEGA_X:
        row = omega_average(OMEGA_X)
        ok &= abs(row.mean_omega - (math.log(math.log(OMEGA_X)) + MERTENS_B1)) < OMEGA_TOL
        parts.append(f"mean={row.mean_omega:.6f} predicted={row.predicted:.6f}")
    if hi >= 17:
        p, e = omega_exponent_scan(hi)
        ok &= e <= OMEGA_EXPONENT_MAX
        parts.append(f"scan({hi}) max {e:.4f} at p={p}")
    if not parts:
        return _skip(8, name)
    return _result(8, name, ok, "; ".join(parts))


def check_chain(st: SweepStats) -> CheckResult:
    name = "n(p) <= g(p) <= g*(p)"
    if not st.count:
        return _skip(9, name)
    return _result(9, name, st.chain_violations == 0,
                   f"{st.count} primes, violations={st.chain_violations}")


def check_oracles(lo=3, hi=ORACLE_PMAX) -> CheckResult:
    name = "g, g*, n and all orders match power enumeration"
    primes = _odd_primes(lo, min(hi, ORACLE_PMAX))
    if not primes:
        return _skip(10, name)
    bad = []
    for p in primes:
        m = PrimeModulus.of(p)
        orders = oracles.orders_table(p)
        if any(multiplicative_order(u, m) != k for u, k in orders.items()):
            bad.append((p, "order"))
        if least_primitive_root(p) != oracles.least_primitive_root_enum(p):
            bad.append((p, "g"))
        if least_prime_primitive_root(p) != oracles.least_prime_primitive_root_enum(p):
            bad.append((p, "g*"))
        if least_quadratic_nonresidue(p) != oracles.least_nonresidue_by_squares(p):
            bad.append((p, "n"))
    return _result(10, name, not bad, f"{len(primes)} primes, mismatches={bad or 0}")


def run_checks(lo, hi, epsilon=1.0, jobs=1, cap=None, out=sys.stdout) -> bool:
    """Run every check restricted to [lo, hi]; print one line per check."""
    results = []

    def emit(r: CheckResult):
        results.append(r)
        out.write(r.line() + "\n")
        out.flush()

    emit(check_psi_equivalence(lo, hi))
    st = sweep(lo, hi, epsilon, jobs, cap)
    emit(check_case2(st))
    emit(check_case1(st))
    emit(check_average_nres(hi) if lo <= 3 else _skip(4, "average least nonresidue"))
    emit(check_kappa(lo, hi))
    grid = decomposition_grid(lo, hi)
    emit(check_decomposition(grid))
    emit(check_nonprincipal_bound(grid))
    emit(check_omega(hi))
    emit(check_chain(st))
    emit(check_oracles(lo, hi))
    ok = all(r.ok for r in results)
    out.write(f"{sum(r.status == 'PASS' for r in results)} passed, "
              f"{sum(r.status == 'FAIL' for r in results)} failed, "
              f"{sum(r.status == 'SKIP' for r in results)} skipped\n")
    return ok
