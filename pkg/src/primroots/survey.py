"""Batch sweeps over primes.

For every prime p in a range this computes the least primitive root g(p),
the least prime primitive root g*(p), the least quadratic nonresidue n(p)
and omega(p - 1), then checks g*(p) against the two growth bounds
(log p)**(1 + eps) and p**(5 / log log p).

The sweep works on contiguous blocks of integers. Each block sieves its
primes and factors every p - 1 with vectorised trial division, so no
per-prime factorization call is needed. Blocks may run in worker
processes; records always come back in ascending p.
"""
from __future__ import annotations

import csv
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

import numpy as np

from .arithmetic import _base_sieve, factor, omega_sieve, primes_between
from .characters import DEFAULT_SEARCH_CAP, PrimeModulus, _primes_below
from .errors import BudgetExceeded, SearchCapExceeded

DEFAULT_EPSILON = 1.0
# Largest hi accepted by survey_range unless overridden.
MAX_SURVEY_HI = 10**9
BLOCK_SIZE = 1 << 18

CSV_COLUMNS = (
    "p", "g", "g_star", "n_qr", "omega_pm1",
    "bound_case1", "bound_case2", "ratio2", "exceptional",
)
AVERAGE_NRES_LIMIT = 2.920050  # mean least nonresidue over odd primes


@dataclass(frozen=True, slots=True)
class SurveyRecord:
    p: int
    g: int
    g_star: int
    n_qr: int
    omega_pm1: int
    bound_case1: float
    bound_case2: float
    exceptional: bool
    ratio2: float

    def csv_row(self) -> list[str]:
        return [
            str(self.p), str(self.g), str(self.g_star), str(self.n_qr),
            str(self.omega_pm1), _fmt(self.bound_case1), _fmt(self.bound_case2),
            _fmt(self.ratio2), "1" if self.exceptional else "0",
        ]


def _fmt(v: float) -> str:
    return format(v, ".6g")


def case2_bound(p: int) -> float:
    """p ** (5 / log log p); infinite when log log p <= 0."""
    llp = math.log(math.log(p))
    if llp <= 0:
        return math.inf
    return math.exp(5.0 * math.log(p) / llp)


def case1_bound(p: int, epsilon: float = DEFAULT_EPSILON) -> float:
    """(log p) ** (1 + epsilon)."""
    return math.log(p) ** (1.0 + epsilon)


def verify_bound_case2(r: SurveyRecord) -> bool:
    return r.g_star <= case2_bound(r.p)


def verify_bound_case1(r: SurveyRecord, epsilon: float = DEFAULT_EPSILON) -> bool:
    return r.g_star <= case1_bound(r.p, epsilon)


def is_exceptional(m: PrimeModulus | int) -> bool:
    """True when every prime factor of p - 1 is at most log p."""
    if isinstance(m, PrimeModulus):
        p, primes = m.p, m.pm1.primes
    else:
        p = int(m)
        primes = factor(p - 1).primes
    return max(primes) <= math.log(p)


# --------------------------------------------------------------------------
# per-block kernel


def _factor_shifted(primes: np.ndarray) -> list[tuple[int, ...]]:
    """Distinct prime factors of p - 1 for each p, ascending."""
    q = primes - 1
    rem = q.copy()
    found: list[list[int]] = [[] for _ in range(q.size)]
    hi = int(q.max()) if q.size else 0
    for r in _base_sieve(math.isqrt(hi)).tolist():
        hit = np.flatnonzero(rem % r == 0)
        if hit.size == 0:
            continue
        for i in hit.tolist():
            found[i].append(r)
        sub = rem[hit] // r
        while True:
            again = sub % r == 0
            if not again.any():
                break
            sub[again] //= r
        rem[hit] = sub
    for i in np.flatnonzero(rem > 1).tolist():
        found[i].append(int(rem[i]))
    return [tuple(f) for f in found]


def _prime_record(p: int, rs: tuple[int, ...], epsilon: float, cap: int) -> SurveyRecord:
    q = p - 1
    exps = [q // r for r in rs]
    half = q // 2
    n = 2
    while pow(n, half, p) != q:
        n += 1
    g = 2
    while any(pow(g, e, p) == 1 for e in exps):
        g += 1
    g_star = None
    for c in _primes_below(1 << 12):
        if c >= g and c != p and all(pow(c, e, p) != 1 for e in exps):
            g_star = c
            break
    if g_star is None:
        g_star = _slow_prime_root(p, exps, cap)
    b2 = case2_bound(p)
    return SurveyRecord(
        p=p,
        g=g,
        g_star=g_star,
        n_qr=n,
        omega_pm1=len(rs),
        bound_case1=case1_bound(p, epsilon),
        bound_case2=b2,
        exceptional=rs[-1] <= math.log(p),
        ratio2=g_star / b2,
    )


def _slow_prime_root(p: int, exps: list[int], cap: int) -> int:
    for c in _primes_below(cap):
        if c != p and all(pow(c, e, p) != 1 for e in exps):
            return c
    raise SearchCapExceeded(f"no prime primitive root of {p} below {cap}")


def survey_block(lo: int, hi: int, epsilon: float = DEFAULT_EPSILON,
                 cap: int | None = None) -> list[SurveyRecord]:
    """Records for every prime in [max(lo, 3), hi]."""
    primes = primes_between(max(lo, 3), hi)
    if primes.size == 0:
        return []
    shifted = _factor_shifted(primes)
    out = []
    for p, rs in zip(primes.tolist(), shifted):
        out.append(_prime_record(p, rs, epsilon, cap or max(DEFAULT_SEARCH_CAP, p)))
    return out


def _block_task(args) -> list[SurveyRecord]:
    return survey_block(*args)


# --------------------------------------------------------------------------
# summary


@dataclass
class SurveySummary:
    lo: int
    hi: int
    epsilon: float = DEFAULT_EPSILON
    count: int = 0
    max_g: tuple[int, int] = (0, 0)
    max_g_star: tuple[int, int] = (0, 0)
    max_ratio2: tuple[int, float] = (0, 0.0)
    case1_violations: int = 0
    case2_violations: int = 0
    chain_violations: int = 0
    exceptional_count: int = 0
    sum_n_qr: int = 0
    omega_exponent_max: tuple[int, float] = (0, 0.0)
    max_log_nqr_ratio: tuple[int, float] = (0, 0.0)
    max_turan_ratio: tuple[int, float] = (0, 0.0)
    convention: str = field(default="odd primes only; p = 2 excluded")

    @property
    def range(self) -> tuple[int, int]:
        return self.lo, self.hi

    @property
    def mean_n_qr(self) -> float:
        return self.sum_n_qr / self.count if self.count else math.nan

    @property
    def case1_fraction(self) -> float:
        return self.case1_violations / self.count if self.count else math.nan

    def add(self, r: SurveyRecord) -> None:
        p = r.p
        self.count += 1
        if r.g > self.max_g[1]:
            self.max_g = (p, r.g)
        if r.g_star > self.max_g_star[1]:
            self.max_g_star = (p, r.g_star)
        if r.ratio2 > self.max_ratio2[1]:
            self.max_ratio2 = (p, r.ratio2)
        if r.g_star > r.bound_case1:
            self.case1_violations += 1
        if not r.g_star <= r.bound_case2:
            self.case2_violations += 1
        if not r.n_qr <= r.g <= r.g_star:
            self.chain_violations += 1
        self.exceptional_count += r.exceptional
        self.sum_n_qr += r.n_qr
        lp = math.log(p)
        e = omega_exponent(p, r.omega_pm1)
        if e > self.omega_exponent_max[1]:
            self.omega_exponent_max = (p, e)
        v = math.log(r.n_qr) / lp
        if v > self.max_log_nqr_ratio[1]:
            self.max_log_nqr_ratio = (p, v)
        llp = math.log(lp)
        if llp > 0:
            t = r.g / (lp * llp)
            if t > self.max_turan_ratio[1]:
                self.max_turan_ratio = (p, t)

    def as_text(self) -> str:
        """Key-value document, one ``key: value`` per line."""
        items = {
            "range": f"{self.lo} {self.hi}",
            "epsilon": _fmt(self.epsilon),
            "count": self.count,
            "max_g": "%d %d" % self.max_g,
            "max_g_star": "%d %d" % self.max_g_star,
            "max_ratio2": f"{self.max_ratio2[0]} {_fmt(self.max_ratio2[1])}",
            "case1_violations": self.case1_violations,
            "case1_fraction": _fmt(self.case1_fraction),
            "case2_violations": self.case2_violations,
            "chain_violations": self.chain_violations,
            "exceptional_count": self.exceptional_count,
            "mean_n_qr": _fmt(self.mean_n_qr),
            "omega_exponent_max": f"{self.omega_exponent_max[0]} {_fmt(self.omega_exponent_max[1])}",
            "max_log_nqr_ratio": f"{self.max_log_nqr_ratio[0]} {_fmt(self.max_log_nqr_ratio[1])}",
            "max_turan_ratio": f"{self.max_turan_ratio[0]} {_fmt(self.max_turan_ratio[1])}",
            "convention": self.convention,
            "log": "ln",
        }
        return "".join(f"{k}: {v}\n" for k, v in items.items())


def omega_exponent(p: int, omega_pm1: int) -> float:
    """omega(p-1) * ln 2 * ln ln p / ln p, i.e. the e in 2**omega(p-1) = p**(e / ln ln p)."""
    lp = math.log(p)
    return omega_pm1 * math.log(2.0) * math.log(lp) / lp


# --------------------------------------------------------------------------
# driver


class SurveyStream:
    """Iterable of SurveyRecord in ascending p.

    ``summary`` is folded on the fly and is complete once the stream has
    been exhausted.
    """

    def __init__(self, lo, hi, epsilon, parallelism, cap, block):
        self.summary = SurveySummary(lo, hi, epsilon)
        self._args = (lo, hi, epsilon, parallelism, cap, block)
        self._done = False

    @property
    def done(self) -> bool:
        return self._done

    def __iter__(self) -> Iterator[SurveyRecord]:
        if self._done:
            raise RuntimeError("survey stream already consumed")
        lo, hi, epsilon, jobs, cap, block = self._args
        tasks = [(a, min(a + block - 1, hi), epsilon, cap)
                 for a in range(lo, hi + 1, block)]
        for chunk in _run_blocks(tasks, jobs):
            for r in chunk:
                self.summary.add(r)
                yield r
        self._done = True

    def run(self) -> SurveySummary:
        """Consume the stream, discarding records."""
        for _ in self:
            pass
        return self.summary


def _run_blocks(tasks, jobs: int) -> Iterator[list[SurveyRecord]]:
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            yield survey_block(*t)
        return
    # Bounded window of in-flight blocks keeps memory flat and order fixed.
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending: deque = deque()
        it = iter(tasks)
        for t in it:
            pending.append(pool.submit(_block_task, t))
            if len(pending) >= 2 * jobs:
                break
        while pending:
            yield pending.popleft().result()
            t = next(it, None)
            if t is not None:
                pending.append(pool.submit(_block_task, t))


def survey_range(lo: int, hi: int, epsilon: float = DEFAULT_EPSILON,
                 parallelism: int = 1, cap: int | None = None,
                 max_hi: int = MAX_SURVEY_HI, block: int = BLOCK_SIZE) -> SurveyStream:
    """Sweep every prime in [lo, hi] (primes below 3 are skipped)."""
    if lo < 3 or hi < lo:
        raise ValueError(f"survey needs 3 <= lo <= hi, got [{lo}, {hi}]")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    if hi > max_hi:
        raise BudgetExceeded(f"hi={hi} exceeds the survey budget {max_hi}")
    return SurveyStream(lo, hi, epsilon, parallelism, cap, block)


def write_csv(records: Iterable[SurveyRecord], out: IO[str]) -> int:
    """Write the header plus one row per record; returns the row count."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    n = 0
    for r in records:
        w.writerow(r.csv_row())
        n += 1
    return n


# --------------------------------------------------------------------------
# statistics over primes


def average_nres(limit: int, checkpoints: bool = False):
    """Mean least quadratic nonresidue over odd primes p <= limit.

    Returns ``(average, count)``; with ``checkpoints=True`` a third item
    lists ``(10**k, running average)`` at each power of ten passed.
    """
    if limit < 3:
        raise ValueError("average_nres needs limit >= 3")
    total = 0
    count = 0
    marks = []
    next_mark = 10
    for p in primes_between(3, limit).tolist():
        while p > next_mark:
            if count:
                marks.append((next_mark, total / count))
            next_mark *= 10
        e = (p - 1) // 2
        n = 2
        while pow(n, e, p) != p - 1:
            n += 1
        total += n
        count += 1
    marks.append((limit, total / count))
    if checkpoints:
        return total / count, count, marks
    return total / count, count


def omega_exponent_scan(limit: int) -> tuple[int, float]:
    """Max over primes 3 <= p <= limit of omega(p-1) ln 2 ln ln p / ln p.

    Returns ``(argmax p, value)``.
    """
    if limit < 17:
        raise ValueError("omega_exponent_scan needs limit >= 17")
    w = omega_sieve(limit)
    primes = primes_between(3, limit)
    om = w[primes - 1].astype(np.float64)
    lp = np.log(primes.astype(np.float64))
    e = om * math.log(2.0) * np.log(lp) / lp
    i = int(np.argmax(e))
    return int(primes[i]), float(e[i])
