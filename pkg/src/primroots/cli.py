"""Command-line front end: ``python -m primroots <command> ...``.

Every command validates its arguments, calls one library function and
serializes the result. Exit status is 0 on success, 2 on bad arguments
and 1 when a computation fails or a verification check breaks.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import math
import sys

from . import arithmetic, characters, lseries, survey
from .errors import PrimRootsError


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, float):
        return format(v, ".6g")
    return str(v)


def _key_values(pairs) -> str:
    return "".join(f"{k}: {_fmt(v)}\n" for k, v in pairs)


def _odd_prime(text: str) -> int:
    p = _positive_int(text)
    if p < 3 or not arithmetic.is_prime(p):
        raise UsageError(f"{p} is not an odd prime")
    return p


def _positive_int(text) -> int:
    try:
        n = int(text)
    except (TypeError, ValueError):
        raise UsageError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise UsageError(f"expected a positive integer, got {n}")
    if n > arithmetic.UINT64_MAX:
        raise UsageError(f"{n} does not fit in 64 bits")
    return n


def _real(text) -> float:
    try:
        v = float(text)
    except (TypeError, ValueError):
        raise UsageError(f"expected a real number, got {text!r}") from None
    if not math.isfinite(v):
        raise UsageError(f"expected a finite number, got {text!r}")
    return v


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


# --------------------------------------------------------------------------
# commands


def cmd_factor(args):
    n = _positive_int(args.n)
    f = arithmetic.factor(n)
    parts = [str(p) for p, e in f.factors for _ in range(e)]
    with _output(args.out) as out:
        out.write(" ".join(parts) + "\n")


def groot_line(p: int, cap=None) -> str:
    pm1 = arithmetic.factor(p - 1)
    g = characters.least_primitive_root(p, pm1)
    gs = characters.least_prime_primitive_root(p, pm1, cap=cap)
    n = characters.least_quadratic_nonresidue(p)
    return f"p={p} g={g} g*={gs} n={n} omega={arithmetic.omega(pm1)}"


def cmd_groot(args):
    p = _odd_prime(args.p)
    cap = _positive_int(args.cap) if args.cap is not None else None
    with _output(args.out) as out:
        out.write(groot_line(p, cap) + "\n")


def cmd_psi(args):
    p = _odd_prime(args.p)
    if p > 20000:
        raise UsageError("psi prints one row per residue; use p <= 20000")
    rows = characters.psi_table(p)
    with _output(args.out) as out:
        if args.format == "csv":
            w = csv.writer(out, lineterminator="\n")
            w.writerow(("u", "psi_char_sum", "psi_direct", "agree"))
            for u, cs, d in rows:
                w.writerow((u, _fmt(cs), d, int(round(cs) == d)))
        else:
            for u, cs, d in rows:
                out.write(f"u={u} char_sum={_fmt(cs)} direct={d}\n")
            bad = sum(round(cs) != d for _, cs, d in rows)
            out.write(f"p={p} residues={len(rows)} mismatches={bad}\n")


def cmd_kappa(args):
    p = _odd_prime(args.p)
    with _output(args.out) as out:
        out.write(_key_values([
            ("p", p),
            ("neg_zeta_log_derivative_2", lseries.zeta_log_derivative_at_2()),
            ("prime_correction", math.log(p) / (p * p - 1)),
            ("kappa2", lseries.kappa2(p)),
        ]))


def cmd_lsum(args):
    p = _odd_prime(args.p)
    x = _real(args.X if args.X is not None else args.x)
    s = _real(args.S if args.S is not None else args.s)
    if s <= 1:
        raise UsageError("s must exceed 1")
    if x < 1 or x > 10**7:
        raise UsageError("x must lie in [1, 1e7]")
    report = lseries.decomposition_check(p, x, s)
    with _output(args.out) as out:
        out.write(_key_values(vars(report).items()))


def cmd_survey(args):
    lo, hi = _positive_int(args.lo), _positive_int(args.hi)
    if lo > hi:
        raise UsageError("need LO <= HI")
    if args.epsilon <= 0 or args.jobs < 1:
        raise UsageError("--epsilon must be > 0 and --jobs >= 1")
    if hi < 3:
        raise UsageError("surveys start at p = 3")
    cap = _positive_int(args.cap) if args.cap is not None else None
    stream = survey.survey_range(max(lo, 3), hi, args.epsilon, args.jobs, cap=cap)
    with _output(args.out) as out:
        if args.format == "csv":
            survey.write_csv(stream, out)
        else:
            stream.run()
            out.write(stream.summary.as_text())
    if args.format == "csv":
        text = stream.summary.as_text()
        if args.out in (None, "-"):
            sys.stderr.write(text)
        else:
            with open(args.out + ".summary", "w") as fh:
                fh.write(text)


def cmd_avg_nres(args):
    limit = _positive_int(args.limit)
    if limit < 3:
        raise UsageError("LIMIT must be >= 3")
    avg, count, marks = survey.average_nres(limit, checkpoints=True)
    with _output(args.out) as out:
        out.write(_key_values([
            ("limit", limit), ("count", count), ("average", avg),
            ("convention", "odd primes only"),
        ]))
        for x, a in marks:
            out.write(f"checkpoint: {x} {_fmt(a)}\n")


def cmd_omega_stats(args):
    x = _positive_int(args.X)
    if x < 3:
        raise UsageError("X must be >= 3")
    row = arithmetic.omega_average(x)
    pairs = list(vars(row).items())
    if x >= 17:
        p, e = survey.omega_exponent_scan(x)
        pairs += [("omega_exponent_max_p", p), ("omega_exponent_max", e)]
    with _output(args.out) as out:
        out.write(_key_values(pairs))


def cmd_verify(args):
    from .verify import run_checks

    lo, hi = _positive_int(args.lo), _positive_int(args.hi)
    if lo > hi or hi < 3:
        raise UsageError("need 3 <= HI and LO <= HI")
    cap = _positive_int(args.cap) if args.cap is not None else None
    with _output(args.out) as out:
        ok = run_checks(max(lo, 3), hi, epsilon=args.epsilon, jobs=args.jobs,
                        cap=cap, out=out)
    return 0 if ok else 1


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--epsilon", type=float, default=survey.DEFAULT_EPSILON)
    common.add_argument("--s", type=float, default=2.0)
    common.add_argument("--x", type=float, default=1000.0)
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "text"), default=None)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cap", default=None,
                        help="search cap for the least prime primitive root")

    ap = argparse.ArgumentParser(prog="primroots", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, *positional, fmt="text", **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        for pos in positional:
            if pos.endswith("?"):
                sp.add_argument(pos[:-1], nargs="?", default=None)
            else:
                sp.add_argument(pos)
        sp.set_defaults(func=func, default_format=fmt)
        return sp

    add("factor", cmd_factor, "n", help="prime factors of N with multiplicity")
    add("groot", cmd_groot, "p", help="g, g*, n and omega(p-1) for one prime")
    add("psi", cmd_psi, "p", help="character-sum vs direct primitive-root indicator")
    add("kappa", cmd_kappa, "p", help="the constant kappa2(p)")
    add("lsum", cmd_lsum, "p", "X?", "S?", help="partial-sum decomposition report")
    add("survey", cmd_survey, "lo", "hi", fmt="csv", help="sweep primes in [LO, HI]")
    add("avg-nres", cmd_avg_nres, "limit", help="average least nonresidue")
    add("omega-stats", cmd_omega_stats, "X", help="mean of omega(n) for n <= X")
    add("verify", cmd_verify, "lo", "hi", help="run the verification checks")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        status = args.func(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"{ap.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (PrimRootsError, ValueError, ArithmeticError) as exc:
        print(f"{ap.prog} {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
