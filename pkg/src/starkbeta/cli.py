"""Batch command-line front end.

Subcommands:
  eval        evaluate one function and print its canonical rendering
  verify      run a verification suite, streaming one JSON object per check
  stark-table tabulate Stark units with recognized and exact polynomials

Exit codes: 0 pass, 1 at least one failed check, 2 usage/config error.
Flags fall back to STARKBETA_* environment variables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import gcd

import mpmath
from mpmath import mp

from . import __version__
from .classical import (beta_real, gamma_real, hurwitz_zeta,
                        recognize_algebraic, stark_unit_real)
from .config import RunConfig
from .cyclotomic import (CyclotomicNumber, euler_phi, min_poly,
                         stark_unit_exact)
from .padic import PadicNumber, UnitModRoots, padic_from_rational
from .padic_gamma import (beta_p, beta_p_pointed, gamma_coleman, gamma_ext,
                          gamma_morita, jacobi_sum, lgamma)
from .suites import SUITES, run_suite

EVAL_FUNCTIONS = ("gamma-p", "gamma-coleman", "lgamma", "beta-p",
                  "beta-p-pointed", "gamma", "beta", "hurwitz", "stark-unit",
                  "jacobi")


def _env(name: str, default=None):
    return os.environ.get(f"STARKBETA_{name}", default)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _m_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return 3, v


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starkbeta",
        description="p-adic gamma/beta special functions and Stark-unit "
                    "verification suites")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", default=_env("P"),
                        help="prime, or comma-separated primes for suites")
        sp.add_argument("--precision", type=int,
                        default=int(_env("PRECISION", 12)),
                        help="p-adic absolute precision N (default 12)")
        sp.add_argument("--digits", type=int, default=int(_env("DIGITS", 60)),
                        help="real working digits D (default 60)")
        sp.add_argument("--m", default=_env("M"),
                        help="conductor, or range like 3..12")
        sp.add_argument("--format", dest="fmt",
                        default=_env("FORMAT", "json"),
                        choices=("json", "tsv", "text"))
        sp.add_argument("--seed", type=int, default=int(_env("SEED", 0)))
        sp.add_argument("--quick", action="store_true",
                        default=_env("QUICK", "") not in ("", "0"))

    ev = sub.add_parser("eval", help="evaluate one function")
    ev.add_argument("function", choices=EVAL_FUNCTIONS)
    common(ev)
    ev.add_argument("--z", type=_fraction, help="rational argument")
    ev.add_argument("--a", type=_fraction, help="numerator / first argument")
    ev.add_argument("--i", type=int, help="numerator i of i/m")
    ev.add_argument("--j", type=int, help="numerator j of j/m")
    ev.add_argument("--e", type=int, help="exponent e in a_1 = p^e")
    ev.add_argument("--s", type=_fraction, help="s argument of hurwitz")
    ev.add_argument("--level", type=int, default=3, help="oracle level")

    vf = sub.add_parser("verify", help="run a verification suite")
    vf.add_argument("suite", nargs="?", choices=tuple(SUITES) + ("all",))
    vf.add_argument("--suite", dest="suite_opt",
                    choices=tuple(SUITES) + ("all",),
                    help="alternative to the positional suite name")
    common(vf)

    st = sub.add_parser("stark-table", help="tabulate Stark units over Q")
    common(st)
    return parser


def _render_real(x, digits: int) -> str:
    with mpmath.workdps(digits + 5):
        return mpmath.nstr(+x, digits, strip_zeros=False)


def _render_value(value, digits: int) -> str:
    if isinstance(value, (PadicNumber, UnitModRoots, CyclotomicNumber)):
        return str(value)
    return _render_real(value, digits)


def _poly_str(coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        mag = abs(c)
        body = f"{mag}" if k == 0 or mag != 1 else ""
        term = body + ("" if not mono else mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + term)
        else:
            parts.append(("- " if c < 0 else "+ ") + term)
    return " ".join(parts) if parts else "0"


def _single_prime(args, parser) -> int:
    if args.p is None:
        parser.error("--p required for this function")
    try:
        return int(args.p)
    except ValueError:
        parser.error(f"--p must be a single prime here, got {args.p!r}")


def _single_m(args, parser) -> int:
    if args.m is None:
        parser.error("--m required for this function")
    lo, hi = _m_range(args.m)
    if args.m and ".." in str(args.m):
        parser.error("--m must be a single conductor here")
    return hi


def cmd_eval(args, parser) -> int:
    fn = args.function
    N, D = args.precision, args.digits
    try:
        if fn == "gamma-p":
            p = _single_prime(args, parser)
            if args.z is None:
                parser.error("gamma-p needs --z")
            if args.z.denominator % p == 0:
                e = 0
                den = args.z.denominator
                while den % p == 0:
                    den //= p
                    e += 1
                value = gamma_ext(
                    padic_from_rational(args.z, p, N + 2 * e + 4), N)
            else:
                value = gamma_morita(padic_from_rational(args.z, p, N), N)
        elif fn == "gamma-coleman":
            p = _single_prime(args, parser)
            if args.z is None:
                parser.error("gamma-coleman needs --z")
            e = 0
            den = args.z.denominator
            while den % p == 0:
                den //= p
                e += 1
            z = padic_from_rational(args.z, p, N + 2 * e + 2)
            value = gamma_coleman(z, N)
        elif fn == "lgamma":
            p = _single_prime(args, parser)
            if args.a is None or args.e is None:
                parser.error("lgamma needs --a and --e")
            a = padic_from_rational(args.a, p, N + max(4, args.e + 2))
            value = lgamma(a, args.e, N).value
        elif fn in ("beta-p", "beta-p-pointed"):
            p = _single_prime(args, parser)
            m = _single_m(args, parser)
            if args.i is None or args.j is None:
                parser.error(f"{fn} needs --i and --j")
            alpha, beta = Fraction(args.i, m), Fraction(args.j, m)
            value = beta_p(alpha, beta, p, N) if fn == "beta-p" else \
                beta_p_pointed(alpha, beta, p, N)
        elif fn == "gamma":
            if args.a is None:
                parser.error("gamma needs --a (optionally with --m)")
            q = args.a / _single_m(args, parser) if args.m else args.a
            value = gamma_real(q, D)
        elif fn == "beta":
            m = _single_m(args, parser)
            if args.i is None or args.j is None:
                parser.error("beta needs --i, --j, --m")
            value = beta_real(Fraction(args.i, m), Fraction(args.j, m), D)
        elif fn == "hurwitz":
            if args.s is None or args.m is None or args.a is None:
                parser.error("hurwitz needs --s, --m, --a")
            m = _single_m(args, parser)
            with mpmath.workdps(D + 5):
                s = mp.mpf(args.s.numerator) / args.s.denominator
            value = hurwitz_zeta(s, m, args.a, D)
        elif fn == "stark-unit":
            m = _single_m(args, parser)
            if args.a is None:
                parser.error("stark-unit needs --a and --m")
            value = stark_unit_real(int(args.a), m, D)
        elif fn == "jacobi":
            p = _single_prime(args, parser)
            m = _single_m(args, parser)
            if args.i is None or args.j is None:
                parser.error("jacobi needs --i, --j, --m")
            value = jacobi_sum(p, m, args.i, args.j)
        else:  # pragma: no cover
            parser.error(f"unknown function {fn}")
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rendered = _render_value(value, D)
    if args.fmt == "json":
        print(json.dumps({"function": fn, "value": rendered},
                         sort_keys=True))
    else:
        print(rendered)
    return 0


def _config_from_args(args, parser) -> RunConfig:
    primes = (3, 5, 7)
    if args.p:
        try:
            primes = tuple(int(t) for t in str(args.p).split(","))
        except ValueError:
            parser.error(f"bad prime list {args.p!r}")
    m_min, m_max = 3, None
    if args.m:
        m_min, m_max = _m_range(args.m)
    try:
        return RunConfig(primes=primes, precision=args.precision,
                         digits=args.digits, m_min=m_min, m_max=m_max,
                         quick=args.quick, seed=args.seed, fmt=args.fmt)
    except ValueError as exc:
        parser.error(str(exc))


def _report_obj(rep, chash: str) -> dict:
    return {"check": rep.check, "params": rep.params, "status": rep.status,
            "residual": rep.residual, "details": rep.details,
            "config_hash": chash}


def cmd_verify(args, parser) -> int:
    suite = args.suite or args.suite_opt
    if suite is None:
        parser.error("a suite name is required (positional or --suite)")
    cfg = _config_from_args(args, parser)
    chash = cfg.config_hash()
    names = list(SUITES) if suite == "all" else [suite]
    counts = {"pass": 0, "fail": 0, "refused": 0}
    if cfg.fmt == "json":
        print(json.dumps({"config": cfg.as_dict(), "config_hash": chash},
                         sort_keys=True), flush=True)
    elif cfg.fmt == "tsv":
        print("check\tparams\tstatus\tresidual")
    # stream each suite's reports as soon as they are computed
    for name in names:
        for rep in run_suite(name, cfg):
            counts[rep.status] = counts.get(rep.status, 0) + 1
            if cfg.fmt == "json":
                print(json.dumps(_report_obj(rep, chash), sort_keys=True,
                                 default=str))
            elif cfg.fmt == "tsv":
                params = json.dumps(rep.params, sort_keys=True)
                print(f"{rep.check}\t{params}\t{rep.status}\t{rep.residual}")
            else:
                params = json.dumps(rep.params, sort_keys=True)
                print(f"[{rep.status:>7}] {rep.check} {params} "
                      f"residual={rep.residual}")
    if cfg.fmt == "json":
        print(json.dumps({"summary": counts, "config_hash": chash},
                         sort_keys=True))
    elif cfg.fmt == "text":
        print(f"pass={counts['pass']} fail={counts['fail']} "
              f"refused={counts['refused']}")
    return 1 if counts["fail"] else 0


def cmd_stark_table(args, parser) -> int:
    cfg = _config_from_args(args, parser)
    D = cfg.digits
    rows = []
    for m in cfg.conductors(12 if cfg.m_max is None else None):
        for a in range(1, (m + 1) // 2):
            if gcd(a, m) != 1 or 2 * a == m:
                continue
            value = stark_unit_real(a, m, D)
            exact = stark_unit_exact(a, m)
            target = min_poly(exact, euler_phi(m))
            height = max(100, 4 * max(abs(c) for c in target))
            needed = 3 * (len(target) - 1) * len(str(height)) + 6
            d_eff = max(D, needed)
            value_hi = stark_unit_real(a, m, d_eff)
            rec = recognize_algebraic(value_hi, len(target) - 1, height, d_eff)
            with mpmath.workdps(d_eff + 10):
                resid = abs(mp.fsum(c * value_hi**k
                                    for k, c in enumerate(target)))
                resid_s = mpmath.nstr(resid, 6)
            rows.append({
                "m": m, "a": a,
                "value": _render_real(value, D),
                "recognized": _poly_str(rec) if rec else None,
                "exact_form": str(exact),
                "min_poly": _poly_str(target),
                "match": rec == target,
                "residual": resid_s,
            })
    if cfg.fmt == "json":
        for row in rows:
            print(json.dumps(row, sort_keys=True))
    else:
        cols = ("m", "a", "value", "recognized", "min_poly", "exact_form",
                "match", "residual")
        print("\t".join(cols))
        for row in rows:
            print("\t".join(str(row[c]) for c in cols))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return cmd_eval(args, parser)
    if args.command == "verify":
        return cmd_verify(args, parser)
    if args.command == "stark-table":
        return cmd_stark_table(args, parser)
    parser.error("no command")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
