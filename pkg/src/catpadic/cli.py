"""Command-line front end.

::

    catpadic seq catalan --max-n 10 --format csv
    catpadic poly changhee --lambda 1/2 --max-n 5
    catpadic verify all --max-n 30 --format json
    catpadic padic witt --n 1 --p 5 --K 6 --N 5

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import identities, numbers, padic
from .algebra import Poly

SEQ_FAMILIES = ("catalan", "euler", "changhee", "stirling1", "stirling2")
POLY_FAMILIES = ("euler", "changhee", "catalan")
PADIC_KINDS = ("witt", "monomial", "shift")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _non_negative(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="catpadic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    fmt = dict(choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("seq", help="emit a number sequence or Stirling triangle")
    p.add_argument("family", help="|".join(SEQ_FAMILIES))
    p.add_argument("--max-n", type=_non_negative, default=10)
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1, 2))
    p.add_argument("--format", **fmt)

    p = sub.add_parser("poly", help="emit a polynomial family")
    p.add_argument("family", help="|".join(POLY_FAMILIES))
    p.add_argument("--max-n", type=_non_negative, default=5)
    p.add_argument("--lambda", dest="lam", type=_rational, default=Fraction(1, 2))
    p.add_argument("--format", **fmt)

    p = sub.add_parser("verify", help="check identities exactly")
    p.add_argument("identity", help="|".join(identities.IDENTITY_IDS + ("all",)))
    p.add_argument("--max-n", type=_non_negative, default=30)
    p.add_argument(
        "--lambda",
        dest="lambdas",
        type=_rational,
        action="append",
        help="repeatable; E5 only (default 1/2, 1, 2, 1/3, -1)",
    )
    p.add_argument("--p", dest="prime", type=int, help="T3 only: also run truncated p-adic integrals")
    p.add_argument("--K", dest="precision", type=_positive, default=8)
    p.add_argument("--N", dest="levels", type=_positive, default=4)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("padic", help="truncated fermionic integral experiments")
    p.add_argument("kind", help="|".join(PADIC_KINDS))
    p.add_argument("--n", type=_non_negative, help="witt: binomial index; shift: shift (>= 1)")
    p.add_argument("--m", type=_non_negative, help="monomial degree (monomial, shift)")
    p.add_argument("--p", dest="prime", type=int, required=True)
    p.add_argument("--K", dest="precision", type=_positive, required=True)
    p.add_argument("--N", dest="levels", type=_positive, required=True)
    p.add_argument("--format", **fmt)
    return parser


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def run_seq(args) -> tuple:
    family = args.family
    if family not in SEQ_FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(SEQ_FAMILIES)}")
    n_max = args.max_n
    if family in ("stirling1", "stirling2"):
        table = (numbers.stirling1_table if family == "stirling1" else numbers.stirling2_table)(n_max)
        rows = [(n, l, str(table(n, l))) for n in range(n_max + 1) for l in range(n + 1)]
        if args.format == "csv":
            return 0, _csv(rows)
        if args.format == "json":
            return 0, _dumps({"family": family, "rows": [[str(v) for v in r] for r in table.rows]})
        return 0, "".join(" ".join(str(v) for v in r) + "\n" for r in table.rows)

    params = None
    if family == "catalan":
        values = [numbers.catalan(n) for n in range(n_max + 1)]
    elif family == "euler":
        values = list(numbers.euler_numbers(n_max).values)
    else:
        if args.lam is None:
            raise UsageError("changhee needs --lambda")
        params = str(args.lam)
        values = list(numbers.changhee_lambda(args.lam, n_max).values)
    if args.format == "csv":
        return 0, _csv((n, str(v)) for n, v in enumerate(values))
    if args.format == "json":
        obj = {"family": family}
        if params is not None:
            obj["lambda"] = params
        obj["values"] = [str(v) for v in values]
        return 0, _dumps(obj)
    width = len(str(n_max))
    return 0, "".join(f"{n:>{width}}  {v}\n" for n, v in enumerate(values))


def run_poly(args) -> tuple:
    family = args.family
    if family not in POLY_FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(POLY_FAMILIES)}")
    params = None
    if family == "euler":
        fam = numbers.euler_polynomials(args.max_n)
    elif family == "catalan":
        fam = numbers.catalan_polynomials(args.max_n)
    else:
        params = str(args.lam)
        fam = numbers.changhee_polynomials(args.lam, args.max_n)
    if args.format == "csv":
        rows = [(n, k, str(c)) for n, p in enumerate(fam.members) for k, c in enumerate(p.coeffs)]
        return 0, _csv(rows)
    if args.format == "json":
        obj = {"family": family}
        if params is not None:
            obj["lambda"] = params
        obj["members"] = [identities.render(p) for p in fam.members]
        return 0, _dumps(obj)
    return 0, "".join(f"{n}: {p}\n" for n, p in enumerate(fam.members))


def _report_text(report: identities.VerifyReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{report.identity:<4} {status}  n = {report.start}..{report.max_n}"]
    for o in report.failures():
        tag = f" lambda={o.param}" if o.param is not None else ""
        lines.append(f"     n={o.n}{tag}: lhs={o.lhs} rhs={o.rhs} diff={o.difference}")
    return "\n".join(lines) + "\n"


def run_verify(args) -> tuple:
    ident = args.identity.upper()
    if ident != "ALL" and ident not in identities.IDENTITY_IDS:
        raise UsageError(f"unknown identity {args.identity!r}")
    params = {}
    if args.lambdas:
        if any(l == 0 for l in args.lambdas):
            raise UsageError("--lambda 0 is not allowed")
        params["lambdas"] = args.lambdas
    if args.prime is not None:
        if not padic.is_odd_prime(args.prime):
            raise UsageError(f"--p must be an odd prime, got {args.prime}")
        params.update(prime=args.prime, precision=args.precision, levels=args.levels)
    ids = identities.IDENTITY_IDS if ident == "ALL" else (ident,)
    start = 1 if ident == "T5" else 0
    if args.max_n < start:
        raise UsageError(f"{ident} needs --max-n >= {start}")
    if ident == "ALL" and args.max_n < 1:
        ids = tuple(i for i in ids if i != "T5")
    reports = [identities.verify(i, args.max_n, params) for i in ids]
    ok = all(r.passed for r in reports)
    code = 0 if ok else 1

    if args.format == "json":
        if len(reports) == 1:
            return code, _dumps(reports[0].to_dict())
        return code, _dumps({"reports": [r.to_dict() for r in reports], "pass": ok})
    if args.format == "csv":
        rows = [("identity", "n", "lambda", "lhs", "rhs", "pass")]
        for r in reports:
            for o in r.outcomes:
                rows.append(
                    (
                        r.identity,
                        o.n,
                        "" if o.param is None else str(o.param),
                        str(o.lhs),
                        str(o.rhs),
                        "true" if o.passed else "false",
                    )
                )
        return code, _csv(rows)
    text = "".join(_report_text(r) for r in reports)
    text += f"{'ALL PASS' if ok else 'SOME FAILED'}\n"
    return code, text


def _experiment_text(d: dict) -> str:
    lines = [
        f"integrand {d['integrand']}  p={d['prime']}  K={d['precision']}",
        f"reference residue {d['reference_residue']}",
    ]
    if "exact_pass" in d:
        lines.append(
            f"exact: lhs={d['exact_lhs']} rhs={d['exact_rhs']} {'PASS' if d['exact_pass'] else 'FAIL'}"
        )
    for lv in d["levels"]:
        lines.append(f"N={lv['N']}  residue={lv['residue']}  v(diff)={lv['valuation_of_difference']}")
    return "\n".join(lines) + "\n"


def run_padic(args) -> tuple:
    if args.kind not in PADIC_KINDS:
        raise UsageError(f"unknown kind {args.kind!r}; choose from {', '.join(PADIC_KINDS)}")
    if not padic.is_odd_prime(args.prime):
        raise UsageError(f"--p must be an odd prime, got {args.prime}")
    p, K, N = args.prime, args.precision, args.levels
    if args.kind == "witt":
        if args.n is None:
            raise UsageError("witt needs --n")
        result = padic.witt_check(args.n, p, N, K)
        ok = result.is_monotone()
    elif args.kind == "monomial":
        if args.m is None:
            raise UsageError("monomial needs --m")
        result = padic.monomial_check(args.m, p, N, K)
        ok = result.is_monotone()
    else:
        if args.m is None or args.n is None or args.n < 1:
            raise UsageError("shift needs --m and --n >= 1")
        result = padic.functional_equation_check(Poly.monomial(args.m), args.n, p, N, K)
        ok = result.exact_pass and result.is_monotone()
    d = result.to_dict()
    code = 0 if ok else 1
    if args.format == "json":
        return code, _dumps(d)
    if args.format == "csv":
        rows = [("N", "residue", "valuation_of_difference")]
        rows += [(lv["N"], lv["residue"], lv["valuation_of_difference"]) for lv in d["levels"]]
        return code, _csv(rows)
    return code, _experiment_text(d)


_COMMANDS = {"seq": run_seq, "poly": run_poly, "verify": run_verify, "padic": run_padic}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip())
        code, text = _COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"{exc}\n")
        return 2
    stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
