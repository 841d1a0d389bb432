"""``multigamma`` command line.

Exit codes: 0 success, 1 parse/domain/usage error (message on stderr),
2 verification failure (a residual above tolerance or a failing check).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from typing import Optional, TextIO

from .errors import DomainError, OracleError, ParseError, UnsupportedError
from .specs import ProductSpec

__all__ = ["main", "run", "build_parser"]

FORMAT_ENV = "MULTIGAMMA_FORMAT"
MAX_DIGITS = 15
DEFAULT_TOLERANCE = 1e-6

GRAMMAR_HELP = """\
series grammar (whitespace is ignored):
  sum(k=<nat>..inf, <term> (+|- <term>)*)
  term := [<rat>*] [k^<nat>*] log[^<nat>](k [+|- <rat>])
  rat  := [-]<digits>[/<digits>]
product grammar:
  melzak(x=<rat>)                  prod (1 + 2x/k)^(-k (-1)^k)
  melzak2(x=<rat>[, start=<nat>])  prod (1 - 4x^2/k^2)^(-k^2 (-1)^k)
"""

_MELZAK_FORMS = {
    Fraction(1): "pi/(2e)",
    Fraction(1, 2): "A^6/(e sqrt(pi) 2^(1/6))",
    Fraction(2): "3 pi^2/(16 e^2)",
    Fraction(-1, 4): "A^3 exp(-G/pi) sqrt(pi) 2^(1/6)/Gamma(1/4)",
}
_MELZAK2_FORMS = {
    (Fraction(1, 4), 1): "exp(1/8 - 2G/pi + 7 zeta(3)/(2 pi^2))",
    (Fraction(1, 2), 2): "(pi/4) exp(1/2 + 7 zeta(3)/pi^2)",
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with parse errors
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational or decimal number: {text!r}")


def _precision(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 1 <= p <= MAX_DIGITS:
        raise argparse.ArgumentTypeError(f"precision must be between 1 and {MAX_DIGITS}")
    return p


def _oracle_n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 64 or n & (n - 1):
        raise argparse.ArgumentTypeError("oracle N must be a power of two >= 64")
    return n


def _tolerance(text: str) -> float:
    try:
        t = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not t >= 0 or not math.isfinite(t):
        raise argparse.ArgumentTypeError("tolerance must be a finite non-negative number")
    return t


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default=None, help=f"output format (default: ${FORMAT_ENV} or text)")
    p.add_argument("--precision", type=_precision, default=12, help="significant digits shown (1-15, default 12)")
    p.add_argument("--oracle-n", type=_oracle_n, default=1024, dest="oracle_n", help="oracle truncation N (power of two >= 64)")
    p.add_argument("--tolerance", type=_tolerance, default=None, help="residual tolerance for exit code 2")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(
        prog="multigamma",
        description="Multiple gamma functions, Hurwitz zeta derivatives and zeta-regularized sums.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ev = sub.add_parser("eval", help="evaluate a function")
    evsub = ev.add_subparsers(dest="function", required=True, parser_class=_Parser)
    p = evsub.add_parser("zetaprime", parents=[common], help="zeta'(-lambda, z)")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--z", type=_rational, required=True)
    p = evsub.add_parser("gamman", parents=[common], help="log Gamma_n(z)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", type=_rational, required=True)
    p = evsub.add_parser("barnesg", parents=[common], help="log G(z)")
    p.add_argument("--z", type=_rational, required=True)
    for name in ("ppoly", "qpoly"):
        p = evsub.add_parser(name, parents=[common], help=f"{name[0].upper()}_(k,n)(z) coefficients")
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--at", type=_rational, default=None, help="also evaluate exactly at this rational z")

    p = sub.add_parser("sum", parents=[common], help="sum a series", epilog=GRAMMAR_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("series")
    p.add_argument("--regularize", action="store_true", help="report the constant term of a divergent series")

    p = sub.add_parser("product", parents=[common], help="evaluate a Melzak product", epilog=GRAMMAR_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("product")

    p = sub.add_parser("dilcher", parents=[common], help="D_k closed form and oracle")
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the identity and oracle checks")
    p.add_argument("--suite", choices=("all", "identities", "oracle"), default="all")
    return parser


# -- output helpers ----------------------------------------------------------------


class _Out:
    def __init__(self, args, stream: TextIO):
        self.digits = args.precision
        self.stream = stream

    def num(self, v: Optional[float]) -> str:
        if v is None:
            return "n/a"
        return f"{v + 0.0:.{self.digits}g}"  # + 0.0 folds -0.0 into 0.0

    def small(self, v: Optional[float]) -> str:
        return "n/a" if v is None else f"{v:.2e}"

    def jnum(self, v: Optional[float]):
        if v is None or not math.isfinite(v):
            return None
        return float(f"{v + 0.0:.{self.digits}g}")

    def lines(self, rows: list[tuple[str, str]]) -> None:
        width = max(len(k) for k, _ in rows)
        for k, v in rows:
            self.stream.write(f"{k.ljust(width)}  {v}\n")

    def json(self, payload: dict) -> None:
        self.stream.write(json.dumps(payload, indent=2, allow_nan=False) + "\n")


def _record(command, inputs, value, atoms, oracle, oracle_err, residual, out: _Out, **extra) -> dict:
    rec = {
        "command": command,
        "inputs": inputs,
        "value": value if isinstance(value, (list, str)) or value is None else out.jnum(value),
        "closed_form_atoms": list(atoms),
        "oracle": None if oracle is None else {"value": out.jnum(oracle), "estimated_error": out.jnum(oracle_err)},
        "residual": out.jnum(residual),
    }
    rec.update(extra)
    return rec


def _qstr(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_residual(residual: Optional[float], tol: float, err: TextIO) -> int:
    if residual is not None and not residual <= tol:
        err.write(f"verification failed: residual {residual:.2e} exceeds tolerance {tol:.2e}\n")
        return 2
    return 0


# -- commands ----------------------------------------------------------------------


def _cmd_eval(args, out: _Out, fmt: str, err: TextIO) -> int:
    from . import gammas, hurwitz, oracle, pqpoly

    fn = args.function
    if fn in ("ppoly", "qpoly"):
        poly = (pqpoly.p_poly if fn == "ppoly" else pqpoly.q_poly)(args.k, args.n)
        coeffs = [_qstr(c) for c in poly.coeffs]
        at_value = None if args.at is None else poly(args.at)
        inputs = {"k": args.k, "n": args.n}
        if args.at is not None:
            inputs["at"] = _qstr(args.at)
        if fmt == "json":
            extra = {} if at_value is None else {"value_at": _qstr(at_value)}
            out.json(_record(f"eval {fn}", inputs, coeffs, [], None, None, None, out, **extra))
        else:
            label = "P" if fn == "ppoly" else "Q"
            rows = [(f"{label}_({args.k},{args.n})(z)", str(poly)), ("coefficients", "[" + ", ".join(coeffs) + "]")]
            if at_value is not None:
                rows.append((f"{label}_({args.k},{args.n})({_qstr(args.at)})", _qstr(at_value)))
            out.lines(rows)
        return 0

    z = float(args.z)
    if fn == "zetaprime":
        value = hurwitz.zeta_sderiv_neg(args.lam, z)
        ref = oracle.finite_difference_sderiv(args.lam, z)
        residual = abs(value - ref)
        label = f"zeta'({-args.lam}, {_qstr(args.z)})"
        inputs = {"lambda": args.lam, "z": _qstr(args.z)}
        atoms = [label]
    elif fn == "gamman":
        value = gammas.log_multiple_gamma(args.n, z)
        ref = residual = None
        label = f"log Gamma_{args.n}({_qstr(args.z)})"
        inputs = {"n": args.n, "z": _qstr(args.z)}
        atoms = [label]
    else:
        value = gammas.log_barnes_g(z)
        ref = residual = None
        label = f"log G({_qstr(args.z)})"
        inputs = {"z": _qstr(args.z)}
        atoms = [label]
    if fmt == "json":
        out.json(_record(f"eval {fn}", inputs, value, atoms, ref, None, residual, out))
    else:
        rows = [(label, out.num(value))]
        if ref is not None:
            rows += [("finite differences", out.num(ref)), ("residual", out.small(residual))]
        out.lines(rows)
    if residual is not None and args.tolerance is not None:
        return _check_residual(residual / max(1.0, abs(value)), args.tolerance, err)
    return 0


def _oracle_series(spec, N: int):
    from .oracle import partial_sum_extrapolated

    try:
        return partial_sum_extrapolated(spec, N=N, levels=3), None
    except (OracleError, OverflowError, DomainError, ValueError) as exc:
        return None, str(exc)


def _cmd_sum(args, out: _Out, fmt: str, err: TextIO) -> int:
    from .seriesengine import evaluate_series
    from .sparser import parse_series, unparse

    spec = parse_series(args.series)
    result = evaluate_series(spec)
    canonical = unparse(spec)
    if not result.convergent and not args.regularize:
        err.write(
            f"error: series diverges; partial sums grow like {result.divergent_profile.format()}\n"
            "use --regularize for the constant term\n"
        )
        return 1
    value = result.value
    report, note = (None, "divergent series, no oracle") if not result.convergent else _oracle_series(spec, args.oracle_n)
    residual = None if report is None else abs(value - report.extrapolated)
    atoms = [str(a) for a in result.constant_term.atoms()]
    inputs = {"series": args.series, "regularize": bool(args.regularize)}
    if fmt == "json":
        out.json(
            _record(
                "sum", inputs, value, atoms,
                None if report is None else report.extrapolated,
                None if report is None else report.estimated_error,
                residual, out,
                convergent=result.convergent,
                divergent_profile=result.divergent_profile.format() if not result.convergent else None,
                closed_form=result.constant_term.format(),
            )
        )
    else:
        rows = [("series", canonical), ("status", "convergent" if result.convergent else "divergent (regularized)")]
        if not result.convergent:
            rows.append(("profile", result.divergent_profile.format()))
        rows += [("value", out.num(value)), ("closed form", result.constant_term.format())]
        if report is not None:
            rows += [
                ("oracle", f"{out.num(report.extrapolated)}  (N = {report.N}, levels = {report.levels}, "
                 f"estimated error {out.small(report.estimated_error)})"),
                ("residual", out.small(residual)),
            ]
        else:
            rows.append(("oracle", note or "n/a"))
        out.lines(rows)
    tol = DEFAULT_TOLERANCE if args.tolerance is None else args.tolerance
    return _check_residual(residual, tol, err)


def product_factors(spec: ProductSpec) -> list[str]:
    """Human-readable factors of a product's closed form at the given ``x``."""
    x = spec.x

    def q(c):
        return _qstr(Fraction(c))

    if spec.kind == "melzak_linear":
        return [
            f"exp({q(-x)})",
            f"Gamma({q(x + Fraction(1, 2))})",
            "Gamma(1/2)^-1",
            f"G({q(x + Fraction(1, 2))})^2",
            f"G({q(x + 1)})^-2",
            "G(1/2)^-2",
        ]
    h = Fraction(3, 2)
    out = [
        f"cos(pi*{q(x)})/pi" if spec.start_index == 1 else f"cos(pi*{q(x)})/(pi (1 - 4*({q(x)})^2))",
        f"exp(2*({q(x)})^2)",
        "exp(7 zeta(3)/(2 pi^2))",
        f"G({q(1 + x)})^4",
        f"G({q(1 - x)})^4",
        f"Gamma_3({q(1 - x)})^8",
        f"Gamma_3({q(1 + x)})^8",
        f"Gamma_3({q(h - x)})^-8",
        f"Gamma_3({q(h + x)})^-8",
    ]
    for k in range(2, spec.start_index):
        out.append(f"(1 - 4*({q(x)})^2/{k * k})^({k * k * (-1) ** k})")
    return out


def _cmd_product(args, out: _Out, fmt: str, err: TextIO) -> int:
    from .oracle import partial_product_extrapolated
    from .products import melzak_product, melzak_squared_product
    from .sparser import parse_product, unparse
    from .verification import melzak_printed, melzak_squared_printed

    spec = parse_product(args.product)
    if spec.kind == "melzak_linear":
        value = melzak_product(float(spec.x))
        special = _MELZAK_FORMS.get(spec.x)
        special_value = melzak_printed().get(spec.x)
    else:
        value = melzak_squared_product(float(spec.x), spec.start_index)
        key = (spec.x, spec.start_index)
        special = _MELZAK2_FORMS.get(key)
        special_value = melzak_squared_printed().get(key)
    report = partial_product_extrapolated(spec, N=args.oracle_n, levels=3)
    residual = abs(value - report.extrapolated)
    factors = product_factors(spec)
    if fmt == "json":
        extra = {"special_form": special, "special_value": out.jnum(special_value)} if special else {}
        out.json(
            _record("product", {"product": args.product}, value, factors, report.extrapolated,
                    report.estimated_error, residual, out, **extra)
        )
    else:
        rows = [("product", unparse(spec)), ("closed form", out.num(value))]
        if special:
            rows.append(("", f"= {special} = {out.num(special_value)}"))
        rows += [
            ("factors", " * ".join(factors)),
            ("oracle", f"{out.num(report.extrapolated)}  (N = {report.N}, levels = {report.levels}, "
             f"estimated error {out.small(report.estimated_error)})"),
            ("residual", out.small(residual)),
        ]
        out.lines(rows)
    tol = DEFAULT_TOLERANCE if args.tolerance is None else args.tolerance
    return _check_residual(residual, tol, err)


def _cmd_dilcher(args, out: _Out, fmt: str, err: TextIO) -> int:
    from .seriesengine import dilcher_spec, dilcher_sum

    form = dilcher_sum(args.k)
    value = form.value
    report, note = _oracle_series(dilcher_spec(args.k), min(args.oracle_n, 2**16))
    residual = None if report is None else abs(value - report.extrapolated)
    atoms = [str(a) for a in form.atoms()]
    if fmt == "json":
        out.json(
            _record("dilcher", {"k": args.k}, value, atoms,
                    None if report is None else report.extrapolated,
                    None if report is None else report.estimated_error,
                    residual, out, closed_form=form.format())
        )
    else:
        rows = [(f"D_{args.k}", out.num(value)), ("closed form", form.format())]
        if report is not None:
            rows += [
                ("oracle", f"{out.num(report.extrapolated)}  (N = {report.N}, levels = {report.levels}, "
                 f"estimated error {out.small(report.estimated_error)})"),
                ("residual", out.small(residual)),
            ]
        else:
            rows.append(("oracle", note))
        out.lines(rows)
    if args.tolerance is None:
        # the oracle's own error estimate bounds what can be asked of it
        tol = DEFAULT_TOLERANCE if report is None else max(DEFAULT_TOLERANCE, 10 * report.estimated_error)
    else:
        tol = args.tolerance
    return _check_residual(residual, tol, err)


def _cmd_verify(args, out: _Out, fmt: str, err: TextIO) -> int:
    from .verification import run_suite

    results = run_suite(args.suite)
    if fmt == "json":
        out.json(
            {
                "command": "verify",
                "inputs": {"suite": args.suite},
                "results": [
                    {
                        "suite": r.suite,
                        "name": r.name,
                        "passed": r.passed,
                        "residual": None if not math.isfinite(r.residual) else float(f"{r.residual:.3e}"),
                        "tolerance": r.tolerance,
                        "error": r.error,
                    }
                    for r in results
                ],
                "passed": all(r.passed for r in results),
            }
        )
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            tail = f"  {r.error}" if r.error else ""
            out.stream.write(
                f"{status}  {r.suite:<10}  {r.name:<{width}}  residual {r.residual:.2e}  tol {r.tolerance:.0e}{tail}\n"
            )
        failed = sum(not r.passed for r in results)
        out.stream.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if all(r.passed for r in results) else 2


_COMMANDS = {
    "eval": _cmd_eval,
    "sum": _cmd_sum,
    "product": _cmd_product,
    "dilcher": _cmd_dilcher,
    "verify": _cmd_verify,
}


def _caret(text: str, pos: int) -> str:
    return f"  {text}\n  {' ' * pos}^\n"


def run(argv: Optional[list[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Run one command; returns the exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    fmt = args.format or os.environ.get(FORMAT_ENV) or "text"
    if fmt not in ("text", "json"):
        stderr.write(f"error: {FORMAT_ENV} must be 'text' or 'json', got {fmt!r}\n")
        return 1
    out = _Out(args, stdout)
    try:
        return _COMMANDS[args.command](args, out, fmt, stderr)
    except ParseError as exc:
        text = getattr(args, "series", None) or getattr(args, "product", None) or ""
        stderr.write(f"error: {exc}\n")
        if text and 0 <= exc.position <= len(text):
            stderr.write(_caret(text, exc.position))
        return 1
    except (DomainError, UnsupportedError, ValueError, OverflowError, ArithmeticError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main(argv: Optional[list[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
