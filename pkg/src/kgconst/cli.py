"""Command-line interface: constant computation, identity verification, and
convergence-trace emission.

Grammar::

    kgconst (compute <CONST> | verify <IDENTITY|all> | list | trace <TARGET>)
            [--digits N] [--max-terms N] [--format text|json|csv] [--out PATH]
            [--timings]

Exit codes: 0 success/verified, 2 not converged, 3 identity failed beyond
tolerance, 64 usage error.

Numbers are serialized as decimal strings carrying exactly ``digits``
significant digits, never as binary floats.  Output is byte-deterministic
for identical argv; measured runtimes are therefore suppressed (reported as
0.0) unless --timings is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from mpmath import mp, mpf

from . import elliptic, identities, khintchine, series
from .core import PrecisionContext, const_KG, const_L, const_pi
from .errors import InvalidPrecision, KgconstError, MaxTermsExceeded, NoConvergence

EXIT_OK = 0
EXIT_NOT_CONVERGED = 2
EXIT_IDENTITY_FAILED = 3
EXIT_USAGE = 64


@dataclass(frozen=True)
class RunConfig:
    command: str
    target: str
    digits: int = 20
    max_terms: int = series.MAX_OUTER_TERMS
    format: str = "text"
    trace_path: Optional[str] = None
    timings: bool = False


def _fourier_a0(ctx):
    return series.fourier_a(0, ctx).value


_CONSTANTS = {
    "PI": (const_pi, "ratio of circumference to diameter"),
    "L": (const_L, "ln(1+sqrt(2)), the a0 integral up to 8/pi"),
    "S": (series.limit_S, "limit of the alternating partial sums, (sqrt(2)/2) L"),
    "KG": (const_KG, "Grothendieck-Krivine constant pi/(2L)"),
    "A0": (_fourier_a0, "zeroth Fourier coefficient (8/pi) L"),
    "HAAGERUP": (elliptic.haagerup_bound, "Haagerup's complex bound 1/(2K(i)-E(i))"),
    "X0": (lambda ctx: elliptic.solve_x0(ctx).x0, "root of the complex-case equation"),
    "KC_UPPER": (elliptic.kc_upper, "Krivine complex upper limit 8/(pi(x0+1))"),
    "KHINTCHINE": (lambda ctx: khintchine.khintchine_accelerated(ctx, 6).value,
                   "Khintchine product (accurate to ~6-8 digits by construction)"),
}

_TRACE_TARGETS = ("double_series", "partial_sum_S", "khintchine_partial")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="kgconst", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--digits", type=int, default=20)
        p.add_argument("--max-terms", type=int, default=series.MAX_OUTER_TERMS)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None)
        p.add_argument("--timings", action="store_true")

    p = sub.add_parser("compute", help="compute one named constant")
    p.add_argument("target")
    add_common(p)
    p = sub.add_parser("verify", help="verify one identity, or 'all'")
    p.add_argument("target")
    add_common(p)
    p = sub.add_parser("list", help="list constants and identities")
    add_common(p)
    p = sub.add_parser("trace", help="emit a convergence trace as CSV")
    p.add_argument("target")
    add_common(p)
    return parser


def _nstr(value, digits):
    return mp.nstr(mpf(value), digits, strip_zeros=False)


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report_record(report, cfg):
    return {
        "target": report.id.value,
        "lhs": _nstr(report.lhs, cfg.digits),
        "rhs": _nstr(report.rhs, cfg.digits),
        "residual": _nstr(report.residual, cfg.digits),
        "digits_agreed": report.digits_agreed,
        "passed": report.passed,
        "runtime_ms": report.runtime_ms if cfg.timings else 0.0,
        "paper_anchor": identities.anchor(report.id),
    }


def _run_compute(cfg: RunConfig) -> int:
    if cfg.target not in _CONSTANTS:
        print(f"error: unknown constant {cfg.target!r}; valid targets: "
              f"{', '.join(_CONSTANTS)}", file=sys.stderr)
        return EXIT_USAGE
    ctx = PrecisionContext(digits=cfg.digits)
    fn, description = _CONSTANTS[cfg.target]
    try:
        value = fn(ctx)
    except (NoConvergence, MaxTermsExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    record = {
        "target": cfg.target,
        "value": _nstr(value, cfg.digits),
        "runtime_ms": 0.0,
        "paper_anchor": description,
    }
    if cfg.format == "json":
        _emit(json.dumps(record, indent=2) + "\n", cfg.trace_path)
    elif cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(record), lineterminator="\n")
        writer.writeheader()
        writer.writerow(record)
        _emit(buf.getvalue(), cfg.trace_path)
    else:
        _emit(f"{cfg.target} = {record['value']}\n", cfg.trace_path)
    return EXIT_OK


def _run_verify(cfg: RunConfig) -> int:
    valid = [i.value for i in identities.REGISTRY_ORDER]
    ctx = PrecisionContext(digits=cfg.digits)
    if cfg.target == "all":
        reports = identities.verify_all(ctx)
    elif cfg.target in valid:
        reports = [identities.verify(cfg.target, ctx)]
    else:
        print(f"error: unknown identity {cfg.target!r}; valid targets: "
              f"all, {', '.join(valid)}", file=sys.stderr)
        return EXIT_USAGE
    records = [_report_record(r, cfg) for r in reports]
    if cfg.format == "json":
        payload = records[0] if len(records) == 1 and cfg.target != "all" else records
        _emit(json.dumps(payload, indent=2) + "\n", cfg.trace_path)
    elif cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        _emit(buf.getvalue(), cfg.trace_path)
    else:
        lines = []
        for rec in records:
            status = "PASS" if rec["passed"] else "FAIL"
            lines.append(f"{status} {rec['target']}: residual={rec['residual']} "
                         f"digits_agreed={rec['digits_agreed']}")
        _emit("\n".join(lines) + "\n", cfg.trace_path)
    not_converged = any("error" in r.params and "NoConvergence" in r.params["error"]
                        for r in reports)
    if not all(r.passed for r in reports):
        return EXIT_NOT_CONVERGED if not_converged else EXIT_IDENTITY_FAILED
    return EXIT_OK


def _run_list(cfg: RunConfig) -> int:
    lines = ["constants:"]
    for name, (_, description) in _CONSTANTS.items():
        lines.append(f"  {name:12s} {description}")
    lines.append("identities:")
    for ident in identities.REGISTRY_ORDER:
        lines.append(f"  {ident.value:34s} {identities.anchor(ident)}")
    lines.append("trace targets:")
    for name in _TRACE_TARGETS:
        lines.append(f"  {name}")
    _emit("\n".join(lines) + "\n", cfg.trace_path)
    return EXIT_OK


def _checkpoints(final_n):
    points = []
    n = 1
    while n < final_n:
        points.append(n)
        n *= 10
    points.append(final_n)
    return points


def _trace_rows(target, ctx, max_terms):
    """(index, partial value, residual vs final value) rows plus final residual."""
    if target == "double_series":
        final = series.double_series(ctx, max_terms=max_terms).value
        with ctx.workprec():
            needed = series._pure_truncation_N(ctx.tolerance)
            last = min(needed, max_terms)
            rows = []
            tail = series.limit_S(ctx)
            acc = mpf(0)
            marks = set(_checkpoints(last))
            for n in range(1, last + 1):
                sign = 1 if n % 2 == 0 else -1
                tail -= sign * (mpf(1) / (4 * n - 1) - mpf(1) / (4 * n - 3))
                acc += tail * tail
                if n in marks:
                    rows.append((n, acc, abs(acc - final)))
        return rows
    if target == "partial_sum_S":
        final = series.limit_S(ctx)
        with ctx.workprec():
            needed = 1
            while series.inner_term_magnitude(needed + 1, ctx) >= ctx.tolerance:
                needed += 1
                if needed >= max_terms:
                    break
            last = min(needed, max_terms)
            rows = []
            acc = mpf(0)
            marks = set(_checkpoints(last))
            for n in range(1, last + 1):
                acc += series.inner_term(n, ctx)
                if n in marks:
                    rows.append((n, acc, abs(acc - final)))
        return rows
    if target == "khintchine_partial":
        ctx_final = ctx
        final = khintchine.khintchine_accelerated(ctx_final, 6).value
        last = min(10 ** 6, max_terms)
        rows = []
        for n in _checkpoints(last):
            value = khintchine.khintchine_partial(n, ctx).value
            rows.append((n, value, abs(value - final)))
        return rows
    raise KeyError(target)


def _run_trace(cfg: RunConfig) -> int:
    if cfg.target not in _TRACE_TARGETS:
        print(f"error: unknown trace target {cfg.target!r}; valid targets: "
              f"{', '.join(_TRACE_TARGETS)}", file=sys.stderr)
        return EXIT_USAGE
    ctx = PrecisionContext(digits=cfg.digits)
    try:
        rows = _trace_rows(cfg.target, ctx, cfg.max_terms)
    except (NoConvergence, MaxTermsExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "value", "residual"])
    for index, value, residual in rows:
        writer.writerow([index, _nstr(value, cfg.digits), _nstr(residual, cfg.digits)])
    try:
        _emit(buf.getvalue(), cfg.trace_path)
    except OSError as exc:
        print(f"error: cannot write trace: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    final_residual = rows[-1][2]
    with ctx.workprec():
        return EXIT_OK if final_residual < ctx.tolerance else EXIT_NOT_CONVERGED


def run(argv) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    cfg = RunConfig(command=ns.command, target=getattr(ns, "target", ""),
                    digits=ns.digits, max_terms=ns.max_terms, format=ns.format,
                    trace_path=ns.out, timings=ns.timings)
    try:
        if cfg.command == "compute":
            return _run_compute(cfg)
        if cfg.command == "verify":
            return _run_verify(cfg)
        if cfg.command == "list":
            return _run_list(cfg)
        if cfg.command == "trace":
            return _run_trace(cfg)
    except InvalidPrecision as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KgconstError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_USAGE


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
