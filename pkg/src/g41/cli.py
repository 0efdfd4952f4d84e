"""Command-line entry point: ``g41 eval|table|generators|wave|verify``.

Exit codes: 0 success, 1 a check or computation failed, 2 usage or parse
error.  All machine-readable output goes to stdout as UTF-8.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

from . import __version__
from .algebra import I, Multivector
from .errors import ExprSyntaxError, G41Error, NotUnitary
from .expr import evaluate, format_coefficient, format_multivector, parse
from .matrix_rep import format_matrix, matrix_to_json, rep
from .monogenic import (
    FiveMomentum,
    GaugePotential,
    PlaneWave,
    dirac_residual,
    gauge_residual,
    monogenic_residual,
    nilpotent_amplitude,
    refinement_check,
    wave_residual,
)
from .spectrum import table_emit
from .symmetry import GROUPS, nonzero_constants, structure_constants
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suite

SCHEMA = 1
#: evaluation point for ``wave --numeric-check``
STENCIL_POINT = (0.1, -0.2, 0.3, 0.05, -0.15)


class UsageError(Exception):
    pass


def _floats(text: str, n: int, flag: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects {n} comma-separated numbers, got {text!r}") from None
    if len(vals) != n:
        raise UsageError(f"{flag} expects {n} comma-separated numbers, got {len(vals)}")
    return vals


def _parse_expr(src: str) -> Multivector:
    try:
        return evaluate(parse(src))
    except ExprSyntaxError as exc:
        exc.source = src
        raise


def _syntax_message(src: str, err: ExprSyntaxError) -> str:
    # caret under the offending character; offsets are bytes, the caret is per character
    prefix = src.encode("utf-8")[: err.offset].decode("utf-8", errors="ignore")
    lines = [f"error: {err}", f"  {src}", "  " + " " * len(prefix) + "^"]
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".g41-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _coeff_json(x: Multivector) -> dict:
    return {name: format_coefficient(c) for name, c in x.to_dict().items()}


# -- subcommands -----------------------------------------------------------------


def cmd_eval(args) -> int:
    value = _parse_expr(args.expr)
    if args.json:
        doc = {"schema": SCHEMA, "expr": args.expr, "value": format_multivector(value), "coefficients": _coeff_json(value)}
        if args.rep:
            doc["rep"] = matrix_to_json(rep(value))
        _write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        return 0
    text = format_multivector(value) + "\n"
    if args.rep:
        text += format_matrix(rep(value)) + "\n"
    _write(text)
    return 0


def cmd_table(args) -> int:
    _write(table_emit(args.format), args.out)
    return 0


def cmd_generators(args) -> int:
    gens = GROUPS[args.group]()
    f = structure_constants(gens) if args.structure_constants else None
    if args.format == "json":
        doc = {"schema": SCHEMA, "group": args.group, "generators": []}
        for name, x in zip(gens.names, gens.elements):
            entry = {"name": name, "value": format_multivector(x)}
            if args.matrices:
                entry["matrix"] = matrix_to_json(rep(x))
            doc["generators"].append(entry)
        if f is not None:
            doc["structure_constants"] = [{"a": a, "b": b, "c": c, "f": v} for a, b, c, v in nonzero_constants(f)]
        _write(json.dumps(doc, indent=2) + "\n")
        return 0
    lines = []
    for name, x in zip(gens.names, gens.elements):
        lines.append(f"{name} = {format_multivector(x)}")
        if args.matrices:
            lines.append(format_matrix(rep(x)))
    if f is not None:
        lines.append("f_abc (a < b < c, nonzero):")
        for a, b, c, v in nonzero_constants(f):
            lines.append(f"  f[{a},{b},{c}] = {v:.12g}")
    _write("\n".join(lines) + "\n")
    return 0


def cmd_wave(args) -> int:
    p = FiveMomentum.of(_floats(args.p, 5, "--p"))
    u = I if args.u is None else _parse_expr(args.u)
    amplitude = nilpotent_amplitude(p, args.branch) if args.amplitude is None else _parse_expr(args.amplitude)
    try:
        w = PlaneWave(amplitude, u, p, args.branch)
    except NotUnitary as exc:
        raise UsageError(f"--u: {exc}") from None

    results = {
        "on_shell": p.on_shell(),
        "shell": p.shell(),
        "amplitude": format_multivector(amplitude),
        "monogenic_residual": monogenic_residual(w),
        "wave_residual": wave_residual(w),
        "dirac_residual": dirac_residual(w),
    }
    if args.A is not None:
        results["gauge_residual"] = gauge_residual(w, GaugePotential.of(_floats(args.A, 4, "--A")))
    if args.numeric_check is not None:
        if args.numeric_check <= 0:
            raise UsageError("--numeric-check needs a positive step")
        rc = refinement_check(w, STENCIL_POINT, args.numeric_check)
        results["numeric"] = {"h": rc.h, "residual": rc.residual_h, "residual_half_step": rc.residual_half, "ratio": rc.ratio if math.isfinite(rc.ratio) else None}

    if args.json:
        doc = {"schema": SCHEMA}
        for k, v in results.items():
            if isinstance(v, Multivector):
                doc[k] = {"value": format_multivector(v), "max_abs": v.max_abs()}
            else:
                doc[k] = v
        _write(json.dumps(doc, indent=2) + "\n")
        return 0
    lines = []
    for k, v in results.items():
        if isinstance(v, Multivector):
            lines.append(f"{k}: {format_multivector(v)}  (max |coeff| {v.max_abs():.3g})")
        elif isinstance(v, dict):
            lines.append(f"{k}: " + ", ".join(f"{a}={b:.6g}" if b is not None else f"{a}=undefined" for a, b in v.items()))
        elif isinstance(v, bool):
            lines.append(f"{k}: {str(v).lower()}")
        elif isinstance(v, float):
            lines.append(f"{k}: {v:.17g}")
        else:
            lines.append(f"{k}: {v}")
    _write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.seed)
    _write(report.dumps() if args.json else report.to_text())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="g41", description="Geometric algebra G(4,1) toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a multivector expression")
    p.add_argument("expr")
    p.add_argument("--rep", action="store_true", help="also print the 4x4 complex matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="emit the table of unitary elements and quantum numbers")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", metavar="FILE", help="write atomically to FILE instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("generators", help="list SU(3)/SU(4) generators")
    p.add_argument("--group", choices=tuple(GROUPS), default="lambda")
    p.add_argument("--matrices", action="store_true")
    p.add_argument("--structure-constants", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("wave", help="residuals of a plane wave")
    p.add_argument("--p", required=True, metavar="p0,p1,p2,p3,p4", help="use --p=... when p0 is negative")
    p.add_argument("--branch", choices=("+", "-"), default="+")
    p.add_argument("--u", metavar="EXPR", help="imaginary unit, must square to -1 (default i)")
    p.add_argument("--amplitude", metavar="EXPR", help="psi0 (default: the nilpotent vector)")
    p.add_argument("--A", metavar="A0,A1,A2,A3", help="constant gauge potential")
    p.add_argument("--numeric-check", type=float, metavar="h", help="finite-difference cross-check with step h")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_wave)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ExprSyntaxError as exc:
        src = getattr(exc, "source", "")
        sys.stderr.write(_syntax_message(src, exc) if src else f"error: {exc}\n")
        return 2
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except G41Error as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc.strerror or exc}: {exc.filename or ''}\n")
        return 1


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
