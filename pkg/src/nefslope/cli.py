"""Command-line front end.

Subcommands read instance JSON (a file path, inline JSON, or "-" for
stdin), run the corresponding operation and emit certificate JSON on
stdout with a one-line human summary on stderr.  Output is byte-stable for
fixed input and flags.

Exit codes: 0 success / consistent-with-simple, 10 non-simplicity witness
(scan only), 2 input error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators, simplicity
from .errors import InputError, NefslopeError, PreconditionError
from .exactio import format_rational, parse_rational
from .numdata import (
    IntersectionProfile,
    SymMatrixModel,
    ValidationLevel,
    profile_from_matrix,
    validate,
)
from .polyroot import DEFAULT_WIDTH
from .slope import certify_rationality, is_nef, slope, slope_lower_bound

EXIT_OK = 0
EXIT_WITNESS = 10
EXIT_INPUT = 2
EXIT_PRECONDITION = 3

_LEVELS = {
    "syntactic": ValidationLevel.SYNTACTIC,
    "spectral": ValidationLevel.SPECTRAL,
    "hodge": ValidationLevel.SURFACE_HODGE,
}


def _write_output(args, text: str) -> None:
    output = getattr(args, "output", None)
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise InputError(f"cannot write output: {exc}") from exc
    else:
        print(text)


def _read_payload(text_or_path: str):
    if text_or_path == "-":
        raw = sys.stdin.read()
    elif text_or_path.lstrip().startswith(("{", "[")):
        raw = text_or_path
    else:
        try:
            with open(text_or_path, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON at line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}"
        ) from exc


def _load_profile(data, level: ValidationLevel) -> IntersectionProfile:
    if isinstance(data, dict) and "F" in data:
        profile = profile_from_matrix(SymMatrixModel.from_json(data))
    else:
        profile = IntersectionProfile.from_json(data)
    report = validate(profile, level)
    if not report.ok:
        raise PreconditionError(
            "validation failed: " + "; ".join(v.message for v in report.violations)
        )
    return profile


def _emit(args, payload, summary: str) -> None:
    _write_output(args, json.dumps(payload, indent=2))
    print(summary, file=sys.stderr)


def _cmd_slope(args) -> int:
    profile = _load_profile(_read_payload(args.input), args.level)
    result = slope(profile).refined(args.width)
    if result.infinite:
        _emit(args, result.to_json(), "slope: infinite")
        return EXIT_OK
    verdict = "rational" if result.slope_fraction is not None else "irrational"
    _emit(args, result.to_json(), f"slope: {result.slope} ({verdict})")
    return EXIT_OK


def _cmd_nef(args) -> int:
    profile = _load_profile(_read_payload(args.input), args.level)
    report = is_nef(profile)
    word = "nef" if report.nef else f"not nef (k={report.witness_k})"
    if report.ample:
        word += ", ample"
    elif report.nef:
        word += ", not ample"
    _emit(args, report.to_json(), f"nefness: {word}")
    return EXIT_OK


def _cmd_certify(args) -> int:
    profile = _load_profile(_read_payload(args.input), args.level)
    result = slope(profile).refined(args.width)
    certify_rationality(profile)
    payload = result.to_json()["rationality"]
    if payload["verdict"] == "rational":
        summary = f"rationality: rational {payload['p']}/{payload['q']}"
    else:
        summary = "rationality: irrational"
    _emit(args, payload, summary)
    return EXIT_OK


def _cmd_bound(args) -> int:
    profile = _load_profile(_read_payload(args.input), args.level)
    bound = slope_lower_bound(profile)
    _emit(args, {"bound": format_rational(bound)}, f"lower bound: {format_rational(bound)}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    data = _read_payload(args.input)
    if isinstance(data, dict):
        data = data.get("instances", data)
    if not isinstance(data, list):
        raise InputError("scan input must be a JSON array of instances")
    items = []
    for idx, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise InputError(f"instance {idx} is not a JSON object")
        label = str(entry.get("label", f"instance-{idx}"))
        items.append((label, _load_profile(entry, args.level)))
    result = simplicity.scan(items, jobs=args.jobs)
    witnesses = sum(1 for e in result.entries if e.verdict == simplicity.WITNESS)
    _emit(args, result.to_json(), f"scan: {result.overall} ({witnesses} witness(es), {len(items)} instance(s))")
    return EXIT_WITNESS if result.witness_found else EXIT_OK


def _cmd_gen(args) -> int:
    spec = generators.GenSpec(kind=args.kind, seed=args.seed, count=args.count, n=args.n, bound=args.bound)
    out = []
    for idx, inst in enumerate(generators.gen_random(spec)):
        record = {"label": f"{args.kind}-{idx}"}
        record.update(inst.to_json())
        out.append(record)
    _emit(args, out, f"gen: {len(out)} {args.kind} instance(s), seed {args.seed}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nefslope",
        description="Exact nef thresholds, rationality certificates and simplicity scans "
        "for numerically presented polarized abelian varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_width=True):
        p.add_argument("--input", required=True, help="input path, inline JSON, or '-' for stdin")
        p.add_argument("--output", default=None, help="write the JSON payload to this path instead of stdout")
        p.add_argument(
            "--level",
            choices=sorted(_LEVELS),
            default="syntactic",
            help="input validation level (default: syntactic)",
        )
        if with_width:
            p.add_argument(
                "--width",
                type=parse_rational,
                default=None,
                help="refinement width for displayed intervals (rational, e.g. 1/1000000 or 1e-12)",
            )

    p = sub.add_parser("slope", help="nef threshold with rationality certificate")
    add_common(p)
    p.set_defaults(func=_cmd_slope)

    p = sub.add_parser("nef", help="coordinate-wise nefness test of a bundle profile")
    add_common(p, with_width=False)
    p.set_defaults(func=_cmd_nef)

    p = sub.add_parser("certify", help="rationality certificate of a finite threshold")
    add_common(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("bound", help="coefficient lower bound for the threshold")
    add_common(p, with_width=False)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("scan", help="scan labelled instances for non-simplicity witnesses")
    add_common(p, with_width=False)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (deterministic merge)")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("gen", help="emit seeded instance JSON arrays")
    p.add_argument("--output", default=None, help="write the JSON payload to this path instead of stdout")
    p.add_argument("--kind", choices=generators.KINDS, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--n", type=int, default=2, help="dimension for matrix kinds")
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "width", None) is None and hasattr(args, "width"):
        env = os.environ.get("NEFSLOPE_WIDTH")
        args.width = parse_rational(env) if env else DEFAULT_WIDTH
    if hasattr(args, "width") and args.width <= 0:
        print("input error: width must be positive", file=sys.stderr)
        return EXIT_INPUT
    if hasattr(args, "level"):
        args.level = _LEVELS[args.level]
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition violation: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NefslopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
