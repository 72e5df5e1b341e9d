"""Command-line front end.

Subcommands: spectrum, charpoly, energy, bounds, interlace, check, enumerate.
Exit codes: 0 success, 1 a `check` run found failing assertions, 2 input
could not be parsed or read, 3 a precondition was violated (isolated vertex,
disconnected graph, size cap), 4 the output path could not be written.
All numbers are printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .campaign import (
    CampaignConfig,
    format_float,
    json_object,
    json_scalar,
    parse_campaign_config,
    render_report,
    run_campaign,
    summary_text,
    with_overrides,
)
from .graphs import MixedGraph, ParseError, parse_graph
from .spectra import (
    char_poly_combinatorial,
    char_poly_numeric,
    randic_spectrum,
)
from .matrices import randic_matrix
from .theorems import (
    BoundsReport,
    energy_bounds_report,
    entry_sum_bounds,
    interlacing_check,
    run_theorem_suite,
    smallest_eigenvalue_bound,
)


class _WriteError(Exception):
    pass


def _load_graph(path: str) -> MixedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _write_payload(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _WriteError(f"cannot write {path}: {exc}")


def _floats(values) -> str:
    return " ".join(format_float(v) for v in values)


def _json_list(values) -> str:
    return "[" + ", ".join(json_scalar(float(v)) for v in values) + "]"


def _cmd_spectrum(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    s = randic_spectrum(g)
    if args.format == "json":
        payload = json_object([
            ("eigenvalues", _json_list(s.eigenvalues)),
            ("energy", json_scalar(s.energy)),
            ("spectral_radius", json_scalar(s.rho)),
            ("min_modulus", json_scalar(s.sigma)),
            ("negative_count", json_scalar(s.negative_count)),
        ]) + "\n"
    else:
        payload = (
            f"eigenvalues: {_floats(s.eigenvalues)}\n"
            f"energy: {format_float(s.energy)}\n"
            f"spectral_radius: {format_float(s.rho)}\n"
            f"min_modulus: {format_float(s.sigma)}\n"
            f"negative_count: {s.negative_count}\n"
        )
    _write_payload(payload, args.output)
    return 0


def _fraction_str(c) -> str:
    return str(c) if isinstance(c, Fraction) else format_float(float(c))


def _cmd_charpoly(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    combinatorial = numeric = None
    if args.method in ("combinatorial", "both"):
        combinatorial = char_poly_combinatorial(g)
    if args.method in ("numeric", "both"):
        numeric = char_poly_numeric(randic_matrix(g))
    if args.format == "json":
        items = []
        if combinatorial is not None:
            coeffs = ", ".join(json_scalar(_fraction_str(c))
                               for c in combinatorial.coefficients)
            items.append(("combinatorial", "[" + coeffs + "]"))
        if numeric is not None:
            items.append(("numeric", _json_list(numeric.coefficients)))
        if combinatorial is not None and numeric is not None:
            items.append(("max_difference",
                          json_scalar(combinatorial.max_difference(numeric))))
        payload = json_object(items) + "\n"
    else:
        lines = []
        if combinatorial is not None:
            lines.append("method combinatorial")
            lines.extend(f"a_{k} {_fraction_str(c)}"
                         for k, c in enumerate(combinatorial.coefficients))
        if numeric is not None:
            lines.append("method numeric")
            lines.extend(f"a_{k} {format_float(c)}"
                         for k, c in enumerate(numeric.coefficients))
        if combinatorial is not None and numeric is not None:
            diff = combinatorial.max_difference(numeric)
            lines.append(f"max_difference {format_float(diff)}")
        payload = "\n".join(lines) + "\n"
    _write_payload(payload, args.output)
    return 0


def _cmd_energy(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    report = energy_bounds_report(g)
    pairs = [
        ("energy", report.energy),
        ("randic_inverse", report.randic_inverse),
        ("determinant", report.determinant),
        ("spectral_radius", report.rho),
        ("min_modulus", report.sigma),
    ]
    if args.format == "json":
        items = [(k, json_scalar(v)) for k, v in pairs]
        items.append(("negative_count", json_scalar(report.negative_count)))
        payload = json_object(items) + "\n"
    else:
        lines = [f"{k}: {format_float(v)}" for k, v in pairs]
        lines.append(f"negative_count: {report.negative_count}")
        payload = "\n".join(lines) + "\n"
    _write_payload(payload, args.output)
    return 0


def _record_json(rec) -> tuple[str, str]:
    body = json_object([
        ("lhs", json_scalar(rec.lhs)),
        ("rhs", json_scalar(rec.rhs)),
        ("slack", json_scalar(rec.slack)),
        ("satisfied", json_scalar(rec.satisfied)),
        ("skipped", json_scalar(rec.skipped)),
        ("reason", json_scalar(rec.reason)),
    ])
    return rec.name, body


def _record_line(rec) -> str:
    if rec.skipped:
        return f"skip {rec.name} ({rec.reason})"
    detail = ""
    if rec.slack is not None:
        detail = (f" lhs={format_float(rec.lhs)} rhs={format_float(rec.rhs)}"
                  f" slack={format_float(rec.slack)}")
    if not rec.satisfied:
        tail = f" ({rec.reason})" if rec.reason else ""
        return f"FAIL {rec.name}{detail}{tail}"
    note = f" note: {rec.reason}" if rec.reason and rec.slack is None else ""
    return f"pass {rec.name}{detail}{note}"


def _bounds_payload(g: MixedGraph, report: BoundsReport, fmt: str) -> str:
    extra = list(entry_sum_bounds(g).records)
    extra.append(smallest_eigenvalue_bound(g))
    records = extra + list(report.records)
    meta = [
        ("n", report.n),
        ("edges", report.m),
        ("randic_inverse", report.randic_inverse),
        ("determinant", report.determinant),
        ("spectral_radius", report.rho),
        ("min_modulus", report.sigma),
        ("negative_count", report.negative_count),
        ("energy", report.energy),
    ]
    if fmt == "json":
        checks = ", ".join(f"{json_scalar(name)}: {body}"
                           for name, body in map(_record_json, records))
        items = [(k, json_scalar(v)) for k, v in meta]
        items.append(("checks", "{" + checks + "}"))
        return json_object(items) + "\n"
    lines = [f"{k}: {v if isinstance(v, int) else format_float(v)}"
             for k, v in meta]
    lines.extend(_record_line(rec) for rec in records)
    return "\n".join(lines) + "\n"


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    report = energy_bounds_report(g)
    _write_payload(_bounds_payload(g, report, args.format), args.output)
    return 0


def _parse_edge_flag(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"--edge wants 'u,v', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"--edge wants two integers, got {text!r}")


def _cmd_interlace(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    pair = _parse_edge_flag(args.edge)
    result = interlacing_check(g, pair)
    if args.format == "json":
        verdicts = "[" + ", ".join(json_scalar(v) for v in result.verdicts) + "]"
        payload = json_object([
            ("edge", json_scalar(str(result.edge).replace(" ", ""))),
            ("original", _json_list(result.original.eigenvalues)),
            ("deleted", _json_list(result.reduced.eigenvalues)),
            ("verdicts", verdicts),
            ("worst_violation", json_scalar(result.worst_violation)),
            ("holds", json_scalar(result.holds)),
        ]) + "\n"
    else:
        marks = " ".join("pass" if v else "FAIL" for v in result.verdicts)
        payload = (
            f"edge: {result.edge}\n"
            f"original: {_floats(result.original.eigenvalues)}\n"
            f"deleted: {_floats(result.reduced.eigenvalues)}\n"
            f"verdicts: {marks}\n"
            f"worst_violation: {format_float(result.worst_violation)}\n"
            f"holds: {'true' if result.holds else 'false'}\n"
        )
    _write_payload(payload, args.output)
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    suite = run_theorem_suite(g)
    failures = suite.failures
    if args.format == "json":
        checks = ", ".join(f"{json_scalar(name)}: {body}" for name, body
                           in map(_record_json, suite.records))
        payload = json_object([
            ("checks", "{" + checks + "}"),
            ("failures", json_scalar(len(failures))),
            ("skips", json_scalar(len(suite.skips))),
            ("notes", json_scalar(len(suite.notes))),
        ]) + "\n"
    else:
        lines = [_record_line(rec) for rec in suite.records]
        lines.append(f"failures: {len(failures)} skips: {len(suite.skips)} "
                     f"notes: {len(suite.notes)}")
        payload = "\n".join(lines) + "\n"
    _write_payload(payload, args.output)
    return 1 if failures else 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.config:
        config = parse_campaign_config(Path(args.config).read_text("utf-8"))
    else:
        config = CampaignConfig()
    connected = None if args.connected_only is None \
        else args.connected_only == "true"
    config = with_overrides(
        config,
        n_min=args.n_min, n_max=args.n_max, connected_only=connected,
        min_degree=args.min_degree, sample_limit=args.sample_limit,
        seed=args.seed, format=args.format, output=args.output,
        jobs=args.jobs,
    )
    result = run_campaign(config)
    report = render_report(result)
    summary = summary_text(result)
    if config.output is None:
        sys.stdout.write(report)
        sys.stderr.write(summary)
    else:
        _write_payload(report, config.output)
        sys.stdout.write(summary)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedrandic",
        description="Spectra, characteristic polynomials and energy bounds "
                    "of the degree-normalized Hermitian matrix of a mixed graph",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", metavar="PATH",
                        help="write the payload to PATH instead of stdout")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common],
                       help="eigenvalues and spectrum-derived scalars")
    p.add_argument("file")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("charpoly", parents=[common],
                       help="characteristic polynomial coefficients")
    p.add_argument("file")
    p.add_argument("--method", choices=("numeric", "combinatorial", "both"),
                   default="both")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("energy", parents=[common],
                       help="energy and the scalars the bounds consume")
    p.add_argument("file")
    p.set_defaults(func=_cmd_energy)

    p = sub.add_parser("bounds", parents=[common],
                       help="every inequality check for one graph")
    p.add_argument("file")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("interlace", parents=[common],
                       help="edge-deletion interlacing for one edge")
    p.add_argument("file")
    p.add_argument("--edge", required=True, metavar="u,v")
    p.set_defaults(func=_cmd_interlace)

    p = sub.add_parser("check", parents=[common],
                       help="run the full checker suite; exit 1 on failures")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate",
                       help="checker suite over all small graphs, to a report")
    p.add_argument("--config", metavar="FILE",
                   help="key-value config file; flags override it")
    p.add_argument("--n-min", type=int, dest="n_min")
    p.add_argument("--n-max", type=int, dest="n_max")
    p.add_argument("--connected-only", choices=("true", "false"),
                   dest="connected_only")
    p.add_argument("--min-degree", type=int, dest="min_degree")
    p.add_argument("--sample-limit", type=int, dest="sample_limit")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=("json", "csv"))
    p.add_argument("--output", metavar="PATH")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=_cmd_enumerate, config=None)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _WriteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
