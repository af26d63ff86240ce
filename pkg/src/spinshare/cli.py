"""Command-line front end: sweeps, crossovers, figure data, verification.

All commands are pure functions of their arguments; identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from ._version import __version__
from .bounds import (
    BoundFamily,
    Region,
    ThermalConvention,
    crossover_k,
    sharing_curve,
    thermal_bias,
    thermal_crossover,
    verify_never_separable,
)
from .errors import ConsistencyError, DomainError
from .exact import parse_scalar
from .formulas import critical_k_partial
from .report import (
    FIGURE_KINDS,
    bounds_rows,
    bounds_to_csv,
    build_sharing_report,
    figure_reports,
    report_to_csv,
    report_to_json,
)


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _fraction_arg(value: str):
    try:
        return parse_scalar(value)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_bound_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--bound",
        choices=[family.value for family in BoundFamily],
        default=BoundFamily.GURVITS_BARNUM.value,
        help="lower-bound family for region verdicts (default: gb)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinshare",
        description=(
            "Exact calculator for sharing spin polarization into pseudopure "
            "subspaces: per-k populations and biases, separability bounds, "
            "critical sizes, and figure data."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    share = commands.add_parser(
        "share", help="per-k sharing sweep: f, delta, bounds, region"
    )
    share.add_argument("--p", type=int, required=True, help="polarized spin count")
    share.add_argument(
        "--sigma", type=_fraction_arg, required=True,
        help='polarization, "num/den" or decimal string (parsed exactly)',
    )
    share.add_argument(
        "--n", type=int, default=None,
        help="total qubits (defaults to the largest k; only caps the range)",
    )
    share.add_argument("--k-min", type=int, default=2)
    share.add_argument("--k-max", type=int, default=16)
    _add_bound_flag(share)
    share.add_argument("--format", choices=["csv", "json"], default="csv")
    share.add_argument("--precision", type=int, default=15)
    share.add_argument("--out", default=None, help="output path (default: stdout)")

    critical = commands.add_parser(
        "critical", help="critical subspace size for p spins at polarization sigma"
    )
    critical.add_argument("--p", type=int, required=True)
    critical.add_argument("--sigma", type=_fraction_arg, required=True)
    critical.add_argument("--format", choices=["text", "json"], default="text")
    critical.add_argument("--out", default=None)

    crossover = commands.add_parser(
        "crossover", help="scan the sharing curve for region transitions"
    )
    crossover.add_argument("--p", type=int, required=True)
    crossover.add_argument("--sigma", type=_fraction_arg, required=True)
    _add_bound_flag(crossover)
    crossover.add_argument("--k-max", type=int, default=64)
    crossover.add_argument("--format", choices=["text", "json"], default="text")
    crossover.add_argument("--out", default=None)

    thermal = commands.add_parser(
        "thermal", help="first k whose thermal bias escapes the separable region"
    )
    thermal.add_argument(
        "--boltzmann", type=_fraction_arg, required=True,
        help='thermal bias factor, e.g. "0.00001" or "1/100000"',
    )
    thermal.add_argument(
        "--convention",
        choices=[convention.value for convention in ThermalConvention],
        default=ThermalConvention.PER_TRANSITION.value,
    )
    thermal.add_argument("--k-max", type=int, default=256)
    thermal.add_argument("--format", choices=["text", "json"], default="text")
    thermal.add_argument("--out", default=None)

    verify = commands.add_parser(
        "verify-sharing",
        help="check that pure-spin sharing always beats the Gurvits-Barnum bound",
    )
    verify.add_argument("--k-max", type=int, default=64)

    figure = commands.add_parser("figure", help="emit figure curve and boundary data")
    figure.add_argument("--which", choices=list(FIGURE_KINDS), required=True)
    figure.add_argument("--format", choices=["csv", "json"], default="csv")
    figure.add_argument("--precision", type=int, default=15)
    figure.add_argument(
        "--out", default="figures", help="output directory (default: figures)"
    )

    return parser


def _cmd_share(args: argparse.Namespace) -> int:
    report = build_sharing_report(
        p=args.p,
        sigma=args.sigma,
        k_min=args.k_min,
        k_max=args.k_max,
        n=args.n,
        family=BoundFamily(args.bound),
        precision=args.precision,
    )
    text = report_to_csv(report) if args.format == "csv" else report_to_json(report)
    _write(text, args.out)
    return 0


def _cmd_critical(args: argparse.Namespace) -> int:
    result = critical_k_partial(args.p, args.sigma)
    if args.format == "json":
        payload = {
            "p": args.p,
            "sigma": str(args.sigma),
            "k_c": result.k_c,
            "argument": str(result.argument),
            "argument_is_integral": result.argument_is_integral,
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    else:
        exactness = "exactly" if result.argument_is_integral else "argument"
        _write(
            f"k_c = {result.k_c} ({exactness} {result.argument})\n", args.out
        )
    return 0


def _cmd_crossover(args: argparse.Namespace) -> int:
    family = BoundFamily(args.bound)
    curve = sharing_curve(args.p, args.sigma)
    k_start = max(args.p, 2)
    transitions = []
    for from_region, to_region in (
        (Region.E, Region.ES),
        (Region.ES, Region.S),
        (Region.S, Region.ES),
        (Region.ES, Region.E),
    ):
        k = crossover_k(
            curve, from_region, to_region, family, k_start=k_start, k_max=args.k_max
        )
        if k is not None:
            transitions.append((k, from_region.name, to_region.name))
    transitions.sort()
    if args.format == "json":
        payload = {
            "p": args.p,
            "sigma": str(args.sigma),
            "bound": family.value,
            "k_max": args.k_max,
            "transitions": [
                {"k": k, "from": from_name, "to": to_name}
                for k, from_name, to_name in transitions
            ],
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    if not transitions:
        _write(f"no region transition for k <= {args.k_max}\n", args.out)
    else:
        lines = [
            f"{from_name} -> {to_name} at k = {k}"
            for k, from_name, to_name in transitions
        ]
        _write("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_thermal(args: argparse.Namespace) -> int:
    convention = ThermalConvention(args.convention)
    k = thermal_crossover(args.boltzmann, convention, k_max=args.k_max)
    if args.format == "json":
        payload = {
            "boltzmann": str(args.boltzmann),
            "convention": convention.value,
            "k_max": args.k_max,
            "crossover_k": k,
            "delta_at_crossover": None if k is None else str(
                thermal_bias(k, args.boltzmann, convention)
            ),
        }
        _write(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    if k is None:
        _write(f"no crossover for k <= {args.k_max}\n", args.out)
    else:
        _write(f"crossover out of the separable region at k = {k}\n", args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        cases = verify_never_separable(args.k_max)
    except ConsistencyError as exc:
        sys.stdout.write(f"FAIL: {exc}\n")
        return 1
    sys.stdout.write(f"OK, {cases} cases\n")
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    if args.format == "json":
        series = {
            label: json.loads(report_to_json(report))
            for label, report in figure_reports(args.which, args.precision)
        }
        payload = {
            "which": args.which,
            "series": series,
            "bounds": bounds_rows(precision=args.precision),
        }
        path = directory / f"{args.which}.json"
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        written.append(path)
    else:
        for label, report in figure_reports(args.which, args.precision):
            path = directory / f"{args.which}_{label}.csv"
            path.write_text(report_to_csv(report), encoding="utf-8")
            written.append(path)
        path = directory / f"{args.which}_bounds.csv"
        path.write_text(bounds_to_csv(bounds_rows(precision=args.precision)), encoding="utf-8")
        written.append(path)
    for path in written:
        sys.stdout.write(f"wrote {path}\n")
    return 0


_HANDLERS = {
    "share": _cmd_share,
    "critical": _cmd_critical,
    "crossover": _cmd_crossover,
    "thermal": _cmd_thermal,
    "verify-sharing": _cmd_verify,
    "figure": _cmd_figure,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (DomainError, ConsistencyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
