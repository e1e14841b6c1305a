"""Command-line interface.

Exit status: 0 on success, 1 on usage or validation errors, 2 on I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .calibration import dump_params, load_params, preset_us_2025, to_flat_dict, with_overrides
from .dynamics import crossing_year, simulate_path
from .errors import ParameterError
from .scenarios import (
    DEFAULT_C_VALUES,
    DEFAULT_EVAL_YEARS,
    DEFAULT_M_VALUES,
    ResultTable,
    emit,
    run_competition_sweep,
    run_ownership_sweep,
    run_timeline,
    table_metadata,
    theta_grid,
)
from .thresholds import elasticities, gamma_star, gamma_star_oligo, is_solvent

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


def _numbers(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _assignment(text):
    key, sep, value = text.partition("=")
    if not sep or not key.strip():
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    return key.strip(), value.strip()


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="parameter file (flat YAML); missing keys use the baseline")
    common.add_argument("--format", choices=("csv", "json", "yaml"), default=None,
                        help="output format: csv (default) or json; preset also accepts yaml (its default)")
    common.add_argument("--out", default=None, help="output path (default: standard output)")
    common.add_argument("--year", type=float, default=None, help="evaluation year (default: scenario start year)")
    common.add_argument("--set", dest="overrides", action="append", type=_assignment, default=[],
                        metavar="KEY=VALUE", help="override one parameter; repeatable")

    parser = _Parser(prog="ubi-threshold", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    sub.add_parser("threshold", parents=[common], help="capability threshold report")
    p = sub.add_parser("solvency", parents=[common], help="is a capability level solvent in a year")
    p.add_argument("--gamma", type=float, required=True)
    sub.add_parser("elasticities", parents=[common], help="threshold sensitivities")

    p = sub.add_parser("timeline", parents=[common], help="threshold and capability paths by year")
    p.add_argument("--from", dest="year_from", type=int, default=None)
    p.add_argument("--to", dest="year_to", type=int, default=2060)

    p = sub.add_parser("sweep-competition", parents=[common], help="threshold vs number of firms")
    p.add_argument("--m", dest="m_values", type=_ints, default=list(DEFAULT_M_VALUES))
    p.add_argument("--eval-years", type=_numbers, default=list(DEFAULT_EVAL_YEARS))

    p = sub.add_parser("sweep-ownership", parents=[common], help="threshold vs public share and cost")
    p.add_argument("--theta-step", type=float, default=0.005)
    p.add_argument("--c-values", type=_numbers, default=list(DEFAULT_C_VALUES))

    p = sub.add_parser("simulate", parents=[common], help="transition path of capital and output")
    p.add_argument("--doubling", type=float, default=None, help="doubling time (default: first scenario)")
    p.add_argument("--periods", type=int, default=50)
    p.add_argument("--k0", type=float, default=None, help="initial capital (default: balanced)")

    p = sub.add_parser("crossing", parents=[common], help="year capability first meets the threshold")
    p.add_argument("--doubling", type=float, action="append", default=None,
                   help="doubling time; repeatable (default: all preset scenarios)")
    p.add_argument("--horizon", type=float, default=2100)

    sub.add_parser("preset", parents=[common], help="dump effective parameters with provenance")
    return parser


def _load_preset(args):
    preset = load_params(args.config) if args.config else preset_us_2025()
    if args.overrides:
        preset = with_overrides(preset, dict(args.overrides), source="command-line override")
    return preset


def _single_row(preset, spec, columns, row) -> ResultTable:
    return ResultTable(columns, [row], table_metadata(preset, spec))


def _cmd_threshold(args, preset, year):
    comp = gamma_star(preset.econ, preset.fiscal, year)
    olig = gamma_star_oligo(preset.econ, preset.fiscal, preset.market, year)
    return _single_row(
        preset, {"command": "threshold", "year": year},
        ["year", "gamma_star", "gamma_star_unclamped", "z_factor", "rent_denominator",
         "always_solvent", "conduct", "gamma_star_oligo", "profit_offset", "oligo_always_solvent"],
        [year, comp.gamma_star, comp.gamma_star_unclamped, comp.z_factor, comp.rent_denominator,
         comp.always_solvent, preset.market.conduct, olig.gamma_star, olig.profit_offset,
         olig.always_solvent],
    )


def _cmd_solvency(args, preset, year):
    if not args.gamma >= 1.0:
        raise ParameterError(f"gamma must satisfy gamma >= 1 (got {args.gamma!r})")
    rep = gamma_star(preset.econ, preset.fiscal, year)
    ok = is_solvent(preset.econ, preset.fiscal, args.gamma, year)
    return _single_row(
        preset, {"command": "solvency", "year": year, "gamma": args.gamma},
        ["year", "gamma", "gamma_star", "solvent"],
        [year, args.gamma, rep.gamma_star, ok],
    )


def _cmd_elasticities(args, preset, year):
    e = elasticities(preset.econ, preset.fiscal, year)
    return _single_row(
        preset, {"command": "elasticities", "year": year},
        ["year", "gamma_star_unclamped", "z_factor", "d_theta", "d_c", "d_s", "d_sigma", "interior"],
        [year, e.gamma_star, e.z_factor, e.d_theta, e.d_c, e.d_s, e.d_sigma, e.interior],
    )


def _cmd_timeline(args, preset, year):
    start = args.year_from if args.year_from is not None else int(preset.start_year)
    if args.year_to < start:
        raise ParameterError(f"--to {args.year_to} precedes --from {start}")
    return run_timeline(preset, range(start, args.year_to + 1))


def _cmd_competition(args, preset, year):
    return run_competition_sweep(preset, args.m_values, args.eval_years)


def _cmd_ownership(args, preset, year):
    return run_ownership_sweep(preset, theta_grid(args.theta_step), args.c_values, year)


def _cmd_simulate(args, preset, year):
    scenario = preset.scenario(args.doubling if args.doubling is not None else preset.doubling_years[0])
    path = simulate_path(preset.econ, preset.fiscal, scenario, K0=args.k0, years=args.periods)
    meta = table_metadata(preset, {"command": "simulate", "doubling_years": scenario.doubling_years,
                                   "periods": args.periods, "K0": args.k0})
    meta["truncated"] = path.truncated
    rows = [[getattr(r, f) for f in path.FIELDS] for r in path.records]
    return ResultTable(list(path.FIELDS), rows, meta)


def _cmd_crossing(args, preset, year):
    doublings = args.doubling or list(preset.doubling_years)
    columns = ["doubling_years", "crossing_year_continuous", "crossing_year_rounded",
               "crossing_year_first_integer", "threshold_at_crossing"]
    rows, not_found = [], []
    for d in doublings:
        res = crossing_year(preset.scenario(d), preset.econ, preset.fiscal, args.horizon)
        if res.found:
            rows.append([d, res.crossing_year_continuous, res.crossing_year_rounded,
                         res.crossing_year_first_integer, res.threshold_at_crossing])
        else:
            not_found.append(d)
    meta = table_metadata(preset, {"command": "crossing", "horizon": args.horizon, "doubling_years": doublings})
    meta["not_found"] = not_found
    return ResultTable(columns, rows, meta)


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _cmd_preset(args, preset):
    flat = to_flat_dict(preset)
    if args.format == "json":
        flat["doubling_years"] = list(flat["doubling_years"])
        doc = {"parameters": flat, "provenance": dict(preset.provenance)}
        _write(json.dumps(doc, indent=2) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value", "provenance"])
        for key, value in flat.items():
            if isinstance(value, tuple):
                value = ";".join(repr(v) for v in value)
            w.writerow([key, value, preset.provenance.get(key, "")])
        _write(buf.getvalue(), args.out)
    else:
        _write(dump_params(preset), args.out)


_COMMANDS = {
    "threshold": _cmd_threshold,
    "solvency": _cmd_solvency,
    "elasticities": _cmd_elasticities,
    "timeline": _cmd_timeline,
    "sweep-competition": _cmd_competition,
    "sweep-ownership": _cmd_ownership,
    "simulate": _cmd_simulate,
    "crossing": _cmd_crossing,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    try:
        preset = _load_preset(args)
        if args.command == "preset":
            _cmd_preset(args, preset)
            return EXIT_OK
        if args.format == "yaml":
            raise ParameterError("--format yaml is only available for the preset command")
        year = args.year if args.year is not None else preset.start_year
        if float(year).is_integer():
            year = int(year)
        table = _COMMANDS[args.command](args, preset, year)
        emit(table, args.format or "csv", args.out)
    except ParameterError as exc:
        print("error: " + "\n       ".join(exc.violations), file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
