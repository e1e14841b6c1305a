"""Parameter sweeps behind the timeline, competition and ownership experiments,
and the CSV/JSON table writer.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from . import __version__
from .calibration import CalibrationPreset, to_flat_dict
from .dynamics import crossing_year, gamma_at
from .errors import ParameterError
from .thresholds import MarketStructure, gamma_star, gamma_star_oligo, ownership_constant

__all__ = [
    "ResultTable",
    "SweepSpec",
    "DEFAULT_M_VALUES",
    "DEFAULT_EVAL_YEARS",
    "DEFAULT_THETA_GRID",
    "DEFAULT_C_VALUES",
    "theta_grid",
    "run_timeline",
    "run_competition_sweep",
    "run_ownership_sweep",
    "render",
    "emit",
]

DEFAULT_M_VALUES = tuple(range(1, 31)) + (50, 100, 1000)
DEFAULT_EVAL_YEARS = (2028, 2038, 2052)
DEFAULT_C_VALUES = (0.5, 0.75)


def theta_grid(step: float = 0.005) -> tuple:
    """Evenly spaced public shares step, 2*step, ..., 1."""
    n = int(round(1.0 / step))
    if n < 1 or not math.isclose(n * step, 1.0, rel_tol=1e-9):
        raise ParameterError(f"theta step must divide 1 evenly (got {step!r})")
    return tuple(i / n for i in range(1, n + 1))


DEFAULT_THETA_GRID = theta_grid(0.005)


@dataclass
class ResultTable:
    columns: list
    rows: list
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.columns = list(self.columns)
        self.rows = [tuple(_cell(v) for v in row) for row in self.rows]
        width = len(self.columns)
        for i, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(f"row {i} has {len(row)} cells, expected {width}")
            if any(isinstance(v, float) and math.isnan(v) for v in row):
                raise ValueError(f"row {i} has a missing cell")

    def column(self, name: str) -> list:
        j = self.columns.index(name)
        return [row[j] for row in self.rows]


def _cell(v):
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    return float(v)


def table_metadata(preset: CalibrationPreset, spec: dict) -> dict:
    """Metadata block echoing the effective parameters, provenance and request."""
    return {
        "tool": f"ubi_threshold {__version__}",
        "spec": spec,
        "parameters": _jsonable(to_flat_dict(preset)),
        "provenance": dict(preset.provenance),
    }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    v = float(obj)
    if not math.isfinite(v):
        return None
    return v


def _check_grid(name, values, lo=None, hi=None, lo_open=False, hi_open=False):
    values = list(values)
    if not values:
        raise ParameterError(f"{name} grid is empty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ParameterError(f"{name} grid must be strictly increasing")
    bad = []
    for v in values:
        if lo is not None and (v < lo or (lo_open and v == lo)):
            bad.append(v)
        elif hi is not None and (v > hi or (hi_open and v == hi)):
            bad.append(v)
    if bad:
        raise ParameterError(f"{name} grid values out of bounds: {bad}")
    return values


@dataclass(frozen=True)
class SweepSpec:
    """Declarative description of one sweep; ``run`` dispatches on ``kind``."""

    kind: str
    years: tuple = ()
    m_values: tuple = DEFAULT_M_VALUES
    theta_values: tuple = DEFAULT_THETA_GRID
    c_values: tuple = DEFAULT_C_VALUES
    year: float = 2025

    def __post_init__(self):
        if self.kind not in ("timeline", "competition", "ownership"):
            raise ParameterError(f"unknown sweep kind {self.kind!r}")

    def run(self, preset: CalibrationPreset) -> ResultTable:
        if self.kind == "timeline":
            return run_timeline(preset, self.years)
        if self.kind == "competition":
            return run_competition_sweep(preset, self.m_values, self.years or DEFAULT_EVAL_YEARS)
        return run_ownership_sweep(preset, self.theta_values, self.c_values, self.year)


def _fmt_td(d: float) -> str:
    return f"{d:g}"


def run_timeline(preset: CalibrationPreset, years: Sequence[int]) -> ResultTable:
    """Threshold path and capability paths for every doubling-time scenario.

    ``metadata['crossings']`` summarises each scenario's crossing year; the
    crossing horizon is the last year of the range.
    """
    years = _check_grid("year", years)
    missing = [sc.start_year for sc in preset.scenarios if not years[0] <= sc.start_year <= years[-1]]
    if missing:
        raise ParameterError(
            f"year range {years[0]}-{years[-1]} excludes scenario start year(s) {sorted(set(missing))}"
        )
    early = [sc.start_year for sc in preset.scenarios if years[0] < sc.start_year]
    if early:
        raise ParameterError(
            f"year range starts at {years[0]}, before scenario start year(s) {sorted(set(early))}; "
            "capability is not backcast"
        )
    econ, fiscal = preset.econ, preset.fiscal
    columns = ["year", "gamma_star_t"] + [f"gamma_Td{_fmt_td(sc.doubling_years)}" for sc in preset.scenarios]
    rows = []
    for y in years:
        row = [y, gamma_star(econ, fiscal, y).gamma_star]
        row += [gamma_at(sc, y) for sc in preset.scenarios]
        rows.append(row)

    crossings = []
    for sc in preset.scenarios:
        if years[-1] > sc.start_year:
            res = crossing_year(sc, econ, fiscal, years[-1])
            crossings.append({
                "doubling_years": sc.doubling_years,
                "found": res.found,
                "crossing_year_continuous": res.crossing_year_continuous if res.found else None,
                "crossing_year_rounded": res.crossing_year_rounded,
                "crossing_year_first_integer": res.crossing_year_first_integer,
                "threshold_at_crossing": res.threshold_at_crossing if res.found else None,
            })
        else:
            thr = gamma_star(econ, fiscal, sc.start_year).gamma_star_unclamped
            hit = sc.gamma0 >= thr
            crossings.append({
                "doubling_years": sc.doubling_years,
                "found": hit,
                "crossing_year_continuous": float(sc.start_year) if hit else None,
                "crossing_year_rounded": int(sc.start_year) if hit else None,
                "crossing_year_first_integer": int(sc.start_year) if hit else None,
                "threshold_at_crossing": thr if hit else None,
            })
    meta = table_metadata(preset, {"kind": "timeline", "years": [years[0], years[-1]]})
    meta["crossings"] = _jsonable(crossings)
    return ResultTable(columns, rows, meta)


def run_competition_sweep(
    preset: CalibrationPreset,
    m_range: Sequence[int] = DEFAULT_M_VALUES,
    years: Sequence[float] = DEFAULT_EVAL_YEARS,
) -> ResultTable:
    """Oligopoly threshold for m symmetric Cournot firms (conduct 1/m) per year."""
    m_range = _check_grid("firm count", m_range, lo=1)
    if any(int(m) != m for m in m_range):
        raise ParameterError("firm counts must be integers")
    years = _check_grid("evaluation year", years)
    econ, fiscal = preset.econ, preset.fiscal
    eps = preset.market.epsilon
    columns = ["m", "theta"] + [f"gamma_star_oligo_{y:g}" for y in years]
    rows = []
    for m in m_range:
        market = MarketStructure.symmetric(int(m), eps)
        row = [int(m), market.conduct]
        row += [gamma_star_oligo(econ, fiscal, market, y).gamma_star for y in years]
        rows.append(row)
    meta = table_metadata(
        preset, {"kind": "competition", "m_values": [int(m) for m in m_range], "years": list(years)}
    )
    meta["competitive_benchmark"] = {f"{y:g}": gamma_star(econ, fiscal, y).gamma_star for y in years}
    return ResultTable(columns, rows, meta)


def run_ownership_sweep(
    preset: CalibrationPreset,
    theta_grid: Sequence[float] = DEFAULT_THETA_GRID,
    c_values: Sequence[float] = DEFAULT_C_VALUES,
    year: float = 2025,
) -> ResultTable:
    """Threshold as a function of the public share, one column per cost share.

    The preset's own public share is inserted into the grid as a marker row.
    """
    thetas = _check_grid("theta", theta_grid, lo=0.0, hi=1.0, lo_open=True)
    c_values = list(c_values)
    if not c_values:
        raise ParameterError("c grid is empty")
    bad = [c for c in c_values if not 0.0 <= c < 1.0]
    if bad:
        raise ParameterError(f"c values out of bounds [0, 1): {bad}")
    marker = preset.fiscal.theta_pub
    if marker not in thetas:
        thetas = sorted(thetas + [marker])
    econ = preset.econ
    fiscals = [replace(preset.fiscal, c=c) for c in c_values]
    columns = ["theta"] + [f"gamma_star_c{c:g}" for c in c_values]
    rows = []
    for th in thetas:
        row = [th]
        for f in fiscals:
            row.append(gamma_star(econ, replace(f, theta_pub=th), year).gamma_star)
        rows.append(row)
    meta = table_metadata(
        preset,
        {"kind": "ownership", "theta_values": len(thetas), "c_values": c_values, "year": year},
    )
    meta["marker_theta"] = marker
    meta["full_ownership_limit"] = {f"{c:g}": ownership_constant(econ, f, year) for c, f in zip(c_values, fiscals)}
    return ResultTable(columns, rows, _jsonable(meta))


def _num(v) -> str:
    return str(v) if isinstance(v, int) else repr(float(v))


def render(table: ResultTable, fmt: str = "csv") -> str:
    """Serialize a table. Floats use the shortest round-trip representation."""
    if fmt == "json":
        doc = {
            "metadata": _jsonable(table.metadata),
            "columns": list(table.columns),
            "rows": [list(r) for r in table.rows],
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        for key, value in table.metadata.items():
            buf.write(f"# {key}: {json.dumps(_jsonable(value), allow_nan=False)}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.columns)
        for row in table.rows:
            w.writerow([_num(v) for v in row])
        return buf.getvalue()
    raise ParameterError(f"unknown output format {fmt!r} (expected csv or json)")


def emit(table: ResultTable, fmt: str = "csv", destination: Optional[str] = None) -> None:
    """Write ``table`` to ``destination`` (a path) or standard output when None or '-'."""
    text = render(table, fmt)
    if destination is None or str(destination) == "-":
        sys.stdout.write(text)
        return
    try:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {destination}: {exc.strerror}") from exc
