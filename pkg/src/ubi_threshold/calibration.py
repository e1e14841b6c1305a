"""U.S. 2025 calibration with per-parameter provenance, and parameter files.

Parameter files are flat YAML mappings whose keys are exactly
:data:`PARAM_KEYS`. Keys left out take the baseline value; unknown keys are
rejected so that typos cannot silently fall back to defaults.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import SimpleNamespace
from typing import Mapping, Optional

import yaml

from .dynamics import CapabilityScenario
from .economy import EconomyParams, economy_violations
from .errors import ConfigFileError, ParameterError
from .thresholds import FiscalParams, MarketStructure, fiscal_violations, market_violations

__all__ = [
    "PARAM_KEYS",
    "CalibrationPreset",
    "COST_ALTERNATES",
    "SIGMA_RANGE",
    "preset_us_2025",
    "sigma_endpoint_presets",
    "derive_delta",
    "derive_A0",
    "derive_b_ratio",
    "to_flat_dict",
    "from_flat_dict",
    "with_overrides",
    "dump_params",
    "load_params",
    "parse_value",
]

PARAM_KEYS = (
    "s", "g", "delta", "alpha_bar", "sigma", "A0", "base_year", "L",
    "theta_pub", "c", "b_ratio", "phi",
    "epsilon", "conduct",
    "gamma0", "doubling_years", "start_year",
)

# operating-cost regimes compared against the default c = 0.6
COST_ALTERNATES = {"low": 0.50, "high": 0.75}
# surveyed bounds on the task elasticity of substitution
SIGMA_RANGE = (0.45, 0.87)


def derive_delta(dep_flow: float, net_stock: float) -> float:
    """Depreciation rate as current-cost depreciation over the net capital stock."""
    if not (dep_flow > 0 and net_stock > 0):
        raise ParameterError(
            f"depreciation flow and net stock must be positive (got {dep_flow!r}, {net_stock!r})"
        )
    ratio = dep_flow / net_stock
    if ratio >= 1.0:
        raise ParameterError(f"implausible depreciation rate {ratio!r}: must be below 1")
    return ratio


def derive_A0(index_value: float, index_base: float) -> float:
    """Convert a productivity index reading to a level relative to its base."""
    if not (index_value > 0 and index_base > 0):
        raise ParameterError(
            f"index value and base must be positive (got {index_value!r}, {index_base!r})"
        )
    return index_value / index_base


def derive_b_ratio(ubi_cost: float, gdp: float) -> float:
    """Transfer cost as a share of output."""
    if not (ubi_cost > 0 and gdp > 0):
        raise ParameterError(f"transfer cost and GDP must be positive (got {ubi_cost!r}, {gdp!r})")
    ratio = ubi_cost / gdp
    if ratio >= 1.0:
        raise ParameterError(f"implausible transfer ratio {ratio!r}: must be below 1")
    return ratio


@dataclass(frozen=True)
class CalibrationPreset:
    econ: EconomyParams
    fiscal: FiscalParams
    market: MarketStructure
    scenarios: tuple
    provenance: Mapping[str, str] = field(default_factory=dict, compare=False, hash=False)

    @property
    def start_year(self):
        return self.scenarios[0].start_year

    @property
    def gamma0(self) -> float:
        return self.scenarios[0].gamma0

    @property
    def doubling_years(self) -> tuple:
        return tuple(sc.doubling_years for sc in self.scenarios)

    def scenario(self, doubling_years: float) -> CapabilityScenario:
        return CapabilityScenario(doubling_years, self.gamma0, self.start_year)


_US_2025 = {
    "s": 0.22,
    "g": 0.011,
    "delta": round(derive_delta(3.81, 68.10), 3),
    "alpha_bar": 0.42,
    "sigma": 0.66,
    "A0": derive_A0(106.847, 100.0),
    "base_year": 2024,
    "L": 1.0,
    "theta_pub": 0.145,
    "c": 0.6,
    "b_ratio": round(derive_b_ratio(3.1, 29.35), 2),
    "phi": 1.0,
    "epsilon": 1.0,
    "conduct": 0.0,
    "gamma0": 1.0,
    "doubling_years": (1.0, 2.0, 5.0, 10.0),
    "start_year": 2025,
}

_US_2025_PROVENANCE = {
    "s": "World Bank gross capital formation, U.S. 2023: 22% of GDP",
    "g": "CBO potential TFP growth, nonfarm business 2024-2034: 1.1%/yr",
    "delta": "BEA 2023 current-cost depreciation of private fixed assets $3.81T / "
             "year-end net stock $68.10T = 0.05595, rounded to 0.056",
    "alpha_bar": "WEF Future of Jobs 2023: 42% of business tasks expected automated by 2027 "
                 "(34% today; McKinsey 2017: ~50% technically automatable)",
    "sigma": "midpoint of surveyed U.S. capital-labor elasticity interval [0.45, 0.87] "
             "(Knoblach, Roessler and Zwerschke 2020)",
    "A0": "BLS nonfarm multifactor productivity (FRED MFPNFBS, 2017=100), 2024 reading "
          "106.847 / 100",
    "base_year": "year of the MFPNFBS reading used for A0",
    "L": "normalization; thresholds do not depend on L",
    "theta_pub": "GAO-23-105384 effective federal corporate tax rate 13-16%, midpoint",
    "c": "Sacra 2025: OpenAI gross margin ~40% implies operating-cost share ~0.6 "
         "(alignment compute commitment 2023 gives lower bound 0.2)",
    "b_ratio": "$12k/yr adult UBI ~ $3.1T against 2024Q3 GDP $29.35T = 0.1056, rounded to 0.11",
    "phi": "full profit capture",
    "epsilon": "UK DSIT 2023 AI regulation impact assessment: tech demand elasticities "
               "0.3-1.5, |epsilon| = 1 adopted",
    "conduct": "perfect competition (competitive benchmark)",
    "gamma0": "nominal 2025 capability equal to pre-AI automation",
    "doubling_years": "illustrative capability doubling times: fast, semi-fast, moderate, slow",
    "start_year": "capability scenarios anchored at 2025",
}


def _normalize(key, value):
    if key == "base_year":
        return int(value) if float(value).is_integer() else float(value)
    if key == "start_year":
        return int(value) if float(value).is_integer() else float(value)
    if key == "doubling_years":
        return tuple(float(v) for v in value)
    return float(value)


def _violations(flat: Mapping) -> list[str]:
    ns = SimpleNamespace(**flat)
    out = economy_violations(ns) + fiscal_violations(ns) + market_violations(ns)
    if not flat["gamma0"] >= 1.0:
        out.append(f"gamma0 must satisfy gamma0 >= 1 (got {flat['gamma0']!r})")
    dys = flat["doubling_years"]
    if len(dys) == 0:
        out.append("doubling_years must list at least one doubling time")
    bad = [d for d in dys if not d > 0.0]
    if bad:
        out.append(f"doubling_years must all be positive (got {bad})")
    if not math.isfinite(flat["start_year"]):
        out.append(f"start_year must be finite (got {flat['start_year']!r})")
    return out


def from_flat_dict(
    flat: Mapping, provenance: Optional[Mapping[str, str]] = None
) -> CalibrationPreset:
    """Build a preset from a complete flat mapping, reporting every violation."""
    missing = [k for k in PARAM_KEYS if k not in flat]
    unknown = [k for k in flat if k not in PARAM_KEYS]
    problems = [f"missing key {k!r}" for k in missing] + [f"unknown key {k!r}" for k in unknown]
    if problems:
        raise ParameterError(problems)
    flat = {k: _normalize(k, flat[k]) for k in PARAM_KEYS}
    problems = _violations(flat)
    if problems:
        raise ParameterError(problems)

    econ = EconomyParams(**{k: flat[k] for k in ("s", "g", "delta", "alpha_bar", "sigma", "A0", "base_year", "L")})
    fiscal = FiscalParams(**{k: flat[k] for k in ("theta_pub", "c", "b_ratio", "phi")})
    market = MarketStructure(epsilon=flat["epsilon"], conduct=flat["conduct"])
    scenarios = tuple(
        CapabilityScenario(d, flat["gamma0"], flat["start_year"]) for d in flat["doubling_years"]
    )
    prov = dict(provenance) if provenance else {}
    for k in PARAM_KEYS:
        prov.setdefault(k, "unspecified")
    return CalibrationPreset(econ, fiscal, market, scenarios, prov)


def to_flat_dict(preset: CalibrationPreset) -> dict:
    e, f, m = preset.econ, preset.fiscal, preset.market
    return {
        "s": e.s, "g": e.g, "delta": e.delta, "alpha_bar": e.alpha_bar, "sigma": e.sigma,
        "A0": e.A0, "base_year": e.base_year, "L": e.L,
        "theta_pub": f.theta_pub, "c": f.c, "b_ratio": f.b_ratio, "phi": f.phi,
        "epsilon": m.epsilon, "conduct": m.conduct,
        "gamma0": preset.gamma0,
        "doubling_years": preset.doubling_years,
        "start_year": preset.start_year,
    }


def preset_us_2025() -> CalibrationPreset:
    """Baseline U.S. calibration used for every headline result."""
    return from_flat_dict(_US_2025, _US_2025_PROVENANCE)


def sigma_endpoint_presets() -> dict:
    """Baseline presets re-run at the ends of the surveyed sigma interval."""
    out = {}
    for name, sigma in zip(("low", "high"), SIGMA_RANGE):
        flat = dict(_US_2025, sigma=sigma)
        prov = dict(_US_2025_PROVENANCE, sigma=f"{name} end of surveyed interval {list(SIGMA_RANGE)}")
        out[name] = from_flat_dict(flat, prov)
    return out


def parse_value(key: str, raw):
    """Coerce one raw value (from YAML or a ``key=value`` override) to its type.

    Raises ConfigFileError naming the key on a type mismatch.
    """
    if key not in PARAM_KEYS:
        raise ConfigFileError(f"unknown key {key!r} (valid keys: {', '.join(PARAM_KEYS)})")

    def number(v):
        if isinstance(v, bool):
            raise ValueError
        if isinstance(v, str):
            return float(v.strip())
        if isinstance(v, (int, float)):
            return v
        raise ValueError

    try:
        if key == "doubling_years":
            if isinstance(raw, str):
                raw = [x for x in raw.strip().strip("[]").split(",") if x.strip()]
            elif not isinstance(raw, (list, tuple)):
                raw = [raw]
            return tuple(number(v) for v in raw)
        value = number(raw)
    except (TypeError, ValueError):
        expect = "a list of numbers" if key == "doubling_years" else "a number"
        raise ConfigFileError(f"key {key!r}: expected {expect}, got {raw!r}") from None
    if key == "base_year" and not float(value).is_integer():
        raise ConfigFileError(f"key 'base_year': expected an integer year, got {raw!r}")
    return value


def with_overrides(
    preset: CalibrationPreset, overrides: Mapping, source: str = "override"
) -> CalibrationPreset:
    """Return ``preset`` with raw values in ``overrides`` applied and validated."""
    flat = to_flat_dict(preset)
    prov = dict(preset.provenance)
    errors = []
    for key, raw in overrides.items():
        try:
            flat[key] = parse_value(key, raw)
            prov[key] = source
        except ConfigFileError as exc:
            errors.extend(exc.violations)
    if errors:
        raise ConfigFileError(errors)
    return from_flat_dict(flat, prov)


def _format(value) -> str:
    if isinstance(value, tuple):
        return "[" + ", ".join(_format(v) for v in value) + "]"
    return repr(value)


def dump_params(preset: CalibrationPreset) -> str:
    """Serialize a preset as a parameter file, provenance as comments."""
    lines = []
    for key, value in to_flat_dict(preset).items():
        prov = preset.provenance.get(key, "")
        if prov:
            lines.append(f"# {prov}")
        lines.append(f"{key}: {_format(value)}")
    return "\n".join(lines) + "\n"


def _key_lines(text: str) -> dict:
    try:
        node = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError:
        return {}
    if not isinstance(node, yaml.MappingNode):
        return {}
    return {k.value: k.start_mark.line + 1 for k, _ in node.value}


def load_params(path) -> CalibrationPreset:
    """Load a parameter file on top of the baseline preset.

    Parameters absent from the file keep their baseline values with
    provenance marked ``default``. Every problem in the file is collected
    into a single :class:`ConfigFileError` or :class:`ParameterError`.
    """
    path = str(path)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ConfigFileError(f"{path}: parse error{where}: {getattr(exc, 'problem', exc)}") from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigFileError(f"{path}: expected a flat key-value mapping, got {type(data).__name__}")

    lines = _key_lines(text)
    base = preset_us_2025()
    flat = to_flat_dict(base)
    prov = {k: f"default: {v}" for k, v in base.provenance.items()}
    errors = []
    for key, raw in data.items():
        where = f"{path}:{lines[key]}" if key in lines else path
        try:
            flat[key] = parse_value(str(key), raw)
        except ConfigFileError as exc:
            errors.extend(f"{where}: {v}" for v in exc.violations)
            continue
        prov[key] = f"parameter file {path}"
    if errors:
        raise ConfigFileError(errors)
    try:
        return from_flat_dict(flat, prov)
    except ParameterError as exc:
        raise ParameterError([f"{path}: {v}" for v in exc.violations]) from None
