"""Capability trajectories, threshold crossings and transition paths."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import optimize

from .economy import (
    EconomyParams,
    EconomyState,
    capital_income_share,
    ces_output,
    hicks_productivity,
    q_update,
    solow_step,
    steady_state_kappa,
)
from .errors import ParameterError
from .thresholds import FiscalParams, ThresholdReport, gamma_star, is_solvent

__all__ = [
    "CapabilityScenario",
    "CrossingResult",
    "PathRecord",
    "SimulationPath",
    "gamma_at",
    "capability_growth_rate",
    "threshold_growth_rate",
    "threshold_series",
    "crossing_year",
    "crossing_year_bisect",
    "balanced_initial_capital",
    "simulate_path",
    "q_iterate",
]

OVERFLOW_LIMIT = 1e300


@dataclass(frozen=True)
class CapabilityScenario:
    doubling_years: float
    gamma0: float = 1.0
    start_year: float = 2025

    def __post_init__(self):
        problems = []
        if not self.gamma0 >= 1.0:
            problems.append(f"gamma0 must satisfy gamma0 >= 1 (got {self.gamma0!r})")
        if not self.doubling_years > 0.0:
            problems.append(f"doubling_years must be positive (got {self.doubling_years!r})")
        if problems:
            raise ParameterError(problems)

    @property
    def annual_factor(self) -> float:
        """Per-year capability growth factor 2**(1/T_d)."""
        return 2.0 ** (1.0 / self.doubling_years)


@dataclass(frozen=True)
class CrossingResult:
    crossing_year_continuous: float
    crossing_year_first_integer: Optional[int]
    threshold_at_crossing: float
    found: bool

    @property
    def crossing_year_rounded(self) -> Optional[int]:
        if not self.found:
            return None
        return int(math.floor(self.crossing_year_continuous + 0.5))


@dataclass(frozen=True)
class PathRecord:
    year: float
    A: float
    gamma: float
    K: float
    Y: float
    q: float
    R: float
    public_rent_ratio: float
    gamma_star: float
    solvent: bool


@dataclass(frozen=True)
class SimulationPath:
    """Year-by-year transition records.

    ``R`` and ``public_rent_ratio`` use the realised capital-output ratio of
    each period; ``gamma_star`` and ``solvent`` use the steady-state ratio.
    """

    records: tuple
    truncated: bool = False

    FIELDS = ("year", "A", "gamma", "K", "Y", "q", "R", "public_rent_ratio", "gamma_star", "solvent")

    def __len__(self):
        return len(self.records)

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.records])


def gamma_at(scenario: CapabilityScenario, year: float) -> float:
    """gamma0 * 2**((year - start_year) / doubling_years)."""
    if year < scenario.start_year:
        raise ParameterError(
            f"year {year!r} precedes scenario start_year {scenario.start_year!r}"
        )
    return scenario.gamma0 * 2.0 ** ((year - scenario.start_year) / scenario.doubling_years)


def capability_growth_rate(scenario: CapabilityScenario) -> float:
    """Continuous growth rate ln 2 / T_d of capability."""
    return math.log(2.0) / scenario.doubling_years


def threshold_growth_rate(econ: EconomyParams) -> float:
    """Continuous growth rate (1 - sigma) * g of the unclamped threshold."""
    return (1.0 - econ.sigma) * econ.g


def threshold_series(
    econ: EconomyParams, fiscal: FiscalParams, year_from: float, year_to: float
) -> list[ThresholdReport]:
    if year_from > year_to:
        raise ParameterError(f"year_from {year_from!r} exceeds year_to {year_to!r}")
    n = int(math.floor(year_to - year_from + 1e-9)) + 1
    return [gamma_star(econ, fiscal, year_from + i) for i in range(n)]


def _unclamped(econ, fiscal, year):
    return gamma_star(econ, fiscal, year).gamma_star_unclamped


def crossing_year(
    scenario: CapabilityScenario,
    econ: EconomyParams,
    fiscal: FiscalParams,
    horizon_year: float,
) -> CrossingResult:
    """Earliest year at which capability reaches the (unclamped) threshold.

    Both sides grow exponentially, so log capability minus log threshold is
    linear in time and the root is solved in closed form.
    """
    t0 = scenario.start_year
    if not horizon_year > t0:
        raise ParameterError(f"horizon_year {horizon_year!r} must exceed start_year {t0!r}")
    thr0 = _unclamped(econ, fiscal, t0)
    if scenario.gamma0 >= thr0:
        return CrossingResult(float(t0), int(math.ceil(t0)), thr0, True)

    gap_rate = capability_growth_rate(scenario) - threshold_growth_rate(econ)
    if gap_rate <= 0.0:
        return CrossingResult(math.inf, None, math.nan, False)
    t = t0 + (math.log(thr0) - math.log(scenario.gamma0)) / gap_rate
    if t > horizon_year:
        return CrossingResult(t, None, _unclamped(econ, fiscal, t), False)

    first = int(math.ceil(t))
    # guard against the continuous root landing a rounding error past an integer
    if first - 1 >= t0 and gamma_at(scenario, first - 1) >= _unclamped(econ, fiscal, first - 1):
        first -= 1
    return CrossingResult(t, first, _unclamped(econ, fiscal, t), True)


def crossing_year_bisect(
    scenario: CapabilityScenario,
    econ: EconomyParams,
    fiscal: FiscalParams,
    horizon_year: float,
    xtol: float = 1e-9,
) -> Optional[float]:
    """Crossing time found by bisection on the evaluated threshold path.

    Independent of the closed form: it only calls :func:`gamma_at` and
    :func:`~ubi_threshold.thresholds.gamma_star`. Returns None when no sign
    change exists on [start_year, horizon_year].
    """
    t0 = scenario.start_year

    def diff(t):
        return math.log(gamma_at(scenario, t)) - math.log(_unclamped(econ, fiscal, t))

    if diff(t0) >= 0.0:
        return float(t0)
    if diff(horizon_year) < 0.0:
        return None
    return optimize.bisect(diff, t0, horizon_year, xtol=xtol, rtol=4 * np.finfo(float).eps, maxiter=500)


def balanced_initial_capital(econ: EconomyParams, gamma: float, year: float) -> float:
    """Capital stock K with K / Y(K) equal to the steady-state ratio.

    K/Y(K) rises from (alpha_bar*gamma)**(1/(1-sigma)) / A at K -> 0 to
    infinity, so the root exists iff that lower limit is below the target.
    """
    kappa = steady_state_kappa(econ)
    A = hicks_productivity(econ, year)
    floor = (econ.alpha_bar * gamma) ** (1.0 / (1.0 - econ.sigma)) / A
    if floor >= kappa:
        raise ParameterError(
            f"no capital stock reaches K/Y = {kappa:.6g}; the minimum attainable ratio is {floor:.6g}"
        )

    def h(logK):
        K = math.exp(logK)
        return math.log(K / ces_output(econ, EconomyState(year, K, gamma))) - math.log(kappa)

    lo, hi = math.log(econ.L) - 1.0, math.log(econ.L) + 1.0
    while h(lo) > 0.0:
        lo -= 2.0
    while h(hi) < 0.0:
        hi += 2.0
    return math.exp(optimize.brentq(h, lo, hi, xtol=1e-14, rtol=1e-15))


def simulate_path(
    econ: EconomyParams,
    fiscal: FiscalParams,
    scenario: CapabilityScenario,
    K0: Optional[float] = None,
    years: int = 50,
) -> SimulationPath:
    """Run the Solow accumulation with CES output for ``years`` periods.

    Returns ``years + 1`` records (periods 0..years) starting at
    ``scenario.start_year``. ``K0`` defaults to the capital stock that puts
    the economy on the steady-state capital-output ratio.
    """
    if int(years) != years or years < 1:
        raise ParameterError(f"years must be a positive integer (got {years!r})")
    t0 = scenario.start_year
    if K0 is None:
        K0 = balanced_initial_capital(econ, scenario.gamma0, t0)
    if not K0 > 0.0:
        raise ParameterError(f"K0 must be positive (got {K0!r})")

    share = fiscal.effective_share * (1.0 - fiscal.c)
    records = []
    truncated = False
    K = float(K0)
    for i in range(int(years) + 1):
        year = t0 + i
        try:
            gamma = gamma_at(scenario, year)
        except OverflowError:
            gamma = math.inf
        # stop once any quantity leaves the representable range; Y falls in
        # gamma, so runaway capability shows up as Y underflowing to zero
        if not (gamma < OVERFLOW_LIMIT and 0.0 < K < OVERFLOW_LIMIT):
            truncated = True
            break
        Y = ces_output(econ, EconomyState(year, K, gamma))
        if not 0.0 < Y < OVERFLOW_LIMIT or not 0.0 < K / Y < OVERFLOW_LIMIT:
            truncated = True
            break
        q = K / Y
        R = capital_income_share(econ, gamma, q, year)
        thr = gamma_star(econ, fiscal, year).gamma_star_unclamped
        records.append(
            PathRecord(
                year=year,
                A=hicks_productivity(econ, year),
                gamma=gamma,
                K=K,
                Y=Y,
                q=q,
                R=R,
                public_rent_ratio=share * R,
                gamma_star=thr,
                solvent=is_solvent(econ, fiscal, gamma, year),
            )
        )
        K = solow_step(econ, K, Y)
    return SimulationPath(tuple(records), truncated)


def q_iterate(econ: EconomyParams, q0: float, n: int) -> list[float]:
    """[q0, F(q0), ..., F^n(q0)] for the capital-output ratio map."""
    if n < 0:
        raise ParameterError(f"n must be non-negative (got {n!r})")
    out = [float(q0)]
    for _ in range(n):
        out.append(q_update(econ, out[-1]))
    return out
