"""CES task-automation technology with an AI capability shifter.

Output is produced from a unit continuum of tasks, a fixed share
``alpha_bar`` of which is executed by capital. With the uniform allocation
(every automated task gets ``K / alpha_bar``, every manual task gets ``L``)
the task integral collapses to

    Y = A * (alpha_bar**(1-rho) * gamma**(1-rho) * K**rho
             + (1-alpha_bar)**(1-rho) * L**rho) ** (1/rho)

with ``rho = (sigma-1)/sigma < 0``. ``gamma >= 1`` scales the weight of the
automated block; ``gamma = 1`` is the pre-AI economy. Because rho < 0 the
aggregate falls as that weight grows, while capital's income share rises.
Scaling K by G**(1/(1-sigma)) together with gamma by G leaves output unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError

__all__ = [
    "EconomyParams",
    "EconomyState",
    "rho_of",
    "hicks_productivity",
    "ces_output",
    "ces_output_augmented",
    "baumol_ceiling",
    "capital_income_share",
    "steady_state_kappa",
    "solow_step",
    "q_update",
    "contraction_factor",
]


def rho_of(sigma: float) -> float:
    """CES curvature implied by an elasticity of substitution in (0, 1)."""
    if not 0.0 < sigma < 1.0:
        raise ParameterError(f"sigma must satisfy 0 < sigma < 1 (got {sigma!r})")
    return (sigma - 1.0) / sigma


@dataclass(frozen=True)
class EconomyParams:
    """Technology and saving block.

    ``rho`` is always derived from ``sigma`` and never stored.
    """

    s: float
    g: float
    delta: float
    alpha_bar: float
    sigma: float
    A0: float
    base_year: int
    L: float = 1.0

    def __post_init__(self):
        problems = economy_violations(self)
        if problems:
            raise ParameterError(problems)

    @property
    def rho(self) -> float:
        return (self.sigma - 1.0) / self.sigma


def economy_violations(p) -> list[str]:
    """All bound violations for an object with EconomyParams attributes."""
    out = []
    if not 0.0 < p.s < 1.0:
        out.append(f"s must satisfy 0 < s < 1 (got {p.s!r})")
    if not p.g >= 0.0:
        out.append(f"g must satisfy g >= 0 (got {p.g!r})")
    if not 0.0 < p.delta <= 1.0:
        out.append(f"delta must satisfy 0 < delta <= 1 (got {p.delta!r})")
    if not 0.0 < p.alpha_bar < 1.0:
        out.append(f"alpha_bar must satisfy 0 < alpha_bar < 1 (got {p.alpha_bar!r})")
    if not 0.0 < p.sigma < 1.0:
        out.append(f"sigma must satisfy 0 < sigma < 1 (got {p.sigma!r})")
    if not p.A0 > 0.0:
        out.append(f"A0 must satisfy A0 > 0 (got {p.A0!r})")
    if not p.L > 0.0:
        out.append(f"L must satisfy L > 0 (got {p.L!r})")
    if isinstance(p.base_year, bool) or int(p.base_year) != p.base_year:
        out.append(f"base_year must be an integer calendar year (got {p.base_year!r})")
    return out


@dataclass(frozen=True)
class EconomyState:
    """Capital stock and AI capability at a (possibly fractional) year."""

    year: float
    K: float
    gamma: float = 1.0

    def __post_init__(self):
        problems = []
        if not self.K > 0.0:
            problems.append(f"K must be positive (got {self.K!r})")
        if not self.gamma >= 1.0:
            problems.append(f"gamma must satisfy gamma >= 1 (got {self.gamma!r})")
        if problems:
            raise ParameterError(problems)


def hicks_productivity(params: EconomyParams, year: float) -> float:
    """A_t = A0 * exp(g * (year - base_year)); earlier years extrapolate."""
    return params.A0 * math.exp(params.g * (year - params.base_year))


def _ces(params: EconomyParams, K: float, gamma: float, labor: float, A: float) -> float:
    rho = params.rho
    a = params.alpha_bar
    auto = a ** (1.0 - rho) * gamma ** (1.0 - rho) * K**rho
    manual = (1.0 - a) ** (1.0 - rho) * labor**rho
    return A * (auto + manual) ** (1.0 / rho)


def ces_output(params: EconomyParams, state: EconomyState) -> float:
    """Aggregate output for the given capital stock and capability.

    Increasing in K and L, decreasing in gamma.
    """
    if not state.K > 0.0:
        raise ParameterError(f"K must be positive (got {state.K!r})")
    A = hicks_productivity(params, state.year)
    return _ces(params, state.K, state.gamma, params.L, A)


def ces_output_augmented(params: EconomyParams, state: EconomyState, psi: float) -> float:
    """Output when effective labor in the manual block is ``psi * L``.

    ``psi = 1`` gives exactly :func:`ces_output`.
    """
    if not psi >= 1.0:
        raise ParameterError(f"psi must satisfy psi >= 1 (got {psi!r})")
    if psi == 1.0:
        return ces_output(params, state)
    A = hicks_productivity(params, state.year)
    return _ces(params, state.K, state.gamma, psi * params.L, A)


def baumol_ceiling(params: EconomyParams, year: float) -> float:
    """Limit of output as K -> infinity: A * (1-alpha_bar)**((1-rho)/rho) * L."""
    rho = params.rho
    A = hicks_productivity(params, year)
    return A * (1.0 - params.alpha_bar) ** ((1.0 - rho) / rho) * params.L


def capital_income_share(
    params: EconomyParams, gamma: float, kappa: float, year: float
) -> float:
    """Capital's share of output, r*K/Y, at capital-output ratio ``kappa``.

    Equal to alpha_bar**(1-rho) * gamma**(1-rho) * A_t**rho * kappa**rho, which
    rises with gamma since 1 - rho = 1/sigma > 0.
    """
    if not kappa > 0.0:
        raise ParameterError(f"kappa must be positive (got {kappa!r})")
    if not gamma >= 1.0:
        raise ParameterError(f"gamma must satisfy gamma >= 1 (got {gamma!r})")
    rho = params.rho
    A = hicks_productivity(params, year)
    return params.alpha_bar ** (1.0 - rho) * gamma ** (1.0 - rho) * A**rho * kappa**rho


def steady_state_kappa(params: EconomyParams) -> float:
    """Long-run capital-output ratio s / (e^g - 1 + delta)."""
    return params.s / (math.expm1(params.g) + params.delta)


def solow_step(params: EconomyParams, K: float, Y: float) -> float:
    """K' = s*Y + (1 - delta)*K."""
    if not (K > 0.0 and Y > 0.0):
        raise ParameterError(f"K and Y must be positive (got K={K!r}, Y={Y!r})")
    return params.s * Y + (1.0 - params.delta) * K


def contraction_factor(params: EconomyParams) -> float:
    """Slope (1 - delta)/e^g of the capital-output ratio map; always < 1."""
    return (1.0 - params.delta) / math.exp(params.g)


def q_update(params: EconomyParams, q: float) -> float:
    """One step of the capital-output ratio map q' = (s + (1-delta) q) / e^g."""
    if not q > 0.0:
        raise ParameterError(f"q must be positive (got {q!r})")
    return (params.s + (1.0 - params.delta) * q) / math.exp(params.g)
