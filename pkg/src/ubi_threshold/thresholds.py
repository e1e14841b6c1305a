"""Capability thresholds at which public AI rents cover a universal transfer.

The public sector collects ``phi * theta_pub * (1 - c)`` of capital income
``R(gamma) * Y``. Balancing a transfer worth ``b_ratio`` of output requires

    gamma >= gamma_star = Z ** sigma,
    Z = b_ratio / (phi * theta_pub * (1-c) * alpha_bar**(1-rho) * A_t**rho * kappa**rho)

evaluated at the steady-state capital-output ratio unless an explicit
``kappa`` is passed. Under Cournot conduct ``theta`` and demand elasticity
``epsilon`` the collected profit margin ``theta/epsilon`` is subtracted from
the base before raising to ``sigma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .economy import (
    EconomyParams,
    capital_income_share,
    hicks_productivity,
    steady_state_kappa,
)
from .errors import ParameterError

__all__ = [
    "FiscalParams",
    "MarketStructure",
    "ThresholdReport",
    "Elasticities",
    "CrossCountryGap",
    "rent_scale",
    "rent_denominator",
    "z_factor",
    "gamma_star",
    "is_solvent",
    "elasticities",
    "log_differential",
    "conduct_from_shares",
    "gamma_star_oligo",
    "ownership_constant",
    "cross_country_gap",
]

# Relative slack on the budget comparison so that gamma == gamma_star counts
# as solvent despite rounding in gamma_star**(1-rho).
_BUDGET_RTOL = 1e-13


@dataclass(frozen=True)
class FiscalParams:
    theta_pub: float
    c: float
    b_ratio: float
    phi: float = 1.0

    def __post_init__(self):
        problems = fiscal_violations(self)
        if problems:
            raise ParameterError(problems)

    @property
    def effective_share(self) -> float:
        return self.phi * self.theta_pub


def fiscal_violations(p) -> list[str]:
    out = []
    if not 0.0 < p.theta_pub <= 1.0:
        out.append(f"theta_pub must satisfy 0 < theta_pub <= 1 (got {p.theta_pub!r})")
    if not 0.0 <= p.c < 1.0:
        out.append(f"c must satisfy 0 <= c < 1 (got {p.c!r})")
    if not p.b_ratio > 0.0:
        out.append(f"b_ratio must satisfy b_ratio > 0 (got {p.b_ratio!r})")
    if not 0.0 < p.phi <= 1.0:
        out.append(f"phi must satisfy 0 < phi <= 1 (got {p.phi!r})")
    return out


@dataclass(frozen=True)
class MarketStructure:
    """Demand elasticity (absolute value) and conduct parameter of the AI sector."""

    epsilon: float = 1.0
    conduct: float = 0.0

    def __post_init__(self):
        problems = market_violations(self)
        if problems:
            raise ParameterError(problems)

    @classmethod
    def from_shares(cls, shares: Sequence[float], epsilon: float = 1.0) -> "MarketStructure":
        return cls(epsilon=epsilon, conduct=conduct_from_shares(shares))

    @classmethod
    def symmetric(cls, m: int, epsilon: float = 1.0) -> "MarketStructure":
        if int(m) != m or m < 1:
            raise ParameterError(f"firm count must be a positive integer (got {m!r})")
        return cls(epsilon=epsilon, conduct=1.0 / m)

    @property
    def lerner(self) -> float:
        """Price-cost margin (P - MC)/P = conduct/epsilon."""
        return self.conduct / self.epsilon


def market_violations(p) -> list[str]:
    out = []
    if not p.epsilon > 0.0:
        out.append(f"epsilon must be the absolute demand elasticity, epsilon > 0 (got {p.epsilon!r})")
    if not 0.0 <= p.conduct <= 1.0:
        out.append(f"conduct must satisfy 0 <= conduct <= 1 (got {p.conduct!r})")
    return out


@dataclass(frozen=True)
class ThresholdReport:
    gamma_star: float
    gamma_star_unclamped: float
    z_factor: float
    rent_denominator: float
    profit_offset: float
    always_solvent: bool
    year: float


@dataclass(frozen=True)
class Elasticities:
    """Partial derivatives of the unclamped threshold.

    ``interior`` is False when the reported threshold is clamped at 1, in
    which case these derivatives describe the unclamped closed form only.
    """

    d_theta: float
    d_c: float
    d_s: float
    d_sigma: float
    gamma_star: float
    z_factor: float
    interior: bool
    year: float


@dataclass(frozen=True)
class CrossCountryGap:
    gamma_star_1: float
    gamma_star_2: float
    gap: float
    C_t: float


def rent_scale(econ: EconomyParams, year: float, kappa: Optional[float] = None) -> float:
    """alpha_bar**(1-rho) * A_t**rho * kappa**rho, i.e. R(gamma=1)."""
    if kappa is None:
        kappa = steady_state_kappa(econ)
    return capital_income_share(econ, 1.0, kappa, year)


def rent_denominator(
    econ: EconomyParams, fiscal: FiscalParams, year: float, kappa: Optional[float] = None
) -> float:
    """Public rent per unit of output at gamma = 1."""
    return fiscal.effective_share * (1.0 - fiscal.c) * rent_scale(econ, year, kappa)


def z_factor(
    econ: EconomyParams, fiscal: FiscalParams, year: float, kappa: Optional[float] = None
) -> float:
    return fiscal.b_ratio / rent_denominator(econ, fiscal, year, kappa)


def _report(base, sigma, z, denom, offset, year) -> ThresholdReport:
    if base <= 0.0:
        return ThresholdReport(1.0, math.nan, z, denom, offset, True, year)
    raw = base**sigma
    return ThresholdReport(max(1.0, raw), raw, z, denom, offset, raw <= 1.0, year)


def gamma_star(
    econ: EconomyParams, fiscal: FiscalParams, year: float, kappa: Optional[float] = None
) -> ThresholdReport:
    """Competitive capability threshold, clamped at 1."""
    denom = rent_denominator(econ, fiscal, year, kappa)
    z = fiscal.b_ratio / denom
    return _report(z, econ.sigma, z, denom, 0.0, year)


def is_solvent(
    econ: EconomyParams,
    fiscal: FiscalParams,
    gamma: float,
    year: float,
    kappa: Optional[float] = None,
) -> bool:
    """Whether collected rents at capability ``gamma`` cover the transfer share."""
    if kappa is None:
        kappa = steady_state_kappa(econ)
    R = capital_income_share(econ, gamma, kappa, year)
    rent = fiscal.effective_share * (1.0 - fiscal.c) * R
    return rent >= fiscal.b_ratio * (1.0 - _BUDGET_RTOL)


def elasticities(
    econ: EconomyParams, fiscal: FiscalParams, year: float, kappa: Optional[float] = None
) -> Elasticities:
    """Closed-form partial derivatives of gamma_star in theta_pub, c, s and sigma.

    The sigma derivative includes the dependence of rho on sigma.
    """
    if kappa is None:
        kappa = steady_state_kappa(econ)
    sigma, rho = econ.sigma, econ.rho
    A = hicks_productivity(econ, year)
    z = z_factor(econ, fiscal, year, kappa)
    g = z**sigma
    return Elasticities(
        d_theta=-g * sigma / fiscal.theta_pub,
        d_c=g * sigma / (1.0 - fiscal.c),
        d_s=-g * sigma * rho / econ.s,
        d_sigma=g * (math.log(z) + math.log(econ.alpha_bar / (A * kappa)) / sigma),
        gamma_star=g,
        z_factor=z,
        interior=g > 1.0,
        year=year,
    )


def log_differential(
    econ: EconomyParams,
    fiscal: FiscalParams,
    year: float,
    dTheta: float = 0.0,
    dc: float = 0.0,
    ds: float = 0.0,
    dsigma: float = 0.0,
) -> float:
    """First-order relative change d(gamma_star)/gamma_star for small perturbations."""
    e = elasticities(econ, fiscal, year)
    sigma, rho = econ.sigma, econ.rho
    return (
        -sigma * dTheta / fiscal.theta_pub
        + sigma * dc / (1.0 - fiscal.c)
        - sigma * rho * ds / econ.s
        + (e.d_sigma / e.gamma_star) * dsigma
    )


def conduct_from_shares(shares: Sequence[float]) -> float:
    """Herfindahl conduct parameter: sum of squared market shares."""
    shares = [float(x) for x in shares]
    if not shares:
        raise ParameterError("shares must be a non-empty vector")
    negative = [x for x in shares if x < 0.0]
    if negative:
        raise ParameterError(f"shares must be non-negative (got {negative})")
    total = math.fsum(shares)
    if abs(total - 1.0) > 1e-9:
        raise ParameterError(f"shares must sum to 1 within 1e-9 (sum is {total!r})")
    return math.fsum(x * x for x in shares)


def gamma_star_oligo(
    econ: EconomyParams,
    fiscal: FiscalParams,
    market: MarketStructure,
    year: float,
    kappa: Optional[float] = None,
) -> ThresholdReport:
    """Threshold when the rent pool also contains Cournot pure profits.

    The collected base is Z - (conduct/epsilon) / R(1); a non-positive base
    means the transfer is covered at any admissible capability.
    """
    scale = rent_scale(econ, year, kappa)
    denom = fiscal.effective_share * (1.0 - fiscal.c) * scale
    z = fiscal.b_ratio / denom
    offset = market.lerner / scale
    return _report(z - offset, econ.sigma, z, denom, offset, year)


def ownership_constant(econ: EconomyParams, fiscal: FiscalParams, year: float) -> float:
    """C_t such that the unclamped threshold equals C_t * theta_pub**(-sigma).

    This is also the threshold under full public ownership.
    """
    rest = fiscal.phi * (1.0 - fiscal.c) * rent_scale(econ, year)
    return (fiscal.b_ratio / rest) ** econ.sigma


def cross_country_gap(
    econ: EconomyParams,
    fiscal_common: FiscalParams,
    theta1: float,
    theta2: float,
    year: float,
) -> CrossCountryGap:
    """Threshold difference between two economies differing only in theta_pub."""
    if not 0.0 < theta1 < theta2 <= 1.0:
        raise ParameterError(
            f"need 0 < theta1 < theta2 <= 1 (got theta1={theta1!r}, theta2={theta2!r})"
        )
    C = ownership_constant(econ, fiscal_common, year)
    g1 = C * theta1 ** (-econ.sigma)
    g2 = C * theta2 ** (-econ.sigma)
    return CrossCountryGap(g1, g2, C * (theta1 ** (-econ.sigma) - theta2 ** (-econ.sigma)), C)
