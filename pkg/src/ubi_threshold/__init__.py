"""AI capability thresholds for a rent-financed universal basic income.

A Solow economy with CES task automation, where AI capability scales the
weight of automated tasks. The package computes the capability level at
which public capture of capital rents covers a transfer worth a fixed share
of output, how that threshold moves with policy levers and market power,
and when exponentially improving AI crosses it.
"""

__version__ = "0.1.0"

from .errors import ConfigFileError, ParameterError  # noqa: E402
from .economy import (  # noqa: E402
    EconomyParams,
    EconomyState,
    baumol_ceiling,
    capital_income_share,
    ces_output,
    ces_output_augmented,
    contraction_factor,
    hicks_productivity,
    q_update,
    rho_of,
    solow_step,
    steady_state_kappa,
)
from .thresholds import (  # noqa: E402
    CrossCountryGap,
    Elasticities,
    FiscalParams,
    MarketStructure,
    ThresholdReport,
    conduct_from_shares,
    cross_country_gap,
    elasticities,
    gamma_star,
    gamma_star_oligo,
    is_solvent,
    log_differential,
    ownership_constant,
    rent_denominator,
    z_factor,
)
from .dynamics import (  # noqa: E402
    CapabilityScenario,
    CrossingResult,
    SimulationPath,
    crossing_year,
    crossing_year_bisect,
    gamma_at,
    q_iterate,
    simulate_path,
    threshold_series,
)
from .calibration import (  # noqa: E402
    CalibrationPreset,
    derive_A0,
    derive_b_ratio,
    derive_delta,
    dump_params,
    load_params,
    preset_us_2025,
    with_overrides,
)
from .scenarios import (  # noqa: E402
    ResultTable,
    SweepSpec,
    emit,
    render,
    run_competition_sweep,
    run_ownership_sweep,
    run_timeline,
)
