"""Random valid parameter draws shared by the property tests."""

import numpy as np

from ubi_threshold import EconomyParams, FiscalParams


def draw_econ(rng: np.random.Generator) -> EconomyParams:
    return EconomyParams(
        s=rng.uniform(0.05, 0.6),
        g=rng.uniform(0.0, 0.04),
        delta=rng.uniform(0.01, 0.3),
        alpha_bar=rng.uniform(0.05, 0.95),
        sigma=rng.uniform(0.2, 0.95),
        A0=rng.uniform(0.5, 2.0),
        base_year=int(rng.integers(2000, 2030)),
        L=rng.uniform(0.5, 2.0),
    )


def draw_fiscal(rng: np.random.Generator) -> FiscalParams:
    return FiscalParams(
        theta_pub=rng.uniform(0.02, 1.0),
        c=rng.uniform(0.0, 0.9),
        b_ratio=rng.uniform(0.01, 0.4),
        phi=rng.uniform(0.2, 1.0),
    )


def draw_year(rng: np.random.Generator) -> float:
    return float(rng.uniform(2020.0, 2070.0))
