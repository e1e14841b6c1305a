# %% [markdown]
# # Sensitivity of the threshold
#
# Closed-form derivatives of the threshold with respect to the public
# share, cost share, saving rate and substitution elasticity, checked
# against central finite differences.

# %%
from dataclasses import replace

from ubi_threshold import elasticities, gamma_star, log_differential, preset_us_2025

preset = preset_us_2025()
econ, fiscal = preset.econ, preset.fiscal
e = elasticities(econ, fiscal, 2025)


def unclamped(econ, fiscal):
    return gamma_star(econ, fiscal, 2025).gamma_star_unclamped


def central(fn, x, rel=1e-6):
    h = rel * x
    return (fn(x + h) - fn(x - h)) / (2 * h)


numeric = {
    "d_theta": central(lambda v: unclamped(econ, replace(fiscal, theta_pub=v)), fiscal.theta_pub),
    "d_c": central(lambda v: unclamped(econ, replace(fiscal, c=v)), fiscal.c),
    "d_s": central(lambda v: unclamped(replace(econ, s=v), fiscal), econ.s),
    "d_sigma": central(lambda v: unclamped(replace(econ, sigma=v), fiscal), econ.sigma),
}
for name, fd in numeric.items():
    print(f"{name:>8}: closed {getattr(e, name):10.4f}   finite difference {fd:10.4f}")

# %% [markdown]
# First-order relative change for a policy package: one point more public
# share and two points lower operating costs.

# %%
d = log_differential(econ, fiscal, 2025, dTheta=0.01, dc=-0.02)
exact = unclamped(econ, replace(fiscal, theta_pub=fiscal.theta_pub + 0.01, c=fiscal.c - 0.02)) / e.gamma_star - 1
print(f"linear estimate {d:+.4f}, exact {exact:+.4f}")
