# %% [markdown]
# # Baseline capability threshold
#
# Load the U.S. 2025 preset, inspect where each number comes from, and
# compute the capability multiple at which public capital rents pay for a
# transfer worth 11% of output.

# %%
from ubi_threshold import gamma_star, is_solvent, preset_us_2025, steady_state_kappa
from ubi_threshold.calibration import to_flat_dict

preset = preset_us_2025()
for key, value in to_flat_dict(preset).items():
    print(f"{key:>15} = {value!r:<24} {preset.provenance[key][:60]}")

# %% [markdown]
# The steady-state capital-output ratio feeds the rent scale. With
# sigma < 1 the CES curvature rho is negative.

# %%
econ, fiscal = preset.econ, preset.fiscal
print(f"rho   = {econ.rho:.6f}")
print(f"kappa = {steady_state_kappa(econ):.6f}")

rep = gamma_star(econ, fiscal, 2025)
print(f"Z        = {rep.z_factor:.4f}")
print(f"gamma*   = {rep.gamma_star:.4f}  (always solvent: {rep.always_solvent})")

# %% [markdown]
# The threshold is a sharp boundary: capability at or above it balances
# the budget, anything below falls short.

# %%
for gamma in (1.0, 4.0, rep.gamma_star, 6.0, 8.0):
    print(f"gamma = {gamma:7.4f}  solvent = {is_solvent(econ, fiscal, gamma, 2025)}")
