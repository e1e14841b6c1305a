# %% [markdown]
# # Public ownership versus operating costs
#
# The threshold scales as theta_pub ** -sigma, so raising the public share
# helps most when it starts small. Operating costs c shift every curve by
# the same factor ((1 - c1) / (1 - c2)) ** sigma.

# %%
from dataclasses import replace

from ubi_threshold import cross_country_gap, gamma_star, ownership_constant, preset_us_2025, run_ownership_sweep

preset = preset_us_2025()
table = run_ownership_sweep(preset, [0.05, 0.1, 0.145, 0.2, 1 / 3, 0.5, 0.75, 1.0], c_values=[0.5, 0.75])
print(table.columns)
for theta, lo, hi in table.rows:
    print(f"theta = {theta:5.3f}:  c=0.5 -> {lo:6.3f}   c=0.75 -> {hi:6.3f}   ratio {hi / lo:.4f}")
print("2 ** sigma =", round(2 ** preset.econ.sigma, 4))

# %% [markdown]
# Full public ownership leaves only the constant C_t, the level every
# curve flattens toward.

# %%
fiscal = replace(preset.fiscal, c=0.5)
print(f"C_t(c=0.5) = {ownership_constant(preset.econ, fiscal, 2025):.4f}")

# %% [markdown]
# Two otherwise identical countries that differ only in public share.

# %%
gap = cross_country_gap(preset.econ, preset.fiscal, 0.145, 1 / 3, 2025)
print(f"low-share country {gap.gamma_star_1:.3f}, high-share country {gap.gamma_star_2:.3f}, gap {gap.gap:.3f}")

# %% [markdown]
# Partial profit capture phi multiplies the threshold by phi ** -sigma.

# %%
for phi in (1.0, 0.8, 0.5):
    g = gamma_star(preset.econ, replace(preset.fiscal, phi=phi), 2025).gamma_star
    print(f"phi = {phi}: gamma* = {g:.3f}")
