# %% [markdown]
# # Transition dynamics
#
# Simulate capital accumulation with CES output while capability doubles
# every two years. The realized capital-output ratio q moves with capability;
# the solvency flag uses the steady-state ratio.

# %%
from ubi_threshold import CapabilityScenario, preset_us_2025, q_iterate, simulate_path, steady_state_kappa
from ubi_threshold.economy import contraction_factor

preset = preset_us_2025()
path = simulate_path(preset.econ, preset.fiscal, preset.scenario(2.0), years=12)
print(f"{'year':>6} {'gamma':>8} {'K':>8} {'Y':>8} {'q':>7} {'R':>7} {'gamma*':>7} solvent")
for r in path.records:
    print(f"{r.year:>6} {r.gamma:8.2f} {r.K:8.3f} {r.Y:8.4f} {r.q:7.3f} {r.R:7.4f} {r.gamma_star:7.3f} {r.solvent}")

# %% [markdown]
# With capability held fixed, q converges to the steady state. The
# reduced map q' = (s + (1 - delta) q) / e^g contracts errors by a
# constant factor each year.

# %%
kappa = steady_state_kappa(preset.econ)
lam = contraction_factor(preset.econ)
qs = q_iterate(preset.econ, 10.0, 5)
for n, q in enumerate(qs):
    print(f"step {n}: q = {q:.6f}, error = {q - kappa:+.6f}")
print(f"contraction factor {lam:.6f}")

# %%
still = CapabilityScenario(doubling_years=1e12)
long_run = simulate_path(preset.econ, preset.fiscal, still, K0=0.5, years=3000)
print(f"q after 3000 years: {long_run.records[-1].q:.8f} vs kappa {kappa:.8f}")
