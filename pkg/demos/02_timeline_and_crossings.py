# %% [markdown]
# # When does capability overtake the threshold?
#
# The threshold drifts up at (1 - sigma) * g per year while capability
# doubles every T_d years. Both are exponential, so the crossing has a
# closed form; a bisection on the evaluated paths confirms it.

# %%
from ubi_threshold import crossing_year, crossing_year_bisect, preset_us_2025, run_timeline

preset = preset_us_2025()
table = run_timeline(preset, range(2025, 2061))
print(" ".join(f"{c:>12}" for c in table.columns))
for row in table.rows[::5]:
    print(" ".join(f"{v:>12.3f}" if isinstance(v, float) else f"{v:>12}" for v in row))

# %%
for td in preset.doubling_years:
    sc = preset.scenario(td)
    res = crossing_year(sc, preset.econ, preset.fiscal, horizon_year=2100)
    check = crossing_year_bisect(sc, preset.econ, preset.fiscal, 2100)
    print(
        f"T_d = {td:>4g} y: crosses at {res.crossing_year_continuous:.3f} "
        f"(first full year {res.crossing_year_first_integer}, rounded {res.crossing_year_rounded}); "
        f"bisection {check:.6f}"
    )

# %% [markdown]
# A doubling time longer than ln 2 / ((1 - sigma) g) never catches up.

# %%
import math

never = math.log(2) / ((1 - preset.econ.sigma) * preset.econ.g)
print(f"no crossing for T_d beyond {never:.0f} years")
print(crossing_year(preset.scenario(never * 1.1), preset.econ, preset.fiscal, 3000))
