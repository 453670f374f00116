# %% [markdown]
# # Which constant for the sum-connectivity weight?
#
# With f(x, y) = (x + y)^-1/2 the general law gives energy
# (4 sqrt(2) / 3 pi) sqrt(1 - p) n.  A constant half as large,
# 2 sqrt(2) / 3 pi, is sometimes quoted.  Monte Carlo settles it: fit
# c(n) = E / (sqrt(1 - p) n) against n^-1/2 and extrapolate.

# %%
import math

import numpy as np

from graphenergy import ExperimentConfig, run_sweep

ns = (250, 500, 1000, 2000)
cfg = ExperimentConfig(ns, (0.5,), ("sci",), trials=3, master_seed=5, compute_ks=False, moment_orders=())
rows = run_sweep(cfg).summary
c = np.array([r.mean_energy / (math.sqrt(0.5) * r.n) for r in rows])
slope, c_inf = np.polyfit(1 / np.sqrt(ns), c, 1)

# %%
print("c(n):", np.round(c, 5))
print("extrapolated:", round(c_inf, 5))
print("4 sqrt(2) / 3 pi =", round(4 * math.sqrt(2) / (3 * math.pi), 5))
print("2 sqrt(2) / 3 pi =", round(2 * math.sqrt(2) / (3 * math.pi), 5))
