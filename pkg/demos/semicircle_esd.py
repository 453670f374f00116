# %% [markdown]
# # Semicircle law for a centered weighted graph
#
# Sample G(n, p), weight each edge by the Randic weight, divide by the weight
# at the typical degree np and subtract p off the diagonal.  The eigenvalues
# of the result, scaled by n^-1/2, follow the semicircle law of scale
# sqrt(p(1 - p)).

# %%
import math

import numpy as np

from graphenergy import Seed, SemicircleLaw, get_spec, sample_gnp
from graphenergy.semicircle import ks_distance
from graphenergy.spectral import eigenvalues_symmetric
from graphenergy.weights import build_weighted_adjacency, center_scale, center_value

n, p = 800, 0.3
spec = get_spec("randic")
g = sample_gnp(n, p, Seed(1))
at = center_scale(build_weighted_adjacency(g, spec), center_value(spec, n, p), p)
spectrum = eigenvalues_symmetric(at)
law = SemicircleLaw.from_p(p)

# %% [markdown]
# A text histogram against the limiting density.

# %%
x = spectrum.eigenvalues / math.sqrt(n)
edges = np.linspace(*law.support, 17)
counts, _ = np.histogram(x, edges)
for lo, hi, c in zip(edges[:-1], edges[1:], counts):
    expected = n * (law.cdf(hi) - law.cdf(lo))
    print(f"[{lo:+.3f}, {hi:+.3f})  {'#' * int(c // 4):<30} {c:4d}  (law {expected:6.1f})")

# %%
print("KS distance:", ks_distance(spectrum, 1 / math.sqrt(n), law))
