# %% [markdown]
# # Trace moments, closed walks and Catalan numbers
#
# The k-th trace moment (1/n) Tr(A^k) is a sum over closed walks of length k.
# For the scaled centered matrix, the even moments tend to Catalan numbers
# times sigma^(2k) and the odd moments tend to 0.

# %%
import math

from graphenergy import Seed, SemicircleLaw, get_spec, sample_gnp
from graphenergy.spectral import eigenvalues_symmetric, trace_moment, walk_moment
from graphenergy.weights import build_weighted_adjacency, center_scale, center_value

# %% [markdown]
# On a small graph the walk sum and the eigenvalue sum agree exactly.

# %%
spec = get_spec("zagreb_m1")
g = sample_gnp(7, 0.5, Seed(3))
fc = center_value(spec, 7, 0.5)
s = eigenvalues_symmetric(center_scale(build_weighted_adjacency(g, spec), fc, 0.5))
for k in range(1, 6):
    print(k, walk_moment(g, spec, fc, 0.5, k), trace_moment(s, k))

# %% [markdown]
# At larger n the moments approach the semicircle values.

# %%
n, p = 1000, 0.5
s = eigenvalues_symmetric(center_scale(sample_gnp(n, p, Seed(4)).adjacency(), 1.0, p))
law = SemicircleLaw.from_p(p)
for k in range(1, 7):
    print(f"M{k}: {s.moment(k, 1 / math.sqrt(n)):+.5f}  limit {law.moment(k):+.5f}")
