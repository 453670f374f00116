# %% [markdown]
# # Predicted energy for each degree-based weight
#
# Every weight has the general prediction f(np, np) (8 / 3 pi) sqrt(p(1-p))
# n^1.5 and a closed form obtained by replacing f(np, np) with its leading
# term.  The table compares the two and lists the maximizing p.

# %%
from graphenergy import catalog, predict_energy
from graphenergy.predict import CLOSED_FORM, argmax_p

n, p = 10_000, 0.5
print(f"{'weight':>20} {'general':>12} {'closed':>12} {'ratio':>8} {'exponent':>8}  argmax p")
for spec in catalog(alpha=0.5):
    general = predict_energy(spec, n, p).predicted_energy
    closed = predict_energy(spec, n, p, CLOSED_FORM)
    best = argmax_p(spec)
    where = f"{best.p_star:.4f}" if best.p_star is not None else best.trend
    print(f"{spec.label:>20} {general:12.5g} {closed.predicted_energy:12.5g} "
          f"{general / closed.predicted_energy:8.4f} {closed.leading_exponent:8.2f}  {where}")

# %% [markdown]
# The logarithmic weights converge slowly: their closed forms use ln n where
# the exact center uses ln(np), so the ratio only approaches 1 like 1 / ln n.
