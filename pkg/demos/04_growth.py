# %% [markdown]
# # Growth of the coefficients
#
# Ratios of consecutive coefficients of Q(t, gamma) approach the growth
# rate.  For gamma = 1 the limit is 4*sqrt(3)*pi, about 21.77, and the
# approach is slow because of logarithmic corrections.

# %%
import math
from fractions import Fraction

from sixvertex.genfun import GenFunBundle

for gamma in (Fraction(1), Fraction(0), Fraction(-1)):
    Q = GenFunBundle(gamma, 42).Q_t
    ratios = [float(Q[n + 1] / Q[n]) for n in range(30, 39)]
    print(f"gamma = {gamma}: Q_(n+1)/Q_n for n=30..38 ->", " ".join(f"{r:.4f}" for r in ratios))

print("4*sqrt(3)*pi =", 4 * 3**0.5 * math.pi)
