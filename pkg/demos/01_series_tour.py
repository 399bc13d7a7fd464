# %% [markdown]
# # A tour of the closed-form series
#
# Everything starts from four reduced theta series in the nome q.  Their
# coefficients are polynomials in gamma, so the whole pipeline can run with
# gamma left symbolic.

# %%
from fractions import Fraction

from sixvertex.genfun import GenFunBundle, specialize

K = 10
b = GenFunBundle(None, K)

for name in ("t(q)", "R(q)", "q(t)", "R(t)"):
    f = b.named(name)
    print(f"{name:6} = " + " + ".join(f"({f[n]}){f.var}^{n}" for n in range(1, 4)) + " + ...")

# %% [markdown]
# Q(t, gamma) counts rooted quartic planar maps with an Eulerian orientation,
# where gamma marks alternating vertices.  Its coefficients should be
# polynomials with nonnegative integer coefficients.

# %%
Q = b.Q_t
for n in range(1, 6):
    print(f"[t^{n}] Q = {Q[n]}")

# %% [markdown]
# Setting gamma = 1 forgets the alternating statistic and counts all Eulerian
# orientations; gamma = 0 keeps only those with no alternating vertex.

# %%
for value in (Fraction(1), Fraction(0)):
    Qv = specialize(Q, value)
    print(f"gamma = {value}:", [int(Qv[n]) for n in range(1, Qv.order)])
