# %% [markdown]
# # Special values of gamma
#
# For gamma in {1, 0, -1, (1+sqrt5)/2} the series R and S are modular
# functions, expressible through a Hauptmodul h.  Each identity is checked as
# an exact q-series difference.

# %%
from sixvertex.modular import NEWTON_POLYGON_N5, relation_for_case, verify_case

for N in (3, 4, 6, 5):
    print(f"\nN = {N}")
    for r in verify_case(N, 30):
        print(f"  {'pass' if r.passed else 'FAIL'}  {r.identity_name}")

# %% [markdown]
# At N = 5 the equation in h quoted alongside R(h) and S(h) fails already at
# h^0.  The equation rebuilt from R(h) and S(h) holds.  It differs in one
# factor of the dt/dh coefficient and in the whole t coefficient.

# %% [markdown]
# R and S are algebraically dependent.  An exact kernel computation finds the
# relation without knowing it in advance.

# %%
rel6 = relation_for_case(6)
print("gamma = -1:", rel6)

rel5 = relation_for_case(5)
print("gamma = phi: support", sorted(rel5.support))
print("inside the Newton polygon:", set(rel5.support) <= NEWTON_POLYGON_N5)
