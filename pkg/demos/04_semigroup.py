# %% [markdown]
# # The two-point semigroup
#
# Gamma(P, Q) pairs each gap at P with a gap at Q. Closing Gamma together with
# the one-point semigroups under coordinate-wise max gives back all of H(P, Q).

# %%
import numpy as np

from agflag import presets
from agflag.arith import gamma_set, lub_membership, semigroup_membership
from agflag.curve import standard_support

params = standard_support(presets.hermitian(3), 1).params
print("genus", params.g, "Gamma:", gamma_set(params))

w = 4 * params.g
grid = np.array([[semigroup_membership(params, a, b) for a in range(w + 1)]
                 for b in range(w + 1)], dtype=int)
print(grid[::-1])

# %%
rebuilt = np.array([[lub_membership(params, a, b) for a in range(w + 1)]
                    for b in range(w + 1)], dtype=int)
print("lub closure reproduces the grid:", bool((grid == rebuilt).all()))
