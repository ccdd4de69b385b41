# %% [markdown]
# # Where the codes grow
#
# For fixed b the code C(aP + bQ) grows with a only at the members of H_b^*.
# Three routes give the same set: a membership formula, a count of
# Riemann-Roch dimensions, and plain matrix ranks.

# %%
from agflag import presets
from agflag.arith import hb_star_closed, hb_star_via_ell, max_hb_star
from agflag.codes import hb_star_via_rank
from agflag.curve import standard_support

support = standard_support(presets.norm_trace(2, 3), 1)
params = support.params

for b in range(4):
    closed = list(hb_star_closed(params, b))
    same = closed == list(hb_star_via_ell(params, b)) == hb_star_via_rank(support, b)
    print(f"b={b}: max={max_hb_star(params, b)}, routes agree: {same}")

# %% [markdown]
# Gaps below n - b show where the two-point semigroup skips values.

# %%
star = set(hb_star_closed(params, 0))
print("a < n missing from H_0^*:", [a for a in range(params.n) if a not in star])
