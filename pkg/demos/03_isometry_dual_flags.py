# %% [markdown]
# # Isometry-dual flags
#
# A flag is isometry-dual when one scaling vector x carries every code onto
# the dual of its partner. The cheap test is m | 2b + 1; here it is checked
# against a direct search for x.

# %%
from agflag import presets
from agflag.curve import standard_support
from agflag.flags import isodual_b_list, verify_flag

support = standard_support(presets.norm_trace(2, 3), 1)
print("predicted b values:", isodual_b_list(support.params))

for b in range(6):
    rep = verify_flag(support, b)
    print(b, rep.fast_kummer, rep.oracle)

# %%
rep = verify_flag(support, 3)
print("witness:", [int(v) for v in rep.witness])
