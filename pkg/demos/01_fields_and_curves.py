# %% [markdown]
# # Fields, curves and points
#
# Field elements are small integers: the base-p digits are the coefficients
# of the representing polynomial, constant term first.

# %%
from agflag import make_field, presets
from agflag.curve import enumerate_points, standard_support

F = make_field(2, 3)
g = F.generator
print(F.q, "elements, modulus coefficients", F.modulus)
print("g^7 =", g**7, " g^3 + g + 1 =", g**3 + g + 1)

# %% [markdown]
# The norm-trace curve over GF(8) is y^7 = x^4 + x^2 + x, a Kummer curve with
# m = 7 and deg f = 4.

# %%
curve = presets.norm_trace(2, 3)
print("m, r, genus:", curve.m, curve.r, curve.genus)
pts = enumerate_points(curve)
print(len(pts), "affine points;", sum(p.kind == "ramified" for p in pts), "ramified")

# %%
support = standard_support(curve, 1)
print("Q =", (int(support.Q.x), int(support.Q.y)), " code length n =", support.n)
