# %% [markdown]
# # Exact series arithmetic
#
# Everything in the package is built on three value types. `IntPoly` is a
# polynomial with Python-int coefficients, so nothing overflows.
# `CycloRational` is a polynomial over a product of `(1 - t^k)` factors,
# which is the shape every equivariant series takes. `TruncatedSeries` is
# what you get when you expand one of those to a finite order.

# %%
from poincare_git import CycloRational, IntPoly, expand, kirwan_factor
from poincare_git.algebra import euler_characteristic, exact_div, is_palindromic, one_minus_t

p = IntPoly.parse("1 + t^2")
print(p * p)
print((p * p).latex())

# %% [markdown]
# The kirwan factor `(1 - t^(2d)) / (1 - t^2)` appears in every quotient
# formula. It is a polynomial, and multiplying back recovers the numerator.

# %%
for d in range(1, 5):
    f = kirwan_factor(d)
    print(d, f, f * one_minus_t(2) == one_minus_t(2 * d))

# %% [markdown]
# Rational series cancel `(1 - t^k)` factors automatically. Division that
# should come out polynomial is checked with `exact_div`.

# %%
r = CycloRational(IntPoly.parse("1 - t^4"), [2])
print(r, "->", exact_div(r))

bg = CycloRational(1, [2, 4])  # the classifying space of GL(2)
print(bg, "=", expand(bg, 10))

# %% [markdown]
# Two cheap sanity checks show up all over the place: the Euler
# characteristic is the value at `t = -1`, and smooth compact spaces (or
# quotients with only finite stabilisers) have palindromic series.

# %%
q = IntPoly.parse("1 + 2*t^2 + t^4")
print(euler_characteristic(q), is_palindromic(q, 2))
