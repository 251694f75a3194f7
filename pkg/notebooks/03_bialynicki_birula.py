# %% [markdown]
# # Counting cells with a Gm-action
#
# A generic Gm acting on P^n has n + 1 isolated fixed points. The attracting
# cell of each has codimension fixed by how many weights lie above it, and
# the sum of `t^(2 codim)` recovers P_t(P^n).

# %%
from poincare_git import IntPoly
from poincare_git.bb import FixedComponentData, assemble_bb, equivariant_over_xmin

weights = [3, -1, 0, 7]
n = len(weights) - 1
codims = [n - sum(w > wi for w in weights) for wi in weights]
print(codims)
print(assemble_bb([FixedComponentData(IntPoly(1), c) for c in codims]))

# %% [markdown]
# Fixed components can have positive dimension. For P^1 x P^1 with Gm
# acting on the first factor there are two fixed lines.

# %%
line = IntPoly.parse("1 + t^2")
print(assemble_bb([FixedComponentData(line, 0), FixedComponentData(line, 1)]))

# %% [markdown]
# The open set that flows to the minimal fixed component retracts onto it,
# and Gm acts trivially there, so its equivariant series is just
# `P_t(Z_min) / (1 - t^2)`.

# %%
print(equivariant_over_xmin(line, 8))
