# %% [markdown]
# # The space and group catalog
#
# Projective spaces, Grassmannians, products and blow-ups along smooth
# centers have closed-form Poincare polynomials. Groups contribute the
# series of their classifying space.

# %%
from poincare_git import (
    GL,
    SL,
    BlowUp,
    Gm,
    Grassmannian,
    Point,
    ProductSpace,
    ProjectiveSpace,
    expand,
    poincare_classifying,
    poincare_space,
)

for s in [ProjectiveSpace(3), Grassmannian(2, 4), ProductSpace((ProjectiveSpace(1), ProjectiveSpace(1)))]:
    print(f"{s!r:70} {poincare_space(s)}")

# %% [markdown]
# Blowing up a point in the plane adds one class in degree 2: the
# exceptional line. The result matches P^1 x P^1, as it must.

# %%
print(poincare_space(BlowUp(ProjectiveSpace(2), Point(), 2)))

# %% [markdown]
# Classifying spaces have infinite series, so they come back as rationals
# that can be expanded to any order.

# %%
for g in [Gm(), SL(2), GL(3)]:
    r = poincare_classifying(g)
    print(f"{g!r:10} {str(r):30} {expand(r, 8)}")
