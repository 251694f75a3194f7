# %% [markdown]
# # Reductive quotients via the instability stratification
#
# Take Gm acting on P^3 with weights (1, 1, -1, -1). The unstable locus has
# two strata, each a P^1 of codimension 2 with a residual Gm. Subtracting
# their contributions from `P_t(P^3) P_t(BGm)` leaves the equivariant series
# of the semistable locus, and since the action is free there, dividing
# out gives the quotient, which is P^1 x P^1.

# %%
from poincare_git import CycloRational, Gm, IntPoly, ProjectiveSpace, SL, ProductSpace
from poincare_git import ComputationTrace, GITProblem, StratumData, StratumPiece, quotient_series

leaf = CycloRational(IntPoly.parse("1 + t^2"), [2])
strata = tuple(StratumData(lbl, (StratumPiece(2, leaf=leaf),)) for lbl in ("beta+", "beta-"))
problem = GITProblem(ProjectiveSpace(3), Gm(), strata, dim_x=3, dim_g=1, ss_equals_s=True)

trace = ComputationTrace()
print(quotient_series(problem, trace))
for step in trace.steps:
    print(f"  {step.label:30} [{step.formula}] {step.output}")

# %% [markdown]
# Three points on the line modulo Mobius transformations: the diagonals
# are unstable (three of codimension 1, the triple diagonal of codimension
# 2), and what is left is a single point.

# %%
p1 = ProjectiveSpace(1)
pt_leaf = CycloRational(1, [2])
strata = tuple(StratumData(f"pair{i}", (StratumPiece(1, leaf=pt_leaf),)) for i in range(3))
strata += (StratumData("triple", (StratumPiece(2, leaf=pt_leaf),)),)
print(quotient_series(GITProblem(ProductSpace((p1, p1, p1)), SL(2), strata, 3, 3, True)))

# %% [markdown]
# A stratum's fixed data can itself be a GIT problem; the engine recurses.

# %%
sub = GITProblem(ProjectiveSpace(1), Gm())
nested = tuple(StratumData(lbl, (StratumPiece(2, sub=sub),)) for lbl in ("beta+", "beta-"))
print(quotient_series(GITProblem(ProjectiveSpace(3), Gm(), nested, 3, 1, True)))
