# %% [markdown]
# # Quotients by groups with a graded unipotent radical
#
# Only the minimal fixed component Z_min of the grading matters. When every
# point there has trivial U-stabiliser, the quotient's series is
# `P_t(Z_min)` times the kirwan factor for `d = dim X - dim U - dim Z_min`.

# %%
from poincare_git import BlowUpStage, GradedGroupSpec, Gm, IntPoly, NRProblem
from poincare_git import h_quotient, hat_uhat_quotient, hat_zmin_series, resolution_report, uhat_quotient

one = IntPoly(1)
plane = NRProblem(GradedGroupSpec(dim_u=1), dim_x=2, dim_zmin=0, zmin_series=one)
print("P^2 // Uhat:", uhat_quotient(plane)[0])

h = NRProblem(GradedGroupSpec(1, levi=Gm()), 6, 3, IntPoly.parse("1 + 2*t^2 + t^4"), mode="h")
print("with a Levi factor:", h_quotient(h)[0])

# %% [markdown]
# When some points of Z_min have positive-dimensional stabilisers, X is
# blown up along the worst locus, stage by stage, until the stabilisers are
# trivial. Each stage changes Z_min by the smooth blow-up formula.

# %%
stages = (BlowUpStage(2, 2, one, index=0), BlowUpStage(1, 2, one, index=1))
p = NRProblem(GradedGroupSpec(1), 4, 2, IntPoly.parse("1 + t^2 + t^4"), stages, "uhat_blowups")
z, _ = hat_zmin_series(p)
out, trace = hat_uhat_quotient(p)
print("Z_min after blow-ups:", z)
print("quotient:", out)
for r in resolution_report(p):
    print(f"  stage {r['stage']} resolves {r['locus']} (center {r['series']})")

# %% [markdown]
# Every step is recorded, and the trace can be replayed from scratch.

# %%
print(trace.replay() == out, [s.formula for s in trace.steps])
