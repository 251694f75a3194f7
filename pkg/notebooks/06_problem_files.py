# %% [markdown]
# # Problem files, checks and the command line
#
# Problems are JSON documents tagged by `"problem"`. `compute` validates
# one, runs the matching engine and returns an envelope with the result,
# the full trace and a list of consistency checks.

# %%
import json
from pathlib import Path

import poincare_git
from poincare_git import compute, verify
from poincare_git.cli import main

fixtures = Path(poincare_git.__file__).parent / "fixtures"
env = compute(fixtures / "h_one_stage.json")
print(env.render("plain"))
for c in env.checks:
    print(f"  {'PASS' if c.passed else 'FAIL'} {c.name}")

# %% [markdown]
# Problems can also be written inline. Schema errors point at the
# offending field.

# %%
doc = {"problem": "space", "space": {"type": "grassmannian", "k": 2, "n": 5}}
print(compute(doc).render("latex"))
try:
    compute({"problem": "space", "space": {"type": "projective", "n": -2}})
except poincare_git.SchemaError as exc:
    print(exc.path, "->", exc)

# %% [markdown]
# `verify` only runs the checks; it returns exit status 2 if any fail.

# %%
print(verify(doc)[1])

# %% [markdown]
# The same is available from the shell as `poincare-git`.

# %%
main(["compute", "-i", str(fixtures / "p3_gm.json"), "--format", "json"])
main(["expand", "-e", "1;2,4", "-N", "8"])
print(json.dumps([e["name"] for e in poincare_git.problems.catalog()]))
