import pytest

from poincare_git.algebra import CycloRational, IntPoly
from poincare_git.errors import NotPolynomial, RecursionLimit, SsNotS
from poincare_git.kirwan import (
    MAX_DEPTH,
    GITProblem,
    StratumData,
    StratumPiece,
    equivariant_total,
    quotient_series,
    semistable_series,
    stratum_terms,
)
from poincare_git.problems import load
from poincare_git.spaces import SL, Gm, ProductSpace, ProjectiveSpace, Trivial, Point

from conftest import DATA, FIXTURES

P = IntPoly.parse
LEAF_P1 = CycloRational(P("1 + t^2"), [2])


def p3_gm(order=("beta+", "beta-")):
    strata = tuple(StratumData(lbl, (StratumPiece(2, leaf=LEAF_P1),)) for lbl in order)
    return GITProblem(ProjectiveSpace(3), Gm(), strata, dim_x=3, dim_g=1, ss_equals_s=True)


def p1cubed():
    p1 = ProjectiveSpace(1)
    leaf = CycloRational(1, [2])
    strata = tuple(StratumData(f"diag{i}", (StratumPiece(1, leaf=leaf),)) for i in range(3))
    strata += (StratumData("triple", (StratumPiece(2, leaf=leaf),)),)
    return GITProblem(ProductSpace((p1, p1, p1)), SL(2), strata, dim_x=3, dim_g=3, ss_equals_s=True)


def test_p3_gm_quotient_is_p1_squared():
    assert quotient_series(p3_gm()) == P("1 + 2*t^2 + t^4")


def test_p1cubed_sl2_is_a_point():
    assert quotient_series(p1cubed()) == IntPoly(1)


def test_stratum_order_is_irrelevant():
    assert semistable_series(p3_gm()) == semistable_series(p3_gm(("beta-", "beta+")))


def test_nested_sub_problem_matches_leaf():
    sub = GITProblem(ProjectiveSpace(1), Gm())
    strata = tuple(StratumData(lbl, (StratumPiece(2, sub=sub),)) for lbl in ("beta+", "beta-"))
    nested = GITProblem(ProjectiveSpace(3), Gm(), strata, dim_x=3, dim_g=1, ss_equals_s=True)
    assert semistable_series(nested) == semistable_series(p3_gm())


def test_perfectness_reconstruction_on_fixtures():
    for path in sorted(FIXTURES.glob("*.json")):
        pf = load(path)
        if pf.problem != "reductive":
            continue
        p = pf.payload
        rebuilt = semistable_series(p)
        for term in stratum_terms(p):
            rebuilt = rebuilt + term
        assert rebuilt == equivariant_total(p.space, p.group), path.name


def test_requires_ss_equals_s():
    p = GITProblem(ProjectiveSpace(3), Gm(), p3_gm().strata, dim_x=3, dim_g=1, ss_equals_s=False)
    with pytest.raises(SsNotS):
        quotient_series(p)
    # the equivariant series is still available
    assert semistable_series(p) == semistable_series(p3_gm())


def test_sign_corrupted_stratification():
    with pytest.raises(NotPolynomial) as info:
        quotient_series(load(DATA / "negative" / "sign_corrupted.json").payload)
    assert info.value.step == "quotient: exact division"
    assert info.value.trace


def test_recursion_limit():
    p = GITProblem(Point(), Trivial())
    for _ in range(MAX_DEPTH + 1):
        p = GITProblem(Point(), Trivial(), (StratumData("s", (StratumPiece(1, sub=p),)),))
    with pytest.raises(RecursionLimit):
        semistable_series(p)


def test_trace_replays():
    from poincare_git.trace import ComputationTrace

    tr = ComputationTrace()
    out = quotient_series(p3_gm(), tr)
    assert tr.replay() == out
    formulas = {s.formula for s in tr.steps}
    assert {"input", "product", "stratum-term", "difference", "exact-division"} <= formulas


def test_model_validation():
    with pytest.raises(ValueError):
        StratumPiece(0, leaf=LEAF_P1)
    with pytest.raises(ValueError):
        StratumPiece(1)
    with pytest.raises(ValueError):
        StratumData("x", ())
    piece = (StratumPiece(1, leaf=LEAF_P1),)
    with pytest.raises(ValueError):
        GITProblem(Point(), Gm(), (StratumData("a", piece), StratumData("a", piece)))
