import json

import pytest

from poincare_git.algebra import IntPoly, TruncatedSeries
from poincare_git.errors import EmptyQuotient, NotPolynomial, SchemaError, StagesNotMonotone
from poincare_git.problems import catalog, compute, decode, dumps, encode, load, verify

from conftest import DATA, FIXTURES, GOLDEN

SHIPPED = sorted(FIXTURES.glob("*.json"))


def _doc(name):
    return json.loads((FIXTURES / name).read_text())


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.stem)
def test_fixture_is_canonical(path):
    text = path.read_text()
    assert dumps(encode(load(path))) == text
    assert dumps(encode(load(text))) == text


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.stem)
def test_golden_render(path):
    env = compute(path)
    want = (GOLDEN / f"{path.stem}.txt").read_text()
    assert f"plain: {env.render('plain')}\nlatex: {env.render('latex')}\n" == want


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.stem)
def test_fixture_checks_pass(path):
    checks, code = verify(path)
    assert code == 0, [c for c in checks if not c.passed]
    assert any(c.name == "trace-replay" for c in checks)


def test_envelope_shape():
    env = compute(FIXTURES / "p3_gm.json").to_json()
    assert set(env) == {"schema_version", "problem", "result", "trace", "checks", "warnings", "report"}
    assert env["result"]["kind"] == "polynomial"
    assert env["result"]["text"] == "1 + 2*t^2 + t^4"
    assert env["result"]["latex"] == "1 + 2t^{2} + t^{4}"
    assert all(isinstance(v, str) for v in env["result"]["coeffs"].values())
    names = [c["name"] for c in env["checks"]]
    assert names[:2] == ["perfectness", "exact-division"] and "palindromic(n=2)" in names


def test_json_render_is_canonical():
    text = compute(FIXTURES / "bb_p2.json").render("json")
    assert text.endswith("\n")
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"


def test_truncation_override():
    env = compute(FIXTURES / "classifying_sl2.json", truncate=4)
    assert isinstance(env.result, TruncatedSeries) and env.result.order == 4
    assert str(env.result) == "1 + t^4 + O(t^5)"


def test_equivariant_warning():
    env = compute(FIXTURES / "p3_gm_equivariant.json")
    assert env.warnings and "ss != s" in env.warnings[0]


@pytest.mark.parametrize(
    "mutate, path",
    [
        (lambda d: d.pop("space"), "/"),
        (lambda d: d.__setitem__("dim_x", "three"), "/dim_x"),
        (lambda d: d["strata"][0]["pieces"][0].__setitem__("codim", 0), "/strata/0/pieces/0/codim"),
        (lambda d: d["space"].__setitem__("n", -1), "/space/n"),
        (lambda d: d.__setitem__("schema_version", "2"), "/schema_version"),
        (lambda d: d.__setitem__("problem", "magic"), "/problem"),
    ],
)
def test_schema_errors_carry_paths(mutate, path):
    doc = _doc("p3_gm.json")
    mutate(doc)
    with pytest.raises(SchemaError) as info:
        decode(doc)
    assert info.value.path == path
    assert info.value.exit_code == 1


def test_model_errors_become_schema_errors():
    doc = _doc("p3_gm.json")
    doc["strata"][1]["label"] = "beta+"
    with pytest.raises(SchemaError) as info:
        decode(doc)
    assert info.value.path is not None


def test_invalid_json():
    with pytest.raises(SchemaError):
        load("{not json")


def test_codim_zero_stage_is_a_schema_error():
    with pytest.raises(SchemaError) as info:
        load(DATA / "negative" / "codim_zero_stage.json")
    assert info.value.path == "/stages/0/codim"


@pytest.mark.parametrize(
    "name, exc",
    [("sign_corrupted", NotPolynomial), ("empty_quotient", EmptyQuotient), ("non_monotone", StagesNotMonotone)],
)
def test_computation_errors_report_step_and_trace(name, exc):
    with pytest.raises(exc) as info:
        compute(DATA / "negative" / f"{name}.json")
    assert info.value.step
    assert info.value.exit_code == 3
    if name == "sign_corrupted":
        assert len(info.value.trace) > 3


def test_verify_turns_errors_into_failures():
    for f in sorted((DATA / "negative").glob("*.json")):
        checks, code = verify(f)
        assert code == 2 and not checks[0].passed


def test_synthetic_fixture_fails_duality_check():
    checks, code = verify(DATA / "synthetic_two_stage.json")
    failed = {c.name for c in checks if not c.passed}
    assert code == 2 and any(n.startswith("palindromic") for n in failed)
    assert compute(DATA / "synthetic_two_stage.json").result == IntPoly.parse("1 + 3*t^2 + 3*t^4")


def test_determinism():
    for path in SHIPPED:
        assert dumps(compute(path).to_json()) == dumps(compute(path).to_json())


def test_catalog_samples():
    samples = {(e["kind"], e["name"]): e["sample"] for e in catalog()}
    assert samples["space", "ProjectiveSpace"] == "1 + t^2 + t^4"
    assert samples["classifying", "Gm"] == "1/(1-t^2)"
    assert samples["classifying", "Trivial"] == "1"
    assert samples["space", "BlowUp"] == "1 + 2*t^2 + t^4"
