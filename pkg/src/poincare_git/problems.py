"""Problem files: decoding, canonical encoding, computation and checks.

A problem file is a JSON object tagged by ``"problem"``; see
:mod:`poincare_git.schema` for the accepted shapes. :func:`compute` runs
the matching engine and wraps the answer in a :class:`ResultEnvelope`
together with the trace and a list of consistency checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from jsonschema.exceptions import best_match

from . import kirwan, nonreductive
from .algebra import (
    CycloRational,
    IntPoly,
    TruncatedSeries,
    euler_characteristic,
    is_palindromic,
    kirwan_factor,
)
from .bb import FixedComponentData, assemble_bb, equivariant_over_xmin
from .errors import InvalidCodimension, PoincareError, SchemaError
from .kirwan import GITProblem, StratumData, StratumPiece
from .nonreductive import BlowUpStage, GradedGroupSpec, NRProblem
from .schema import SCHEMA_VERSION, validator
from .spaces import (
    GL,
    SL,
    BlowUp,
    ClassifyingSpace,
    ExplicitBG,
    ExplicitPolynomial,
    Gm,
    Grassmannian,
    GroupProduct,
    Point,
    ProductSpace,
    ProjectiveSpace,
    Torus,
    Trivial,
    poincare_classifying,
    poincare_space,
    space_dim,
)
from .trace import ComputationTrace, encode_value

__all__ = [
    "DEFAULT_TRUNCATE",
    "Options",
    "BBInput",
    "ProblemFile",
    "Check",
    "ResultEnvelope",
    "load",
    "decode",
    "encode",
    "dumps",
    "compute",
    "verify",
    "catalog",
]

DEFAULT_TRUNCATE = 64

_NR_MODES = {"uhat": "uhat", "h": "h", "uhat-blowups": "uhat_blowups", "h-blowups": "h_blowups"}
_NR_KINDS = {v: k for k, v in _NR_MODES.items()}


@dataclass(frozen=True)
class Options:
    truncate: int | None = None
    format: str = "plain"
    allow_trivial_stages: bool = False


@dataclass(frozen=True)
class BBInput:
    """Payload of a ``bb`` problem: fixed components, or a ``Z_min`` series."""

    components: tuple[FixedComponentData, ...] = ()
    zmin_series: IntPoly | None = None
    dim: int | None = None


@dataclass(frozen=True)
class ProblemFile:
    problem: str
    payload: Any
    options: Options = Options()
    schema_version: str = SCHEMA_VERSION


# -- decoding ---------------------------------------------------------------


def _poly(m: dict) -> IntPoly:
    return IntPoly({int(k): int(c) for k, c in m.items()})


def _at(path: str, fn, *args):
    try:
        return fn(*args)
    except (ValueError, InvalidCodimension) as exc:
        raise SchemaError(str(getattr(exc, "message", exc)), path=path or "/") from exc


def _group(d: dict, path: str):
    t = d["type"]
    if t == "gm":
        return Gm()
    if t == "torus":
        return _at(path, Torus, d["rank"])
    if t == "gl":
        return _at(path, GL, d["n"])
    if t == "sl":
        return _at(path, SL, d["n"])
    if t == "trivial":
        return Trivial()
    if t == "product":
        return GroupProduct(tuple(_group(f, f"{path}/factors/{i}") for i, f in enumerate(d["factors"])))
    series = CycloRational(_poly(d["numerator"]), d.get("denominator", []))
    return _at(path, ExplicitBG, series, d.get("dim"))


def _space(d: dict, path: str):
    t = d["type"]
    if t == "point":
        return Point()
    if t == "projective":
        return ProjectiveSpace(d["n"])
    if t == "grassmannian":
        return _at(path, Grassmannian, d["k"], d["n"])
    if t == "product":
        return ProductSpace(tuple(_space(f, f"{path}/factors/{i}") for i, f in enumerate(d["factors"])))
    if t == "poly":
        return ExplicitPolynomial(_poly(d["coeffs"]), d["dim"])
    if t == "blowup":
        return _at(
            path, BlowUp, _space(d["base"], f"{path}/base"), _space(d["center"], f"{path}/center"), d["codim"]
        )
    return ClassifyingSpace(_group(d["group"], f"{path}/group"))


def _reductive(d: dict, path: str) -> GITProblem:
    strata = []
    for i, s in enumerate(d.get("strata", [])):
        pieces = []
        for j, p in enumerate(s["pieces"]):
            where = f"{path}/strata/{i}/pieces/{j}"
            if "leaf" in p:
                leaf = CycloRational(_poly(p["leaf"]["numerator"]), p["leaf"].get("denominator", []))
                pieces.append(StratumPiece(p["codim"], leaf=leaf))
            else:
                pieces.append(StratumPiece(p["codim"], sub=_reductive(p["sub"], f"{where}/sub")))
        strata.append(StratumData(s["label"], tuple(pieces)))
    return _at(
        f"{path}/strata",
        GITProblem,
        _space(d["space"], f"{path}/space"),
        _group(d["group"], f"{path}/group"),
        tuple(strata),
        d.get("dim_x", 0),
        d.get("dim_g", 0),
        d.get("ss_equals_s", False),
    )


def _nr(d: dict, mode: str) -> NRProblem:
    g = d["group"]
    group = GradedGroupSpec(
        g["dim_u"],
        g.get("grading_weight", 1),
        _group(g.get("levi", {"type": "trivial"}), "/group/levi"),
        g.get("adapted", True),
    )
    stages = tuple(
        BlowUpStage(s["stab_dim"], s["codim"], _poly(s["center_series"]), s.get("i"))
        for s in d.get("stages", [])
    )
    return NRProblem(
        group,
        d["dim_x"],
        d["dim_zmin"],
        _poly(d["zmin_series"]),
        stages,
        mode,
        d.get("zmin_ss_equals_s", True),
        d.get("quotient_zmin_dim"),
    )


def decode(doc: dict) -> ProblemFile:
    """Validate and decode a parsed problem file. Raises :class:`SchemaError`."""
    err = best_match(validator().iter_errors(doc))
    if err is not None:
        path = "/" + "/".join(str(p) for p in err.absolute_path)
        raise SchemaError(err.message, path=path)
    kind = doc["problem"]
    if kind == "reductive":
        payload = _reductive(doc, "")
    elif kind in _NR_MODES:
        payload = _nr(doc, _NR_MODES[kind])
    elif kind == "bb":
        comps = tuple(FixedComponentData(_poly(c["series"]), c["codim"]) for c in doc.get("components", []))
        zmin = _poly(doc["zmin_series"]) if "zmin_series" in doc else None
        payload = BBInput(comps, zmin, doc.get("dim"))
    else:
        payload = _space(doc["space"], "/space")
    o = doc.get("options", {})
    options = Options(o.get("truncate"), o.get("format", "plain"), o.get("allow_trivial_stages", False))
    return ProblemFile(kind, payload, options, doc.get("schema_version", SCHEMA_VERSION))


def load(source) -> ProblemFile:
    """Decode a problem from a path, a JSON string or an already-parsed dict."""
    if isinstance(source, dict):
        return decode(source)
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} (line {exc.lineno})", path="/") from exc
    if not isinstance(doc, dict):
        raise SchemaError("a problem file must be a JSON object", path="/")
    return decode(doc)


# -- canonical encoding -----------------------------------------------------


def _enc_poly(p: IntPoly) -> dict:
    return {str(k): str(c) for k, c in p.items()}


def _enc_rational(r: CycloRational) -> dict:
    return {"numerator": _enc_poly(r.numerator), "denominator": list(r.denominator)}


def _enc_group(g) -> dict:
    if isinstance(g, Gm):
        return {"type": "gm"}
    if isinstance(g, Torus):
        return {"type": "torus", "rank": g.rank}
    if isinstance(g, GL):
        return {"type": "gl", "n": g.n}
    if isinstance(g, SL):
        return {"type": "sl", "n": g.n}
    if isinstance(g, Trivial):
        return {"type": "trivial"}
    if isinstance(g, GroupProduct):
        return {"type": "product", "factors": [_enc_group(f) for f in g.factors]}
    out = {"type": "bg-explicit", **_enc_rational(g.series)}
    if g.dim is not None:
        out["dim"] = g.dim
    return out


def _enc_space(s) -> dict:
    if isinstance(s, Point):
        return {"type": "point"}
    if isinstance(s, ProjectiveSpace):
        return {"type": "projective", "n": s.n}
    if isinstance(s, Grassmannian):
        return {"type": "grassmannian", "k": s.k, "n": s.n}
    if isinstance(s, ProductSpace):
        return {"type": "product", "factors": [_enc_space(f) for f in s.factors]}
    if isinstance(s, ExplicitPolynomial):
        return {"type": "poly", "coeffs": _enc_poly(s.poly), "dim": s.dim}
    if isinstance(s, BlowUp):
        return {"type": "blowup", "base": _enc_space(s.base), "center": _enc_space(s.center), "codim": s.codim}
    return {"type": "classifying", "group": _enc_group(s.group)}


def _enc_reductive(p: GITProblem) -> dict:
    strata = []
    for s in p.strata:
        pieces = []
        for piece in s.pieces:
            if piece.leaf is not None:
                pieces.append({"codim": piece.codim, "leaf": _enc_rational(piece.leaf)})
            else:
                pieces.append({"codim": piece.codim, "sub": _enc_reductive(piece.sub)})
        strata.append({"label": s.label, "pieces": pieces})
    return {
        "space": _enc_space(p.space),
        "group": _enc_group(p.group),
        "dim_x": p.dim_x,
        "dim_g": p.dim_g,
        "ss_equals_s": p.ss_equals_s,
        "strata": strata,
    }


def _enc_nr(p: NRProblem) -> dict:
    out = {
        "group": {
            "dim_u": p.group.dim_u,
            "grading_weight": p.group.grading_weight,
            "levi": _enc_group(p.group.levi),
            "adapted": p.group.adapted,
        },
        "dim_x": p.dim_x,
        "dim_zmin": p.dim_zmin,
        "zmin_series": _enc_poly(p.zmin_series),
        "zmin_ss_equals_s": p.zmin_ss_equals_s,
        "stages": [],
    }
    for s in p.stages:
        stage = {"stab_dim": s.stab_dim, "codim": s.codim, "center_series": _enc_poly(s.center_series)}
        if s.index is not None:
            stage["i"] = s.index
        out["stages"].append(stage)
    if p.quotient_zmin_dim is not None:
        out["quotient_zmin_dim"] = p.quotient_zmin_dim
    return out


def encode(pf: ProblemFile) -> dict:
    """Canonical JSON object for a decoded problem file."""
    if pf.problem == "reductive":
        body = _enc_reductive(pf.payload)
    elif pf.problem in _NR_MODES:
        body = _enc_nr(pf.payload)
    elif pf.problem == "bb":
        b = pf.payload
        body = {}
        if b.components:
            body["components"] = [{"series": _enc_poly(c.series), "codim": c.codim} for c in b.components]
        if b.zmin_series is not None:
            body["zmin_series"] = _enc_poly(b.zmin_series)
        if b.dim is not None:
            body["dim"] = b.dim
    else:
        body = {"space": _enc_space(pf.payload)}
    options = {"format": pf.options.format, "allow_trivial_stages": pf.options.allow_trivial_stages}
    if pf.options.truncate is not None:
        options["truncate"] = pf.options.truncate
    return {"schema_version": pf.schema_version, "problem": pf.problem, **body, "options": options}


def dumps(obj) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- results ----------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class ResultEnvelope:
    problem: str
    result: IntPoly | TruncatedSeries
    trace: ComputationTrace
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    report: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self, fmt: str = "plain") -> str:
        if fmt == "plain":
            return str(self.result)
        if fmt == "latex":
            return self.result.latex()
        return dumps(self.to_json())

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "problem": self.problem,
            "result": encode_value(self.result) | {"latex": self.result.latex()},
            "trace": self.trace.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "warnings": list(self.warnings),
            "report": self.report,
        }


def _nonneg(p: IntPoly | TruncatedSeries) -> Check:
    coeffs = p.coeffs if isinstance(p, TruncatedSeries) else p.dense()
    bad = [k for k, c in enumerate(coeffs) if c < 0]
    return Check("nonnegative", not bad, f"negative coefficients in degrees {bad}" if bad else "")


def _palindromic(p: IntPoly, n: int) -> Check:
    ok = is_palindromic(p, n)
    return Check(f"palindromic(n={n})", ok, "" if ok else f"{p} is not palindromic at dimension {n}")


def _replay(trace: ComputationTrace, result) -> Check:
    try:
        out = trace.replay()
    except PoincareError as exc:
        return Check("trace-replay", False, str(exc))
    ok = out == result and type(out) is type(result)
    return Check("trace-replay", ok, "" if ok else f"replay gave {out}")


def _space_traced(s, trace: ComputationTrace, label: str) -> IntPoly:
    if isinstance(s, BlowUp):
        base = _space_traced(s.base, trace, f"{label}.base")
        center = _space_traced(s.center, trace, f"{label}.center")
        return trace.record(label, "smooth-blowup", base=base, center=center, codim=s.codim)
    if isinstance(s, ProductSpace) and s.factors:
        acc = _space_traced(s.factors[0], trace, f"{label}[0]")
        for i, f in enumerate(s.factors[1:], 1):
            acc = trace.record(label, "product", a=acc, b=_space_traced(f, trace, f"{label}[{i}]"))
        return acc
    return trace.record(label, "input", value=poincare_space(s))


def _run_reductive(p: GITProblem, order: int, env: ResultEnvelope):
    trace = env.trace
    ss = kirwan.semistable_series(p, trace)
    total = kirwan.equivariant_total(p.space, p.group)
    rebuilt = ss
    for term in kirwan.stratum_terms(p):
        rebuilt = rebuilt + term
    env.checks.append(
        Check("perfectness", rebuilt == total, "" if rebuilt == total else f"{rebuilt} != {total}")
    )
    env.report["semistable_series"] = str(ss)
    if p.ss_equals_s:
        with trace.step("quotient: exact division"):
            env.result = trace.record("quotient", "exact-division", r=ss)
        env.checks.append(Check("exact-division", True))
        env.checks.append(_nonneg(env.result))
        env.checks.append(_palindromic(env.result, p.quotient_dim))
    else:
        env.warnings.append(f"ss != s: reporting the equivariant series truncated at degree {order}")
        env.result = trace.record("truncate", "expand", r=ss, order=order)
        env.checks.append(_nonneg(env.result))


def _run_nr(p: NRProblem, allow_trivial: bool, env: ResultEnvelope):
    result, trace = nonreductive.solve(p, allow_trivial_stages=allow_trivial)
    env.trace, env.result = trace, result
    d = p.d
    env.report["d"] = d
    env.report["resolutions"] = [
        {"stage": r["stage"], "locus": r["locus"], "series": str(r["series"])}
        for r in nonreductive.resolution_report(p)
    ]
    env.checks.append(_nonneg(result))
    n = p.quotient_dim
    if n is None:
        env.warnings.append("quotient dimension unknown (explicit Levi BG without dim); duality not checked")
    else:
        env.checks.append(_palindromic(result, n))
    q, rem = divmod(result, kirwan_factor(d))
    hat = p.zmin_series
    for s in p.stages:
        hat = nonreductive.blowup_stage(hat, s)
    ok = not rem and q == hat
    env.checks.append(Check("kirwan-factorization", ok, "" if ok else f"quotient {q}, remainder {rem}"))
    chi, want = euler_characteristic(result), nonreductive.expected_euler(p)
    env.checks.append(Check("euler-bookkeeping", chi == want, f"chi = {chi}, expected {want}"))
    base = p.base_dim
    if base is not None:
        bad = [
            i
            for i, s in enumerate(p.stages)
            if s.codim > base or s.center_series.degree > 2 * (base - s.codim)
        ]
        env.checks.append(
            Check("stage-geometry", not bad, f"stages {bad} do not fit in dimension {base}" if bad else "")
        )
    if not p.group.adapted:
        env.checks.append(Check("adapted-linearisation", False, "the linearisation is not flagged adapted"))
    if p.group.grading_weight != 1:
        env.warnings.append(
            f"grading weight {p.group.grading_weight}: the formulas only use that the weight is single and positive"
        )


def _run_bb(b: BBInput, order: int, env: ResultEnvelope):
    trace = env.trace
    if b.zmin_series is not None:
        env.result = equivariant_over_xmin(b.zmin_series, order, trace)
        env.checks.append(_nonneg(env.result))
        return
    env.result = assemble_bb(b.components, trace)
    env.checks.append(_nonneg(env.result))
    chi = euler_characteristic(env.result)
    want = sum(euler_characteristic(c.series) for c in b.components)
    env.checks.append(Check("euler-localization", chi == want, f"chi = {chi}, fixed locus {want}"))
    if b.dim is not None:
        env.checks.append(_palindromic(env.result, b.dim))


def _run_space(s, order: int, env: ResultEnvelope):
    trace = env.trace
    if isinstance(s, ClassifyingSpace):
        bg = trace.record("P_t(BG)", "input", value=poincare_classifying(s.group))
        env.result = trace.record("truncate", "expand", r=bg, order=order)
        env.checks.append(_nonneg(env.result))
        return
    env.result = _space_traced(s, trace, "X")
    env.checks.append(_nonneg(env.result))
    env.checks.append(_palindromic(env.result, space_dim(s)))


def compute(
    pf: ProblemFile | dict | str | Path,
    truncate: int | None = None,
    allow_trivial_stages: bool | None = None,
) -> ResultEnvelope:
    """Run a problem and attach its trace and checks.

    Library errors propagate with their ``step`` or ``path`` set and with
    ``trace`` holding the steps completed before the failure.
    """
    if not isinstance(pf, ProblemFile):
        pf = load(pf)
    order = truncate if truncate is not None else pf.options.truncate
    order = DEFAULT_TRUNCATE if order is None else order
    allow = pf.options.allow_trivial_stages if allow_trivial_stages is None else allow_trivial_stages
    env = ResultEnvelope(pf.problem, IntPoly(), ComputationTrace())
    try:
        if pf.problem == "reductive":
            _run_reductive(pf.payload, order, env)
        elif pf.problem in _NR_MODES:
            _run_nr(pf.payload, allow, env)
        elif pf.problem == "bb":
            _run_bb(pf.payload, order, env)
        else:
            _run_space(pf.payload, order, env)
    except PoincareError as exc:
        if exc.step is None and exc.path is None:
            exc.step = env.trace.steps[-1].label if env.trace.steps else pf.problem
        if not exc.trace:
            exc.trace = list(env.trace.steps)
        raise
    env.checks.append(_replay(env.trace, env.result))
    return env


def verify(pf, truncate: int | None = None, allow_trivial_stages: bool | None = None) -> tuple[list[Check], int]:
    """Checks only. Exit status 0 when every check passes, 2 otherwise.

    Schema and computation errors count as failed checks.
    """
    try:
        env = compute(pf, truncate, allow_trivial_stages)
    except PoincareError as exc:
        return [Check(exc.kind, False, str(exc))], 2
    return env.checks, 0 if env.ok else 2


def catalog() -> list[dict]:
    """Built-in descriptors, each with a sample series."""
    spaces = [
        ("Point", Point()),
        ("ProjectiveSpace", ProjectiveSpace(2)),
        ("Grassmannian", Grassmannian(2, 4)),
        ("Product", ProductSpace((ProjectiveSpace(1), ProjectiveSpace(1)))),
        ("ExplicitPolynomial", ExplicitPolynomial(IntPoly([1, 2, 1]), 1)),
        ("BlowUp", BlowUp(ProjectiveSpace(2), Point(), 2)),
    ]
    groups = [
        ("Gm", Gm()),
        ("Torus", Torus(2)),
        ("GL", GL(2)),
        ("SL", SL(2)),
        ("Trivial", Trivial()),
        ("GroupProduct", GroupProduct((Gm(), SL(2)))),
        ("ExplicitBG", ExplicitBG(CycloRational(1, [2, 4]))),
    ]
    out = [
        {"kind": "space", "name": name, "descriptor": _enc_space(s), "sample": str(poincare_space(s))}
        for name, s in spaces
    ]
    out += [
        {"kind": "classifying", "name": name, "descriptor": _enc_group(g), "sample": str(poincare_classifying(g))}
        for name, g in groups
    ]
    return out
