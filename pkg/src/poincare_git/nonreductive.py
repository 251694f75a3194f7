"""Poincare polynomials of quotients by groups with graded unipotent radical.

``H = U x| R`` with abelian unipotent radical ``U`` and a central
one-parameter subgroup of ``R`` acting on ``Lie U`` with a single positive
weight; ``Uhat = U x| Gm`` is the graded unipotent part.

When every point of ``Z_min`` has trivial ``U``-stabiliser the quotient by
``Uhat`` satisfies ``P_t(X//Uhat) = P_t(Z_min) * (1 - t^(2d)) / (1 - t^2)``
with ``d = dim X - dim U - dim Z_min``, and likewise for ``H`` with
``Z_min`` replaced by ``Z_min // R_lambda``.

Otherwise ``X`` is first blown up along the loci of maximal stabiliser
dimension. Only ``Z_min`` matters for the answer, and at each stage it is
replaced by its blow-up along a smooth center, so ``P_t(Z_min)`` evolves by
the smooth blow-up formula. The quotient formula is then applied to the final
``Z_min``; ``d`` does not change, since the final ``Z_min`` is the proper
transform of the original.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import IntPoly, euler_characteristic
from .errors import EmptyQuotient, InvalidCodimension, SsNotS, StagesNotMonotone
from .spaces import Trivial, group_dim, poincare_blowup
from .trace import ComputationTrace

__all__ = [
    "MODES",
    "GradedGroupSpec",
    "BlowUpStage",
    "NRProblem",
    "uhat_quotient",
    "h_quotient",
    "blowup_stage",
    "hat_zmin_series",
    "hat_uhat_quotient",
    "hat_h_quotient",
    "solve",
    "resolution_report",
    "expected_euler",
]

MODES = ("uhat", "h", "uhat_blowups", "h_blowups")


@dataclass(frozen=True)
class GradedGroupSpec:
    dim_u: int
    grading_weight: int = 1
    levi: object = Trivial()
    adapted: bool = True

    def __post_init__(self):
        if self.dim_u < 1:
            raise ValueError(f"dim_u must be >= 1, got {self.dim_u}")
        if self.grading_weight < 1:
            raise ValueError(f"grading weight must be >= 1, got {self.grading_weight}")


@dataclass(frozen=True)
class BlowUpStage:
    """One blow-up: center series and its codimension in the space blown up.

    ``stab_dim`` is the stabiliser dimension removed at this stage; it must
    strictly decrease along a pipeline. For ``h`` pipelines the center series
    and codimension refer to the ``R_lambda``-quotients.
    """

    stab_dim: int
    codim: int
    center_series: IntPoly
    index: int | None = None

    def __post_init__(self):
        if self.codim < 1:
            raise InvalidCodimension(f"stage codimension must be >= 1, got {self.codim}")
        if self.stab_dim < 0:
            raise ValueError(f"stabiliser dimension must be >= 0, got {self.stab_dim}")


@dataclass(frozen=True)
class NRProblem:
    group: GradedGroupSpec
    dim_x: int
    dim_zmin: int
    zmin_series: IntPoly
    stages: tuple[BlowUpStage, ...] = ()
    mode: str = "uhat"
    zmin_ss_equals_s: bool = True
    # dimension of Z_min // R_lambda, only used by h modes for duality checks
    quotient_zmin_dim: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def d(self) -> int:
        return self.dim_x - self.group.dim_u - self.dim_zmin

    @property
    def base_dim(self) -> int | None:
        """Dimension of the space whose series is ``zmin_series``."""
        if self.mode.startswith("uhat"):
            return self.dim_zmin
        if self.quotient_zmin_dim is not None:
            return self.quotient_zmin_dim
        levi = group_dim(self.group.levi)
        return None if levi is None else self.dim_zmin - levi

    @property
    def quotient_dim(self) -> int | None:
        """Dimension of the final quotient, when it can be worked out."""
        base = self.base_dim
        return None if base is None else base + self.d - 1


def _factor(p: NRProblem, trace: ComputationTrace) -> IntPoly:
    with trace.step("kirwan factor"):
        if p.d <= 0:
            raise EmptyQuotient(
                f"d = dim X - dim U - dim Z_min = {p.dim_x} - {p.group.dim_u} - {p.dim_zmin} = {p.d} <= 0"
            )
        return trace.record(f"kirwan factor d={p.d}", "kirwan-factor", d=p.d)


def _require_ss(p: NRProblem):
    if not p.zmin_ss_equals_s:
        raise SsNotS("H-quotient formulas need ss = s for R_lambda on Z_min", step="hypotheses")


def _require_no_stages(p: NRProblem):
    if p.stages:
        raise ValueError("closed-form quotients take no blow-up stages; use a blow-up mode")


def uhat_quotient(p: NRProblem) -> tuple[IntPoly, ComputationTrace]:
    _require_no_stages(p)
    trace = ComputationTrace()
    z = trace.record("P_t(Z_min)", "input", value=p.zmin_series)
    f = _factor(p, trace)
    return trace.record("P_t(X//Uhat)", "product", a=z, b=f), trace


def h_quotient(p: NRProblem) -> tuple[IntPoly, ComputationTrace]:
    _require_no_stages(p)
    _require_ss(p)
    trace = ComputationTrace()
    z = trace.record("P_t(Z_min//R)", "input", value=p.zmin_series)
    f = _factor(p, trace)
    return trace.record("P_t(X//H)", "product", a=z, b=f), trace


def blowup_stage(current_zmin: IntPoly, stage: BlowUpStage) -> IntPoly:
    return poincare_blowup(current_zmin, stage.center_series, stage.codim)


def _check_stages(stages, allow_trivial_stages: bool):
    dims = [s.stab_dim for s in stages]
    for i in range(1, len(dims)):
        if dims[i] >= dims[i - 1]:
            raise StagesNotMonotone(
                f"stabiliser dimensions must strictly decrease, got {dims}", step=f"stage {i}"
            )
    if not allow_trivial_stages:
        for i, s in enumerate(stages):
            if s.codim == 1:
                raise InvalidCodimension(
                    "codimension-1 center: the blow-up is an isomorphism; "
                    "pass allow_trivial_stages=True if this is intended",
                    step=f"stage {i}",
                )


def _fold(p: NRProblem, trace: ComputationTrace, allow_trivial_stages: bool) -> IntPoly:
    _check_stages(p.stages, allow_trivial_stages)
    z = trace.record("Z_min^0", "input", value=p.zmin_series)
    for i, s in enumerate(p.stages):
        idx = i if s.index is None else s.index
        with trace.step(f"stage {idx}"):
            z = trace.record(
                f"stage {idx}: Z_min^{i + 1}", "smooth-blowup", base=z, center=s.center_series, codim=s.codim
            )
    return z


def hat_zmin_series(p: NRProblem, allow_trivial_stages: bool = False) -> tuple[IntPoly, ComputationTrace]:
    """Series of ``Z_min`` after every blow-up stage."""
    trace = ComputationTrace()
    return _fold(p, trace, allow_trivial_stages), trace


def hat_uhat_quotient(p: NRProblem, allow_trivial_stages: bool = False) -> tuple[IntPoly, ComputationTrace]:
    trace = ComputationTrace()
    _check_stages(p.stages, allow_trivial_stages)
    f = _factor(p, trace)
    z = _fold(p, trace, allow_trivial_stages)
    return trace.record("P_t(Xhat//Uhat)", "product", a=z, b=f), trace


def hat_h_quotient(p: NRProblem, allow_trivial_stages: bool = False) -> tuple[IntPoly, ComputationTrace]:
    _require_ss(p)
    trace = ComputationTrace()
    _check_stages(p.stages, allow_trivial_stages)
    f = _factor(p, trace)
    z = _fold(p, trace, allow_trivial_stages)
    return trace.record("P_t(Xhat//H)", "product", a=z, b=f), trace


def solve(p: NRProblem, allow_trivial_stages: bool = False) -> tuple[IntPoly, ComputationTrace]:
    """Dispatch on ``p.mode``."""
    if p.mode == "uhat":
        return uhat_quotient(p)
    if p.mode == "h":
        return h_quotient(p)
    if p.mode == "uhat_blowups":
        return hat_uhat_quotient(p, allow_trivial_stages)
    return hat_h_quotient(p, allow_trivial_stages)


def resolution_report(p: NRProblem) -> list[dict]:
    """Which closed subvariety of ``Z_min`` each stage's center resolves.

    The center at a stage removing ``Uhat``-stabiliser dimension ``s``
    resolves the locus of points of ``Z_min`` with ``U``-stabiliser dimension
    at least ``s - 1`` (the grading ``Gm`` accounts for the shift).
    """
    suffix = "//R_λ" if p.mode.startswith("h") else ""
    return [
        {
            "stage": i if s.index is None else s.index,
            "locus": f"C_{{≥{s.stab_dim - 1}}}(Z_min,U){suffix}",
            "series": s.center_series,
        }
        for i, s in enumerate(p.stages)
    ]


def expected_euler(p: NRProblem) -> int:
    """Euler characteristic the pipeline output must have."""
    chi = euler_characteristic(p.zmin_series)
    chi += sum((s.codim - 1) * euler_characteristic(s.center_series) for s in p.stages)
    return chi * p.d
