"""Equivariant Poincare series of reductive GIT semistable loci.

The instability stratification ``X = X^ss  u  U_beta S_beta`` is
equivariantly perfect, so

    P_t^G(X^ss) = P_t(X) P_t(BG) - sum_beta t^(2 d(beta)) P_t^{Stab beta}(Z_beta^ss)

and each ``Z_beta^ss`` term is either given directly or is itself the
semistable locus of a smaller problem, handled recursively. When
semistability equals stability the result is the Poincare polynomial of the
quotient.

A stratum may have several connected components of different codimension;
each component is a separate :class:`StratumPiece`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CycloRational
from .errors import RecursionLimit, SsNotS
from .spaces import poincare_classifying, poincare_space
from .trace import ComputationTrace

__all__ = [
    "StratumPiece",
    "StratumData",
    "GITProblem",
    "MAX_DEPTH",
    "equivariant_total",
    "semistable_series",
    "quotient_series",
    "stratum_terms",
]

MAX_DEPTH = 64


@dataclass(frozen=True)
class StratumPiece:
    """One connected component: codimension plus either a leaf value or a sub-problem."""

    codim: int
    leaf: CycloRational | None = None
    sub: GITProblem | None = None

    def __post_init__(self):
        if self.codim < 1:
            raise ValueError(f"unstable strata are proper: codim must be >= 1, got {self.codim}")
        if (self.leaf is None) == (self.sub is None):
            raise ValueError("a stratum piece needs exactly one of leaf or sub")


@dataclass(frozen=True)
class StratumData:
    label: str
    pieces: tuple[StratumPiece, ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError(f"stratum {self.label!r} has no pieces")


@dataclass(frozen=True)
class GITProblem:
    space: object
    group: object
    strata: tuple[StratumData, ...] = ()
    dim_x: int = 0
    dim_g: int = 0
    ss_equals_s: bool = False

    def __post_init__(self):
        labels = [s.label for s in self.strata]
        if len(set(labels)) != len(labels):
            raise ValueError(f"stratum labels must be distinct, got {labels}")
        if self.dim_x < 0 or self.dim_g < 0:
            raise ValueError("dimensions must be nonnegative")

    @property
    def quotient_dim(self) -> int:
        return self.dim_x - self.dim_g


def equivariant_total(space, group, trace: ComputationTrace | None = None, label: str = "") -> CycloRational:
    """``P_t^G(X) = P_t(X) P_t(BG)`` for a smooth projective ``X``."""
    trace = ComputationTrace() if trace is None else trace
    prefix = f"{label}: " if label else ""
    with trace.step(f"{prefix}equivariant total"):
        px = trace.record(f"{prefix}P_t(X)", "input", value=poincare_space(space))
        bg = trace.record(f"{prefix}P_t(BG)", "input", value=poincare_classifying(group))
        return trace.record(f"{prefix}P_t^G(X)", "product", a=CycloRational(px), b=bg)


def _walk(p: GITProblem, trace: ComputationTrace, path: str, active: set[int], depth: int):
    if depth > MAX_DEPTH:
        raise RecursionLimit(f"stratification nested deeper than {MAX_DEPTH}", step=path or "root")
    if id(p) in active:
        raise RecursionLimit("stratification refers to itself", step=path or "root")
    active.add(id(p))
    try:
        acc = equivariant_total(p.space, p.group, trace, path)
        for stratum in p.strata:
            for j, piece in enumerate(stratum.pieces):
                where = f"{path}/{stratum.label}[{j}]" if path else f"{stratum.label}[{j}]"
                if piece.sub is not None:
                    value = _walk(piece.sub, trace, where, active, depth + 1)
                else:
                    value = trace.record(f"{where}: leaf", "input", value=piece.leaf)
                term = trace.record(f"{where}: t^(2d) term", "stratum-term", value=value, codim=piece.codim)
                acc = trace.record(f"{where}: subtract", "difference", a=acc, b=term)
        return acc
    finally:
        active.discard(id(p))


def semistable_series(p: GITProblem, trace: ComputationTrace | None = None) -> CycloRational:
    """Equivariant Poincare series of the semistable locus."""
    trace = ComputationTrace() if trace is None else trace
    return _walk(p, trace, "", set(), 0)


def stratum_terms(p: GITProblem) -> list[CycloRational]:
    """The ``t^(2d) P_t^{Stab}(Z^ss)`` contribution of every top-level piece."""
    out = []
    for stratum in p.strata:
        for piece in stratum.pieces:
            value = piece.leaf if piece.sub is None else semistable_series(piece.sub)
            out.append(value.shift(2 * piece.codim))
    return out


def quotient_series(p: GITProblem, trace: ComputationTrace | None = None):
    """Poincare polynomial of ``X // G`` when semistability equals stability."""
    if not p.ss_equals_s:
        raise SsNotS("the quotient formula needs ss = s; the problem does not assert it", step="quotient")
    trace = ComputationTrace() if trace is None else trace
    ss = semistable_series(p, trace)
    with trace.step("quotient: exact division"):
        return trace.record("quotient", "exact-division", r=ss)
