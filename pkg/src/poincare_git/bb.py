"""Bialynicki-Birula assembly.

For a smooth projective variety with a ``Gm``-action, the Poincare
polynomial is the sum over fixed components ``F_i`` of
``t^(2 codim_i) * P_t(F_i)``, where ``codim_i`` is the complex codimension
of the cell attached to ``F_i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CycloRational, IntPoly, TruncatedSeries
from .errors import EmptyDecomposition
from .trace import ComputationTrace

__all__ = ["FixedComponentData", "assemble_bb", "equivariant_over_xmin"]


@dataclass(frozen=True)
class FixedComponentData:
    series: IntPoly
    codim: int

    def __post_init__(self):
        if self.codim < 0:
            raise ValueError(f"codimension must be nonnegative, got {self.codim}")


def assemble_bb(components, trace: ComputationTrace | None = None) -> IntPoly:
    components = list(components)
    if not components:
        raise EmptyDecomposition("a decomposition needs at least one fixed component")
    trace = ComputationTrace() if trace is None else trace
    inputs = {}
    for i, c in enumerate(components):
        inputs[f"series_{i}"] = c.series
        inputs[f"codim_{i}"] = c.codim
    with trace.step("bb-assembly"):
        return trace.record("bb-assembly", "bb-assembly", **inputs)


def equivariant_over_xmin(
    p_zmin: IntPoly, order: int, trace: ComputationTrace | None = None
) -> TruncatedSeries:
    """``Gm``-equivariant series of the attracting open set, truncated at ``order``.

    The open set retracts onto ``Z_min`` where the grading ``Gm`` acts
    trivially, so the series is ``P_t(Z_min) / (1 - t^2)``.
    """
    trace = ComputationTrace() if trace is None else trace
    value = trace.record("equivariant Z_min", "product", a=p_zmin, b=CycloRational(1, [2]))
    return trace.record("truncate", "expand", r=value, order=order)
