"""Provenance records for computations.

A :class:`ComputationTrace` is an ordered list of :class:`TraceStep` entries,
one per formula application. Each step names the formula it applied, its
inputs and its output, which is enough to re-execute it: :meth:`replay`
recomputes every step from its recorded inputs and fails loudly if any
output differs.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable

from .algebra import CycloRational, IntPoly, TruncatedSeries, exact_div, expand, kirwan_factor
from .errors import PoincareError, TraceMismatch
from .spaces import poincare_blowup

__all__ = ["TraceStep", "ComputationTrace", "FORMULAS", "encode_value", "decode_value"]


def _bb_assembly(**inputs):
    out = IntPoly()
    n = sum(1 for k in inputs if k.startswith("series_"))
    for i in range(n):
        out = out + inputs[f"series_{i}"].shift(2 * inputs[f"codim_{i}"])
    return out


def _coerce_product(a, b):
    if isinstance(a, CycloRational) or isinstance(b, CycloRational):
        return CycloRational.coerce(a) * CycloRational.coerce(b)
    return a * b


# formula name -> function of the recorded inputs
FORMULAS: dict[str, Callable[..., Any]] = {
    "input": lambda value: value,
    "product": _coerce_product,
    "difference": lambda a, b: a - b,
    "sum": lambda a, b: a + b,
    "stratum-term": lambda value, codim: value.shift(2 * codim),
    "kirwan-factor": kirwan_factor,
    "smooth-blowup": lambda base, center, codim: poincare_blowup(base, center, codim),
    "exact-division": exact_div,
    "expand": expand,
    "bb-assembly": _bb_assembly,
}


@dataclass(frozen=True)
class TraceStep:
    label: str
    formula: str
    inputs: tuple[tuple[str, Any], ...]
    output: Any

    def rerun(self):
        return FORMULAS[self.formula](**dict(self.inputs))


@dataclass
class ComputationTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def record(self, label: str, formula: str, output=None, **inputs):
        """Apply ``formula`` to ``inputs`` (or accept a precomputed ``output``) and log it."""
        if formula not in FORMULAS:
            raise KeyError(f"unknown formula {formula!r}")
        step = TraceStep(label, formula, tuple(inputs.items()), None)
        if output is None:
            output = step.rerun()
        self.steps.append(TraceStep(label, formula, step.inputs, output))
        return output

    @contextmanager
    def step(self, label: str):
        """Tag any library error raised inside the block with ``label``."""
        try:
            yield
        except PoincareError as exc:
            if exc.step is None:
                exc.step = label
            if not exc.trace:
                exc.trace = list(self.steps)
            raise

    @property
    def result(self):
        return self.steps[-1].output if self.steps else None

    def replay(self):
        """Re-execute every step; return the final output."""
        for i, s in enumerate(self.steps):
            got = s.rerun()
            if type(got) is not type(s.output) or got != s.output:
                raise TraceMismatch(
                    f"step {i} ({s.formula}) recomputed {got}, trace says {s.output}", step=s.label
                )
        return self.result

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> list[dict]:
        return [
            {
                "step": s.label,
                "formula": s.formula,
                "inputs": {k: encode_value(v) for k, v in s.inputs},
                "output": encode_value(s.output),
            }
            for s in self.steps
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> ComputationTrace:
        return cls(
            [
                TraceStep(
                    d["step"],
                    d["formula"],
                    tuple((k, decode_value(v)) for k, v in d["inputs"].items()),
                    decode_value(d["output"]),
                )
                for d in data
            ]
        )


def _coeff_map(items) -> dict[str, str]:
    return {str(k): str(c) for k, c in items if c}


def encode_value(v) -> Any:
    """JSON form of a trace value. Coefficients are decimal strings."""
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, IntPoly):
        return {"kind": "polynomial", "coeffs": _coeff_map(v.items()), "text": str(v)}
    if isinstance(v, CycloRational):
        return {
            "kind": "rational",
            "numerator": _coeff_map(v.numerator.items()),
            "denominator": list(v.denominator),
            "text": str(v),
        }
    if isinstance(v, TruncatedSeries):
        return {
            "kind": "series",
            "coeffs": _coeff_map(enumerate(v.coeffs)),
            "order": v.order,
            "text": str(v),
        }
    raise TypeError(f"cannot encode {type(v).__name__}")


def _poly(m: dict) -> IntPoly:
    return IntPoly({int(k): int(c) for k, c in m.items()})


def decode_value(d) -> Any:
    if isinstance(d, int):
        return d
    kind = d["kind"]
    if kind == "polynomial":
        return _poly(d["coeffs"])
    if kind == "rational":
        return CycloRational(_poly(d["numerator"]), d["denominator"])
    if kind == "series":
        return TruncatedSeries({int(k): int(c) for k, c in d["coeffs"].items()}, d["order"])
    raise ValueError(f"unknown value kind {kind!r}")
