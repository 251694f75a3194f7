"""Exact Poincare series of reductive and non-reductive GIT quotients."""

from .algebra import (
    CycloRational,
    IntPoly,
    TruncatedSeries,
    euler_characteristic,
    exact_div,
    expand,
    is_palindromic,
    kirwan_factor,
    poly_arith,
)
from .bb import FixedComponentData, assemble_bb, equivariant_over_xmin
from .errors import (
    ClassifyingSpaceNotFinite,
    EmptyDecomposition,
    EmptyQuotient,
    InvalidCodimension,
    NotPolynomial,
    PoincareError,
    SchemaError,
    SsNotS,
    StagesNotMonotone,
)
from .kirwan import GITProblem, StratumData, StratumPiece, equivariant_total, quotient_series, semistable_series
from .nonreductive import (
    BlowUpStage,
    GradedGroupSpec,
    NRProblem,
    blowup_stage,
    h_quotient,
    hat_h_quotient,
    hat_uhat_quotient,
    hat_zmin_series,
    resolution_report,
    uhat_quotient,
)
from .problems import ResultEnvelope, catalog, compute, load, verify
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
    poincare_blowup,
    poincare_classifying,
    poincare_space,
)
from .trace import ComputationTrace

__all__ = [
    "CycloRational",
    "IntPoly",
    "TruncatedSeries",
    "euler_characteristic",
    "exact_div",
    "expand",
    "is_palindromic",
    "kirwan_factor",
    "poly_arith",
    "FixedComponentData",
    "assemble_bb",
    "equivariant_over_xmin",
    "ClassifyingSpaceNotFinite",
    "EmptyDecomposition",
    "EmptyQuotient",
    "InvalidCodimension",
    "NotPolynomial",
    "PoincareError",
    "SchemaError",
    "SsNotS",
    "StagesNotMonotone",
    "GITProblem",
    "StratumData",
    "StratumPiece",
    "equivariant_total",
    "quotient_series",
    "semistable_series",
    "BlowUpStage",
    "GradedGroupSpec",
    "NRProblem",
    "blowup_stage",
    "h_quotient",
    "hat_h_quotient",
    "hat_uhat_quotient",
    "hat_zmin_series",
    "resolution_report",
    "uhat_quotient",
    "ResultEnvelope",
    "catalog",
    "compute",
    "load",
    "verify",
    "GL",
    "SL",
    "BlowUp",
    "ClassifyingSpace",
    "ExplicitBG",
    "ExplicitPolynomial",
    "Gm",
    "Grassmannian",
    "GroupProduct",
    "Point",
    "ProductSpace",
    "ProjectiveSpace",
    "Torus",
    "Trivial",
    "poincare_blowup",
    "poincare_classifying",
    "poincare_space",
    "ComputationTrace",
]

__version__ = "0.1.0"
