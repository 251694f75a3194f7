"""Catalog of Poincare polynomials and classifying-space series.

Spaces and groups are described declaratively by small frozen dataclasses;
:func:`poincare_space` and :func:`poincare_classifying` turn a description
into its series.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import CycloRational, IntPoly, kirwan_factor, one_minus_t
from .errors import ClassifyingSpaceNotFinite, InvalidCodimension

__all__ = [
    "Gm",
    "Torus",
    "GL",
    "SL",
    "GroupProduct",
    "Trivial",
    "ExplicitBG",
    "Point",
    "ProjectiveSpace",
    "Grassmannian",
    "ProductSpace",
    "ExplicitPolynomial",
    "BlowUp",
    "ClassifyingSpace",
    "gaussian_binomial",
    "poincare_space",
    "poincare_blowup",
    "poincare_classifying",
    "space_dim",
    "group_dim",
]


# -- groups -----------------------------------------------------------------


@dataclass(frozen=True)
class Gm:
    pass


@dataclass(frozen=True)
class Torus:
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"torus rank must be positive, got {self.rank}")


@dataclass(frozen=True)
class GL:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"GL(n) needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class SL:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"SL(n) needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class GroupProduct:
    factors: tuple


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class ExplicitBG:
    """User-supplied ``P_t(BG)``; cohomology generators sit in even degrees."""

    series: CycloRational
    dim: int | None = None

    def __post_init__(self):
        if any(k % 2 for k in self.series.denominator):
            raise ValueError(f"classifying-space denominators must be even, got {self.series.denominator}")


GroupDescriptor = Union[Gm, Torus, GL, SL, GroupProduct, Trivial, ExplicitBG]


# -- spaces -----------------------------------------------------------------


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class ProjectiveSpace:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"projective space dimension must be >= 0, got {self.n}")


@dataclass(frozen=True)
class Grassmannian:
    """``k``-planes in ``C^n``."""

    k: int
    n: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"Grassmannian needs 0 <= k <= n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class ProductSpace:
    factors: tuple


@dataclass(frozen=True)
class ExplicitPolynomial:
    poly: IntPoly
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")


@dataclass(frozen=True)
class BlowUp:
    """Blow-up of ``base`` along a smooth ``center`` of codimension ``codim``."""

    base: object
    center: object
    codim: int

    def __post_init__(self):
        if self.codim < 1:
            raise InvalidCodimension(f"blow-up codimension must be >= 1, got {self.codim}")


@dataclass(frozen=True)
class ClassifyingSpace:
    group: object


SpaceDescriptor = Union[
    Point, ProjectiveSpace, Grassmannian, ProductSpace, ExplicitPolynomial, BlowUp, ClassifyingSpace
]


# -- series -----------------------------------------------------------------


def gaussian_binomial(n: int, k: int) -> IntPoly:
    """Gaussian binomial ``[n choose k]`` evaluated at ``q = t^2``.

    Built from the product formula with exact division; the quotient is
    always integral.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    k = min(k, n - k)
    num, den = IntPoly(1), IntPoly(1)
    for i in range(k):
        num = num * one_minus_t(2 * (n - i))
        den = den * one_minus_t(2 * (i + 1))
    out, rem = divmod(num, den)
    assert not rem
    return out


def poincare_space(s) -> IntPoly:
    """Poincare polynomial of a finite-dimensional catalog space."""
    if isinstance(s, Point):
        return IntPoly(1)
    if isinstance(s, ProjectiveSpace):
        return kirwan_factor(s.n + 1)
    if isinstance(s, Grassmannian):
        return gaussian_binomial(s.n, s.k)
    if isinstance(s, ProductSpace):
        out = IntPoly(1)
        for f in s.factors:
            out = out * poincare_space(f)
        return out
    if isinstance(s, ExplicitPolynomial):
        return s.poly
    if isinstance(s, BlowUp):
        return poincare_blowup(poincare_space(s.base), poincare_space(s.center), s.codim)
    if isinstance(s, ClassifyingSpace):
        raise ClassifyingSpaceNotFinite(
            "classifying spaces have infinite Poincare series; use poincare_classifying"
        )
    raise TypeError(f"not a space descriptor: {s!r}")


def poincare_blowup(p_base: IntPoly, p_center: IntPoly, c: int) -> IntPoly:
    """Blow-up along a smooth center of codimension ``c``.

    Adds ``p_center * (t^2 + t^4 + ... + t^(2(c-1)))`` to ``p_base``: the
    exceptional divisor is a ``P^(c-1)``-bundle over the center, replacing
    one copy of the center.
    """
    if c <= 0:
        raise InvalidCodimension(f"blow-up codimension must be >= 1, got {c}")
    if c == 1:
        return p_base
    return p_base + p_center * kirwan_factor(c - 1).shift(2)


def poincare_classifying(g) -> CycloRational:
    if isinstance(g, Gm):
        return CycloRational(1, [2])
    if isinstance(g, Torus):
        return CycloRational(1, [2] * g.rank)
    if isinstance(g, GL):
        return CycloRational(1, [2 * i for i in range(1, g.n + 1)])
    if isinstance(g, SL):
        return CycloRational(1, [2 * i for i in range(2, g.n + 1)])
    if isinstance(g, Trivial):
        return CycloRational(1)
    if isinstance(g, GroupProduct):
        out = CycloRational(1)
        for f in g.factors:
            out = out * poincare_classifying(f)
        return out
    if isinstance(g, ExplicitBG):
        return g.series
    raise TypeError(f"not a group descriptor: {g!r}")


def space_dim(s) -> int:
    """Complex dimension of a finite-dimensional catalog space."""
    if isinstance(s, Point):
        return 0
    if isinstance(s, ProjectiveSpace):
        return s.n
    if isinstance(s, Grassmannian):
        return s.k * (s.n - s.k)
    if isinstance(s, ProductSpace):
        return sum(space_dim(f) for f in s.factors)
    if isinstance(s, ExplicitPolynomial):
        return s.dim
    if isinstance(s, BlowUp):
        return space_dim(s.base)
    if isinstance(s, ClassifyingSpace):
        raise ClassifyingSpaceNotFinite("classifying spaces are infinite-dimensional")
    raise TypeError(f"not a space descriptor: {s!r}")


def group_dim(g) -> int | None:
    """Dimension of a group, or ``None`` when an explicit BG hides it."""
    if isinstance(g, Gm):
        return 1
    if isinstance(g, Torus):
        return g.rank
    if isinstance(g, GL):
        return g.n * g.n
    if isinstance(g, SL):
        return g.n * g.n - 1
    if isinstance(g, Trivial):
        return 0
    if isinstance(g, GroupProduct):
        dims = [group_dim(f) for f in g.factors]
        return None if any(d is None for d in dims) else sum(dims)
    if isinstance(g, ExplicitBG):
        return g.dim
    raise TypeError(f"not a group descriptor: {g!r}")
