"""Exact series algebra in one variable ``t`` with integer coefficients.

Three value types cover every closed form the quotient formulas produce:

* :class:`IntPoly` -- finite Poincare polynomials.
* :class:`CycloRational` -- a polynomial over a product of factors
  ``(1 - t^k)``, which is the shape of every classifying-space series.
* :class:`TruncatedSeries` -- a finite window onto an infinite series.

All three are immutable. Coefficients are Python ints, so there is no
overflow however large the Betti numbers get.

>>> p = IntPoly([1, 0, 1])
>>> str(p * p)
'1 + 2*t^2 + t^4'
>>> str(expand(CycloRational(1, [2, 4]), 8))
'1 + t^2 + 2*t^4 + 2*t^6 + 3*t^8 + O(t^9)'
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Mapping

from .errors import EmptyQuotient, NotPolynomial

__all__ = [
    "IntPoly",
    "CycloRational",
    "TruncatedSeries",
    "T",
    "one_minus_t",
    "poly_arith",
    "kirwan_factor",
    "expand",
    "exact_div",
    "euler_characteristic",
    "is_palindromic",
]


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _render_terms(items: Iterable[tuple[int, int]], latex: bool = False) -> str:
    parts: list[str] = []
    for k, c in items:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            if latex:
                mono = "t" if k == 1 else f"t^{{{k}}}"
                body = mono if a == 1 else f"{a}{mono}"
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts) if parts else "0"


_TERM = re.compile(r"([+-])(\d*)\*?(t(?:\^\{?(\d+)\}?)?)?")


class IntPoly:
    """Polynomial in ``t`` with arbitrary-precision integer coefficients.

    Accepts a dense coefficient sequence (index = degree) or a mapping from
    degree to coefficient. Zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] | Mapping[int, int] | int = ()):
        if isinstance(coeffs, IntPoly):
            self._c = coeffs._c
            return
        if isinstance(coeffs, int):
            self._c = _strip([coeffs])
            return
        if isinstance(coeffs, Mapping):
            dense: list[int] = []
            for k, c in coeffs.items():
                k = int(k)
                if k < 0:
                    raise ValueError(f"negative degree {k}")
                if k >= len(dense):
                    dense.extend([0] * (k + 1 - len(dense)))
                dense[k] += int(c)
            self._c = _strip(dense)
        else:
            self._c = _strip([int(c) for c in coeffs])

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls({k: c})

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Inverse of ``str``: ``IntPoly.parse("1 + 2*t^2")``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        pos = 0
        coeffs: dict[int, int] = {}
        while pos < len(s):
            m = _TERM.match(s, pos)
            if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            c = int(m.group(2)) if m.group(2) else 1
            if m.group(3) is None:
                k = 0
            else:
                k = int(m.group(4)) if m.group(4) else 1
            coeffs[k] = coeffs.get(k, 0) + sign * c
            pos = m.end()
        return cls(coeffs)

    @property
    def coefficients(self) -> dict[int, int]:
        return {k: c for k, c in enumerate(self._c) if c}

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def coeff(self, k: int) -> int:
        return self._c[k] if 0 <= k < len(self._c) else 0

    def dense(self) -> tuple[int, ...]:
        return self._c

    def items(self):
        return ((k, c) for k, c in enumerate(self._c) if c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly([-c for c in self._c])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self._c])
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power")
        out = IntPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Euclidean division; requires every quotient coefficient to be integral."""
        if isinstance(other, int):
            other = IntPoly(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        b = other._c
        lead = b[-1]
        rem = list(self._c)
        m = len(b) - 1
        q = [0] * max(len(rem) - m, 0)
        for k in range(len(rem) - 1, m - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            if c % lead:
                raise ArithmeticError(f"quotient of {self} by {other} is not integral")
            f = c // lead
            q[k - m] = f
            for j, y in enumerate(b):
                rem[k - m + j] -= f * y
        return IntPoly(q), IntPoly(rem)

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t^k``."""
        if k < 0:
            raise ValueError("negative shift")
        if not self._c:
            return self
        return IntPoly([0] * k + list(self._c))

    def __call__(self, x):
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return _render_terms(self.items())

    def latex(self) -> str:
        return _render_terms(self.items(), latex=True)

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


T = IntPoly.monomial(1)


def one_minus_t(k: int) -> IntPoly:
    """The polynomial ``1 - t^k``."""
    return IntPoly({0: 1, k: -1})


def _denominator_poly(factors: Iterable[int]) -> IntPoly:
    out = IntPoly(1)
    for k in factors:
        out = out * one_minus_t(k)
    return out


def _render_denominator(factors: tuple[int, ...], latex: bool = False) -> str:
    parts = []
    for k, mult in sorted(Counter(factors).items()):
        if latex:
            f = f"(1-t^{{{k}}})" if k != 1 else "(1-t)"
            parts.append(f if mult == 1 else f"{f}^{{{mult}}}")
        else:
            f = f"(1-t^{k})" if k != 1 else "(1-t)"
            parts.append(f if mult == 1 else f"{f}^{mult}")
    return "".join(parts)


class CycloRational:
    """``numerator / prod_k (1 - t^k)`` over a multiset of positive ``k``.

    Factors ``(1 - t^k)`` that divide the numerator exactly are cancelled
    on construction, so a value that is secretly a polynomial always ends up
    with an empty denominator.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: IntPoly | int = 1, denominator: Iterable[int] = ()):
        num = IntPoly(numerator)
        den = sorted(int(k) for k in denominator)
        if any(k <= 0 for k in den):
            raise ValueError(f"denominator factors must be positive, got {den}")
        if not num:
            den = []
        changed = True
        while changed and den:
            changed = False
            for k in sorted(set(den), reverse=True):
                q, r = divmod(num, one_minus_t(k))
                if not r:
                    num = q
                    den.remove(k)
                    changed = True
                    break
        self.numerator = num
        self.denominator: tuple[int, ...] = tuple(den)

    @classmethod
    def coerce(cls, value) -> CycloRational:
        if isinstance(value, CycloRational):
            return value
        if isinstance(value, (IntPoly, int)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to CycloRational")

    @property
    def is_polynomial(self) -> bool:
        return not self.denominator

    def denominator_poly(self) -> IntPoly:
        return _denominator_poly(self.denominator)

    def _common(self, other: CycloRational):
        a, b = Counter(self.denominator), Counter(other.denominator)
        common = a | b
        fa = _denominator_poly((common - a).elements())
        fb = _denominator_poly((common - b).elements())
        return self.numerator * fa, other.numerator * fb, list(common.elements())

    def __add__(self, other):
        try:
            other = CycloRational.coerce(other)
        except TypeError:
            return NotImplemented
        na, nb, den = self._common(other)
        return CycloRational(na + nb, den)

    __radd__ = __add__

    def __neg__(self) -> CycloRational:
        return CycloRational(-self.numerator, self.denominator)

    def __sub__(self, other):
        try:
            other = CycloRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = CycloRational.coerce(other)
        except TypeError:
            return NotImplemented
        return CycloRational(self.numerator * other.numerator, self.denominator + other.denominator)

    __rmul__ = __mul__

    def shift(self, k: int) -> CycloRational:
        return CycloRational(self.numerator.shift(k), self.denominator)

    def __eq__(self, other) -> bool:
        try:
            other = CycloRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.numerator * other.denominator_poly() == other.numerator * self.denominator_poly()

    def __hash__(self) -> int:
        # equal rational functions have equal expansions
        return hash(expand(self, 24).coeffs)

    def __str__(self) -> str:
        num = str(self.numerator)
        if not self.denominator:
            return num
        if len(list(self.numerator.items())) > 1:
            num = f"({num})"
        return f"{num}/{_render_denominator(self.denominator)}"

    def latex(self) -> str:
        num = self.numerator.latex()
        if not self.denominator:
            return num
        return rf"\frac{{{num}}}{{{_render_denominator(self.denominator, latex=True)}}}"

    def __repr__(self) -> str:
        return f"CycloRational('{self}')"


class TruncatedSeries:
    """Power series known exactly up to and including degree ``order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int] | Mapping[int, int], order: int):
        if order < 0:
            raise ValueError("order must be nonnegative")
        dense = [0] * (order + 1)
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        for k, c in items:
            k = int(k)
            if k < 0:
                raise ValueError(f"negative degree {k}")
            if k <= order:
                dense[k] += int(c)
        self.coeffs: tuple[int, ...] = tuple(dense)
        self.order = order

    def coeff(self, k: int) -> int:
        if k > self.order:
            raise IndexError(f"degree {k} beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else 0

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def _align(self, other):
        if isinstance(other, (int, IntPoly)):
            other = TruncatedSeries(IntPoly(other).dense(), self.order)
        if not isinstance(other, TruncatedSeries):
            return None
        n = min(self.order, other.order)
        return self.coeffs[: n + 1], other.coeffs[: n + 1], n

    def __add__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        a, b, n = al
        return TruncatedSeries([x + y for x, y in zip(a, b)], n)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        a, b, n = al
        return TruncatedSeries([x - y for x, y in zip(a, b)], n)

    def __mul__(self, other):
        al = self._align(other)
        if al is None:
            return NotImplemented
        a, b, n = al
        out = [0] * (n + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(n + 1 - i):
                    out[i + j] += x * b[j]
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __str__(self) -> str:
        head = _render_terms(enumerate(self.coeffs))
        tail = f"O(t^{self.order + 1})"
        return tail if head == "0" else f"{head} + {tail}"

    def latex(self) -> str:
        head = _render_terms(enumerate(self.coeffs), latex=True)
        tail = f"O(t^{{{self.order + 1}}})"
        return tail if head == "0" else f"{head} + {tail}"

    def __repr__(self) -> str:
        return f"TruncatedSeries('{self}')"


def poly_arith(a: IntPoly, b: IntPoly, op: str) -> IntPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def kirwan_factor(d: int) -> IntPoly:
    """``(1 - t^(2d)) / (1 - t^2) = 1 + t^2 + ... + t^(2(d-1))``."""
    if d <= 0:
        raise EmptyQuotient(f"d = {d} <= 0: the unstable locus is not a proper subvariety")
    return IntPoly({2 * j: 1 for j in range(d)})


def expand(r: CycloRational | IntPoly, order: int) -> TruncatedSeries:
    """Power-series expansion up to degree ``order`` inclusive."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    r = CycloRational.coerce(r)
    c = list(r.numerator.dense()[: order + 1])
    c.extend([0] * (order + 1 - len(c)))
    for k in r.denominator:
        # divide by (1 - t^k): running sum with stride k
        for i in range(k, order + 1):
            c[i] += c[i - k]
    return TruncatedSeries(c, order)


def exact_div(r: CycloRational) -> IntPoly:
    """Return ``r`` as a polynomial, or raise :class:`NotPolynomial`."""
    r = CycloRational.coerce(r)
    q, rem = divmod(r.numerator, r.denominator_poly())
    if rem:
        raise NotPolynomial(f"{r} is not a polynomial (remainder {rem})")
    return q


def euler_characteristic(p: IntPoly) -> int:
    return p(-1)


def is_palindromic(p: IntPoly, n: int) -> bool:
    """Poincare duality test for a space of complex dimension ``n``."""
    if p.degree > 2 * n:
        return False
    return all(p.coeff(k) == p.coeff(2 * n - k) for k in range(2 * n + 1))
