"""Exact scalar, polynomial, and truncated power-series arithmetic.

Everything here is pure and immutable: rationals are `fractions.Fraction`,
polynomials are dense coefficient tuples, and series are fixed-order
coefficient vectors.  No floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class IndeterminateMismatchError(ValueError):
    """Combining polynomials written in different indeterminates."""


class SeriesPreconditionError(ValueError):
    """A series operation was given an input outside its domain."""


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with the out-of-range convention binom(n, k) = 0.

    Sums over Narayana-style terms rely on binom(n, k-1) vanishing at k = 0,
    so k < 0 and k > n return 0 instead of raising.  Negative n is rejected.
    """
    if n < 0:
        raise ValueError(f"binomial: negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class QPolynomial:
    """Dense univariate polynomial over Fraction in a named indeterminate.

    Coefficients are stored low degree first; the trailing stored coefficient
    is nonzero, and the zero polynomial stores nothing.  Constants are
    compatible with any indeterminate; combining two non-constant polynomials
    in different indeterminates raises IndeterminateMismatchError.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "q"):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, var: str = "q") -> "QPolynomial":
        return cls((), var)

    @classmethod
    def one(cls, var: str = "q") -> "QPolynomial":
        return cls((1,), var)

    @classmethod
    def constant(cls, c, var: str = "q") -> "QPolynomial":
        return cls((c,), var)

    @classmethod
    def monomial(cls, c, power: int, var: str = "q") -> "QPolynomial":
        if power < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * power + (c,), var)

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (errors otherwise)."""
        if not self.is_constant:
            raise ValueError(f"not a constant polynomial: {self!r}")
        return self.coefficient(0)

    def _join_var(self, other: "QPolynomial") -> str:
        if self.is_constant:
            return other.var
        if other.is_constant:
            return self.var
        if self.var != other.var:
            raise IndeterminateMismatchError(
                f"cannot combine polynomials in {self.var!r} and {other.var!r}"
            )
        return self.var

    @classmethod
    def _coerce(cls, value, var: str) -> "QPolynomial":
        if isinstance(value, QPolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value, var)
        return NotImplemented

    # -- ring arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other, self.var)
        if other is NotImplemented:
            return NotImplemented
        var = self._join_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial(out, var)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._coerce(other, self.var)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other, self.var)
        if other is NotImplemented:
            return NotImplemented
        var = self._join_var(other)
        if self.is_zero or other.is_zero:
            return QPolynomial.zero(var)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPolynomial(out, var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("polynomial power must be nonnegative")
        result = QPolynomial.one(self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- calculus and substitution ----------------------------------------

    def substitute(self, image: "QPolynomial") -> "QPolynomial":
        """Replace the indeterminate by `image`, expanded exactly.

        The result is written in `image`'s indeterminate.
        """
        result = QPolynomial.zero(image.var)
        for c in reversed(self.coeffs):
            result = result * image + QPolynomial.constant(c, image.var)
        return result

    def antiderivative(self) -> "QPolynomial":
        """Term-wise antiderivative with zero constant term."""
        out = [Fraction(0)]
        for i, c in enumerate(self.coeffs):
            out.append(c / (i + 1))
        return QPolynomial(out, self.var)

    def derivative(self) -> "QPolynomial":
        out = [c * i for i, c in enumerate(self.coeffs)][1:]
        return QPolynomial(out, self.var)

    def __call__(self, value) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        value = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPolynomial.constant(other, self.var)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if self.coeffs != other.coeffs:
            return False
        return self.is_constant or other.is_constant or self.var == other.var

    def __hash__(self):
        return hash((self.coeffs, self.var if not self.is_constant else None))

    def __repr__(self):
        if self.is_zero:
            return "QPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*{self.var}")
            else:
                terms.append(f"{c}*{self.var}^{i}")
        return "QPolynomial(" + " + ".join(terms) + ")"


def finite_difference_check(n: int, r: int) -> QPolynomial:
    """sum_{k=0}^{n} (-1)^k binom(n, k) (x - k)^r, as a polynomial in x.

    Contract: the zero polynomial for 0 <= r < n and the constant n! at r = n.
    """
    if n < 0 or r < 0:
        raise ValueError("finite_difference_check requires n >= 0 and r >= 0")
    x = QPolynomial((0, 1), "x")
    total = QPolynomial.zero("x")
    for k in range(n + 1):
        total = total + (-1) ** k * binomial(n, k) * (x - k) ** r
    return total


class PolySeries:
    """Power series in x truncated at a fixed order.

    Coefficients are QPolynomial values (typically in q); plain rationals are
    accepted and treated as constants.  Every operation is exact through the
    truncation order.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = []
        for c in coeffs:
            if not isinstance(c, QPolynomial):
                c = QPolynomial.constant(c)
            cs.append(c)
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        while len(cs) < order + 1:
            cs.append(QPolynomial.zero())
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "PolySeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "PolySeries":
        return cls((QPolynomial.one(),), order)

    def coefficient(self, n: int) -> QPolynomial:
        if 0 <= n <= self.order:
            return self.coeffs[n]
        raise IndexError(f"coefficient {n} beyond truncation order {self.order}")

    def _check_order(self, other: "PolySeries"):
        if self.order != other.order:
            raise SeriesPreconditionError(
                f"truncation orders differ: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial)):
            out = list(self.coeffs)
            out[0] = out[0] + other
            return PolySeries(out, self.order)
        self._check_order(other)
        return PolySeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    __radd__ = __add__

    def __neg__(self):
        return PolySeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial)):
            out = list(self.coeffs)
            out[0] = out[0] - other
            return PolySeries(out, self.order)
        self._check_order(other)
        return PolySeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPolynomial)):
            return PolySeries(tuple(c * other for c in self.coeffs), self.order)
        self._check_order(other)
        n = self.order
        out = [QPolynomial.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return PolySeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("series power must be nonnegative")
        result = PolySeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def reciprocal(self) -> "PolySeries":
        """Multiplicative inverse, exact through the truncation order.

        The constant coefficient must be a nonzero rational constant.
        """
        c0 = self.coeffs[0]
        if not c0.is_constant or c0.is_zero:
            raise SeriesPreconditionError(
                f"reciprocal needs a nonzero constant leading coefficient, got {c0!r}"
            )
        inv0 = 1 / c0.constant_value()
        out = [QPolynomial.constant(inv0)]
        for n in range(1, self.order + 1):
            acc = QPolynomial.zero()
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(acc * (-inv0))
        return PolySeries(out, self.order)

    def sqrt(self) -> "PolySeries":
        """Square root by coefficient recurrence; needs constant coefficient 1."""
        c0 = self.coeffs[0]
        if c0 != QPolynomial.one():
            raise SeriesPreconditionError(
                f"sqrt needs constant coefficient 1, got {c0!r}"
            )
        half = Fraction(1, 2)
        out = [QPolynomial.one()]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc = acc - out[i] * out[n - i]
            out.append(acc * half)
        return PolySeries(out, self.order)

    def compose(self, inner: "PolySeries") -> "PolySeries":
        """self(inner(x)); the inner series must have zero constant term."""
        self._check_order(inner)
        if not inner.coeffs[0].is_zero:
            raise SeriesPreconditionError(
                f"composition needs zero inner constant term, got {inner.coeffs[0]!r}"
            )
        result = PolySeries.zero(self.order)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def shift_down(self, m: int) -> "PolySeries":
        """Divide by x^m; the m lowest coefficients must vanish exactly."""
        for i in range(m):
            if not self.coeffs[i].is_zero:
                raise SeriesPreconditionError(
                    f"shift_down({m}): coefficient of x^{i} is {self.coeffs[i]!r}, not 0"
                )
        return PolySeries(self.coeffs[m:], self.order - m)

    def __eq__(self, other):
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"PolySeries(order={self.order}, coeffs={list(self.coeffs)!r})"
