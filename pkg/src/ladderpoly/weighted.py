"""The closed function class  coeff(x) * prod (x - root)^alpha * exp(p(x)).

Members combine a rational-function coefficient, fractional powers of distinct
linear factors, and an exponential of a polynomial.  The class is closed under
differentiation, multiplication, and division, which is what lets every
operator factorization and Rodrigues chain in this package be evaluated
exactly.

Canonical form:
  * power exponents keep only their fractional part in (0, 1); integer parts
    are folded into the rational coefficient, so two equal members are
    structurally identical;
  * the constant term of the exponential argument is dropped (a factor
    exp(const) is not rational, and every comparison downstream is made up to
    a nonzero scalar anyway);
  * square roots of quadratics are stored split at their roots, e.g. the
    canonical stand-in for (x^2-1)^(1/2) is (x-1)^(1/2) (x+1)^(1/2).

The last point means the canonical base is always (x - root).  On (-1, 1) the
split form differs from (1-x^2)^(1/2) by a constant phase that has no rational
representation; callers compare against printed (1-x^2)-style displays via
``scalar_ratio`` or after full chains, where the ambiguity cancels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .algebra import (
    ONE,
    Polynomial,
    RationalFunction,
    IntegrationResult,
    Scalar,
    ZERO,
    as_rational_function,
    linear,
)

Coercible = Union["WeightedExpression", RationalFunction, Polynomial, int, Fraction]


class NotPolynomialError(ValueError):
    """Raised when extraction demands a polynomial but weights survive."""


@dataclass(frozen=True)
class PowerFactor:
    """A factor (x - root)^exponent; canonical exponents lie strictly in (0, 1)."""

    root: Fraction
    exponent: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "root", Fraction(self.root))
        object.__setattr__(self, "exponent", Fraction(self.exponent))


@dataclass(frozen=True)
class WeightedExpression:
    coeff: RationalFunction
    powers: tuple[PowerFactor, ...] = ()
    exp_arg: Polynomial = ZERO

    def __post_init__(self) -> None:
        coeff = as_rational_function(self.coeff)
        if not isinstance(self.exp_arg, Polynomial):
            raise TypeError("exp_arg must be a Polynomial")
        arg = self.exp_arg
        if coeff.is_zero:
            object.__setattr__(self, "coeff", coeff)
            object.__setattr__(self, "powers", ())
            object.__setattr__(self, "exp_arg", ZERO)
            return
        merged: dict[Fraction, Fraction] = {}
        for pf in self.powers:
            root, exponent = (pf.root, pf.exponent) if isinstance(pf, PowerFactor) else pf
            root, exponent = Fraction(root), Fraction(exponent)
            merged[root] = merged.get(root, Fraction(0)) + exponent
        kept: list[PowerFactor] = []
        for root in sorted(merged):
            whole = math.floor(merged[root])
            frac = merged[root] - whole
            if whole > 0:
                coeff = coeff * RationalFunction(linear(root) ** whole, ONE)
            elif whole < 0:
                coeff = coeff * RationalFunction(ONE, linear(root) ** (-whole))
            if frac:
                kept.append(PowerFactor(root, frac))
        if arg.coefficient(0) != 0:
            arg = arg - arg.coefficient(0)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "powers", tuple(kept))
        object.__setattr__(self, "exp_arg", arg)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> WeightedExpression:
        return cls(RationalFunction(ZERO))

    @classmethod
    def one(cls) -> WeightedExpression:
        return cls(RationalFunction(ONE))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> WeightedExpression:
        return cls(RationalFunction(p))

    @classmethod
    def from_rational(cls, r: RationalFunction | Polynomial | Scalar) -> WeightedExpression:
        return cls(as_rational_function(r))

    @classmethod
    def power(cls, root: Scalar, exponent: Scalar) -> WeightedExpression:
        """(x - root)^exponent for any rational exponent."""
        return cls(RationalFunction(ONE), (PowerFactor(Fraction(root), Fraction(exponent)),))

    @classmethod
    def exp_of(cls, argument: Polynomial) -> WeightedExpression:
        return cls(RationalFunction(ONE), (), argument)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.coeff.is_zero

    def weight_cell(self) -> tuple[tuple[PowerFactor, ...], Polynomial]:
        """The (powers, exp_arg) pair two members must share to be addable."""
        return (self.powers, self.exp_arg)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: Coercible) -> WeightedExpression:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.weight_cell() != other.weight_cell():
            raise ValueError(
                "cannot add weighted expressions with different weight structure: "
                f"{self} vs {other}"
            )
        return WeightedExpression(self.coeff + other.coeff, self.powers, self.exp_arg)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> WeightedExpression:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> WeightedExpression:
        return -(self - other)

    def __neg__(self) -> WeightedExpression:
        return WeightedExpression(-self.coeff, self.powers, self.exp_arg)

    def __mul__(self, other: Coercible) -> WeightedExpression:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return WeightedExpression.zero()
        return WeightedExpression(
            self.coeff * other.coeff,
            self.powers + other.powers,
            self.exp_arg + other.exp_arg,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> WeightedExpression:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero weighted expression")
        if self.is_zero:
            return WeightedExpression.zero()
        inverted = tuple(PowerFactor(pf.root, -pf.exponent) for pf in other.powers)
        return WeightedExpression(
            self.coeff / other.coeff,
            self.powers + inverted,
            self.exp_arg - other.exp_arg,
        )

    def __rtruediv__(self, other: Coercible) -> WeightedExpression:
        return _coerce(other) / self

    # -- calculus -----------------------------------------------------------

    def _weight_log_derivative(self) -> RationalFunction:
        total = as_rational_function(self.exp_arg.diff())
        for pf in self.powers:
            total = total + RationalFunction(Polynomial.constant(pf.exponent), linear(pf.root))
        return total

    def diff(self) -> WeightedExpression:
        """Exact derivative; the class is closed so the result is canonical."""
        if self.is_zero:
            return self
        new_coeff = self.coeff.diff() + self.coeff * self._weight_log_derivative()
        return WeightedExpression(new_coeff, self.powers, self.exp_arg)

    def log_derivative(self) -> RationalFunction:
        """(d/dx self)/self, always rational for this class."""
        if self.is_zero:
            raise ZeroDivisionError("log derivative of the zero expression")
        return self.coeff.diff() / self.coeff + self._weight_log_derivative()

    # -- extraction and comparison ------------------------------------------

    def as_polynomial(self) -> Polynomial:
        """The coefficient polynomial, once every weight has cancelled."""
        if self.is_zero:
            return ZERO
        survivors = []
        if self.powers:
            survivors.append(
                "power factors " + ", ".join(f"(x - {pf.root})^{pf.exponent}" for pf in self.powers)
            )
        if not self.exp_arg.is_zero:
            survivors.append(f"exponential exp({self.exp_arg})")
        if not self.coeff.is_polynomial:
            survivors.append(f"denominator {self.coeff.den}")
        if survivors:
            raise NotPolynomialError("not a polynomial; surviving " + "; ".join(survivors))
        return self.coeff.num

    def scalar_ratio(self, other: Coercible) -> Fraction | None:
        """The rational c with self = c*other, or None if no such nonzero c exists.

        Both zero compares as ratio 1; zero against nonzero has no nonzero
        ratio and returns None.
        """
        other = _coerce(other)
        if self.is_zero and other.is_zero:
            return Fraction(1)
        if self.is_zero or other.is_zero:
            return None
        if self.weight_cell() != other.weight_cell():
            return None
        ratio = self.coeff / other.coeff
        if ratio.is_constant:
            return ratio.constant_value()
        return None

    def to_text(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        if self.coeff != RationalFunction(ONE) or (not self.powers and self.exp_arg.is_zero):
            text = self.coeff.to_text(var)
            if self.coeff.is_polynomial and self.coeff.num.degree > 0 and (self.powers or not self.exp_arg.is_zero):
                text = f"({text})"
            parts.append(text)
        for pf in self.powers:
            base = var if pf.root == 0 else f"({linear(pf.root).to_text(var)})"
            parts.append(f"{base}^({pf.exponent})")
        if not self.exp_arg.is_zero:
            parts.append(f"exp({self.exp_arg.to_text(var)})")
        return " * ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def _coerce(value: Coercible) -> WeightedExpression:
    if isinstance(value, WeightedExpression):
        return value
    if isinstance(value, (RationalFunction, Polynomial, int, Fraction)):
        return WeightedExpression(as_rational_function(value))
    return NotImplemented


def as_weighted(value: Coercible) -> WeightedExpression:
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a weighted expression")
    return out


def exp_integral(result: IntegrationResult, sign: int = 1) -> WeightedExpression:
    """exp(sign * integral): power factors from residues, exponential from the polynomial part."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    powers = tuple(PowerFactor(root, sign * residue) for root, residue in result.log_terms)
    return WeightedExpression(RationalFunction(ONE), powers, result.poly_part * sign)
