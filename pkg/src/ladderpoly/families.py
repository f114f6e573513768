"""Operator catalog, ladder generation, recurrence oracles, and Rodrigues chains.

Ten families are supported: legendre, assoc-legendre(m), gegenbauer(lambda),
chebyshev-T, chebyshev-U, laguerre(alpha), hermite, laguerre-radial(alpha),
coulomb-radial(ell), oscillator-3d(ell).  The polynomial families are generated
two independent ways: by iterating their ladder operators, and by their
classical three-term recurrences (`oracle_recurrence`).  The oracle path is
ground truth for every other construction in the package and deliberately
shares no code with the operator path.

Square-root weights are expressed in the canonical (x - root) basis of the
weighted module: ``qpow(e)`` below stands for (x^2-1)^e.  Formulas printed
against (1-x^2)^e differ from that basis by a phase (-1)^e per factor; the
scalars used here absorb the net phase, and the tests pin every such constant
against the oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import ONE, Polynomial, RationalFunction, X
from .ladder import DIFF, LOWERING, RAISING, ChainStep, LadderOperator, apply_chain
from .weighted import WeightedExpression

KINDS = (
    "legendre",
    "assoc-legendre",
    "gegenbauer",
    "chebyshev-T",
    "chebyshev-U",
    "laguerre",
    "hermite",
    "laguerre-radial",
    "coulomb-radial",
    "oscillator-3d",
)

RADIAL_KINDS = ("laguerre-radial", "coulomb-radial", "oscillator-3d")

#: Families that generate polynomials by ladder iteration.
GENERATING_KINDS = (
    "legendre",
    "gegenbauer",
    "chebyshev-T",
    "chebyshev-U",
    "laguerre",
    "hermite",
    "laguerre-radial",
)

X_SQ_MINUS_1 = Polynomial.of(-1, 0, 1)
ONE_MINUS_X_SQ = Polynomial.of(1, 0, -1)

#: Ratio of the raw oscillator iteration (x - D applied to exp(-x^2/2)) to the
#: physicists' Hermite polynomials; determined empirically, and equal to one:
#: the iteration reproduces H_n with no residual normalization.
OSCILLATOR_HERMITE_SCALE = Fraction(1)

#: Ratio of the m-iterated associated Legendre form to the definitional
#: weight-times-derivative form in the canonical basis; measured once, equal
#: to one.
ASSOC_LEGENDRE_ITERATION_SCALE = Fraction(1)


def qpow(exponent: Fraction | int) -> WeightedExpression:
    """(x^2-1)^exponent in the canonical split basis (x-1)^e (x+1)^e."""
    e = Fraction(exponent)
    return WeightedExpression(
        RationalFunction(ONE), ((Fraction(1), e), (Fraction(-1), e))
    )


def rpow(exponent: Fraction | int) -> WeightedExpression:
    """r^exponent, a power factor at the origin."""
    return WeightedExpression.power(0, Fraction(exponent))


def factorial(n: int) -> int:
    return math.factorial(n)


def odd_double_factorial(k: int) -> int:
    """k!! for odd k >= -1, with (-1)!! = 1."""
    if k < -1 or k % 2 == 0:
        raise ValueError(f"expected an odd integer >= -1, got {k}")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def pochhammer(z: Fraction | int, k: int) -> Fraction:
    """Rising factorial z (z+1) ... (z+k-1)."""
    if k < 0:
        raise ValueError("pochhammer index must be nonnegative")
    out = Fraction(1)
    z = Fraction(z)
    for i in range(k):
        out *= z + i
    return out


@dataclass(frozen=True)
class FamilySpec:
    """A family member: the kind, its index n, and any family parameters."""

    kind: str
    n: int
    alpha: Fraction | None = None
    lam: Fraction | None = None
    m: int | None = None
    ell: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind: {self.kind!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("index n must be a nonnegative integer")
        if self.kind == "assoc-legendre":
            if self.m is None or not 0 <= self.m <= self.n:
                raise ValueError("assoc-legendre requires an order m with 0 <= m <= n")
        elif self.m is not None:
            raise ValueError(f"{self.kind} takes no order m")
        if self.kind == "gegenbauer":
            if self.lam is None or Fraction(self.lam) == 0:
                raise ValueError("gegenbauer requires a nonzero rational parameter")
            object.__setattr__(self, "lam", Fraction(self.lam))
        elif self.lam is not None:
            raise ValueError(f"{self.kind} takes no lambda parameter")
        if self.kind in ("laguerre", "laguerre-radial"):
            if self.alpha is None or Fraction(self.alpha) <= -1:
                raise ValueError(f"{self.kind} requires a rational alpha > -1")
            object.__setattr__(self, "alpha", Fraction(self.alpha))
        elif self.alpha is not None:
            raise ValueError(f"{self.kind} takes no alpha parameter")
        if self.kind in ("coulomb-radial", "oscillator-3d"):
            if self.ell is None or self.ell < 0:
                raise ValueError(f"{self.kind} requires an integer ell >= 0")
        elif self.ell is not None:
            raise ValueError(f"{self.kind} takes no ell parameter")

    @property
    def var(self) -> str:
        return "r" if self.kind in RADIAL_KINDS else "x"

    def with_n(self, n: int) -> FamilySpec:
        return FamilySpec(self.kind, n, self.alpha, self.lam, self.m, self.ell)

    def params(self) -> dict[str, str]:
        out: dict[str, str] = {}
        if self.alpha is not None:
            out["alpha"] = str(self.alpha)
        if self.lam is not None:
            out["lambda"] = str(self.lam)
        if self.m is not None:
            out["m"] = str(self.m)
        if self.ell is not None:
            out["ell"] = str(self.ell)
        return out


def _wp(p: Polynomial) -> WeightedExpression:
    return WeightedExpression.from_polynomial(p)


def make_operator(spec: FamilySpec, direction: str) -> LadderOperator:
    """The family's printed ladder operator with exact coefficients.

    ``direction`` is the index direction (raising moves the family index up).
    Families whose index-lowering operator is printed in the plain a*D + b
    shape get form="raising"; the composed -D(a .) + b shape gets
    form="lowering".
    """
    if direction not in (RAISING, LOWERING):
        raise ValueError(f"unknown direction: {direction!r}")
    n = spec.n
    kind = spec.kind
    if kind == "legendre":
        # R_n = (x^2-1) D + n x ; L_n = -D (x^2-1) + n x
        form = RAISING if direction == RAISING else LOWERING
        name = ("R_%d" if direction == RAISING else "L_%d") % n
        return LadderOperator(_wp(X_SQ_MINUS_1), _wp(X * n), form, name)
    if kind == "assoc-legendre":
        # Canonical-basis transcription of the m-raising/lowering pair.  With
        # Q = (x-1)^(1/2) (x+1)^(1/2) one has Q^2 = +(x^2-1), opposite in sign
        # to ((1-x^2)^(1/2))^2; the empirically determined sign choices below
        # are the unique ones making R_m P_n^m = P_n^(m+1) and
        # L_m P_n^(m+1) = (n-m)(n+m+1) P_n^m exact in this basis.
        m = spec.m
        q = qpow(Fraction(1, 2))
        mx_over_q = WeightedExpression(
            RationalFunction(X * m, X_SQ_MINUS_1),
            ((Fraction(1), Fraction(1, 2)), (Fraction(-1), Fraction(1, 2))),
        )
        if direction == RAISING:
            return LadderOperator(q, -mx_over_q, RAISING, f"R_m[m={m}]")
        return LadderOperator(-q, mx_over_q, LOWERING, f"L_m[m={m}]")
    if kind == "gegenbauer":
        lam = spec.lam
        if direction == RAISING:
            # maps C_(n-1) to -n C_n
            b = X * (-(n - 1 + 2 * lam))
            return LadderOperator(_wp(ONE_MINUS_X_SQ), _wp(b), RAISING, f"C+_{n}")
        return LadderOperator(_wp(ONE_MINUS_X_SQ), _wp(X * n), RAISING, f"C-_{n}")
    if kind == "chebyshev-U":
        if direction == RAISING:
            # maps U_n to (n+1) U_(n+1)
            return LadderOperator(_wp(X_SQ_MINUS_1), _wp(X * (n + 2)), RAISING, f"U+_{n}")
        return LadderOperator(_wp(ONE_MINUS_X_SQ), _wp(X * n), RAISING, f"U-_{n}")
    if kind == "chebyshev-T":
        if n < 1:
            raise ValueError("chebyshev-T ladder operators require index m >= 1")
        a = X_SQ_MINUS_1 * Fraction(1, n) if direction == RAISING else ONE_MINUS_X_SQ * Fraction(1, n)
        return LadderOperator(_wp(a), _wp(X), RAISING, f"T{'+' if direction == RAISING else '-'}_{n}")
    if kind == "laguerre":
        alpha = spec.alpha
        if direction == RAISING:
            # A+ = x D - x + alpha + n, maps L_(n-1) to n L_n
            return LadderOperator(_wp(X), _wp(Polynomial.of(alpha + n, -1)), RAISING, f"A+_{n}")
        return LadderOperator(_wp(-X), _wp(Polynomial.constant(n)), RAISING, f"A-_{n}")
    if kind == "hermite":
        if direction == RAISING:
            return LadderOperator(_wp(Polynomial.constant(-1)), _wp(X), RAISING, "a+")
        return LadderOperator(_wp(ONE), _wp(X), RAISING, "a-")
    if kind == "laguerre-radial":
        alpha = spec.alpha
        if direction == RAISING:
            # A+ = (r/2) D + n + alpha - r^2
            b = Polynomial.of(alpha + n, 0, -1)
            return LadderOperator(_wp(X * Fraction(1, 2)), _wp(b), RAISING, f"A+_{n}", var="r")
        return LadderOperator(_wp(X * Fraction(-1, 2)), _wp(Polynomial.constant(n)), RAISING, f"A-_{n}", var="r")
    if kind == "coulomb-radial":
        if direction == LOWERING:
            raise ValueError("coulomb-radial has no printed lowering operator")
        b = WeightedExpression.from_rational(RationalFunction(Polynomial.constant(spec.ell + 1), X))
        return LadderOperator(WeightedExpression.one(), b, RAISING, f"A+_l[{spec.ell}]", var="r")
    if kind == "oscillator-3d":
        if direction == LOWERING:
            raise ValueError("oscillator-3d has no printed lowering operator")
        b = WeightedExpression.from_rational(
            RationalFunction(Polynomial.of(spec.ell + 1, 0, Fraction(1, 2)), X)
        )
        return LadderOperator(WeightedExpression.one(), b, RAISING, f"a+_l[{spec.ell}]", var="r")
    raise ValueError(f"unknown family kind: {kind!r}")


# ---------------------------------------------------------------------------
# Recurrence oracles: classical three-term recurrences, ground truth for the
# whole package.  Nothing here touches LadderOperator.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def oracle_recurrence(spec: FamilySpec) -> Polynomial:
    """The family polynomial from its classical three-term recurrence."""
    n = spec.n
    kind = spec.kind
    if kind == "legendre":
        prev, cur = ONE, X
        for k in range(1, n):
            prev, cur = cur, (X * cur * (2 * k + 1) - prev * k) * Fraction(1, k + 1)
        return ONE if n == 0 else cur
    if kind == "chebyshev-T":
        prev, cur = ONE, X
        for _ in range(1, n):
            prev, cur = cur, X * cur * 2 - prev
        return ONE if n == 0 else cur
    if kind == "chebyshev-U":
        prev, cur = ONE, X * 2
        for _ in range(1, n):
            prev, cur = cur, X * cur * 2 - prev
        return ONE if n == 0 else cur
    if kind == "gegenbauer":
        lam = spec.lam
        prev, cur = ONE, X * (2 * lam)
        for k in range(1, n):
            prev, cur = cur, (X * cur * (2 * (k + lam)) - prev * (k + 2 * lam - 1)) * Fraction(1, k + 1)
        return ONE if n == 0 else cur
    if kind == "laguerre":
        alpha = spec.alpha
        prev, cur = ONE, Polynomial.of(1 + alpha, -1)
        for k in range(1, n):
            prev, cur = cur, ((Polynomial.of(2 * k + 1 + alpha, -1)) * cur - prev * (k + alpha)) * Fraction(1, k + 1)
        return ONE if n == 0 else cur
    if kind == "hermite":
        prev, cur = ONE, X * 2
        for k in range(1, n):
            prev, cur = cur, X * cur * 2 - prev * (2 * k)
        return ONE if n == 0 else cur
    if kind == "laguerre-radial":
        base = oracle_recurrence(FamilySpec("laguerre", n, alpha=spec.alpha))
        return base.compose(X * X)
    raise ValueError(f"no recurrence oracle for family {kind!r}")


# ---------------------------------------------------------------------------
# Generation by operator iteration.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def generate_ladder(spec: FamilySpec) -> Polynomial:
    """Generate the degree-n family polynomial by iterating its ladder operator.

    Scalar normalization follows the printed recursions, e.g.
    P_n = R_n P_(n-1) / n and C_n = -(1/n) C_n^+ C_(n-1).  Results are cached,
    so a table of depth n costs n operator applications in total.
    """
    n = spec.n
    kind = spec.kind
    if kind not in GENERATING_KINDS:
        raise ValueError(
            f"family {kind!r} has no polynomial ladder generation"
            + ("; use generate_assoc_legendre" if kind == "assoc-legendre" else "")
        )
    if kind == "hermite":
        ground = WeightedExpression.exp_of(X * X * Fraction(-1, 2))
        if n == 0:
            return ((ground / ground) * OSCILLATOR_HERMITE_SCALE).as_polynomial()
        previous = generate_ladder(spec.with_n(n - 1)) * ground
        raised = make_operator(spec, RAISING).apply(previous)
        return (raised / ground).as_polynomial()
    if kind == "chebyshev-T":
        if n <= 1:
            return ONE if n == 0 else X
        below = WeightedExpression.from_polynomial(generate_ladder(spec.with_n(n - 1)))
        return make_operator(spec.with_n(n - 1), RAISING).apply(below).as_polynomial()
    if n == 0:
        return ONE
    below = WeightedExpression.from_polynomial(generate_ladder(spec.with_n(n - 1)))
    if kind == "chebyshev-U":
        raised = make_operator(spec.with_n(n - 1), RAISING).apply(below)
        return (raised * Fraction(1, n)).as_polynomial()
    scale = Fraction(-1, n) if kind == "gegenbauer" else Fraction(1, n)
    raised = make_operator(spec.with_n(n), RAISING).apply(below)
    return (raised * scale).as_polynomial()


def hermite_via_oscillator(n: int) -> Polynomial:
    """H_n from n application of the oscillator raising operator to exp(-x^2/2)."""
    return generate_ladder(FamilySpec("hermite", n))


def hermite_from_laguerre(n: int, parity: str) -> Polynomial:
    """H_(2n) or H_(2n+1) through the half-integer Laguerre reduction."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    sign = -1 if n % 2 else 1
    if parity == "even":
        base = generate_ladder(FamilySpec("laguerre", n, alpha=Fraction(-1, 2)))
        return base.compose(X * X) * (sign * 2 ** (2 * n) * factorial(n))
    base = generate_ladder(FamilySpec("laguerre", n, alpha=Fraction(1, 2)))
    return X * base.compose(X * X) * (sign * 2 ** (2 * n + 1) * factorial(n))


def generate_assoc_legendre(n: int, m: int) -> WeightedExpression:
    """P_n^m in the canonical basis: (x^2-1)^(m/2) times the m-th derivative of P_n.

    Also rebuilds the same function by iterating the m-raising operator from
    P_n and checks the two agree up to ASSOC_LEGENDRE_ITERATION_SCALE.
    """
    spec = FamilySpec("assoc-legendre", n, m=m)
    definitional = qpow(Fraction(m, 2)) * _derivative_power(oracle_recurrence(FamilySpec("legendre", n)), m)
    iterated = assoc_legendre_iterated(n, m)
    ratio = iterated.scalar_ratio(definitional)
    if ratio != ASSOC_LEGENDRE_ITERATION_SCALE:
        raise AssertionError(
            f"m-iterated form of P_{n}^{m} differs from the definitional form by {ratio}"
        )
    return definitional


def assoc_legendre_iterated(n: int, m: int) -> WeightedExpression:
    """P_n^m by applying the m-raising operators R_0, ..., R_(m-1) to P_n."""
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= n")
    acc = WeightedExpression.from_polynomial(oracle_recurrence(FamilySpec("legendre", n)))
    for j in range(m):
        acc = make_operator(FamilySpec("assoc-legendre", n, m=j), RAISING).apply(acc)
    return acc


def _derivative_power(p: Polynomial, order: int) -> WeightedExpression:
    for _ in range(order):
        p = p.diff()
    return WeightedExpression.from_polynomial(p)


# ---------------------------------------------------------------------------
# Rodrigues formulas: printed n-fold derivative forms and chain forms.
# ---------------------------------------------------------------------------


def rodrigues_standard(spec: FamilySpec) -> Polynomial:
    """The printed n-fold-derivative Rodrigues formula, evaluated exactly.

    Half-integer weights are evaluated in the (x - root) basis; the scalars
    below fold in the net (-1)^n basis phase so the result matches the
    recurrence oracle exactly.
    """
    n = spec.n
    kind = spec.kind
    if kind == "legendre":
        chain = apply_chain([DIFF] * n, _wp(X_SQ_MINUS_1 ** n))
        return (chain * Fraction(1, 2**n * factorial(n))).as_polynomial()
    if kind == "chebyshev-U":
        chain = qpow(Fraction(-1, 2)) * apply_chain([DIFF] * n, qpow(Fraction(2 * n + 1, 2)))
        return (chain * Fraction(n + 1, odd_double_factorial(2 * n + 1))).as_polynomial()
    if kind == "chebyshev-T":
        chain = qpow(Fraction(1, 2)) * apply_chain([DIFF] * n, qpow(Fraction(2 * n - 1, 2)))
        return (chain * Fraction(1, odd_double_factorial(2 * n - 1))).as_polynomial()
    if kind == "gegenbauer":
        lam = spec.lam
        scale = Fraction(2**n) * pochhammer(lam, n) / (factorial(n) * pochhammer(n + 2 * lam, n))
        chain = qpow(Fraction(1, 2) - lam) * apply_chain([DIFF] * n, qpow(n + lam - Fraction(1, 2)))
        return (chain * scale).as_polynomial()
    if kind == "laguerre":
        alpha = spec.alpha
        left = rpow(-alpha) * WeightedExpression.exp_of(X)
        operand = rpow(n + alpha) * WeightedExpression.exp_of(-X)
        chain = left * apply_chain([DIFF] * n, operand)
        return (chain * Fraction(1, factorial(n))).as_polynomial()
    raise ValueError(f"family {kind!r} has no printed n-fold Rodrigues formula")


def rodrigues_chain(spec: FamilySpec, variant: str) -> Polynomial:
    """Printed chain forms: iterated h=0 chains and one-step-split chains.

    h0-chain alternates multiplication by the three-halves-power weight with
    differentiation; one-step-split applies a single weighted derivative to an
    (n-1)-fold plain derivative.  Radial variants return polynomials in r.
    """
    if variant == "h0-chain":
        return _chain_h0(spec)
    if variant == "one-step-split":
        return _chain_one_step(spec)
    raise ValueError(f"unknown chain variant: {variant!r}")


def _chain_h0(spec: FamilySpec) -> Polynomial:
    n = spec.n
    kind = spec.kind
    three_halves = qpow(Fraction(3, 2))
    if kind == "legendre":
        if n < 1:
            raise ValueError("chain requires n >= 1")
        steps: list[ChainStep] = [qpow(Fraction(2 - n, 2)), DIFF] + [three_halves, DIFF] * (n - 1)
        result = apply_chain(steps, qpow(Fraction(1, 2)))
        return (result * Fraction(1, factorial(n))).as_polynomial()
    if kind == "chebyshev-U":
        if n < 1:
            raise ValueError("chain requires n >= 1")
        steps = [qpow(Fraction(1 - n, 2)), DIFF] + [three_halves, DIFF] * (n - 1)
        result = apply_chain(steps, _wp(X_SQ_MINUS_1))
        return (result * Fraction(1, factorial(n))).as_polynomial()
    if kind == "chebyshev-T":
        if n < 2:
            raise ValueError("the chebyshev-T chain starts from x*(x^2-1)^(1/2) and needs n >= 2")
        steps = [qpow(Fraction(3 - n, 2)), DIFF] + [three_halves, DIFF] * (n - 2)
        result = apply_chain(steps, _wp(X) * qpow(Fraction(1, 2)))
        return (result * Fraction(1, factorial(n - 1))).as_polynomial()
    if kind == "gegenbauer":
        if n < 1:
            raise ValueError("chain requires n >= 1")
        lam = spec.lam
        steps = [qpow(Fraction(3 - n, 2) - lam), DIFF] + [three_halves, DIFF] * (n - 1)
        result = apply_chain(steps, qpow(lam))
        return (result * Fraction(1, factorial(n))).as_polynomial()
    if kind == "laguerre-radial":
        if n < 1:
            raise ValueError("chain requires n >= 1")
        alpha = spec.alpha
        left = rpow(1 - 2 * (n + alpha)) * WeightedExpression.exp_of(X * X)
        operand = rpow(2 * (alpha + 1)) * WeightedExpression.exp_of(-(X * X))
        steps = [left, DIFF] + [rpow(3), DIFF] * (n - 1)
        result = apply_chain(steps, operand)
        return (result * Fraction(1, factorial(n) * 2**n)).as_polynomial()
    if kind == "hermite":
        return _hermite_radial_chain(n)
    raise ValueError(f"family {kind!r} has no printed h=0 chain")


def _hermite_radial_chain(n: int) -> Polynomial:
    # H_(2k) and H_(2k+1) through the x = r^2 Laguerre chains at alpha = -+1/2.
    # The even display's prefactor is r^(2-2k): the printed r^(-2k) is
    # inconsistent with the Laguerre reduction and fails to cancel the weights.
    if n < 2:
        raise ValueError("the radial Hermite chains need n >= 2")
    k, parity = divmod(n, 2)
    sign = -1 if k % 2 else 1
    if parity == 0:
        left = rpow(2 - 2 * k) * WeightedExpression.exp_of(X * X)
        operand = rpow(1) * WeightedExpression.exp_of(-(X * X))
        scale = Fraction(sign * 2**k)
    else:
        left = rpow(1 - 2 * k) * WeightedExpression.exp_of(X * X)
        operand = rpow(3) * WeightedExpression.exp_of(-(X * X))
        scale = Fraction(sign * 2 ** (k + 1))
    steps: list[ChainStep] = [left, DIFF] + [rpow(3), DIFF] * (k - 1)
    return (apply_chain(steps, operand) * scale).as_polynomial()


def _chain_one_step(spec: FamilySpec) -> Polynomial:
    n = spec.n
    kind = spec.kind
    if n < 1:
        raise ValueError("chain requires n >= 1")
    if kind == "legendre":
        steps: list[ChainStep] = [qpow(Fraction(2 - n, 2)), DIFF, qpow(Fraction(n, 2))] + [DIFF] * (n - 1)
        result = apply_chain(steps, _wp(X_SQ_MINUS_1 ** (n - 1)))
        return (result * Fraction(1, 2 ** (n - 1) * factorial(n))).as_polynomial()
    if kind == "chebyshev-U":
        steps = [qpow(Fraction(1 - n, 2)), DIFF, qpow(Fraction(n, 2))] + [DIFF] * (n - 1)
        result = apply_chain(steps, qpow(Fraction(2 * n - 1, 2)))
        return (result * Fraction(1, odd_double_factorial(2 * n - 1))).as_polynomial()
    if kind == "chebyshev-T":
        if n < 2:
            raise ValueError("the chebyshev-T split form needs n >= 2")
        steps = [qpow(Fraction(3 - n, 2)), DIFF, qpow(Fraction(n, 2))] + [DIFF] * (n - 1)
        result = apply_chain(steps, qpow(Fraction(2 * n - 3, 2)))
        return (result * Fraction(1, odd_double_factorial(2 * n - 3) * (n - 1))).as_polynomial()
    if kind == "gegenbauer":
        lam = spec.lam
        scale = (
            Fraction(2 ** (n - 1))
            * pochhammer(lam, n - 1)
            / (factorial(n) * pochhammer(n + 2 * lam - 1, n - 1))
        )
        steps = [qpow(Fraction(3 - n, 2) - lam), DIFF, qpow(Fraction(n, 2))] + [DIFF] * (n - 1)
        result = apply_chain(steps, qpow(n + lam - Fraction(3, 2)))
        return (result * scale).as_polynomial()
    raise ValueError(f"family {kind!r} has no printed one-step-split form")
