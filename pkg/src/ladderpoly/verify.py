"""Verification suites: oracle equivalence, identities, factorization round trips.

Each suite produces IdentityReports whose instances are exact checks.  The
random drifts used by the factorization suite come from a fixed seed so runs
are reproducible; coefficients are small rationals, degree at most four.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Polynomial, X
from .families import (
    FamilySpec,
    generate_ladder,
    make_operator,
    oracle_recurrence,
    rodrigues_chain,
    rodrigues_standard,
    X_SQ_MINUS_1,
)
from .identities import (
    DEFAULT_LAMBDAS,
    IdentityReport,
    InstanceResult,
    check_assoc_relations,
    check_chebyshev_relations,
    check_eq31,
    check_eq33_eq35,
    check_eq34,
    check_gegenbauer_updown,
    check_legendre_relations,
    check_remark_three_term,
    check_remark_three_term_legendre,
)
from .ladder import RAISING, LadderOperator, factorize, verify_factorization
from .weighted import WeightedExpression

DEFAULT_ALPHAS = (Fraction(0), Fraction(-1, 2), Fraction(1, 2), Fraction(1))

DRIFT_SEED = 103

SUITE_NAMES = (
    "oracle",
    "eq31",
    "remark3term",
    "eq34",
    "assoc-relations",
    "factorization",
    "rodrigues",
    "all",
)


@dataclass
class SuiteResult:
    suite: str
    n_max: int
    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "ok": self.ok,
            "reports": [r.to_dict() for r in self.reports],
        }


def oracle_family_specs(n: int) -> list[FamilySpec]:
    """The family instances whose ladder generation is checked against the oracles."""
    specs = [
        FamilySpec("legendre", n),
        FamilySpec("chebyshev-T", n),
        FamilySpec("chebyshev-U", n),
        FamilySpec("hermite", n),
    ]
    specs += [FamilySpec("gegenbauer", n, lam=lam) for lam in DEFAULT_LAMBDAS]
    specs += [FamilySpec("laguerre", n, alpha=alpha) for alpha in DEFAULT_ALPHAS]
    return specs


def suite_oracle(n_max: int, negative_control: bool = False) -> list[IdentityReport]:
    """generate_ladder = oracle_recurrence, exactly, for every family instance.

    With negative_control set, one generated coefficient is deliberately
    shifted to prove the comparison can fail.
    """
    report = IdentityReport("oracle-equivalence")
    for n in range(n_max + 1):
        for spec in oracle_family_specs(n):
            generated = generate_ladder(spec)
            if negative_control and spec.kind == "legendre" and n == min(2, n_max):
                generated = generated + 1
            params = {"family": spec.kind, "n": str(n), **spec.params()}
            report.add(params, generated - oracle_recurrence(spec))
    return [report]


def representative_operators() -> list[tuple[str, LadderOperator]]:
    """One cataloged raising operator per family kind."""
    picks = [
        FamilySpec("legendre", 3),
        FamilySpec("assoc-legendre", 3, m=2),
        FamilySpec("gegenbauer", 3, lam=Fraction(3, 2)),
        FamilySpec("chebyshev-T", 3),
        FamilySpec("chebyshev-U", 2),
        FamilySpec("laguerre", 2, alpha=Fraction(1, 2)),
        FamilySpec("hermite", 2),
        FamilySpec("laguerre-radial", 2, alpha=Fraction(1, 2)),
        FamilySpec("coulomb-radial", 1, ell=1),
        FamilySpec("oscillator-3d", 1, ell=1),
    ]
    return [(spec.kind, make_operator(spec, RAISING)) for spec in picks]


def standard_testers() -> list[WeightedExpression]:
    return [
        WeightedExpression.one(),
        WeightedExpression.from_polynomial(X),
        WeightedExpression.from_polynomial(X * X),
        WeightedExpression.from_polynomial(X_SQ_MINUS_1 ** 3),
        WeightedExpression.exp_of(-X),
    ]


def random_drifts(count: int, seed: int = DRIFT_SEED) -> list[Polynomial]:
    """Deterministic polynomial drifts, degree <= 4, coefficients p/q with
    p in [-5, 5] and q in [1, 5]."""
    rng = random.Random(seed)
    drifts = []
    for _ in range(count):
        degree = rng.randint(0, 4)
        coeffs = [
            Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(degree + 1)
        ]
        drifts.append(Polynomial(tuple(coeffs)))
    return drifts


def suite_factorization(num_drifts: int = 25, seed: int = DRIFT_SEED) -> list[IdentityReport]:
    """Factorization round trip for every representative operator and drift."""
    report = IdentityReport("factorization-round-trip")
    testers = standard_testers()
    for kind, op in representative_operators():
        for index, drift in enumerate(random_drifts(num_drifts, seed)):
            fac = factorize(op, drift)
            check = verify_factorization(op, fac, testers)
            for entry in check.checks:
                report.instances.append(
                    InstanceResult(
                        {"family": kind, "drift": str(index), "tester": entry.tester},
                        entry.ok,
                        entry.discrepancy,
                    )
                )
    return [report]


def suite_rodrigues(n_max: int) -> list[IdentityReport]:
    """Printed Rodrigues formulas and chains against the recurrence oracles."""
    cap = min(n_max, 12)
    report = IdentityReport("rodrigues")
    for n in range(cap + 1):
        standard = [
            FamilySpec("legendre", n),
            FamilySpec("chebyshev-T", n),
            FamilySpec("chebyshev-U", n),
        ]
        standard += [FamilySpec("gegenbauer", n, lam=lam) for lam in DEFAULT_LAMBDAS]
        standard += [FamilySpec("laguerre", n, alpha=alpha) for alpha in DEFAULT_ALPHAS]
        for spec in standard:
            params = {"form": "standard", "family": spec.kind, "n": str(n), **spec.params()}
            report.add(params, rodrigues_standard(spec) - oracle_recurrence(spec))
    for n in range(1, cap + 1):
        chained: list[tuple[FamilySpec, str]] = [
            (FamilySpec("legendre", n), "h0-chain"),
            (FamilySpec("legendre", n), "one-step-split"),
            (FamilySpec("chebyshev-U", n), "h0-chain"),
            (FamilySpec("chebyshev-U", n), "one-step-split"),
        ]
        if n >= 2:
            chained += [
                (FamilySpec("chebyshev-T", n), "h0-chain"),
                (FamilySpec("chebyshev-T", n), "one-step-split"),
            ]
        for lam in DEFAULT_LAMBDAS:
            chained += [
                (FamilySpec("gegenbauer", n, lam=lam), "h0-chain"),
                (FamilySpec("gegenbauer", n, lam=lam), "one-step-split"),
            ]
        for alpha in DEFAULT_ALPHAS:
            chained.append((FamilySpec("laguerre-radial", n, alpha=alpha), "h0-chain"))
        for spec, variant in chained:
            params = {"form": variant, "family": spec.kind, "n": str(n), **spec.params()}
            report.add(params, rodrigues_chain(spec, variant) - oracle_recurrence(spec))
    for n in range(2, cap + 1):
        radial = rodrigues_chain(FamilySpec("hermite", n), "h0-chain")
        params = {"form": "radial-chain", "family": "hermite", "n": str(n)}
        report.add(params, radial - oracle_recurrence(FamilySpec("hermite", n)))
    return [report]


def run_suite(suite: str, n_max: int, negative_control: bool = False) -> SuiteResult:
    """Run one named verification suite; ``all`` runs every suite."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    result = SuiteResult(suite, n_max)
    if suite in ("oracle", "all"):
        result.reports += suite_oracle(n_max, negative_control=negative_control)
    if suite in ("eq31", "all"):
        result.reports.append(check_eq31(n_max))
    if suite in ("remark3term", "all"):
        result.reports.append(check_remark_three_term(max(n_max, 3)))
        result.reports.append(check_remark_three_term_legendre(max(n_max, 3)))
    if suite in ("eq34", "all"):
        result.reports.append(check_eq34(n_max))
        result.reports.append(check_eq33_eq35(n_max))
    if suite in ("assoc-relations", "all"):
        result.reports.append(check_assoc_relations(min(n_max, 12)))
    if suite in ("factorization", "all"):
        result.reports += suite_factorization()
    if suite in ("rodrigues", "all"):
        result.reports += suite_rodrigues(n_max)
    if suite == "all":
        result.reports.append(check_legendre_relations(n_max))
        result.reports.append(check_gegenbauer_updown(n_max))
        result.reports.append(check_chebyshev_relations(n_max))
    return result
