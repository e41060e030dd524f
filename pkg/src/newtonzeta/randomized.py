"""Seeded randomized consistency suites for the reduction identities.

These drive the two volume identities (cone reduction and Cayley/mixed
volume) over streams of random germs; the CLI exposes them and the test
suite pins them as acceptance criteria.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import (
    IdentityInapplicable,
    cayley_mixed_volume_identity,
    cone_reduction_identity,
    diagram_facets,
)
from .germ import GermSeries, index_sets_with_zero, make_germ, pencil_germ, suspend_germ


def random_nonzero_fraction(rng, bound=7) -> Fraction:
    num = rng.choice([x for x in range(-bound, bound + 1) if x])
    return Fraction(num, rng.randint(1, bound))


def random_convenient_germ(rng, n, max_exp=8, extra_terms=3) -> GermSeries:
    """Random germ in the z-variables whose diagram meets every axis."""
    terms = {}
    for i in range(1, n + 1):
        e = [0] * (n + 1)
        e[i] = rng.randint(1, max_exp)
        terms[tuple(e)] = random_nonzero_fraction(rng)
    for _ in range(extra_terms):
        e = [0] + [rng.randint(0, max_exp) for _ in range(n)]
        if any(e) and tuple(e) not in terms:
            terms[tuple(e)] = random_nonzero_fraction(rng)
    return make_germ(n + 1, terms.items())


def random_z_germ(rng, n, max_exp=4, max_terms=3) -> GermSeries:
    """Random germ in the z-variables only (not necessarily convenient)."""
    terms = {}
    while not terms:
        for _ in range(rng.randint(1, max_terms)):
            e = [0] + [rng.randint(0, max_exp) for _ in range(n)]
            if any(e):
                terms[tuple(e)] = random_nonzero_fraction(rng)
    return make_germ(n + 1, terms.items())


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    facets_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "pass" if self.passed else "FAIL"
        return (f"{self.name}: {state} "
                f"({self.cases} germs, {self.facets_checked} facets checked, "
                f"{len(self.failures)} failures)")


def cone_suite(seed: int, count: int = 100, max_n: int = 3,
               max_exp: int = 8) -> SuiteResult:
    """Check the cone reduction on every facet of count random suspensions."""
    rng = random.Random(seed)
    result = SuiteResult("cone reduction suite")
    for _ in range(count):
        n = rng.randint(1, max_n)
        f = random_convenient_germ(rng, n, max_exp=max_exp)
        F = suspend_germ(f)
        result.cases += 1
        for I in index_sets_with_zero(n):
            if len(I) < 2:
                continue
            for facet in diagram_facets(F, I):
                result.facets_checked += 1
                try:
                    ok = cone_reduction_identity(f, I, facet)
                except IdentityInapplicable as exc:
                    ok = False
                    result.failures.append(f"I={I} facet {facet.normal}: {exc}")
                    continue
                if not ok:
                    result.failures.append(
                        f"I={I} facet {facet.normal}: volumes or exponents disagree")
    return result


def cayley_suite(seed: int, count: int = 50) -> SuiteResult:
    """Check the Cayley/mixed-volume reduction on faces of dimension 2 and 3."""
    rng = random.Random(seed)
    result = SuiteResult("cayley mixed-volume suite")
    for _ in range(count):
        n = rng.randint(2, 3)
        f0 = random_convenient_germ(rng, n, max_exp=5, extra_terms=2)
        if rng.random() < 0.3:
            f1 = random_z_germ(rng, n, max_exp=2, max_terms=1)  # monomial
        else:
            f1 = random_z_germ(rng, n, max_exp=2, max_terms=2)
        F = pencil_germ(f0, f1)
        result.cases += 1
        for I in index_sets_with_zero(n):
            l = len(I) - 1
            if l not in (2, 3):
                continue
            for facet in diagram_facets(F, I):
                result.facets_checked += 1
                try:
                    ok = cayley_mixed_volume_identity(f0, f1, I, facet)
                except IdentityInapplicable as exc:
                    ok = False
                    result.failures.append(f"I={I} facet {facet.normal}: {exc}")
                    continue
                if not ok:
                    result.failures.append(
                        f"I={I} facet {facet.normal}: volumes or exponents disagree")
    return result
