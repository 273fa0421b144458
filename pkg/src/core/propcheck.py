#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Property Suites

Seeded randomised checks of the ring laws, of the realizations being ring
homomorphisms, of convolution commutativity and of arc-count invariance
under truncation. Every suite takes a random.Random so runs are
reproducible from a seed.
"""

import random
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

from .arcspaces import Milnor, arc_count
from .convolution import conv_commutativity_check
from .errors import MotivicError
from .gring import (
    LPoly,
    MotClass,
    fermat,
    lcm,
    lpoly_class,
    mu,
    realize_at,
    realize_plain,
    realize_twisted,
)
from .polyfn import PolyFn, add_monomials
from ..utils.debug import dprint, timed


@dataclass
class SuiteResult:
    """Outcome of one property suite."""

    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)


# ========== Random classes ==========


def random_lpoly(rng: random.Random, span: int = 2, size: int = 3) -> LPoly:
    """Laurent polynomial with exponents in [-span, span] and small coefficients."""
    coeffs = {}
    for _ in range(rng.randint(1, size)):
        e = rng.randint(-span, span)
        coeffs[e] = coeffs.get(e, 0) + rng.choice((-3, -2, -1, 1, 2, 3))
    return LPoly.from_dict(coeffs)


def _fragment_monomials() -> List[MotClass]:
    """Monomials with at most one torsor carrying a nontrivial action."""
    return [
        lpoly_class(LPoly.const(1)),
        mu(2),
        mu(3),
        mu(4),
        mu(6),
        mu(2, order=1),
        mu(3, order=1) * mu(2),
        mu(2, order=1, sign=-1) * mu(3),
    ]


def _ring_monomials() -> List[MotClass]:
    return _fragment_monomials() + [fermat(1, 2, 3), fermat(0, 2, 2), mu(2) * mu(3)]


def random_class(rng: random.Random, fragment: bool = True, size: int = 3) -> MotClass:
    """
    Random class; with `fragment` it stays inside the domain of conv,
    otherwise Fermat curves and products of torsors may appear.
    """
    pool = _fragment_monomials() if fragment else _ring_monomials()
    total = MotClass()
    for _ in range(rng.randint(1, size)):
        total = total + lpoly_class(random_lpoly(rng)) * rng.choice(pool)
    return total


# ========== Suites ==========


def ring_law_suite(rng: random.Random, pairs: int) -> SuiteResult:
    """Associativity, commutativity and distributivity, structurally."""
    result = SuiteResult("ring laws")
    for i in range(pairs):
        x, y, z = (random_class(rng, fragment=False) for _ in range(3))
        result.record((x + y) + z == x + (y + z), f"#{i}: addition is not associative")
        result.record(x * y == y * x, f"#{i}: product is not commutative")
        result.record((x * y) * z == x * (y * z), f"#{i}: product is not associative")
        result.record(x * (y + z) == x * y + x * z, f"#{i}: product does not distribute")
        result.record((x - x).is_zero(), f"#{i}: x - x is not zero")
    return result


def homomorphism_suite(rng: random.Random, pairs: int, qs: Sequence[int]) -> SuiteResult:
    """
    Plain and twisted realizations respect sums and products at every
    valid (q, k); the k = 0 twisted value equals the plain one.
    """
    result = SuiteResult("realization homomorphism")
    for i in range(pairs):
        x, y = random_class(rng, fragment=False), random_class(rng, fragment=False)
        order = lcm(x.action_order(), y.action_order())
        for q in sorted(qs):
            twists = range(order) if (q - 1) % order == 0 else (0,)
            for k in twists:
                vx, vy = realize_at(x, q, k), realize_at(y, q, k)
                result.record(realize_at(x + y, q, k) == vx + vy, f"#{i}: sum at q={q} k={k}")
                result.record(realize_at(x * y, q, k) == vx * vy, f"#{i}: product at q={q} k={k}")
            if (q - 1) % order == 0:
                result.record(realize_twisted(x, q, 0) == realize_plain(x, q),
                              f"#{i}: k=0 twist differs from plain at q={q}")
    return result


def commutativity_suite(rng: random.Random, pairs: int) -> SuiteResult:
    """conv(x, y) == conv(y, x) on random fragment classes."""
    result = SuiteResult("convolution commutativity")
    for i in range(pairs):
        x, y = random_class(rng), random_class(rng)
        try:
            ok = conv_commutativity_check(x, y)
        except MotivicError as e:
            ok = False
            dprint(f"#{i}: {e}", tag="CONV")
        result.record(ok, f"#{i}: conv({x}, {y}) is not symmetric")
    return result


def _random_poly(rng: random.Random, nvars: int, max_degree: int, min_degree: int = 1) -> PolyFn:
    coeffs = {}
    while not coeffs:
        for _ in range(rng.randint(1, 3)):
            degree = rng.randint(min_degree, max_degree)
            exps = [0] * nvars
            for _ in range(degree):
                exps[rng.randrange(nvars)] += 1
            coeffs[tuple(exps)] = rng.choice((-2, -1, 1, 2, 3))
        coeffs = {e: c for e, c in coeffs.items() if c}
    return PolyFn.build(nvars, coeffs)


def truncation_suite(rng: random.Random, cases: int, junk: int = 100,
                     budget: int = 10 ** 4) -> SuiteResult:
    """
    arc_count at level m is unchanged by adding `junk` random monomials of
    total degree > m.
    """
    result = SuiteResult("truncation invariance")
    for i in range(cases):
        nvars = rng.choice((1, 2))
        m = rng.randint(1, 3)
        q = rng.choice((2, 3, 5))
        while q ** (m * nvars) > budget:
            m -= 1
        if m < 1:
            m, q = 1, 2
        f = _random_poly(rng, nvars, m)
        extra = {}
        for _ in range(junk):
            g = _random_poly(rng, nvars, m + 4, min_degree=m + 1)
            for e, c in g.monomials:
                extra[e] = extra.get(e, 0) + c
        extra = {e: c for e, c in extra.items() if c}
        g = add_monomials(f, extra)
        before = arc_count(Milnor(f, m), q, "full", budget)
        after = arc_count(Milnor(g, m), q, "full", budget)
        result.record(before == after, f"#{i}: {f} at m={m} q={q}: {before} != {after}")
    return result


SUITES = ("ring", "homomorphism", "commutativity", "truncation")


def run_suites(seed: int, pairs: int, qs: Sequence[int], cases: int = 20,
               names: Sequence[str] = SUITES,
               progress: Optional[Callable[[str], None]] = None) -> List[SuiteResult]:
    """Run the named suites from one seeded generator, in a fixed order."""
    rng = random.Random(seed)
    results = []
    for name in SUITES:
        if name not in names:
            continue
        with timed(f"suite {name}", tag="RUN"):
            if name == "ring":
                results.append(ring_law_suite(rng, pairs))
            elif name == "homomorphism":
                results.append(homomorphism_suite(rng, pairs, qs))
            elif name == "commutativity":
                results.append(commutativity_suite(rng, pairs))
            else:
                results.append(truncation_suite(rng, cases))
        dprint(f"{results[-1].name}: {results[-1].checked} checks, "
               f"{len(results[-1].failures)} failures", tag="RUN")
        if progress:
            progress(name)
    return results
