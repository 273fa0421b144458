#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
End-to-end identities: monomial fibres, the cusp, the Fermat arc map,
Gamma constants and the seeded suites at their full sizes
"""

import sys
import os
import random
from itertools import product

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.arcspaces import (
    Milnor,
    arc_count,
    check_fermat_map,
    milnor_monomial,
    zeta_monomial,
)
from src.core.convolution import conv, conv_commutativity_check, ts_combine
from src.core.gammatools import AffineFunctional, alpha_m, ominimal_chi, parse_gamma_set
from src.core.gring import (
    const,
    lpow,
    mu,
    one,
    realize_at,
    realize_plain,
    realize_twisted,
    twist_points,
    zero,
)
from src.core.polyfn import parse_poly
from src.core.propcheck import homomorphism_suite, truncation_suite
from src.core.resolution import load_strata, milnor_from_strata
from src.core.series import coefficient, hadamard, limit_at_infinity, term

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")

L = lpow(1)
SAMPLE = [one(), mu(2), mu(3), mu(4), mu(6)]


class TestMonomialFibres:
    """Zeta coefficients of x^n predict the arc counts."""

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_milnor_monomial(self, n):
        assert milnor_monomial(n) == mu(n)

    @pytest.mark.parametrize("n,m,q", list(product((1, 2, 3), range(1, 7), (5, 7))))
    def test_coefficients_count_arcs(self, n, m, q):
        predicted = realize_plain(coefficient(zeta_monomial(n), m), q) * q ** m
        # full enumeration up to level 4, the closed count above it
        strategy = "full" if m <= 4 else "structured"
        assert arc_count(Milnor(parse_poly(f"x1^{n}"), m), q, strategy) == predicted

    @pytest.mark.parametrize("n,m", [(2, 5), (3, 6), (1, 5)])
    def test_structured_agrees_with_full(self, n, m):
        spec = Milnor(parse_poly(f"x1^{n}"), m)
        assert arc_count(spec, 5) == arc_count(spec, 5, "structured")


class TestLimitRule:
    """Each geometric term tends to -1."""

    @pytest.mark.parametrize("a,b", [(-1, 1), (-1, 3), (-2, 2)])
    def test_limit(self, a, b):
        assert limit_at_infinity(term(one(), a, b)) == const(-1)


class TestConvolution:
    """Unit, commutativity and realizations of the convolution."""

    def test_unit(self):
        assert conv(one(), one()) == one()

    @pytest.mark.parametrize("x,y", list(product(SAMPLE, SAMPLE)))
    def test_commutative(self, x, y):
        assert conv_commutativity_check(x, y)
        left, right = conv(x, y), conv(y, x)
        for q, k in twist_points(left, [7, 13]):
            assert realize_at(left, q, k) == realize_at(right, q, k)


class TestCusp:
    """Thom-Sebastiani for x^2 + y^3 against its resolution."""

    def test_routes_agree_at_every_twist(self):
        route_a = ts_combine(mu(2), mu(3), 1, 1)
        route_b = milnor_from_strata(load_strata(os.path.join(DATA, "cusp_minimal.strata")))
        for q in (7, 13, 19):
            assert realize_plain(route_a, q) == realize_plain(route_b, q)
            for k in range(6):
                assert realize_twisted(route_a, q, k) == realize_twisted(route_b, q, k)

    def test_hadamard_limit_exchange(self):
        product_series = hadamard(zeta_monomial(2), zeta_monomial(3), "convolution")
        assert -limit_at_infinity(product_series) == conv(mu(2), mu(3))


class TestFermatArcMap:
    """The arc model of the convolution for x^2, y^2 at level 2."""

    @pytest.mark.parametrize("kind", [0, 1])
    def test_fibres_and_surjectivity(self, kind):
        square = parse_poly("x1^2")
        report = check_fermat_map(square, square, 2, 5, kind=kind)
        assert report.fiber_sizes <= {4}
        assert report.domain_size == 4 * report.image_size
        assert report.surjective_over_extension
        assert report.passed


class TestGammaConstants:
    """Euler characteristic and lattice sums on (0,1)."""

    def test_chi_open_interval(self):
        assert ominimal_chi(parse_gamma_set("(0,1)")) == -1

    @pytest.mark.parametrize("m", range(1, 9))
    def test_alpha_interval(self, m):
        expected = sum((lpow(-j) for j in range(1, m)), zero())
        value = alpha_m(parse_gamma_set("(0,1)"), AffineFunctional.zero(1), m)
        assert value == (L - 1) * expected


class TestSeededSuites:
    """The property suites at their full sizes."""

    def test_truncation_invariance(self):
        result = truncation_suite(random.Random(2024), cases=20, junk=100)
        assert result.checked == 20
        assert result.passed, result.failures[:3]

    def test_realization_homomorphism(self):
        result = homomorphism_suite(random.Random(2024), 200, [7, 13])
        assert result.passed, result.failures[:3]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
