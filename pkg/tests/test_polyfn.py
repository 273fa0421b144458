#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for polynomial functions and arc evaluation
"""

import sys
import os

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.errors import ParseError
from src.core.fields import FiniteField
from src.core.polyfn import (
    PolyFn,
    add_monomials,
    direct_sum,
    evaluate_on_arcs,
    format_poly,
    parse_poly,
    trunc_mul,
)


class TestParsing:
    """Test the polynomial grammar."""

    def test_parse_and_format(self):
        f = parse_poly("x1^2*x2 + 3*x2^4 - x1")
        assert f.nvars == 2
        assert format_poly(f) == "3*x2^4 + x1^2*x2 - x1"
        assert f.degrees() == [4, 3, 1]

    def test_like_terms_combine(self):
        assert parse_poly("x1^2 + x1*x1") == parse_poly("2*x1^2")
        assert parse_poly("x1 - x1").is_zero()
        assert format_poly(parse_poly("x1 - x1")) == "0"

    def test_declared_variables(self):
        f = parse_poly("x1^3", nvars=2)
        assert f.nvars == 2
        assert f.pure_power() == (0, 3, 1)
        with pytest.raises(ParseError):
            parse_poly("x3", nvars=2)

    @pytest.mark.parametrize("text", ["", "1 + x1", "x0^2", "y1", "x1^2 +", "x1^^2", "x1 + 2"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_poly(text)

    def test_pure_power(self):
        assert parse_poly("3*x2^4", nvars=2).pure_power() == (1, 4, 3)
        assert parse_poly("x1*x2").pure_power() is None
        assert parse_poly("x1^2 + x2^3").pure_power() is None


class TestConstruction:
    """Test building new polynomials from old ones."""

    def test_direct_sum(self):
        assert direct_sum(parse_poly("x1^2"), parse_poly("x1^3")) == parse_poly("x1^2 + x2^3")
        assert direct_sum(parse_poly("x1*x2"), parse_poly("x1")).nvars == 3

    def test_add_monomials(self):
        f = add_monomials(parse_poly("x1^2"), {(5,): 1})
        assert f == parse_poly("x1^2 + x1^5")
        assert add_monomials(f, {(5,): -1}) == parse_poly("x1^2")

    def test_truncate(self):
        f = parse_poly("x1^2 + x1^5 + x1*x2^4")
        assert f.truncate(2) == parse_poly("x1^2", nvars=2)

    def test_build_rejects_bad_input(self):
        with pytest.raises(ValueError):
            PolyFn.build(0, {})
        with pytest.raises(ValueError):
            PolyFn.build(1, {(1, 1): 1})


class TestArcEvaluation:
    """Test evaluation on truncated arcs."""

    def test_trunc_mul(self):
        F = FiniteField(5)
        assert trunc_mul(F, (0, 1, 0), (0, 1, 2), 2) == [0, 0, 1]
        assert trunc_mul(F, (0, 2, 1), (0, 3, 4), 3) == [0, 0, 1, 1]

    def test_square(self):
        F = FiniteField(5)
        assert evaluate_on_arcs(parse_poly("x1^2"), F, [(0, 1, 3)], 2) == [0, 0, 1]

    def test_two_variables(self):
        F = FiniteField(5)
        f = parse_poly("x1*x2 + x1")
        assert evaluate_on_arcs(f, F, [(0, 2, 1), (0, 3, 0)], 2) == [0, 2, 2]

    def test_coefficients_reduce(self):
        F = FiniteField(5)
        assert evaluate_on_arcs(parse_poly("7*x1"), F, [(0, 1, 0)], 2) == [0, 2, 0]

    def test_high_degree_vanishes(self):
        F = FiniteField(7)
        arcs = [(0, 3, 5, 6)]
        assert evaluate_on_arcs(parse_poly("x1^4"), F, arcs, 3) == [0, 0, 0, 0]
        assert evaluate_on_arcs(parse_poly("x1^2 + x1^4"), F, arcs, 3) == \
            evaluate_on_arcs(parse_poly("x1^2"), F, arcs, 3)

    def test_extension_field(self):
        F = FiniteField(9)
        x = 3  # the class of the adjoined root
        result = evaluate_on_arcs(parse_poly("x1^2"), F, [(0, x)], 1)
        assert result == [0, 0]
        result = evaluate_on_arcs(parse_poly("x1"), F, [(0, x, 1)], 2)
        assert result == [0, x, 1]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
