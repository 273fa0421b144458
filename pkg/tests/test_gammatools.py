#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for polyhedral Gamma sets, Euler characteristics and lattice sums
"""

import sys
import os
import random
from fractions import Fraction

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.errors import NonLatticeValue, ParseError, Unbounded
from src.core.gammatools import (
    AffineFunctional,
    alpha_by_fibers,
    alpha_m,
    alpha_tilde,
    lattice_points,
    ominimal_chi,
    parse_functional,
    parse_gamma_set,
    product,
    union,
)
from src.core.gring import lpow, zero

L = lpow(1)

CLOSED_TRIANGLE = ("polygon((0,0),(1,0),(0,1)) U segment((0,0),(1,0)) U segment((1,0),(0,1))"
                   " U segment((0,1),(0,0)) U point(0,0) U point(1,0) U point(0,1)")


class TestEulerCharacteristic:
    """Test the o-minimal Euler characteristic."""

    @pytest.mark.parametrize("text,expected", [
        ("(0,1)", -1),
        ("[0,1]", 1),
        ("[0,1)", 0),
        ("{1/3}", 1),
        ("{0, 1/2}", 2),
        ("(0,1) U (1,2)", -2),
        ("{0} U (0,1)", 0),
        ("(-inf,2)", -1),
        ("[1/2,1/2]", 1),
        ("(0,1)x(0,1)", 1),
        ("[0,1)x(0,1)", 0),
        ("polygon((0,0),(1,0),(0,1))", 1),
        ("segment((0,0),(1,1))", -1),
        ("point(1/2,1/2)", 1),
        (CLOSED_TRIANGLE, 1),
    ])
    def test_chi(self, text, expected):
        assert ominimal_chi(parse_gamma_set(text)) == expected

    def test_product_and_union(self):
        a, b = parse_gamma_set("(0,1)"), parse_gamma_set("{1/2}")
        assert product(a, b).dimension == 2
        assert ominimal_chi(product(a, b)) == -1
        assert ominimal_chi(union(a, parse_gamma_set("{2}"))) == 0
        with pytest.raises(ValueError):
            union(a, product(a, b))


class TestParsing:
    """Test the Gamma set syntax."""

    @pytest.mark.parametrize("text", [
        "(0,1",
        "(1,0)",
        "[-inf,0)",
        "(+inf,2)",
        "{inf}",
        "(0,2) U {1}",
        "(0,2) U (1,3)",
        "(0,1) U point(0,0)",
        "polygon((0,0),(1,1),(2,2))",
        "polygon((0,0),(1,0))",
        "segment((0,0),(0,0))",
        "(0,1)x(0,1)x(0,1)",
        "(0,1) U ",
        "(a,1)",
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_gamma_set(text)

    def test_functional(self):
        assert parse_functional("2*x1 - x2 + 1/2", 2) == AffineFunctional((2, -1), Fraction(1, 2))
        assert parse_functional("0", 1) == AffineFunctional.zero(1)
        assert parse_functional("x1", 1)(Fraction(1, 3)) == Fraction(1, 3)
        with pytest.raises(ParseError):
            parse_functional("x3", 2)
        with pytest.raises(ParseError):
            parse_functional("", 1)


class TestLatticeSums:
    """Test lattice points and alpha sums."""

    def test_lattice_points(self):
        assert lattice_points(parse_gamma_set("(0,1)"), 3) == [Fraction(1, 3), Fraction(2, 3)]
        assert lattice_points(parse_gamma_set("[0,1]"), 1) == [0, 1]
        triangle = parse_gamma_set("polygon((0,0),(1,0),(0,1))")
        assert lattice_points(triangle, 3) == [(Fraction(1, 3), Fraction(1, 3))]
        assert lattice_points(parse_gamma_set("segment((0,0),(1,1))"), 2) == \
            [(Fraction(1, 2), Fraction(1, 2))]
        with pytest.raises(ValueError):
            lattice_points(triangle, 0)

    def test_unbounded(self):
        with pytest.raises(Unbounded):
            alpha_tilde(parse_gamma_set("(0,inf)"), 2)

    def test_alpha_tilde_interval(self):
        value = alpha_tilde(parse_gamma_set("(0,1)"), 3)
        assert value == (L - 1) * (lpow(-1) + lpow(-2))

    def test_alpha_tilde_triangle(self):
        value = alpha_tilde(parse_gamma_set("polygon((0,0),(1,0),(0,1))"), 3)
        assert value == (L - 1) * (L - 1) * lpow(-2)

    def test_alpha_with_functional(self):
        s = parse_gamma_set("(0,1)")
        assert alpha_m(s, parse_functional("x1", 1), 2) == (L - 1) * lpow(-2)

    def test_non_lattice_values(self):
        s = parse_gamma_set("(0,1)")
        third = parse_functional("1/3", 1)
        assert alpha_m(s, third, 2) == zero()
        with pytest.raises(NonLatticeValue):
            alpha_m(s, third, 2, strict=True)

    @pytest.mark.parametrize("text,functional,m", [
        ("(0,1)", "x1", 4),
        ("[0,2)", "2*x1 - 1/2", 4),
        ("(0,1)x(0,1)", "x1 + x2", 3),
        ("polygon((0,0),(2,0),(0,2)) U segment((0,0),(2,0))", "x1 - x2", 2),
    ])
    def test_fibers_agree(self, text, functional, m):
        s = parse_gamma_set(text)
        l = parse_functional(functional, s.dimension)
        assert alpha_by_fibers(s, l, m) == alpha_m(s, l, m)


class TestDisjointness:
    """Overlapping pieces are rejected in both dimensions."""

    @pytest.mark.parametrize("text", [
        "(0,1)x(0,1) U point(1/2,1/2)",
        "(0,1)x(0,1) U (1/2,2)x(1/2,2)",
        "polygon((0,0),(2,0),(0,2)) U segment((0,0),(1,1))",
        "polygon((0,0),(2,0),(0,2)) U polygon((1/2,1/2),(3,1/2),(1/2,3))",
        "segment((0,0),(2,2)) U segment((1,1),(3,3))",
        "segment((0,0),(2,2)) U segment((0,2),(2,0))",
        "segment((0,0),(1,0)) U point(1/2,0)",
        "(0,inf)x{0} U point(5,0)",
        "point(1,1) U point(1,1)",
    ])
    def test_overlap_is_a_parse_error(self, text):
        with pytest.raises(ParseError):
            parse_gamma_set(text)

    @pytest.mark.parametrize("text", [
        "(0,1)x(0,1) U point(1,1/2)",
        "(0,1)x(0,1) U (1,2)x(0,1) U {1}x(0,1)",
        "segment((0,0),(1,1)) U segment((1,1),(2,2)) U point(1,1)",
        "(-inf,0)x(0,inf) U (0,inf)x(-inf,0)",
        CLOSED_TRIANGLE,
    ])
    def test_touching_pieces_are_accepted(self, text):
        parse_gamma_set(text)

    def test_crossing_segments_need_a_split(self):
        with pytest.raises(ParseError):
            parse_gamma_set("segment((0,0),(2,2)) U segment((0,2),(2,0))")
        split = parse_gamma_set("segment((0,0),(1,1)) U segment((1,1),(2,2)) U point(1,1)"
                                " U segment((0,2),(1,1)) U segment((1,1),(2,0))")
        assert ominimal_chi(split) == -3


class TestIntervalEnds:
    """Infinite ends and degenerate intervals."""

    @pytest.mark.parametrize("text", ["(0,-inf)", "(inf,0)", "(0,0)", "[0,0)", "(0,0]", "(2,1]"])
    def test_rejected(self, text):
        with pytest.raises(ParseError):
            parse_gamma_set(text)

    @pytest.mark.parametrize("text,expected", [
        ("(-inf,inf)", -1),
        ("(0,+inf)", -1),
        ("(-inf,0]", 0),
        ("[0,0]", 1),
    ])
    def test_accepted(self, text, expected):
        assert ominimal_chi(parse_gamma_set(text)) == expected


def random_pieces(rng):
    """Disjoint 1-D pieces on random rational cut points, as text."""
    cuts = sorted({Fraction(rng.randint(-8, 8), rng.choice((1, 2, 3, 4))) for _ in range(rng.randint(1, 5))})
    pieces = [f"{{{x}}}" for x in cuts if rng.random() < 0.5]
    pieces += [f"({lo},{hi})" for lo, hi in zip(cuts, cuts[1:]) if rng.random() < 0.6]
    return pieces or [f"{{{cuts[0]}}}"]


def expected_chi(pieces):
    return sum(1 if p.startswith("{") else -1 for p in pieces)


def random_functional(rng, n):
    coeffs = tuple(rng.randint(-2, 2) for _ in range(n))
    return AffineFunctional(coeffs, Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3))))


class TestRandomisedProperties:
    """Seeded checks of additivity and of the fibre decomposition."""

    @pytest.mark.parametrize("seed", range(25))
    def test_chi_is_additive(self, seed):
        rng = random.Random(seed)
        pieces = random_pieces(rng)
        whole = parse_gamma_set(" U ".join(pieces))
        assert ominimal_chi(whole) == expected_chi(pieces)
        if len(pieces) > 1:
            rng.shuffle(pieces)
            cut = rng.randint(1, len(pieces) - 1)
            left, right = parse_gamma_set(" U ".join(pieces[:cut])), parse_gamma_set(" U ".join(pieces[cut:]))
            assert ominimal_chi(union(left, right)) == ominimal_chi(left) + ominimal_chi(right)

    @pytest.mark.parametrize("seed", range(15))
    def test_chi_is_multiplicative(self, seed):
        rng = random.Random(seed)
        a, b = random_pieces(rng), random_pieces(rng)
        cells = product(parse_gamma_set(" U ".join(a)), parse_gamma_set(" U ".join(b)))
        assert ominimal_chi(cells) == expected_chi(a) * expected_chi(b)

    @pytest.mark.parametrize("seed", range(25))
    def test_alpha_matches_fibres(self, seed):
        rng = random.Random(seed)
        s = parse_gamma_set(" U ".join(random_pieces(rng)))
        if rng.random() < 0.5:
            s = product(s, parse_gamma_set(" U ".join(random_pieces(rng))))
        l = random_functional(rng, s.dimension)
        m = rng.randint(1, 6)
        assert alpha_by_fibers(s, l, m) == alpha_m(s, l, m)

    @pytest.mark.parametrize("seed", range(15))
    def test_alpha_is_additive(self, seed):
        rng = random.Random(seed)
        pieces = random_pieces(rng)
        if len(pieces) < 2:
            pieces = ["{-9}", "(-9,-8)"]
        cut = rng.randint(1, len(pieces) - 1)
        left, right = parse_gamma_set(" U ".join(pieces[:cut])), parse_gamma_set(" U ".join(pieces[cut:]))
        l, m = random_functional(rng, 1), rng.randint(1, 6)
        assert alpha_m(union(left, right), l, m) == alpha_m(left, l, m) + alpha_m(right, l, m)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
