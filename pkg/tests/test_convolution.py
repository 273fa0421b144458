#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the convolution product and the Thom-Sebastiani combination
"""

import sys
import os

import pytest

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core.classexpr import format_class
from src.core.convolution import (
    conv,
    conv_commutativity_check,
    descend_product,
    ts_combine,
    ts_routes,
)
from src.core.errors import FragmentError
from src.core.gring import (
    divide_one_minus,
    fermat,
    lpow,
    mu,
    one,
    opaque,
    realize_plain,
    realize_twisted,
)

L = lpow(1)


class TestConv:
    """Test the convolution product on the fragment."""

    def test_descend_product(self):
        assert descend_product(2, 3) == fermat(0, 2, 3) - fermat(1, 2, 3)

    def test_unit(self):
        assert conv(one(), one()) == one()
        for b in (2, 3, 4):
            assert conv(one(), mu(b)) == mu(b)
            assert conv(mu(b), one()) == mu(b)

    def test_torsor_pair(self):
        assert conv(mu(2), mu(3)) == L - 1 - fermat(1, 2, 3)

    def test_scalars_pass_through(self):
        assert conv(L * mu(2, order=1), mu(3)) == L * mu(2, order=1) * mu(3)
        assert conv(opaque("E") + L, one()) == opaque("E") + L

    def test_partial_action_splits_into_orbits(self):
        assert conv(mu(4, order=2), mu(3)) == mu(2, order=1) * conv(mu(2), mu(3))

    def test_localized_operand(self):
        x = divide_one_minus(mu(2), 1)
        assert conv(x, mu(3)) == divide_one_minus(conv(mu(2), mu(3)), 1)

    def test_outside_fragment(self):
        with pytest.raises(FragmentError):
            conv(fermat(1, 2, 3), mu(2))
        with pytest.raises(FragmentError):
            conv(mu(2) * mu(3), one())
        with pytest.raises(FragmentError):
            conv(opaque("E", 2), one())

    def test_commutativity(self):
        assert conv_commutativity_check(mu(2) + L, mu(3) - 2)
        assert conv_commutativity_check(mu(4, order=2) * L, mu(6))

    @pytest.mark.parametrize("q", [7, 13])
    def test_realizations_of_torsor_pair(self, q):
        x = conv(mu(2), mu(3))
        direct = descend_product(2, 3)
        for k in range(6):
            assert realize_twisted(x, q, k) == realize_twisted(direct, q, k)


class TestThomSebastiani:
    """Test the two routes to the Milnor fibre of a sum."""

    def test_cusp(self):
        direct, via_twist = ts_routes(mu(2), mu(3), 1, 1)
        assert direct == via_twist
        assert format_class(direct) == "-L + 1 + Mu(2) + Mu(3) + Fermat1(2,3)"

    @pytest.mark.parametrize("a,b", [(1, 1), (2, 2), (2, 4), (3, 3), (3, 5)])
    def test_routes_agree(self, a, b):
        assert ts_combine(mu(a), mu(b), 1, 1) == ts_combine(mu(b), mu(a), 1, 1)

    def test_dimension_signs(self):
        for d1, d2 in ((1, 1), (2, 1), (2, 3)):
            direct, via_twist = ts_routes(mu(2), mu(3), d1, d2)
            assert direct == via_twist

    def test_node_over_f5(self):
        # x^2 + y^2 near the origin: Mu(2) + Mu(2) - conv(Mu(2), Mu(2))
        fibre = ts_combine(mu(2), mu(2), 1, 1)
        assert realize_plain(fibre, 5) == 2 + 2 - realize_plain(conv(mu(2), mu(2)), 5)

    def test_fragment_errors_propagate(self):
        with pytest.raises(FragmentError):
            ts_combine(fermat(1, 2, 3), mu(2), 1, 1)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
