#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Convolution Module

The convolution product on the finite fragment of classes, and the
Thom-Sebastiani combination of two Milnor fibres.

Fragment: every generator monomial carries at most one torsor with a
nontrivial action; everything else in it (powers of L, trivial-action
torsors and opaque classes, denominators) is a central scalar.
"""

from typing import Dict, Tuple

from .errors import FragmentError, MotivicError
from .gring import (
    LOCALIZED,
    PLAIN,
    FermatCurve,
    LPoly,
    MotClass,
    MuTorsor,
    Opaque,
    fermat,
    generator_class,
    lpoly_class,
    mu,
    simplify,
    vanishing_twist,
)
from ..utils.debug import dprint


def descend_product(a: int, b: int) -> MotClass:
    """
    Mu(a) * Mu(b) before simplification: -Fermat1(a,b) + Fermat0(a,b).

    The associated bundle of the degree-m Fermat curve over mu_a x mu_b
    descends to {u^a + v^b = i} with weights (m/a, m/b), m = lcm(a, b).
    """
    return fermat(0, a, b) - fermat(1, a, b)


def _split(mono) -> Tuple[MotClass, int]:
    """
    Split a monomial into its central scalar part and the size of its one
    faithful torsor (1 when there is none).
    """
    scalar = lpoly_class(LPoly.const(1))
    torsor = 1
    for g in mono:
        if isinstance(g, FermatCurve):
            raise FragmentError(f"cannot convolve a class containing {g}")
        if isinstance(g, Opaque):
            if g.order != 1:
                raise FragmentError(f"{g} carries a nontrivial action")
            scalar = scalar * generator_class(g)
            continue
        if isinstance(g, MuTorsor):
            if g.action.order == 1:
                scalar = scalar * generator_class(g)
                continue
            if torsor != 1:
                raise FragmentError("monomial carries two torsors with nontrivial action")
            n = g.action.order
            # mu_d with mu_n translating splits into d/n free orbits
            scalar = scalar * mu(g.d // n, order=1)
            torsor = n
    return scalar, torsor


def conv(x: MotClass, y: MotClass) -> MotClass:
    """
    Convolution product, extended bilinearly from Mu(a) * Mu(b), simplified.

    Raises:
        FragmentError: if an operand lies outside the fragment
    """
    cache: Dict[Tuple[int, int], MotClass] = {}
    mode = LOCALIZED if LOCALIZED in (x.mode, y.mode) else PLAIN
    total = MotClass.build({}, (), mode)
    left = [(_split(mono), poly) for mono, poly in x.numerator]
    right = [(_split(mono), poly) for mono, poly in y.numerator]
    for (sx, a), px in left:
        for (sy, b), py in right:
            key = (min(a, b), max(a, b))
            if key not in cache:
                cache[key] = simplify(descend_product(a, b))
            total = total + lpoly_class(px * py) * sx * sy * cache[key]
    if x.denominator or y.denominator:
        total = MotClass.build(total.terms(), total.denominator + x.denominator + y.denominator,
                               LOCALIZED)
    dprint(f"conv: {len(left)}x{len(right)} terms, {len(cache)} torsor pairs", tag="CONV")
    return total


def ts_routes(s_f: MotClass, s_g: MotClass, d1: int, d2: int) -> Tuple[MotClass, MotClass]:
    """
    The two Thom-Sebastiani computations, unchecked.

    Returns (s_f + s_g - s_f * s_g, S) where S is solved from
    vanishing_twist(S, d1 + d2) = vanishing_twist(s_f, d1) * vanishing_twist(s_g, d2).
    """
    direct = simplify(s_f + s_g - conv(s_f, s_g))
    twisted = conv(vanishing_twist(s_f, d1), vanishing_twist(s_g, d2))
    sign = 1 if (d1 + d2 - 1) % 2 == 0 else -1
    return direct, simplify(1 + twisted * sign)


def ts_combine(s_f: MotClass, s_g: MotClass, d1: int, d2: int) -> MotClass:
    """
    Milnor fibre of f(x) + g(y) from those of f and g; both routes of
    ts_routes must coincide.

    Raises:
        FragmentError: if an operand lies outside the fragment
        MotivicError: if the two routes disagree
    """
    direct, via_twist = ts_routes(s_f, s_g, d1, d2)
    if direct != via_twist:
        raise MotivicError(f"Thom-Sebastiani routes disagree: {direct} vs {via_twist}")
    return direct


def conv_commutativity_check(x: MotClass, y: MotClass) -> bool:
    """x * y == y * x structurally."""
    return conv(x, y) == conv(y, x)
