#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Rational Series Module

Series in T with class coefficients, in the single-factor normal form

    c0 + sum_j c_j * L^a_j T^b_j / (1 - L^a_j T^b_j)

with coefficient extraction, Hadamard products and the limit T -> infinity.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, Iterable, List, Tuple, Union

from .classexpr import format_class, parse_class
from .convolution import conv
from .errors import SeriesFormError
from .gring import MotClass, lpow, mul, zero

Term = Tuple[MotClass, int, int]
Combiner = Union[str, Callable[[MotClass, MotClass], MotClass]]


@dataclass(frozen=True)
class RationalSeries:
    """Normal-form series; terms sorted by (b, a) with distinct (a, b)."""

    constant: MotClass = MotClass()
    terms: Tuple[Term, ...] = ()

    @classmethod
    def build(cls, constant: MotClass, terms: Iterable[Term]) -> "RationalSeries":
        merged: Dict[Tuple[int, int], MotClass] = {}
        for coeff, a, b in terms:
            if b < 1:
                raise SeriesFormError(f"T exponent must be positive, got {b}")
            merged[(a, b)] = merged.get((a, b), zero()) + coeff
        ordered = sorted(((c, a, b) for (a, b), c in merged.items() if not c.is_zero()),
                         key=lambda t: (t[2], t[1]))
        return cls(constant, tuple(ordered))

    def __str__(self) -> str:
        return format_series(self)


def term(coeff: MotClass, a: int, b: int) -> RationalSeries:
    """
    The single geometric term coeff * L^a T^b / (1 - L^a T^b).

    Args:
        coeff: Class coefficient
        a: Exponent of L
        b: Period in T, at least 1

    Returns:
        Series with that one term and constant 0

    Raises:
        SeriesFormError: if b < 1
    """
    return RationalSeries.build(zero(), [(coeff, a, b)])


def constant_series(c: MotClass) -> RationalSeries:
    """
    The constant series c.

    Args:
        c: Constant term

    Returns:
        Series with constant c and no geometric terms
    """
    return RationalSeries.build(c, [])


def series_add(x: RationalSeries, y: RationalSeries) -> RationalSeries:
    """
    Sum of two series; terms with the same (a, b) merge.

    Returns:
        The normal form of x + y
    """
    return RationalSeries.build(x.constant + y.constant, x.terms + y.terms)


def scale(x: RationalSeries, c: MotClass) -> RationalSeries:
    """
    Multiply every coefficient, and the constant, by a class.

    Args:
        x: Series
        c: Class to multiply by

    Returns:
        The scaled series in normal form
    """
    return RationalSeries.build(x.constant * c, [(coeff * c, a, b) for coeff, a, b in x.terms])


def coefficient(x: RationalSeries, m: int) -> MotClass:
    """
    Coefficient of T^m.

    Args:
        x: Series
        m: Power of T, at least 1

    Returns:
        Sum of coeff * L^(a*m/b) over the terms whose period b divides m

    Raises:
        ValueError: if m < 1
    """
    if m < 1:
        raise ValueError("coefficients are indexed from T^1")
    total = zero()
    for coeff, a, b in x.terms:
        if m % b == 0:
            total = total + coeff * lpow(a * (m // b))
    return total


def limit_at_infinity(x: RationalSeries) -> MotClass:
    """
    Value of the series as T -> infinity.

    Each geometric term tends to -1.

    Returns:
        constant - sum of the term coefficients
    """
    total = x.constant
    for coeff, _, _ in x.terms:
        total = total - coeff
    return total


def _combiner(how: Combiner) -> Callable[[MotClass, MotClass], MotClass]:
    if callable(how):
        return how
    if how == "product":
        return mul
    if how == "convolution":
        return conv
    raise ValueError(f"unknown combiner {how!r}")


def hadamard(x: RationalSeries, y: RationalSeries, combiner: Combiner = "product") -> RationalSeries:
    """
    Coefficientwise combination of two series.

    Args:
        x: Left series
        y: Right series
        combiner: `product`, `convolution` or a callable on two classes

    Returns:
        Series whose T^m coefficient combines those of x and y

    Two geometric terms with periods b, b' meet on multiples of
    l = lcm(b, b'); there the combined coefficient is again geometric with
    L-exponent a*l/b + a'*l/b'. Constants never meet a positive power of T.

    Raises:
        ValueError: for an unknown combiner name
        FragmentError: from the convolution combiner
    """
    combine = _combiner(combiner)
    terms: List[Term] = []
    for c1, a1, b1 in x.terms:
        for c2, a2, b2 in y.terms:
            period = b1 * b2 // gcd(b1, b2)
            terms.append((combine(c1, c2), a1 * (period // b1) + a2 * (period // b2), period))
    return RationalSeries.build(zero(), terms)


# ========== Text form ==========


def format_series(x: RationalSeries) -> str:
    """
    Text form read back by parse_series.

    Args:
        x: Series

    Returns:
        `[c0] + [c] L^a T^b/(1-L^a T^b) + ...`, or `0`
    """
    parts = []
    if not x.constant.is_zero():
        parts.append(f"[{format_class(x.constant)}]")
    for coeff, a, b in x.terms:
        parts.append(f"[{format_class(coeff)}] L^{a} T^{b}/(1-L^{a} T^{b})")
    return " + ".join(parts) if parts else "0"


_SUMMAND = re.compile(
    r"^\[(?P<cls>[^\[\]]*)\]"
    r"(?:\s*L\^(?P<a>-?\d+)\s*T\^(?P<b>\d+)\s*/\s*\(\s*1\s*-\s*L\^(?P<a2>-?\d+)\s*T\^(?P<b2>\d+)\s*\))?$"
)


def _split_summands(text: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "+" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_series(text: str) -> RationalSeries:
    """
    Inverse of format_series.

    Args:
        text: Sum of bracketed constants and single-factor terms

    Returns:
        The series in normal form

    Raises:
        SeriesFormError: for anything but single-factor terms
        ParseError: for malformed coefficient classes
    """
    text = text.strip()
    if text == "0":
        return RationalSeries()
    constant = zero()
    terms: List[Term] = []
    for summand in _split_summands(text):
        match = _SUMMAND.match(summand)
        if not match:
            raise SeriesFormError(f"not a normal-form summand: {summand!r}")
        coeff = parse_class(match.group("cls"))
        if match.group("a") is None:
            constant = constant + coeff
            continue
        a, b = int(match.group("a")), int(match.group("b"))
        if (a, b) != (int(match.group("a2")), int(match.group("b2"))):
            raise SeriesFormError(f"numerator and denominator factors differ in {summand!r}")
        terms.append((coeff, a, b))
    return RationalSeries.build(constant, terms)
