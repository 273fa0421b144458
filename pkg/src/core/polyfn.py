#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Polynomial Function Module

Integer polynomials f(x1, ..., xd) with f(0) = 0, the text grammar

    x1^2*x2 + 3*x2^4 - x1

and evaluation on truncated arcs over a finite field.
"""

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ParseError
from .fields import FiniteField

Exponents = Tuple[int, ...]
Arc = Tuple[int, ...]

_VAR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class PolyFn:
    """f = sum c * x^e over distinct exponent vectors, no constant term."""

    nvars: int
    monomials: Tuple[Tuple[Exponents, int], ...]

    @classmethod
    def build(cls, nvars: int, coeffs: Dict[Exponents, int]) -> "PolyFn":
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        cleaned = {}
        for exps, c in coeffs.items():
            exps = tuple(exps) + (0,) * (nvars - len(exps))
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has more than {nvars} entries")
            if c == 0:
                continue
            if not any(exps):
                raise ParseError("f(0) must vanish: constant terms are not allowed")
            cleaned[exps] = cleaned.get(exps, 0) + c
        items = tuple(sorted(((e, c) for e, c in cleaned.items() if c),
                             key=lambda ec: (-sum(ec[0]), tuple(-x for x in ec[0]))))
        return cls(nvars, items)

    def degrees(self) -> List[int]:
        return [sum(e) for e, _ in self.monomials]

    def is_zero(self) -> bool:
        return not self.monomials

    def truncate(self, m: int) -> "PolyFn":
        """Drop monomials of total degree > m."""
        return PolyFn.build(self.nvars, {e: c for e, c in self.monomials if sum(e) <= m})

    def pure_power(self) -> Optional[Tuple[int, int, int]]:
        """(variable index, exponent, coefficient) if f = c * x_i^n, else None."""
        if len(self.monomials) != 1:
            return None
        exps, c = self.monomials[0]
        used = [i for i, e in enumerate(exps) if e]
        if len(used) != 1:
            return None
        return used[0], exps[used[0]], c

    def __str__(self) -> str:
        return format_poly(self)


def direct_sum(f: PolyFn, g: PolyFn) -> PolyFn:
    """
    f(x) + g(y) in separate variables.

    Args:
        f: Polynomial in x1..xn
        g: Polynomial in its own variables, renumbered to follow f's

    Returns:
        Polynomial in n + g.nvars variables
    """
    coeffs: Dict[Exponents, int] = {}
    for e, c in f.monomials:
        coeffs[e + (0,) * g.nvars] = c
    for e, c in g.monomials:
        coeffs[(0,) * f.nvars + e] = c
    return PolyFn.build(f.nvars + g.nvars, coeffs)


def add_monomials(f: PolyFn, extra: Dict[Exponents, int]) -> PolyFn:
    """
    f plus further monomials; coefficients that cancel are dropped.

    Args:
        f: Base polynomial
        extra: Exponent vector -> coefficient, in f's variables

    Returns:
        The sum as a new PolyFn
    """
    coeffs = dict(f.monomials)
    for e, c in extra.items():
        coeffs[e] = coeffs.get(e, 0) + c
    return PolyFn.build(f.nvars, coeffs)


def parse_poly(text: str, nvars: Optional[int] = None) -> PolyFn:
    """
    Parse `x1^2*x2 + 3*x2^4 - x1`.

    Args:
        text: Sum of integer multiples of monomials in x1, x2, ...
        nvars: Number of variables; defaults to the largest index used

    Returns:
        The polynomial with like monomials merged

    Raises:
        ParseError: on malformed input or a nonzero constant term
    """
    source = text
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty polynomial")
    if text[0] not in "+-":
        text = "+" + text
    pieces = re.findall(r"([+-])([^+-]+)", text)
    if "".join(s + b for s, b in pieces) != text:
        raise ParseError(f"malformed polynomial {source!r}")
    monos: List[Tuple[Dict[int, int], int]] = []
    top = 0
    for sign, body in pieces:
        coeff = -1 if sign == "-" else 1
        powers: Counter = Counter()
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            match = _VAR.match(factor)
            if not match or int(match.group(1)) < 1:
                raise ParseError(f"bad factor {factor!r} in {source!r}")
            index = int(match.group(1))
            powers[index] += int(match.group(2) or 1)
            top = max(top, index)
        monos.append((dict(powers), coeff))
    nvars = nvars or top or 1
    if top > nvars:
        raise ParseError(f"{source!r} uses x{top} but only {nvars} variables were declared")
    coeffs: Dict[Exponents, int] = {}
    for powers, coeff in monos:
        exps = tuple(powers.get(i + 1, 0) for i in range(nvars))
        coeffs[exps] = coeffs.get(exps, 0) + coeff
    return PolyFn.build(nvars, coeffs)


def format_poly(f: PolyFn) -> str:
    """
    Text form in the syntax parse_poly reads.

    Args:
        f: Polynomial

    Returns:
        e.g. `x1^2 + 3*x2^4`, or `0`
    """
    if f.is_zero():
        return "0"
    out = []
    for exps, c in f.monomials:
        factors = [f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exps) if e]
        if abs(c) != 1:
            factors.insert(0, str(abs(c)))
        out.append(("-" if c < 0 else "+", "*".join(factors)))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


# ========== Arc evaluation ==========


def trunc_mul(F: FiniteField, p: Sequence[int], r: Sequence[int], m: int) -> List[int]:
    """
    Product of two t-series modulo t^(m+1).

    Args:
        F: Field the coefficients live in
        p: Coefficients of the first series, constant term first
        r: Coefficients of the second series
        m: Truncation order

    Returns:
        The m+1 coefficients of t^0 .. t^m
    """
    out = [0] * (m + 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j in range(m + 1 - i):
            b = r[j]
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return out


def evaluate_on_arcs(f: PolyFn, F: FiniteField, arcs: Sequence[Arc], m: int) -> List[int]:
    """
    f(arcs) modulo t^(m+1) as coefficients of t^0 .. t^m.

    Args:
        f: Polynomial in len(arcs) variables
        F: Field of the arc coefficients
        arcs: One arc per variable, each a coefficient tuple of length m+1
            with constant term 0
        m: Truncation order

    Returns:
        The m+1 coefficients of f(arcs)
    """
    powers: Dict[Tuple[int, int], List[int]] = {}

    def power(var: int, e: int) -> List[int]:
        key = (var, e)
        if key not in powers:
            if e == 1:
                powers[key] = list(arcs[var])
            else:
                powers[key] = trunc_mul(F, power(var, e - 1), arcs[var], m)
        return powers[key]

    total = [0] * (m + 1)
    for exps, c in f.monomials:
        value = [F.from_int(c)] + [0] * m
        for var, e in enumerate(exps):
            if e:
                value = trunc_mul(F, value, power(var, e), m)
        total = [F.add(a, b) for a, b in zip(total, value)]
    return total
