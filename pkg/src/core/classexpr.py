#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Class Expression Module

Text syntax for classes, shared by the command line and strata files:

    Mu(3)   Mu(4, order=2)   Mu(2, order=1, sign=-1)   L^-2
    Fermat1(2,3)   Fermat0(2,2)   Opaque("E1")   Opaque("E1", 2)
    conv(x, y)   x / (1-L^i)   with  + - * ( )  and integer literals.

`Mu(d)` carries the faithful action of mu_d; `order=` and `weight=` select
another one.
"""

import re
from typing import Dict, List, Optional, Tuple

from .errors import ParseError
from .gring import (
    LPoly,
    MotClass,
    MuTorsor,
    divide_one_minus,
    fermat,
    lpow,
    const,
    mu,
    opaque,
)

_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|("(?:[^"\\]|\\.)*")|(\S))')

_BUILTINS = {"Mu", "Fermat0", "Fermat1", "Opaque", "conv"}


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ParseError(f"unexpected character at position {pos} in {text!r}")
        number, name, string, punct = match.groups()
        if number is not None:
            tokens.append(("int", number))
        elif name is not None:
            tokens.append(("name", name))
        elif string is not None:
            tokens.append(("str", string[1:-1]))
        else:
            if punct not in "+-*/^(),=":
                raise ParseError(f"unexpected character {punct!r} in {text!r}")
            tokens.append(("op", punct))
        pos = match.end()
    tokens.append(("end", ""))
    return tokens


class ClassParser:
    """
    Recursive-descent parser for class expressions.

    One parser instance is one naming context: an Opaque name must keep the
    same action order across every expression it parses.
    """

    def __init__(self, opaque_orders: Optional[Dict[str, int]] = None):
        self.opaque_orders: Dict[str, int] = {} if opaque_orders is None else opaque_orders
        self._tokens: List[Tuple[str, str]] = []
        self._pos = 0
        self._text = ""

    def parse(self, text: str) -> MotClass:
        """
        Parse one expression in this parser's naming context.

        Args:
            text: Expression such as `Mu(2)*L^-1 + Opaque("E1", 2)`

        Returns:
            The parsed class, plain unless it divides by (1-L^i)

        Raises:
            ParseError: on malformed input or an Opaque order clash
        """
        self._text = text
        self._tokens = _tokenize(text)
        self._pos = 0
        if self._peek() == ("end", ""):
            raise ParseError("empty class expression")
        value = self._expr()
        if self._peek()[0] != "end":
            raise ParseError(f"unexpected {self._peek()[1]!r} in {text!r}")
        return value

    # ----- token helpers -----

    def _peek(self) -> Tuple[str, str]:
        return self._tokens[self._pos]

    def _next(self) -> Tuple[str, str]:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _accept(self, op: str) -> bool:
        if self._peek() == ("op", op):
            self._pos += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            raise ParseError(f"expected {op!r} but found {self._peek()[1]!r} in {self._text!r}")

    def _int(self) -> int:
        negative = self._accept("-")
        kind, value = self._next()
        if kind != "int":
            raise ParseError(f"expected an integer, found {value!r} in {self._text!r}")
        return -int(value) if negative else int(value)

    # ----- grammar -----

    def _expr(self) -> MotClass:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> MotClass:
        value = self._unary()
        while True:
            if self._accept("*"):
                value = value * self._unary()
            elif self._accept("/"):
                value = divide_one_minus(value, self._denominator())
            else:
                return value

    def _denominator(self) -> int:
        factor = self._power()
        terms = dict(factor.numerator)
        poly = terms.get((), LPoly())
        if len(terms) == 1 and not factor.denominator and len(poly.terms) == 2:
            coeffs = poly.as_dict()
            exps = [e for e in coeffs if e != 0]
            if coeffs.get(0) == 1 and len(exps) == 1 and exps[0] > 0 and coeffs[exps[0]] == -1:
                return exps[0]
        raise ParseError(f"can only divide by (1-L^i), got {factor}")

    def _unary(self) -> MotClass:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> MotClass:
        kind, value = self._peek()
        if kind == "name" and value == "L":
            self._next()
            exponent = self._int() if self._accept("^") else 1
            return lpow(exponent)
        base = self._atom()
        if self._accept("^"):
            exponent = self._int()
            if exponent < 0:
                raise ParseError(f"negative power of a non-monomial in {self._text!r}")
            result = const(1)
            for _ in range(exponent):
                result = result * base
            return result
        return base

    def _atom(self) -> MotClass:
        kind, value = self._next()
        if kind == "int":
            return const(int(value))
        if kind == "op" and value == "(":
            inner = self._expr()
            self._expect(")")
            return inner
        if kind == "name":
            if value not in _BUILTINS:
                raise ParseError(f"unknown name {value!r} in {self._text!r}")
            self._expect("(")
            result = getattr(self, f"_call_{value.lower()}")()
            self._expect(")")
            return result
        raise ParseError(f"unexpected {value!r} in {self._text!r}")

    def _call_mu(self) -> MotClass:
        d = self._int()
        options = {"order": None, "weight": 1, "sign": 1}
        while self._accept(","):
            kind, key = self._next()
            if kind != "name" or key not in options:
                raise ParseError(f"unknown Mu option {key!r}")
            self._expect("=")
            options[key] = self._int()
        return mu(d, **options)

    def _fermat(self, kind: int) -> MotClass:
        a = self._int()
        self._expect(",")
        b = self._int()
        return fermat(kind, a, b)

    def _call_fermat0(self) -> MotClass:
        return self._fermat(0)

    def _call_fermat1(self) -> MotClass:
        return self._fermat(1)

    def _call_opaque(self) -> MotClass:
        kind, name = self._next()
        if kind != "str" or not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"Opaque needs a quoted identifier, got {name!r}")
        order = self._int() if self._accept(",") else 1
        known = self.opaque_orders.setdefault(name, order)
        if known != order:
            raise ParseError(f"Opaque(\"{name}\") used with orders {known} and {order}")
        return opaque(name, order)

    def _call_conv(self) -> MotClass:
        from .convolution import conv
        left = self._expr()
        self._expect(",")
        right = self._expr()
        return conv(left, right)


def parse_class(text: str, opaque_orders: Optional[Dict[str, int]] = None) -> MotClass:
    """
    Parse a class expression.

    Args:
        text: Expression in the class grammar, e.g. `-L + 1 + Mu(2)`
        opaque_orders: Shared Opaque name -> action order table; updated
            in place so that several expressions agree on their orders

    Returns:
        The parsed class

    Raises:
        ParseError: on malformed input or conflicting Opaque orders
    """
    return ClassParser(opaque_orders).parse(text)


# ========== Formatting ==========


def format_generator(g) -> str:
    """
    Text form of one generator.

    Args:
        g: A torsor, Fermat curve, opaque class or the unit

    Returns:
        `Mu(d)` with `order=` and `sign=` only when they differ from the
        defaults, otherwise str(g)
    """
    if isinstance(g, MuTorsor):
        args = [str(g.d)]
        if g.action.order != g.d:
            args.append(f"order={g.action.order}")
        if g.sign == -1:
            args.append("sign=-1")
        return f"Mu({', '.join(args)})"
    return str(g)


def _power_text(e: int) -> str:
    return "L" if e == 1 else f"L^{e}"


def _summands(x: MotClass) -> List[Tuple[int, str]]:
    """(sign, text) pairs for the numerator of x."""
    out = []
    for mono, poly in x.numerator:
        mono_text = "*".join(format_generator(g) for g in mono)
        if not mono:
            for e, c in reversed(poly.terms):
                body = str(abs(c)) if e == 0 else (
                    _power_text(e) if abs(c) == 1 else f"{abs(c)}*{_power_text(e)}")
                out.append((-1 if c < 0 else 1, body))
        elif len(poly.terms) == 1:
            (e, c), = poly.terms
            parts = [] if abs(c) == 1 else [str(abs(c))]
            parts.append(mono_text)
            if e:
                parts.append(_power_text(e))
            out.append((-1 if c < 0 else 1, "*".join(parts)))
        else:
            out.append((1, f"({poly})*{mono_text}"))
    return out


def format_class(x: MotClass) -> str:
    """
    Canonical text form of a class.

    Args:
        x: Plain or localized class

    Returns:
        Text accepted by parse_class; parse_class(format_class(x)) == x
        for plain classes, and `0` for the zero class
    """
    summands = _summands(x)
    if not summands:
        return "0"
    sign, body = summands[0]
    text = ("-" if sign < 0 else "") + body
    for sign, body in summands[1:]:
        text += f" {'-' if sign < 0 else '+'} {body}"
    if x.denominator:
        text = f"({text})" + "".join(
            "/(1-L)" if i == 1 else f"/(1-L^{i})" for i in x.denominator)
    return text
