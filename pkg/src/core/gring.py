#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Monodromic Grothendieck Ring Module

Exact algebra of equivariant classes built from a small set of generators
(roots-of-unity torsors, Fermat curves and opaque named classes), the
localization at the elements 1-L^i, and numerical realizations of classes
by plain and twisted point counting over finite fields.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import (
    BudgetExceeded,
    IncompatibleOrder,
    ParseError,
    PreconditionViolated,
    UnboundOpaque,
    UnsupportedRealization,
)
from .fields import FiniteField, TwistFrame, descent_exponent, is_prime_power
from ..utils.debug import dprint

DEFAULT_ENUM_BUDGET = 10 ** 8

PLAIN = "plain"
LOCALIZED = "localized"


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ========== Laurent polynomials in L ==========


@dataclass(frozen=True)
class LPoly:
    """Laurent polynomial in L with integer coefficients, stored sparse."""

    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Dict[int, int]) -> "LPoly":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @classmethod
    def const(cls, c: int) -> "LPoly":
        return cls.from_dict({0: c})

    @classmethod
    def power(cls, e: int, c: int = 1) -> "LPoly":
        return cls.from_dict({e: c})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LPoly") -> "LPoly":
        out = Counter(self.as_dict())
        for e, c in other.terms:
            out[e] += c
        return LPoly.from_dict(out)

    def __neg__(self) -> "LPoly":
        return LPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LPoly") -> "LPoly":
        return self + (-other)

    def __mul__(self, other: Union["LPoly", int]) -> "LPoly":
        if isinstance(other, int):
            return LPoly.from_dict({e: c * other for e, c in self.terms})
        out: Counter = Counter()
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] += c1 * c2
        return LPoly.from_dict(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LPoly":
        """Multiply by L^k."""
        return LPoly(tuple((e + k, c) for e, c in self.terms))

    def evaluate(self, value: Union[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(value) ** e
        return total

    def divide_one_minus(self, i: int) -> Optional["LPoly"]:
        """Exact quotient by (1 - L^i), or None if it does not divide."""
        if self.is_zero():
            return self
        coeffs = self.as_dict()
        lo, hi = self.terms[0][0], self.terms[-1][0]
        quotient: Dict[int, int] = {}
        # f_e = q_e - q_{e-i}
        for e in range(lo, hi + 1):
            quotient[e] = coeffs.get(e, 0) + quotient.get(e - i, 0)
        if any(quotient[e] for e in range(max(lo, hi - i + 1), hi + 1)):
            return None
        return LPoly.from_dict({e: c for e, c in quotient.items() if e <= hi - i})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                base = "L" if e == 1 else f"L^{e}"
                body = base if mag == 1 else f"{mag}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def one_minus_power(i: int) -> LPoly:
    return LPoly.from_dict({0: 1, i: -1})


# ========== Generators ==========


@dataclass(frozen=True)
class ActionSpec:
    """A good mu_m-action: order m, weight w in [0, m)."""

    order: int = 1
    weight: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("action order must be positive")
        if not 0 <= self.weight < self.order:
            raise ValueError(f"weight {self.weight} out of range for order {self.order}")
        if self.order == 1 and self.weight != 0:
            raise ValueError("order 1 forces weight 0")

    @classmethod
    def normalized(cls, order: int, weight: int) -> "ActionSpec":
        """The faithful quotient action: order n/gcd(n,w) with weight 1."""
        weight %= order
        eff = order // gcd(order, weight) if weight else 1
        return cls(eff, 1 if eff > 1 else 0)


@dataclass(frozen=True)
class One:
    """The unit class (never stored inside a monomial)."""

    def sort_key(self) -> tuple:
        return (0,)

    def action_order(self) -> int:
        return 1

    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class MuTorsor:
    """
    The torsor {x : x^d = sign} with mu_order acting by x -> xi*x.

    Only normalized instances are built (see mu()): order divides d, the
    weight is 1 for a nontrivial action, and sign -1 only occurs with even d
    and the trivial action.
    """

    d: int
    action: ActionSpec
    sign: int = 1

    def sort_key(self) -> tuple:
        return (1, self.d, self.action.order, self.sign)

    def action_order(self) -> int:
        return self.action.order

    def __str__(self) -> str:
        from .classexpr import format_generator
        return format_generator(self)


@dataclass(frozen=True)
class FermatCurve:
    """
    The curve {u^a + v^b = kind, uv != 0} with mu_m acting by weights
    (m/a, m/b), m = lcm(a, b). Stored with a <= b.
    """

    kind: int
    a: int
    b: int

    @property
    def m(self) -> int:
        return lcm(self.a, self.b)

    @property
    def w_u(self) -> int:
        return self.m // self.a

    @property
    def w_v(self) -> int:
        return self.m // self.b

    def sort_key(self) -> tuple:
        return (2, self.kind, self.a, self.b)

    def action_order(self) -> int:
        return self.m

    def __str__(self) -> str:
        return f"Fermat{self.kind}({self.a},{self.b})"


@dataclass(frozen=True)
class Opaque:
    """A named class whose realizations come from a binding table."""

    name: str
    order: int = 1

    def sort_key(self) -> tuple:
        return (3, self.name, self.order)

    def action_order(self) -> int:
        return self.order

    def __str__(self) -> str:
        if self.order == 1:
            return f'Opaque("{self.name}")'
        return f'Opaque("{self.name}", {self.order})'


Generator = Union[One, MuTorsor, FermatCurve, Opaque]
Monomial = Tuple[Generator, ...]


def _sort_monomial(gens: Iterable[Generator]) -> Monomial:
    return tuple(sorted((g for g in gens if not isinstance(g, One)), key=lambda g: g.sort_key()))


def _monomial_key(mono: Monomial) -> tuple:
    return (len(mono), tuple(g.sort_key() for g in mono))


# ========== Classes ==========


@dataclass(frozen=True)
class MotClass:
    """
    Element of the monodromic Grothendieck ring or its localization.

    numerator maps generator monomials to Laurent polynomials in L;
    denominator lists the i of the factors (1 - L^i).
    """

    numerator: Tuple[Tuple[Monomial, LPoly], ...] = ()
    denominator: Tuple[int, ...] = ()
    mode: str = PLAIN

    # ----- construction -----

    @classmethod
    def build(cls, terms: Dict[Monomial, LPoly], denominator: Iterable[int] = (),
              mode: str = PLAIN) -> "MotClass":
        merged: Dict[Monomial, LPoly] = {}
        for mono, poly in terms.items():
            key = _sort_monomial(mono)
            merged[key] = merged.get(key, LPoly()) + poly
        denom = sorted(denominator)
        if denom and mode == PLAIN:
            raise ValueError("plain classes carry no denominator")
        if mode == LOCALIZED:
            merged, denom = _cancel(merged, denom)
        items = tuple(sorted(((k, v) for k, v in merged.items() if not v.is_zero()),
                             key=lambda kv: _monomial_key(kv[0])))
        if not items:
            denom = []
        return cls(items, tuple(denom), mode)

    def terms(self) -> Dict[Monomial, LPoly]:
        return dict(self.numerator)

    def is_zero(self) -> bool:
        return not self.numerator

    def is_lpoly_pure(self) -> bool:
        return all(not mono for mono, _ in self.numerator)

    def generators(self) -> List[Generator]:
        seen = {}
        for mono, _ in self.numerator:
            for g in mono:
                seen[g] = None
        return list(seen)

    def action_order(self) -> int:
        """lcm of all action orders occurring in the class."""
        return reduce(lcm, (g.action_order() for g in self.generators()), 1)

    # ----- arithmetic -----

    def _coerce(self, other) -> "MotClass":
        if isinstance(other, MotClass):
            return other
        if isinstance(other, int):
            return const(other)
        if isinstance(other, LPoly):
            return MotClass.build({(): other})
        return NotImplemented

    def __add__(self, other) -> "MotClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "MotClass":
        return MotClass(tuple((m, -p) for m, p in self.numerator), self.denominator, self.mode)

    def __sub__(self, other) -> "MotClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other) -> "MotClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other) -> "MotClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from .classexpr import format_class
        return format_class(self)


def _cancel(terms: Dict[Monomial, LPoly], denom: List[int]) -> Tuple[Dict[Monomial, LPoly], List[int]]:
    """Divide out (1-L^i) factors that divide every numerator polynomial."""
    denom = list(denom)
    for i in sorted(set(denom), reverse=True):
        while i in denom:
            quotients = {}
            for mono, poly in terms.items():
                quotient = poly.divide_one_minus(i)
                if quotient is None:
                    break
                quotients[mono] = quotient
            else:
                terms = quotients
                denom.remove(i)
                continue
            break
    return terms, denom


def _denominator_poly(factors: Iterable[int]) -> LPoly:
    poly = LPoly.const(1)
    for i in factors:
        poly = poly * one_minus_power(i)
    return poly


def _mode(x: MotClass, y: MotClass) -> str:
    return LOCALIZED if LOCALIZED in (x.mode, y.mode) else PLAIN


def add(x: MotClass, y: MotClass) -> MotClass:
    """Sum of two classes over the common denominator."""
    cx, cy = Counter(x.denominator), Counter(y.denominator)
    common = cx | cy
    fx = _denominator_poly((common - cx).elements())
    fy = _denominator_poly((common - cy).elements())
    terms: Dict[Monomial, LPoly] = {}
    for mono, poly in x.numerator:
        terms[mono] = terms.get(mono, LPoly()) + poly * fx
    for mono, poly in y.numerator:
        terms[mono] = terms.get(mono, LPoly()) + poly * fy
    return MotClass.build(terms, common.elements(), _mode(x, y))


def neg(x: MotClass) -> MotClass:
    return -x


def sub(x: MotClass, y: MotClass) -> MotClass:
    return add(x, -y)


def mul(x: MotClass, y: MotClass) -> MotClass:
    """Product: monomials concatenate, coefficients multiply, denominators add up."""
    terms: Dict[Monomial, LPoly] = {}
    for m1, p1 in x.numerator:
        for m2, p2 in y.numerator:
            mono = _sort_monomial(m1 + m2)
            terms[mono] = terms.get(mono, LPoly()) + p1 * p2
    return MotClass.build(terms, x.denominator + y.denominator, _mode(x, y))


def localize(x: MotClass) -> MotClass:
    """The image of x in the localized ring."""
    return MotClass.build(x.terms(), x.denominator, LOCALIZED)


def divide_one_minus(x: MotClass, i: int) -> MotClass:
    """x / (1 - L^i), in the localized ring."""
    if i < 1:
        raise ValueError("denominator factors are 1-L^i with i >= 1")
    return MotClass.build(x.terms(), x.denominator + (i,), LOCALIZED)


def scale(x: MotClass, c: int) -> MotClass:
    return MotClass.build({m: p * c for m, p in x.numerator}, x.denominator, x.mode)


# ========== Constructors ==========


def zero() -> MotClass:
    return MotClass()


def const(c: int) -> MotClass:
    return MotClass.build({(): LPoly.const(c)})


def one() -> MotClass:
    return const(1)


def lpow(e: int = 1, c: int = 1) -> MotClass:
    """c * L^e."""
    return MotClass.build({(): LPoly.power(e, c)})


def lpoly_class(poly: LPoly) -> MotClass:
    return MotClass.build({(): poly})


def mu_torsor(d: int, order: Optional[int] = None, weight: int = 1, sign: int = 1) -> Generator:
    """
    Normalized torsor generator.

    With no order given the action is the faithful one of order d.

    Raises:
        PreconditionViolated: if the action does not preserve the torsor
    """
    if d < 1:
        raise PreconditionViolated(f"torsor size must be positive, got {d}")
    if sign not in (1, -1):
        raise PreconditionViolated(f"torsor sign must be 1 or -1, got {sign}")
    if order is None:
        order = d
    action = ActionSpec.normalized(order, weight)
    if d % action.order:
        raise PreconditionViolated(f"mu_{order} with weight {weight} does not act on mu_{d}")
    if sign == -1:
        if action.order != 1:
            raise PreconditionViolated("the sign -1 torsor only carries the trivial action")
        if d % 2:
            sign = 1
    if d == 1:
        return One()
    return MuTorsor(d, action, sign)


def mu(d: int, order: Optional[int] = None, weight: int = 1, sign: int = 1) -> MotClass:
    return generator_class(mu_torsor(d, order, weight, sign))


def fermat(kind: int, a: int, b: int) -> MotClass:
    if kind not in (0, 1):
        raise PreconditionViolated(f"Fermat kind must be 0 or 1, got {kind}")
    if a < 1 or b < 1:
        raise PreconditionViolated("Fermat exponents must be positive")
    return generator_class(FermatCurve(kind, min(a, b), max(a, b)))


def opaque(name: str, order: int = 1) -> MotClass:
    if order < 1:
        raise PreconditionViolated("opaque action order must be positive")
    return generator_class(Opaque(name, order))


def generator_class(g: Generator) -> MotClass:
    return MotClass.build({(g,): LPoly.const(1)})


# ========== Rewriting ==========


def _rewrite_generator(g: Generator) -> MotClass:
    if isinstance(g, FermatCurve):
        L = lpow(1)
        if g.kind == 1 and g.a == 1:
            # u = 1 - v^b with u, v != 0
            return L - 2 if g.b == 1 else L - 1 - mu(g.b)
        if g.kind == 0:
            # components {u^(a/c) = eta v^(b/c)} indexed by eta^c = -1, each a torus
            c = gcd(g.a, g.b)
            return (L - 1) * mu(c, order=1, sign=-1)
    return generator_class(g)


def simplify(x: MotClass) -> MotClass:
    """Apply the Fermat rewrite rules; idempotent."""
    total = MotClass.build({}, (), x.mode)
    for mono, poly in x.numerator:
        term = lpoly_class(poly)
        for g in mono:
            term = term * _rewrite_generator(g)
        total = total + term
    if x.denominator:
        total = MotClass.build(total.terms(), total.denominator + x.denominator, LOCALIZED)
    return total


def vanishing_twist(s: MotClass, d: int) -> MotClass:
    """(-1)^(d-1) * (s - 1)."""
    diff = s - 1
    return diff if (d - 1) % 2 == 0 else -diff


# ========== Point counts ==========


@lru_cache(maxsize=64)
def _field(q: int) -> FiniteField:
    return FiniteField(q)


def _check_budget(q: int, budget: int) -> None:
    if q * q > budget:
        raise BudgetExceeded(f"Fermat count over F_{q}", q * q, budget)


@lru_cache(maxsize=4096)
def _descended_count(a: int, b: int, q: int, t_u: int, t_v: int, c: int) -> int:
    """#{(u,v) in (F_q^x)^2 : g^t_u u^a + g^t_v v^b = c}."""
    F = _field(q)
    g = F.generator()
    A, B = F.pow(g, t_u), F.pow(g, t_v)
    values = Counter(F.mul(B, F.pow(v, b)) for v in F.nonzero())
    total = 0
    for u in F.nonzero():
        total += values.get(F.sub(c, F.mul(A, F.pow(u, a))), 0)
    return total


def count_fermat(kind: int, a: int, b: int, q: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """
    Exact count of {(u,v) in (F_q^x)^2 : u^a + v^b = kind}.

    Raises:
        BudgetExceeded: if q^2 exceeds the enumeration budget
    """
    _check_budget(q, budget)
    return _descended_count(a, b, q, 0, 0, kind)


def count_fermat_twisted(kind: int, a: int, b: int, q: int, k: int,
                         budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """
    Twisted count of the Fermat curve, descended to F_q.

    Points with Frob(u) = zeta^(-k w_u) u and Frob(v) = zeta^(-k w_v) v are
    u = alpha u', v = beta v' with u', v' in F_q^x, turning the curve into
    A u'^a + B v'^b = kind with A, B in F_q.
    """
    _check_budget(q, budget)
    curve = FermatCurve(kind, a, b)
    m = curve.m
    if (q - 1) % m:
        raise IncompatibleOrder(f"order {m} does not divide q-1 = {q - 1}")
    k %= m
    if k == 0:
        return _descended_count(a, b, q, 0, 0, kind)
    t_u = descent_exponent(q, m, k, curve.w_u, a)
    t_v = descent_exponent(q, m, k, curve.w_v, b)
    return _descended_count(a, b, q, t_u, t_v, kind)


def count_fermat_twisted_direct(kind: int, a: int, b: int, q: int, k: int,
                                budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """
    Twisted count computed inside F_{q^e} without descent to F_q.

    Enumerates the twisted lines alpha*F_q^x and beta*F_q^x of the big field
    and counts pairs on u^a + v^b = kind there.
    """
    _check_budget(q, budget)
    curve = FermatCurve(kind, a, b)
    frame = TwistFrame(q, curve.m)
    F = frame.field
    alpha, beta = frame.line(k, curve.w_u), frame.line(k, curve.w_v)
    base = frame.base_field()[1:]
    values = Counter(F.pow(F.mul(beta, y), b) for y in base)
    c = F.from_int(kind)
    total = 0
    for x in base:
        total += values.get(F.sub(c, F.pow(F.mul(alpha, x), a)), 0)
    return total


def _torsor_count(g: MuTorsor, q: int, k: int) -> int:
    c = gcd(g.d, q - 1)
    if g.sign == -1 and q % 2 == 1 and ((q - 1) // c) % 2:
        return 0
    if k and g.action.order > 1:
        # x^(q-1) = zeta_n^(-k) on mu_d is solvable iff gcd(d, q-1) | k*d/n
        if (k * g.d // g.action.order) % c:
            return 0
    return c


# ========== Opaque bindings ==========


class OpaqueBindings:
    """
    Table of realization values for opaque generators.

    Text format: one binding per line, `name q k value`, where k may be `*`
    for every twist and value is an integer or a fraction `p/r`. Blank lines
    and lines starting with `#` are ignored.
    """

    def __init__(self):
        self._values: Dict[Tuple[str, int, Optional[int]], Fraction] = {}

    def bind(self, name: str, q: int, k: Optional[int], value) -> None:
        self._values[(name, q, k)] = Fraction(value)

    def lookup(self, name: str, q: int, k: int = 0) -> Fraction:
        for key in ((name, q, k), (name, q, None)):
            if key in self._values:
                return self._values[key]
        raise UnboundOpaque(name, q, k)

    def names(self) -> List[str]:
        return sorted({name for name, _, _ in self._values})

    def __len__(self) -> int:
        return len(self._values)

    @classmethod
    def from_text(cls, text: str) -> "OpaqueBindings":
        table = cls()
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 4:
                raise ParseError(f"expected 'name q k value', got {raw.strip()!r}", lineno)
            name, q_text, k_text, value_text = fields
            try:
                q = int(q_text)
                k = None if k_text == "*" else int(k_text)
                value = Fraction(value_text)
            except ValueError as e:
                raise ParseError(f"bad binding {raw.strip()!r}: {e}", lineno)
            if not is_prime_power(q):
                raise ParseError(f"q={q} is not a prime power", lineno)
            table.bind(name.strip('"'), q, k, value)
        dprint(f"loaded {len(table)} opaque bindings", tag="RING")
        return table

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "OpaqueBindings":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


# ========== Realizations ==========


def _generator_value(g: Generator, q: int, k: int, bindings: Optional[OpaqueBindings],
                     budget: int) -> Fraction:
    if isinstance(g, One):
        return Fraction(1)
    if isinstance(g, MuTorsor):
        return Fraction(_torsor_count(g, q, k))
    if isinstance(g, FermatCurve):
        if k % g.m:
            return Fraction(count_fermat_twisted(g.kind, g.a, g.b, q, k, budget))
        return Fraction(count_fermat(g.kind, g.a, g.b, q, budget))
    if bindings is None:
        raise UnboundOpaque(g.name, q, k)
    return bindings.lookup(g.name, q, k % g.order)


def _realize(x: MotClass, q: int, k: int, bindings: Optional[OpaqueBindings], budget: int) -> Fraction:
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    total = Fraction(0)
    for mono, poly in x.numerator:
        value = poly.evaluate(q)
        for g in mono:
            value *= _generator_value(g, q, k, bindings, budget)
        total += value
    for i in x.denominator:
        total /= 1 - Fraction(q) ** i
    return total


def realize_plain(x: MotClass, q: int, bindings: Optional[OpaqueBindings] = None,
                  budget: int = DEFAULT_ENUM_BUDGET) -> Fraction:
    """
    Point-count realization with L -> q.

    Raises:
        UnboundOpaque: if an opaque generator has no binding
    """
    return _realize(x, q, 0, bindings, budget)


def realize_twisted(x: MotClass, q: int, k: int, bindings: Optional[OpaqueBindings] = None,
                    budget: int = DEFAULT_ENUM_BUDGET) -> Fraction:
    """
    Twisted-Frobenius realization at twist k.

    Raises:
        IncompatibleOrder: if the action order of x does not divide q-1
        UnboundOpaque: if an opaque generator has no binding
    """
    m = x.action_order()
    if (q - 1) % m:
        raise IncompatibleOrder(f"action order {m} does not divide q-1 = {q - 1}")
    return _realize(x, q, k % m, bindings, budget)


def realize_euler(x: MotClass) -> Fraction:
    """
    Euler-characteristic realization L -> 1, defined on polynomials in L only.

    Raises:
        UnsupportedRealization: for classes with generators or denominators
    """
    if x.denominator:
        raise UnsupportedRealization("1 - L^i vanishes under L -> 1")
    if not x.is_lpoly_pure():
        names = ", ".join(str(g) for g in x.generators())
        raise UnsupportedRealization(f"no Euler characteristic for generators {names}")
    return sum((poly.evaluate(1) for _, poly in x.numerator), Fraction(0))


def twist_points(x: MotClass, qs: Sequence[int], all_twists: bool = True) -> List[Tuple[int, int]]:
    """The (q, k) grid at which x can be realized, sorted by q then k."""
    m = x.action_order()
    points = []
    for q in sorted(qs):
        if (q - 1) % m:
            points.append((q, 0))
            continue
        points.extend((q, k) for k in (range(m) if all_twists else (0,)))
    return points


def realize_at(x: MotClass, q: int, k: int, bindings: Optional[OpaqueBindings] = None,
               budget: int = DEFAULT_ENUM_BUDGET) -> Fraction:
    """Plain realization for k = 0, twisted otherwise."""
    if k == 0:
        return realize_plain(x, q, bindings, budget)
    return realize_twisted(x, q, k, bindings, budget)


def realize_equal(x: MotClass, y: MotClass, points: Iterable[Tuple[int, int]],
                  bindings: Optional[OpaqueBindings] = None,
                  budget: int = DEFAULT_ENUM_BUDGET) -> bool:
    """
    Agreement of x and y at every (q, k). A necessary condition for equality
    in the ring, not a proof of it.
    """
    for q, k in points:
        left = realize_at(x, q, k, bindings, budget)
        right = realize_at(y, q, k, bindings, budget)
        if left != right:
            dprint(f"realizations differ at q={q} k={k}: {left} != {right}", tag="RING")
            return False
    return True


def format_rational(value: Fraction) -> str:
    """Decimal-free rational text: `p` or `p/r`."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
