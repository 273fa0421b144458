#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Finite Field Module

Arithmetic in GF(p^n) with a deterministic presentation, plus the exponent
bookkeeping used by the twisted (equivariant) point counts.

Elements are plain integers in [0, p^n): the base-p digits of an element are
the coefficients of its representative polynomial, constant term first.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import factorint, isprime, perfect_power
from sympy.ntheory import n_order, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from .errors import BudgetExceeded, IncompatibleOrder, PreconditionViolated
from ..utils.debug import dprint

DEFAULT_FIELD_BUDGET = 10 ** 9

# Fields up to this size get exp/log tables.
LOG_TABLE_LIMIT = 1 << 16


def prime_power(q: int) -> Tuple[int, int]:
    """
    Split a prime power into (p, r) with q = p^r.

    Raises:
        ValueError: if q is not a prime power
    """
    if q >= 2 and isprime(q):
        return q, 1
    found = perfect_power(q) if q >= 4 else False
    if not found:
        raise ValueError(f"{q} is not a prime power")
    base, exp = found
    # perfect_power may return a composite base with a smaller exponent
    factors = factorint(base)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, mult), = factors.items()
    return int(p), int(mult * exp)


def is_prime_power(q: int) -> bool:
    """Return True if q = p^r for a prime p and r >= 1."""
    try:
        prime_power(q)
    except ValueError:
        return False
    return True


def _digits(x: int, p: int, n: int) -> List[int]:
    out = []
    for _ in range(n):
        x, d = divmod(x, p)
        out.append(d)
    return out


def _from_digits(digits: List[int], p: int) -> int:
    value = 0
    for d in reversed(digits):
        value = value * p + int(d)
    return value


@lru_cache(maxsize=None)
def least_irreducible(p: int, n: int) -> Tuple[int, ...]:
    """
    Lexicographically least monic irreducible polynomial of degree n over GF(p).

    Coefficients are compared from x^(n-1) down to the constant term, which is
    the numeric order of the base-p encoding used for elements.

    Returns:
        Coefficient tuple from the leading 1 down to the constant term
    """
    for idx in range(p ** n):
        low = _digits(idx, p, n)
        poly = [1] + list(reversed(low))
        if n == 1 or (low[0] != 0 and gf_irreducible_p(poly, p, ZZ)):
            return tuple(poly)
    raise ValueError(f"no irreducible polynomial of degree {n} over GF({p})")


@dataclass(frozen=True)
class FiniteFieldSpec:
    """
    Carrier for a realization field F_{q^e}.

    The field is presented over its prime field GF(p) by `modulus`, the
    lexicographically least monic irreducible of degree r*e where q = p^r.
    """

    q: int
    e: int
    modulus: Tuple[int, ...]

    @classmethod
    def build(cls, q: int, e: int = 1, budget: int = DEFAULT_FIELD_BUDGET) -> "FiniteFieldSpec":
        p, r = prime_power(q)
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        if q ** e > budget:
            raise BudgetExceeded(f"field F_{q}^{e}", q ** e, budget)
        return cls(q=q, e=e, modulus=least_irreducible(p, r * e))

    @property
    def order(self) -> int:
        return self.q ** self.e


class FiniteField:
    """
    The field GF(p^n) with elements encoded as integers.

    Prime fields use integer arithmetic modulo p. Extension fields up to
    LOG_TABLE_LIMIT elements multiply through exp/log tables; larger ones
    reduce products with sympy's dense GF(p)[x] routines.
    """

    def __init__(self, q: int, budget: int = DEFAULT_FIELD_BUDGET):
        if q > budget:
            raise BudgetExceeded(f"field GF({q})", q, budget)
        self.order = q
        self.p, self.n = prime_power(q)
        self.modulus = list(least_irreducible(self.p, self.n))
        self._exp: Optional[List[int]] = None
        self._log: Optional[Dict[int, int]] = None
        self._generator: Optional[int] = None
        if self.n > 1 and q <= LOG_TABLE_LIMIT:
            self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.order})"

    # ========== Representation ==========

    def coeffs(self, x: int) -> List[int]:
        """Coefficient list of x, constant term first."""
        return _digits(x, self.p, self.n)

    def _to_gf(self, x: int) -> List[int]:
        poly = list(reversed(self.coeffs(x)))
        while poly and poly[0] == 0:
            poly.pop(0)
        return poly

    def _from_gf(self, poly: List[int]) -> int:
        return _from_digits([int(c) for c in reversed(poly)], self.p)

    def from_int(self, a: int) -> int:
        """Image of the integer a in the prime subfield."""
        return a % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def nonzero(self) -> Iterator[int]:
        return iter(range(1, self.order))

    # ========== Arithmetic ==========

    def add(self, x: int, y: int) -> int:
        if self.n == 1:
            return (x + y) % self.p
        p = self.p
        return _from_digits([(a + b) % p for a, b in zip(self.coeffs(x), self.coeffs(y))], p)

    def neg(self, x: int) -> int:
        if self.n == 1:
            return (-x) % self.p
        p = self.p
        return _from_digits([(-a) % p for a in self.coeffs(x)], p)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self.n == 1:
            return (x * y) % self.p
        if self._log is not None:
            return self._exp[(self._log[x] + self._log[y]) % (self.order - 1)]
        prod = gf_rem(gf_mul(self._to_gf(x), self._to_gf(y), self.p, ZZ), self.modulus, self.p, ZZ)
        return self._from_gf(prod)

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            if k <= 0:
                raise ZeroDivisionError("0 has no inverse")
            return 0
        k %= self.order - 1
        if self.n == 1:
            return pow(x, k, self.p)
        if self._log is not None:
            return self._exp[(self._log[x] * k) % (self.order - 1)]
        result, base = 1, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, self.order - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    # ========== Multiplicative structure ==========

    def _build_tables(self) -> None:
        g = self._search_generator()
        exp, log = [0] * (self.order - 1), {}
        x = 1
        for i in range(self.order - 1):
            exp[i] = x
            log[x] = i
            prod = gf_rem(gf_mul(self._to_gf(x), self._to_gf(g), self.p, ZZ), self.modulus, self.p, ZZ)
            x = self._from_gf(prod)
        self._exp, self._log = exp, log
        self._generator = g

    def _search_generator(self) -> int:
        n = self.order - 1
        primes = list(factorint(n)) if n > 1 else []
        # pow() may consult tables, so use the slow path while searching
        saved, self._log = self._log, None
        try:
            for cand in range(1, self.order):
                if all(self.pow(cand, n // r) != 1 for r in primes):
                    return cand
        finally:
            self._log = saved
        raise ValueError(f"GF({self.order}) has no generator")

    def generator(self) -> int:
        """Least primitive element (by integer encoding)."""
        if self._generator is None:
            if self.n == 1:
                self._generator = 1 if self.order == 2 else int(primitive_root(self.order))
            else:
                self._generator = self._search_generator()
        return self._generator

    def log(self, x: int) -> int:
        """Discrete logarithm to base generator()."""
        if x == 0:
            raise ValueError("log of 0")
        if self._log is not None:
            return self._log[x]
        g, y = self.generator(), 1
        for i in range(self.order - 1):
            if y == x:
                return i
            y = self.mul(y, g)
        raise ValueError(f"{x} is not in GF({self.order})")

    def is_power(self, x: int, m: int) -> bool:
        """True if x is an m-th power of a nonzero element."""
        if x == 0:
            return False
        return self.pow(x, (self.order - 1) // gcd(m, self.order - 1)) == 1

    def roots(self, x: int, m: int) -> List[int]:
        """All y with y^m = x (exhaustive, desk scale only)."""
        return [y for y in self.nonzero() if self.pow(y, m) == x]


# ========== Exponent bookkeeping for twisted counts ==========


def extension_degree(q: int, m: int) -> int:
    """
    Least e >= 1 with m*(q-1) dividing q^e - 1.

    Raises:
        IncompatibleOrder: if the characteristic divides m
    """
    modulus = m * (q - 1)
    if modulus == 1:
        return 1
    if gcd(q, modulus) != 1:
        raise IncompatibleOrder(f"order {m} is divisible by the characteristic of F_{q}")
    return int(n_order(q % modulus, modulus))


def solve_linear_congruence(a: int, b: int, n: int) -> Optional[int]:
    """Least s >= 0 with a*s = b (mod n), or None."""
    d = gcd(a, n)
    if b % d:
        return None
    a, b, n = a // d, b // d, n // d
    if n == 1:
        return 0
    return (b * pow(a, -1, n)) % n


def descent_exponent(q: int, m: int, k: int, weight: int, exponent: int) -> int:
    """
    Exponent t (mod q-1) of the descent coefficient A = g^t.

    A point u over the algebraic closure with Frob(u) = zeta^(-k*weight) u is
    u = alpha*u' with u' in F_q and alpha = gamma^s in F_{q^e}, where s solves
        s(q-1) = -k*weight*(q^e-1)/m   (mod q^e-1)
    and gamma is a generator whose norm is the generator g of F_q. Then
    u^exponent = A * u'^exponent with A = alpha^exponent = g^t in F_q.

    Raises:
        PreconditionViolated: if weight*exponent is not a multiple of m
    """
    if (weight * exponent) % m:
        raise PreconditionViolated(f"weight {weight} times exponent {exponent} is not a multiple of {m}")
    e = extension_degree(q, m)
    big = q ** e - 1
    norm_exp = big // (q - 1)
    rhs = (-k * weight * (big // m)) % big
    s = solve_linear_congruence(q - 1, rhs, big)
    if s is None:
        raise IncompatibleOrder(f"no descent for order {m} over F_{q}")
    if (s * exponent) % norm_exp:
        raise PreconditionViolated("descent coefficient does not lie in F_q")
    t = (s * exponent // norm_exp) % (q - 1)
    dprint(f"descent q={q} m={m} k={k} w={weight} a={exponent}: e={e} s={s} t={t}", tag="FIELD")
    return t


def minimal_polynomial(F: FiniteField, x: int) -> Tuple[int, ...]:
    """
    Minimal polynomial of x over the prime field of F.

    Returns:
        Coefficients in GF(p), constant term first, ending in the leading 1
    """
    conjugates: List[int] = []
    y = x
    while y not in conjugates:
        conjugates.append(y)
        y = F.pow(y, F.p) if y else 0
    poly = [1]
    for root in conjugates:
        shifted = [0] + poly
        scaled = [F.mul(c, root) for c in poly] + [0]
        poly = [F.sub(a, b) for a, b in zip(shifted, scaled)]
    if any(c >= F.p for c in poly):
        raise ValueError(f"minimal polynomial of {x} is not over GF({F.p})")
    return tuple(poly)


def _evaluate(F: FiniteField, coeffs: Tuple[int, ...], x: int) -> int:
    # prime-field constants share their encoding across presentations
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


class TwistFrame:
    """
    The field F_{q^e} used to realize a twist of order m over F_q.

    Attributes:
        field: the big field, presented over GF(p)
        gamma: a generator of field* whose norm to F_q is the base generator
        zeta: primitive m-th root of unity, zeta = gamma^((q^e-1)/m)
    """

    def __init__(self, q: int, m: int, budget: int = DEFAULT_FIELD_BUDGET):
        if (q - 1) % m:
            raise IncompatibleOrder(f"order {m} does not divide q-1 = {q - 1}")
        self.q, self.m = q, m
        self.e = extension_degree(q, m)
        self.spec = FiniteFieldSpec.build(q, self.e, budget)
        self.field = FiniteField(q ** self.e, budget)
        self.norm_exp = (self.field.order - 1) // (q - 1)
        self.gamma = self._norm_compatible_generator()
        self.base_generator = self.field.pow(self.gamma, self.norm_exp)
        self.zeta = self.field.pow(self.gamma, (self.field.order - 1) // m)
        dprint(f"twist frame q={q} m={m} e={self.e} gamma={self.gamma}", tag="FIELD")

    def _norm_compatible_generator(self) -> int:
        """
        Generator of the big field whose norm is the image of
        FiniteField(q).generator() under some embedding of GF(q).

        The two presentations of F_q differ when q is not prime, so the
        norm is matched through the minimal polynomial of the base
        generator over GF(p) rather than by its integer encoding.
        """
        F = self.field
        gamma = F.generator()
        if self.e == 1:
            return gamma
        target = minimal_polynomial(FiniteField(self.q), FiniteField(self.q).generator())
        norm = F.pow(gamma, self.norm_exp)
        x = norm
        for j in range(1, self.q):
            if gcd(j, self.q - 1) == 1 and _evaluate(F, target, x) == 0:
                break
            x = F.mul(x, norm)
        else:
            raise ValueError(f"no conjugate of the generator of GF({self.q}) in {F}")
        t = j
        while gcd(t, F.order - 1) != 1:
            t += self.q - 1
        return F.pow(gamma, t)

    def base_field(self) -> List[int]:
        """Elements of the subfield F_q inside the big field."""
        g = self.base_generator
        out, x = [0], 1
        for _ in range(self.q - 1):
            out.append(x)
            x = self.field.mul(x, g)
        return out

    def line(self, k: int, weight: int) -> int:
        """
        An element alpha with Frob_q(alpha) = zeta^(-k*weight) * alpha.

        The twisted points of weight `weight` are exactly alpha * F_q.
        """
        big = self.field.order - 1
        rhs = (-k * weight * (big // self.m)) % big
        s = solve_linear_congruence(self.q - 1, rhs, big)
        if s is None:
            raise IncompatibleOrder(f"twist k={k} has no line over F_{self.q}")
        return self.field.pow(self.gamma, s)

    def frobenius(self, x: int) -> int:
        return self.field.pow(x, self.q) if x else 0


def norm_compatible_generator(q: int, m: int, budget: int = DEFAULT_FIELD_BUDGET) -> int:
    """Generator gamma of F_{q^e} whose norm to F_q is the base generator."""
    return TwistFrame(q, m, budget).gamma
