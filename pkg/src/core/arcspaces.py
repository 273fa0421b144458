#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Arc Spaces Module

Truncated-arc sets over finite fields: brute-force and structured point
counts, twisted counts under t -> xi*t, closed-form classes and zeta series
for pure powers, and the Fermat map between products of Milnor arc sets and
the sets Z1*, Z0.

An arc at level m is a tuple of m+1 coefficients (constant term 0) per
variable; a point of an arc set is one arc per variable.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Set, Tuple, Union

from .convolution import ts_combine
from .errors import (
    BudgetExceeded,
    IncompatibleOrder,
    PreconditionViolated,
    StructureUnsupported,
)
from .fields import DEFAULT_FIELD_BUDGET, FiniteField, TwistFrame, extension_degree, prime_power
from .gring import DEFAULT_ENUM_BUDGET, MotClass, lpow, mu, one, realize_plain, zero
from .polyfn import PolyFn, evaluate_on_arcs, parse_poly
from .series import RationalSeries, coefficient, limit_at_infinity, term
from ..utils.debug import dprint, timed

Arc = Tuple[int, ...]
Point = Tuple[Arc, ...]


# ========== Arc set descriptions ==========


@dataclass(frozen=True)
class Milnor:
    """Arcs with f(phi) = t^m mod t^(m+1)."""

    f: PolyFn
    m: int

    @property
    def nvars(self) -> int:
        return self.f.nvars


@dataclass(frozen=True)
class Z1Star:
    """ord f(phi) = ord g(psi) = m and f(phi) + g(psi) = t^m mod t^(m+1)."""

    f: PolyFn
    g: PolyFn
    m: int

    @property
    def nvars(self) -> int:
        return self.f.nvars + self.g.nvars


@dataclass(frozen=True)
class Z0Set:
    """ord f(phi) = ord g(psi) = m and f(phi) + g(psi) = 0 mod t^(m+1)."""

    f: PolyFn
    g: PolyFn
    m: int

    @property
    def nvars(self) -> int:
        return self.f.nvars + self.g.nvars


@dataclass(frozen=True)
class Z0Literal:
    """-f(phi) = g(psi) = t^m mod t^(m+1)."""

    f: PolyFn
    g: PolyFn
    m: int

    @property
    def nvars(self) -> int:
        return self.f.nvars + self.g.nvars


ArcSetSpec = Union[Milnor, Z1Star, Z0Set, Z0Literal]


def _leading(values: Sequence[int], m: int) -> Optional[int]:
    """Coefficient of t^m if every lower coefficient vanishes, else None."""
    if any(values[:m]):
        return None
    return values[m]


def is_member(spec: ArcSetSpec, F: FiniteField, point: Point) -> bool:
    m = spec.m
    if isinstance(spec, Milnor):
        return _leading(evaluate_on_arcs(spec.f, F, point, m), m) == 1
    split = spec.f.nvars
    lead_f = _leading(evaluate_on_arcs(spec.f, F, point[:split], m), m)
    lead_g = _leading(evaluate_on_arcs(spec.g, F, point[split:], m), m)
    if not lead_f or not lead_g:
        return False
    if isinstance(spec, Z1Star):
        return F.add(lead_f, lead_g) == 1
    if isinstance(spec, Z0Set):
        return F.add(lead_f, lead_g) == 0
    return F.neg(lead_f) == 1 and lead_g == 1


# ========== Enumeration ==========


def _check_budget(spec: ArcSetSpec, q: int, budget: int) -> int:
    size = q ** (spec.m * spec.nvars)
    if size > budget:
        raise BudgetExceeded(f"full enumeration of {type(spec).__name__} at level {spec.m}", size, budget)
    return size


def _split_point(coeffs: Sequence[int], nvars: int, m: int) -> Point:
    return tuple((0,) + tuple(coeffs[i * m:(i + 1) * m]) for i in range(nvars))


def _points(spec: ArcSetSpec, F: FiniteField, first: Optional[int] = None):
    slots = spec.m * spec.nvars
    if first is None:
        for coeffs in product(range(F.order), repeat=slots):
            yield _split_point(coeffs, spec.nvars, spec.m)
    else:
        for rest in product(range(F.order), repeat=slots - 1):
            yield _split_point((first,) + rest, spec.nvars, spec.m)


def _count_block(spec: ArcSetSpec, q: int, first: int) -> int:
    F = FiniteField(q)
    return sum(1 for point in _points(spec, F, first) if is_member(spec, F, point))


def enumerate_points(spec: ArcSetSpec, q: int, budget: int = DEFAULT_ENUM_BUDGET) -> List[Point]:
    """All F_q-points of the arc set (full enumeration)."""
    _check_budget(spec, q, budget)
    F = FiniteField(q)
    return [point for point in _points(spec, F) if is_member(spec, F, point)]


def _structured_count(spec: ArcSetSpec, q: int) -> int:
    m = spec.m
    F = FiniteField(q)
    if isinstance(spec, Milnor):
        shape = spec.f.pure_power()
        if shape is None:
            raise StructureUnsupported(f"{spec.f} is not a pure power")
        _, n, c = shape
        if m % n:
            return 0
        # val(phi) = m/n exactly; leading coefficient solves c*x^n = 1
        roots = sum(1 for x in F.nonzero() if F.mul(F.from_int(c), F.pow(x, n)) == 1)
        return roots * q ** (m - m // n) * q ** (m * (spec.nvars - 1))
    shapes = spec.f.pure_power(), spec.g.pure_power()
    if None in shapes:
        raise StructureUnsupported("structured counts need pure powers on both sides")
    (_, n, c1), (_, k, c2) = shapes
    if m % n or m % k:
        return 0
    free = q ** (m - m // n) * q ** (m - m // k) * q ** (m * (spec.nvars - 2))
    c1, c2 = F.from_int(c1), F.from_int(c2)
    right = Counter(F.mul(c2, F.pow(y, k)) for y in F.nonzero())
    if isinstance(spec, Z0Literal):
        left = sum(1 for x in F.nonzero() if F.neg(F.mul(c1, F.pow(x, n))) == 1)
        return left * right.get(1, 0) * free
    target = 1 if isinstance(spec, Z1Star) else 0
    pairs = sum(right.get(F.sub(target, F.mul(c1, F.pow(x, n))), 0) for x in F.nonzero())
    return pairs * free


def arc_count(spec: ArcSetSpec, q: int, strategy: str = "full",
              budget: int = DEFAULT_ENUM_BUDGET, jobs: int = 1) -> int:
    """
    Number of F_q-points of an arc set.

    `full` enumerates every arc (parallel over the first coefficient when
    jobs > 1); `structured` uses the closed count for pure powers.

    Raises:
        BudgetExceeded: if full enumeration exceeds the budget
        StructureUnsupported: if `structured` is asked for a non-pure power
    """
    if spec.m < 1:
        raise PreconditionViolated("arc level must be >= 1")
    if strategy == "structured":
        return _structured_count(spec, q)
    if strategy != "full":
        raise ValueError(f"unknown strategy {strategy!r}")
    size = _check_budget(spec, q, budget)
    label = f"enumerating {size} points of {type(spec).__name__} m={spec.m} over F_{q}"
    with timed(label, tag="ARCS"):
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(_count_block, spec, q, first) for first in range(q)]
                return sum(fut.result() for fut in futures)
        return sum(_count_block(spec, q, first) for first in range(q))


def twisted_arc_count(spec: ArcSetSpec, q: int, k: int, budget: int = DEFAULT_ENUM_BUDGET,
                      field_budget: int = DEFAULT_FIELD_BUDGET) -> int:
    """
    Arcs fixed by Frobenius composed with t -> xi^k t, xi of order m.

    The t^j coefficient of such an arc lies on the line alpha_j * F_q of
    F_{q^e} with Frob(alpha_j) = zeta^(-k*j) alpha_j.

    Raises:
        IncompatibleOrder: if m does not divide q-1
        BudgetExceeded: if the enumeration exceeds the budget
    """
    m = spec.m
    if (q - 1) % m:
        raise IncompatibleOrder(f"level {m} does not divide q-1 = {q - 1}")
    _check_budget(spec, q, budget)
    frame = TwistFrame(q, m, field_budget)
    F = frame.field
    base = frame.base_field()
    lines = [frame.line(k, j) for j in range(1, m + 1)]
    total = 0
    for coeffs in product(range(q), repeat=m * spec.nvars):
        scaled = [F.mul(lines[i % m], base[x]) for i, x in enumerate(coeffs)]
        if is_member(spec, F, _split_point(scaled, spec.nvars, m)):
            total += 1
    dprint(f"twisted count q={q} k={k} {type(spec).__name__} m={m}: {total}", tag="ARCS")
    return total


# ========== Closed forms ==========


def arc_class_monomial(n: int, m: int) -> MotClass:
    """Class of the level-m Milnor arcs of x^n: Mu(n) * L^(m - m/n), or 0."""
    if n < 1 or m < 1:
        raise PreconditionViolated("exponent and level must be positive")
    if m % n:
        return zero()
    return mu(n) * lpow(m - m // n)


def zeta_monomial(n: int) -> RationalSeries:
    """Mu(n) * L^-1 T^n / (1 - L^-1 T^n)."""
    return term(mu(n), -1, n)


def milnor_monomial(n: int) -> MotClass:
    return -limit_at_infinity(zeta_monomial(n))


def truncate_for_level(f: PolyFn, m: int) -> PolyFn:
    """
    Drop monomials of total degree > m; they vanish mod t^(m+1) on arcs
    with positive valuation, so level-m counts are unchanged.
    """
    return f.truncate(m)


def _bp_exponents(f: PolyFn) -> List[int]:
    """Exponents of f = x_1^a_1 + ... in distinct variables, unit coefficients."""
    exps = []
    used: Set[int] = set()
    for e, c in f.monomials:
        vars_ = [i for i, x in enumerate(e) if x]
        if c != 1 or len(vars_) != 1 or vars_[0] in used:
            raise StructureUnsupported(f"{f} is not a sum of pure powers in distinct variables")
        used.add(vars_[0])
        exps.append(e[vars_[0]])
    return exps


def zeta_from_poly(f: PolyFn) -> RationalSeries:
    """
    Zeta series of f at the origin for a single pure power or a smooth germ.

    Raises:
        StructureUnsupported: otherwise
    """
    if any(d == 1 for d in f.degrees()):
        return zeta_monomial(1)
    exps = _bp_exponents(f)
    if len(exps) != 1:
        raise StructureUnsupported("the zeta series of a sum of powers is not single-factor")
    return zeta_monomial(exps[0])


def milnor_from_poly(f: PolyFn) -> MotClass:
    """
    Milnor fibre of f at the origin: smooth germs, pure powers, and sums of
    pure powers in distinct variables through the Thom-Sebastiani route.

    Raises:
        StructureUnsupported: for other shapes
        FragmentError: when the sum leaves the convolution fragment
    """
    if any(d == 1 for d in f.degrees()):
        return one()
    exps = _bp_exponents(f)
    result, dim = milnor_monomial(exps[0]), 1
    for n in exps[1:]:
        result = ts_combine(result, milnor_monomial(n), dim, 1)
        dim += 1
    return result


def zeta_coefficient_check(n: int, m: int, q: int, budget: int = DEFAULT_ENUM_BUDGET) -> Tuple[int, int]:
    """
    (q^m * [T^m] zeta_monomial(n) at q, brute-force Milnor arc count).

    The two agree when the closed form is right.
    """
    predicted = realize_plain(coefficient(zeta_monomial(n), m), q) * q ** m
    counted = arc_count(Milnor(parse_poly(f"x1^{n}"), m), q, "full", budget)
    return int(predicted), counted


# ========== The Fermat map ==========


def _scale_arc(F: FiniteField, arc: Arc, a: int) -> Arc:
    """phi(t) -> phi(a t)."""
    out, power = [0], 1
    for c in arc[1:]:
        power = F.mul(power, a)
        out.append(F.mul(c, power))
    return tuple(out)


def fermat_arc_map(phi: Sequence[Arc], psi: Sequence[Arc], a_root: int, b_root: int,
                   f: PolyFn, g: PolyFn, m: int, F: FiniteField, kind: int = 1,
                   check: bool = True) -> Tuple[Point, Point]:
    """
    Send (phi(t), psi(t); a, b) to (phi(a t), psi(b t)).

    Raises:
        PreconditionViolated: if the input is not a Milnor arc pair over a
            point of a^m + b^m = kind with ab != 0, or the image misses the
            target set
    """
    if not a_root or not b_root or F.add(F.pow(a_root, m), F.pow(b_root, m)) != kind:
        raise PreconditionViolated(f"({a_root}, {b_root}) is not on the degree-{m} Fermat set of kind {kind}")
    if check and not (is_member(Milnor(f, m), F, tuple(phi)) and is_member(Milnor(g, m), F, tuple(psi))):
        raise PreconditionViolated("arcs are not in the Milnor sets of f and g")
    image = (tuple(_scale_arc(F, arc, a_root) for arc in phi),
             tuple(_scale_arc(F, arc, b_root) for arc in psi))
    target = Z1Star(f, g, m) if kind == 1 else Z0Set(f, g, m)
    if check and not is_member(target, F, image[0] + image[1]):
        raise PreconditionViolated("image is outside the target arc set")
    return image


@dataclass
class FermatMapReport:
    """Outcome of check_fermat_map."""

    q: int
    m: int
    kind: int
    domain_size: int = 0
    image_size: int = 0
    target_size: int = 0
    well_defined: bool = True
    fiber_sizes: Set[int] = field(default_factory=set)
    extension_degree: int = 1
    surjective_over_base: bool = False
    surjective_over_extension: bool = False

    @property
    def fibers_exact(self) -> bool:
        return self.fiber_sizes == {self.m * self.m} or (self.domain_size == 0 and not self.fiber_sizes)

    @property
    def passed(self) -> bool:
        return (self.well_defined and self.fibers_exact
                and self.domain_size == self.m * self.m * self.image_size
                and self.surjective_over_extension)


def _embed(big: FiniteField, point: Point) -> Point:
    return tuple(tuple(big.from_int(c) for c in arc) for arc in point)


def _has_preimage(F: FiniteField, f: PolyFn, g: PolyFn, m: int, point: Point) -> bool:
    split = f.nvars
    phi_img, psi_img = point[:split], point[split:]
    lead_f = _leading(evaluate_on_arcs(f, F, phi_img, m), m)
    lead_g = _leading(evaluate_on_arcs(g, F, psi_img, m), m)
    a_roots, b_roots = F.roots(lead_f, m), F.roots(lead_g, m)
    if not a_roots or not b_roots:
        return False
    a, b = a_roots[0], b_roots[0]
    phi = tuple(_scale_arc(F, arc, F.inv(a)) for arc in phi_img)
    psi = tuple(_scale_arc(F, arc, F.inv(b)) for arc in psi_img)
    return (is_member(Milnor(f, m), F, phi) and is_member(Milnor(g, m), F, psi))


def check_fermat_map(f: PolyFn, g: PolyFn, m: int, q: int, kind: int = 1,
                     budget: int = DEFAULT_ENUM_BUDGET) -> FermatMapReport:
    """
    Check the Fermat map on F_q-points: every image lands in the target set,
    every image point has m^2 preimages, and every target point is hit once
    leading coefficients may be m-th roots taken in F_{q^e}.

    Raises:
        IncompatibleOrder: if m does not divide q-1
        PreconditionViolated: if q is not prime
        BudgetExceeded: if an enumeration exceeds the budget
    """
    if (q - 1) % m:
        raise IncompatibleOrder(f"level {m} does not divide q-1 = {q - 1}")
    if prime_power(q)[1] != 1:
        raise PreconditionViolated("the extension check embeds F_q as the prime field; q must be prime")
    F = FiniteField(q)
    report = FermatMapReport(q=q, m=m, kind=kind)
    milnor_f = enumerate_points(Milnor(f, m), q, budget)
    milnor_g = enumerate_points(Milnor(g, m), q, budget)
    roots = [(a, b) for a in F.nonzero() for b in F.nonzero()
             if F.add(F.pow(a, m), F.pow(b, m)) == kind]
    images: Counter = Counter()
    for phi in milnor_f:
        for psi in milnor_g:
            for a, b in roots:
                report.domain_size += 1
                try:
                    image = fermat_arc_map(phi, psi, a, b, f, g, m, F, kind, check=False)
                except PreconditionViolated:
                    report.well_defined = False
                    continue
                point = image[0] + image[1]
                target = Z1Star(f, g, m) if kind == 1 else Z0Set(f, g, m)
                if not is_member(target, F, point):
                    report.well_defined = False
                images[point] += 1
    report.image_size = len(images)
    report.fiber_sizes = set(images.values())
    targets = enumerate_points(Z1Star(f, g, m) if kind == 1 else Z0Set(f, g, m), q, budget)
    report.target_size = len(targets)
    report.surjective_over_base = all(_has_preimage(F, f, g, m, p) for p in targets)
    report.extension_degree = extension_degree(q, m)
    big = FiniteField(q ** report.extension_degree)
    report.surjective_over_extension = all(_has_preimage(big, f, g, m, _embed(big, p)) for p in targets)
    dprint(f"fermat map q={q} m={m} kind={kind}: domain={report.domain_size} "
           f"image={report.image_size} target={report.target_size} e={report.extension_degree}", tag="ARCS")
    return report
