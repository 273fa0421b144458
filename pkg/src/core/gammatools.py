#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Gamma Tools Module

Low-dimensional rational polyhedral sets in Q^n (n = 1, 2): their
o-minimal Euler characteristic and the lattice sums alpha_m over (1/m)Z^n.

Text syntax (pieces joined by `U`):

    (0,1)   (0,1]   [0,1]   (-inf,2)   {1/3}   {0, 1/2}
    (0,1)x(0,1)   {1/2}x(0,1)
    polygon((0,0),(1,0),(0,1))   segment((0,0),(1,1))   point(1/2,1/2)
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as cartesian
from math import ceil, floor
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import NonLatticeValue, ParseError, Unbounded
from .gring import LPoly, MotClass, lpoly_class, zero
from ..utils.debug import dprint

Coord = Tuple[Fraction, ...]


# ========== Pieces ==========


@dataclass(frozen=True)
class Point1:
    x: Fraction

    dim = 0
    bounded = True

    def lattice(self, m: int) -> List[Fraction]:
        return [self.x] if (self.x * m).denominator == 1 else []


@dataclass(frozen=True)
class Interval:
    """Open interval; None marks an infinite end."""

    lo: Optional[Fraction]
    hi: Optional[Fraction]

    dim = 1

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo >= self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @property
    def bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def lattice(self, m: int) -> List[Fraction]:
        if not self.bounded:
            raise Unbounded(f"interval ({self.lo}, {self.hi}) is unbounded")
        first = floor(self.lo * m) + 1
        last = ceil(self.hi * m) - 1
        return [Fraction(j, m) for j in range(first, last + 1)]

    def contains(self, x: Fraction) -> bool:
        return (self.lo is None or self.lo < x) and (self.hi is None or x < self.hi)


Piece1 = Union[Point1, Interval]


@dataclass(frozen=True)
class Point2:
    x: Fraction
    y: Fraction

    dim = 0
    bounded = True

    def lattice(self, m: int) -> List[Coord]:
        if (self.x * m).denominator == 1 and (self.y * m).denominator == 1:
            return [(self.x, self.y)]
        return []


def _cross(o: Coord, a: Coord, b: Coord) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _grid(vertices: Sequence[Coord], m: int) -> List[Coord]:
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    return [(Fraction(i, m), Fraction(j, m))
            for i in range(floor(min(xs) * m), ceil(max(xs) * m) + 1)
            for j in range(floor(min(ys) * m), ceil(max(ys) * m) + 1)]


@dataclass(frozen=True)
class Segment:
    """Open segment between two distinct points."""

    start: Coord
    end: Coord

    dim = 1
    bounded = True

    def contains(self, p: Coord) -> bool:
        if _cross(self.start, self.end, p) != 0:
            return False
        dot = (p[0] - self.start[0]) * (self.end[0] - self.start[0]) + \
              (p[1] - self.start[1]) * (self.end[1] - self.start[1])
        length = (self.end[0] - self.start[0]) ** 2 + (self.end[1] - self.start[1]) ** 2
        return 0 < dot < length

    def lattice(self, m: int) -> List[Coord]:
        return [p for p in _grid((self.start, self.end), m) if self.contains(p)]


@dataclass(frozen=True)
class Polygon:
    """Open convex polygon, vertices listed in boundary order."""

    vertices: Tuple[Coord, ...]

    dim = 2
    bounded = True

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise ValueError("a polygon needs at least three vertices")
        n = len(self.vertices)
        signs = {_cross(self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]) > 0
                 for i in range(n)}
        if len(signs) != 1 or any(
                _cross(self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]) == 0
                for i in range(n)):
            raise ValueError("polygon vertices must be in convex position")

    def contains(self, p: Coord) -> bool:
        n = len(self.vertices)
        sides = [_cross(self.vertices[i], self.vertices[(i + 1) % n], p) for i in range(n)]
        return all(s > 0 for s in sides) or all(s < 0 for s in sides)

    def lattice(self, m: int) -> List[Coord]:
        return [p for p in _grid(self.vertices, m) if self.contains(p)]


@dataclass(frozen=True)
class ProductCell:
    """A x B for one-dimensional pieces A, B."""

    first: Piece1
    second: Piece1

    @property
    def dim(self) -> int:
        return self.first.dim + self.second.dim

    @property
    def bounded(self) -> bool:
        return self.first.bounded and self.second.bounded

    def lattice(self, m: int) -> List[Coord]:
        return [(x, y) for x in self.first.lattice(m) for y in self.second.lattice(m)]


Piece = Union[Point1, Interval, Point2, Segment, Polygon, ProductCell]


@dataclass(frozen=True)
class GammaSet:
    """Finite disjoint union of relatively open pieces in Q^n, n in {1, 2}."""

    dimension: int
    pieces: Tuple[Piece, ...]

    def __post_init__(self):
        if self.dimension not in (1, 2):
            raise ValueError("only dimensions 1 and 2 are supported")
        if self.dimension == 1:
            _check_disjoint_1d(self.pieces)
        else:
            _check_disjoint_2d(self.pieces)

    @property
    def bounded(self) -> bool:
        return all(p.bounded for p in self.pieces)


def _check_disjoint_1d(pieces: Sequence[Piece]) -> None:
    points = [p.x for p in pieces if isinstance(p, Point1)]
    intervals = [p for p in pieces if isinstance(p, Interval)]
    if len(set(points)) != len(points):
        raise ValueError("repeated point in Gamma set")
    for x in points:
        if any(iv.contains(x) for iv in intervals):
            raise ValueError(f"point {x} lies inside another piece")
    ordered = sorted(intervals, key=lambda iv: (iv.lo is not None, iv.lo or 0))
    for left, right in zip(ordered, ordered[1:]):
        if left.hi is None or right.lo is None or left.hi > right.lo:
            raise ValueError("overlapping intervals in Gamma set")


# A constraint (a, c) reads a[0]*x + a[1]*y = c or < c.
Constraint = Tuple[Tuple[Fraction, Fraction], Fraction]


def _axis_constraints(piece: Piece1, axis: int) -> Tuple[List[Constraint], List[Constraint]]:
    unit = (Fraction(1), Fraction(0)) if axis == 0 else (Fraction(0), Fraction(1))
    minus = (-unit[0], -unit[1])
    if isinstance(piece, Point1):
        return [(unit, piece.x)], []
    strict = []
    if piece.lo is not None:
        strict.append((minus, -piece.lo))
    if piece.hi is not None:
        strict.append((unit, piece.hi))
    return [], strict


def _edge(o: Coord, a: Coord, sign: int) -> Constraint:
    # sign * _cross(o, a, p) > 0, rewritten as a strict upper bound
    u = (-(a[1] - o[1]), a[0] - o[0])
    k = (a[1] - o[1]) * o[0] - (a[0] - o[0]) * o[1]
    return (-sign * u[0], -sign * u[1]), sign * k


def _constraints(piece: Piece) -> Tuple[List[Constraint], List[Constraint]]:
    """Equalities and strict inequalities cutting out a 2-D piece."""
    if isinstance(piece, Point2):
        return [((Fraction(1), Fraction(0)), piece.x), ((Fraction(0), Fraction(1)), piece.y)], []
    if isinstance(piece, Segment):
        s, e = piece.start, piece.end
        d = (e[0] - s[0], e[1] - s[1])
        normal = (-d[1], d[0])
        along = d[0] * s[0] + d[1] * s[1]
        return ([(normal, normal[0] * s[0] + normal[1] * s[1])],
                [((-d[0], -d[1]), -along), (d, d[0] * e[0] + d[1] * e[1])])
    if isinstance(piece, Polygon):
        v = piece.vertices
        sign = 1 if _cross(v[0], v[1], v[2]) > 0 else -1
        return [], [_edge(v[i], v[(i + 1) % len(v)], sign) for i in range(len(v))]
    eq_x, lt_x = _axis_constraints(piece.first, 0)
    eq_y, lt_y = _axis_constraints(piece.second, 1)
    return eq_x + eq_y, lt_x + lt_y


def _feasible(equalities: List[Constraint], strict: List[Constraint]) -> bool:
    """Exact feasibility of a planar system by substitution and Fourier-Motzkin."""
    eqs, lts = list(equalities), list(strict)
    while eqs:
        (a, c), eqs = eqs[0], eqs[1:]
        if a[0] == 0 and a[1] == 0:
            if c != 0:
                return False
            continue
        v = 0 if a[0] != 0 else 1

        def substitute(row: Constraint) -> Constraint:
            b, d = row
            r = b[v] / a[v]
            return (b[0] - r * a[0], b[1] - r * a[1]), d - r * c

        eqs = [substitute(row) for row in eqs]
        lts = [substitute(row) for row in lts]
    for v in (0, 1):
        upper = [row for row in lts if row[0][v] > 0]
        lower = [row for row in lts if row[0][v] < 0]
        rest = [row for row in lts if row[0][v] == 0]
        for (bl, dl), (bu, du) in cartesian(lower, upper):
            wl, wu = bu[v], -bl[v]
            rest.append(((wl * bl[0] + wu * bu[0], wl * bl[1] + wu * bu[1]), wl * dl + wu * du))
        lts = rest
    return all(0 < d for _, d in lts)


def _check_disjoint_2d(pieces: Sequence[Piece]) -> None:
    systems = [_constraints(p) for p in pieces]
    for i, j in combinations(range(len(pieces)), 2):
        if _feasible(systems[i][0] + systems[j][0], systems[i][1] + systems[j][1]):
            raise ValueError(f"pieces {pieces[i]} and {pieces[j]} overlap")


@dataclass(frozen=True)
class AffineFunctional:
    """l(x) = sum c_i x_i + constant."""

    coeffs: Tuple[int, ...]
    constant: Fraction = Fraction(0)

    def __call__(self, point: Union[Fraction, Coord]) -> Fraction:
        if not isinstance(point, tuple):
            point = (point,)
        return sum((c * x for c, x in zip(self.coeffs, point)), Fraction(0)) + self.constant

    @classmethod
    def zero(cls, n: int) -> "AffineFunctional":
        return cls((0,) * n)


# ========== Operations ==========


def ominimal_chi(s: GammaSet) -> int:
    """Sum of (-1)^dim over the pieces; chi((0,1)) = -1."""
    return sum((-1) ** p.dim for p in s.pieces)


def lattice_points(s: GammaSet, m: int) -> List[Union[Fraction, Coord]]:
    """
    Points of s with every coordinate in (1/m)Z.

    Raises:
        Unbounded: if s is unbounded
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not s.bounded:
        raise Unbounded("lattice points of an unbounded Gamma set")
    points = []
    for piece in s.pieces:
        points.extend(piece.lattice(m))
    return sorted(points)


def _coord_sum(point: Union[Fraction, Coord]) -> Fraction:
    return sum(point) if isinstance(point, tuple) else point


def _weight(point, m: int, n: int, shift: int = 0) -> LPoly:
    """L^(-m|point| - shift) * (L-1)^n."""
    base = LPoly.from_dict({1: 1, 0: -1})
    poly = LPoly.const(1)
    for _ in range(n):
        poly = poly * base
    return poly.shift(-int(m * _coord_sum(point)) - shift)


def alpha_m(delta: GammaSet, l: AffineFunctional, m: int, strict: bool = False) -> MotClass:
    """
    sum over lattice points g with m*l(g) integral of L^(-m(|g| + l(g))) (L-1)^n.

    Points where m*l(g) is not an integer contribute nothing, or raise
    NonLatticeValue when strict.

    Raises:
        Unbounded: if delta is unbounded
    """
    total = LPoly()
    for point in lattice_points(delta, m):
        value = l(point) * m
        if value.denominator != 1:
            if strict:
                raise NonLatticeValue(f"l({point}) = {l(point)} is not in (1/{m})Z")
            continue
        total = total + _weight(point, m, delta.dimension, int(value))
    dprint(f"alpha_{m}: {len(total.terms)} powers of L", tag="GAMMA")
    return lpoly_class(total)


def alpha_tilde(delta: GammaSet, m: int) -> MotClass:
    """alpha_m with l = 0."""
    return alpha_m(delta, AffineFunctional.zero(delta.dimension), m)


def alpha_by_fibers(delta: GammaSet, l: AffineFunctional, m: int) -> MotClass:
    """alpha_m assembled from the fibres of l: sum_e alpha_tilde(l = e/m) * L^-e."""
    fibers: Dict[int, List] = {}
    for point in lattice_points(delta, m):
        value = l(point) * m
        if value.denominator == 1:
            fibers.setdefault(int(value), []).append(point)
    total = zero()
    for e in sorted(fibers):
        fiber = LPoly()
        for point in fibers[e]:
            fiber = fiber + _weight(point, m, delta.dimension)
        total = total + lpoly_class(fiber.shift(-e))
    return total


def product(a: GammaSet, b: GammaSet) -> GammaSet:
    """A x B for one-dimensional sets."""
    if a.dimension != 1 or b.dimension != 1:
        raise ValueError("products are formed from one-dimensional sets")
    return GammaSet(2, tuple(ProductCell(x, y) for x, y in cartesian(a.pieces, b.pieces)))


def union(a: GammaSet, b: GammaSet) -> GammaSet:
    """Disjoint union."""
    if a.dimension != b.dimension:
        raise ValueError("cannot join sets of different dimension")
    return GammaSet(a.dimension, a.pieces + b.pieces)


# ========== Parsing ==========


def _number(text: str) -> Optional[Fraction]:
    text = text.strip()
    if text in ("inf", "+inf", "-inf"):
        return None
    try:
        return Fraction(text)
    except ValueError:
        raise ParseError(f"bad number {text!r}")


def _split_top(text: str, sep: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


def _parse_1d(text: str) -> List[Piece1]:
    if text.startswith("{") and text.endswith("}"):
        values = [_number(v) for v in text[1:-1].split(",")]
        if None in values:
            raise ParseError("points must be finite")
        return [Point1(v) for v in values]
    match = re.fullmatch(r"([(\[])\s*([^,]+),\s*([^,]+?)\s*([)\]])", text)
    if not match:
        raise ParseError(f"bad interval {text!r}")
    left, lo_text, hi_text, right = match.groups()
    lo, hi = _number(lo_text), _number(hi_text)
    if lo is None and lo_text.strip() != "-inf":
        raise ParseError(f"left end must be finite or -inf: {text!r}")
    if hi is None and hi_text.strip() == "-inf":
        raise ParseError(f"right end cannot be -inf: {text!r}")
    if lo is not None and hi is not None and (lo > hi or (lo == hi and (left, right) != ("[", "]"))):
        raise ParseError(f"empty interval {text!r}")
    pieces: List[Piece1] = []
    if left == "[":
        if lo is None:
            raise ParseError("closed end at infinity")
        pieces.append(Point1(lo))
    if lo is None or hi is None or lo < hi:
        pieces.append(Interval(lo, hi))
    if right == "]":
        if hi is None:
            raise ParseError("closed end at infinity")
        if lo != hi or left != "[":
            pieces.append(Point1(hi))
    return pieces


def _pair(text: str) -> Coord:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"bad point {text!r}")
    coords = [_number(v) for v in text[1:-1].split(",")]
    if len(coords) != 2 or None in coords:
        raise ParseError(f"bad point {text!r}")
    return tuple(coords)


def _parse_piece(text: str) -> Tuple[int, List[Piece]]:
    for name in ("polygon", "segment", "point"):
        if text.startswith(name + "(") and text.endswith(")"):
            inner = text[len(name) + 1:-1]
            try:
                if name == "point":
                    return 2, [Point2(*_pair(f"({inner})"))]
                coords = [_pair(p) for p in _split_top(inner, ",")]
                if name == "segment":
                    if len(coords) != 2 or coords[0] == coords[1]:
                        raise ParseError(f"bad segment {text!r}")
                    return 2, [Segment(coords[0], coords[1])]
                return 2, [Polygon(tuple(coords))]
            except ValueError as e:
                raise ParseError(str(e))
    factors = _split_top(text, "x")
    if len(factors) == 2:
        return 2, [ProductCell(a, b) for a in _parse_1d(factors[0]) for b in _parse_1d(factors[1])]
    if len(factors) > 2:
        raise ParseError(f"only products of two factors are supported: {text!r}")
    return 1, list(_parse_1d(text))


def parse_gamma_set(text: str) -> GammaSet:
    """
    Parse a union of pieces.

    Raises:
        ParseError: on malformed or overlapping input
    """
    dims, pieces = set(), []
    for part in _split_top(text.strip(), "U"):
        if not part:
            raise ParseError(f"empty piece in {text!r}")
        dim, found = _parse_piece(part)
        dims.add(dim)
        pieces.extend(found)
    if len(dims) != 1:
        raise ParseError("pieces of different dimensions")
    try:
        return GammaSet(dims.pop(), tuple(pieces))
    except ValueError as e:
        raise ParseError(str(e))


def parse_functional(text: str, n: int) -> AffineFunctional:
    """`0`, `x1`, `2*x1 - x2 + 1/2` style affine functionals."""
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty functional")
    if text[0] not in "+-":
        text = "+" + text
    coeffs, constant = [0] * n, Fraction(0)
    for sign, body in re.findall(r"([+-])([^+-]+)", text):
        factor = -1 if sign == "-" else 1
        match = re.fullmatch(r"(?:(\d+)\*)?x(\d+)", body)
        if match:
            index = int(match.group(2))
            if not 1 <= index <= n:
                raise ParseError(f"x{index} out of range for dimension {n}")
            coeffs[index - 1] += factor * int(match.group(1) or 1)
        else:
            value = _number(body)
            if value is None:
                raise ParseError("infinite constant")
            constant += factor * value
    return AffineFunctional(tuple(coeffs), constant)
