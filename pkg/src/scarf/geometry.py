"""Exact coordinatewise order structure on Q^n.

Points carry arbitrary-precision rationals.  Floats are rejected at
construction, so no rounding can creep in anywhere downstream.  All
operations are pure functions on immutable values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InputError


def as_fraction(value) -> Fraction:
    """Coerce an int, a "p/q" string or a Fraction to Fraction; floats are refused."""
    if isinstance(value, float):
        raise InputError(f"floating point is not allowed: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"not a rational: {value!r}") from exc


class Point:
    """An immutable vector of exact rationals with structural equality."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        cs = tuple(as_fraction(c) for c in coords)
        if not cs:
            raise InputError("a point needs at least one coordinate")
        self.coords = cs

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i) -> Fraction:
        return self.coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "Point(%s)" % ", ".join(str(c) for c in self.coords)

    def __add__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        _same_dim(self, other)
        return Point(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        _same_dim(self, other)
        return Point(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Point(-c for c in self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_int_tuple(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise InputError(f"integer point required, got {self!r}")
        return tuple(c.numerator for c in self.coords)

    def as_strings(self) -> tuple[str, ...]:
        return tuple(str(c) for c in self.coords)


def zero_point(n: int) -> Point:
    return Point([0] * n)


def _same_dim(a: Point, b: Point) -> None:
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")


def point_key(p: Point) -> tuple[Fraction, ...]:
    """Sort key giving the canonical (lexicographic) order on points."""
    return p.coords


def join(points: Iterable[Point]) -> Point:
    """Coordinatewise maximum of a nonempty collection."""
    pts = list(points)
    if not pts:
        raise InputError("join of an empty collection")
    acc = list(pts[0].coords)
    for p in pts[1:]:
        _same_dim(pts[0], p)
        for i, c in enumerate(p.coords):
            if c > acc[i]:
                acc[i] = c
    return Point(acc)


def join2(a: Point, b: Point) -> Point:
    _same_dim(a, b)
    return Point(x if x >= y else y for x, y in zip(a.coords, b.coords))


def meet(points: Iterable[Point]) -> Point:
    """Coordinatewise minimum of a nonempty collection."""
    pts = list(points)
    if not pts:
        raise InputError("meet of an empty collection")
    acc = list(pts[0].coords)
    for p in pts[1:]:
        _same_dim(pts[0], p)
        for i, c in enumerate(p.coords):
            if c < acc[i]:
                acc[i] = c
    return Point(acc)


def leq(a: Point, b: Point) -> bool:
    """Componentwise a <= b."""
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a.coords, b.coords))


def strictly_below(a: Point, b: Point) -> bool:
    """Componentwise a < b in every coordinate."""
    _same_dim(a, b)
    return all(x < y for x, y in zip(a.coords, b.coords))


class Relation(Enum):
    EQUAL = "equal"
    LEQ = "leq"
    STRICTLY_BELOW = "strictly_below"
    GEQ = "geq"
    STRICTLY_ABOVE = "strictly_above"
    INCOMPARABLE = "incomparable"


def compare(a: Point, b: Point) -> Relation:
    """Strongest order relation between a and b under the componentwise order."""
    _same_dim(a, b)
    if a == b:
        return Relation.EQUAL
    if leq(a, b):
        return Relation.STRICTLY_BELOW if strictly_below(a, b) else Relation.LEQ
    if leq(b, a):
        return Relation.STRICTLY_ABOVE if strictly_below(b, a) else Relation.GEQ
    return Relation.INCOMPARABLE


@dataclass(frozen=True)
class Orthant:
    """A closed orthant of R^n given by a sign pattern (+1 / -1 per axis)."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.signs:
            raise InputError("an orthant needs at least one axis")
        if any(s not in (1, -1) for s in self.signs):
            raise InputError(f"orthant signs must be +1 or -1: {self.signs!r}")

    @classmethod
    def from_string(cls, text: str) -> "Orthant":
        try:
            return cls(tuple({"+": 1, "-": -1}[ch] for ch in text))
        except KeyError as exc:
            raise InputError(f"bad orthant string {text!r}; use '+' and '-' only") from exc

    @classmethod
    def positive(cls, n: int) -> "Orthant":
        return cls((1,) * n)

    @property
    def dim(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def contains(self, p: Point) -> bool:
        if len(p) != self.dim:
            raise InputError(f"dimension mismatch: {len(p)} vs {self.dim}")
        return all(s * c >= 0 for s, c in zip(self.signs, p.coords))


def all_orthants(n: int) -> Iterator[Orthant]:
    for signs in itertools.product((1, -1), repeat=n):
        yield Orthant(signs)


def reflect(orthant: Orthant, p: Point) -> Point:
    """Flip the coordinates with negative orthant sign.

    This is an involution carrying the orthant order onto the componentwise
    order on the positive orthant: a <=_P b iff reflect(P, a) <= reflect(P, b).
    """
    if len(p) != orthant.dim:
        raise InputError(f"dimension mismatch: {len(p)} vs {orthant.dim}")
    return Point(s * c for s, c in zip(orthant.signs, p.coords))


def leq_in(orthant: Orthant, a: Point, b: Point) -> bool:
    """a <=_P b, i.e. b - a lies in the orthant."""
    _same_dim(a, b)
    return orthant.contains(b - a)


@dataclass(frozen=True)
class Box:
    """An axis-parallel box [lo, hi], possibly degenerate, never empty."""

    lo: Point
    hi: Point

    def __post_init__(self):
        _same_dim(self.lo, self.hi)
        if not leq(self.lo, self.hi):
            raise InputError(f"box corners out of order: {self.lo!r} !<= {self.hi!r}")

    @property
    def dim(self) -> int:
        return len(self.lo)

    def contains(self, x: Point) -> bool:
        return leq(self.lo, x) and leq(x, self.hi)


def cuboid(a: Point, b: Point) -> Box:
    """The smallest box containing a and b."""
    return Box(meet([a, b]), join([a, b]))


def cuboid_contains(a: Point, b: Point, x: Point) -> bool:
    return cuboid(a, b).contains(x)
