"""Lattices, coset constraints, and exact point enumeration.

A lattice is given by integer basis columns of full column rank.  Cosets of
the lattice are described through the Smith normal form of the basis: a
point lies in a coset exactly when a fixed family of integer equalities and
congruences holds.  On top of that sit three enumerators used throughout
the package: all coset points inside a box, all coset points weakly or
strictly below a bound, and the minimal coset points of an orthant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InputError, InternalError, PositivityError
from .geometry import Box, Orthant, Point, cuboid, point_key, zero_point
from .intsolve import (
    fm_enumerate_integer,
    invert_rational,
    matvec,
    minimal_natural_solutions,
    nonzero_cone_direction,
    rational_rank,
    smith_normal_form,
)

__all__ = [
    "Lattice",
    "CosetSystem",
    "coset_constraints",
    "positivity_check",
    "points_in_box",
    "points_below",
    "minimal_orthant_points",
    "smith_normal_form",
]


def _int_point(p: Point) -> tuple[int, ...]:
    if not p.is_integral():
        raise InputError(f"integer point required, got {p}")
    return p.as_int_tuple()


class Lattice:
    """Integer lattice spanned by basis columns of full column rank."""

    __slots__ = ("columns", "dim", "rank", "_rows", "_snf", "_u_inverse", "_positive")

    def __init__(self, columns: Sequence[Sequence[int]]):
        cols = tuple(tuple(int(x) for x in col) for col in columns)
        if not cols:
            raise InputError("a lattice needs at least one basis column")
        n = len(cols[0])
        if n == 0 or any(len(c) != n for c in cols):
            raise InputError("basis columns must share a positive length")
        for col in columns:
            for x in col:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise InputError(f"basis entries must be integers, got {x!r}")
        self.columns = cols
        self.dim = n
        self.rank = len(cols)
        self._rows = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
        if self.rank > n or rational_rank(self._rows) != self.rank:
            raise InputError("basis columns must be linearly independent")
        self._snf = None
        self._u_inverse = None
        self._positive = None

    def matrix_rows(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def snf(self):
        """Cached (U, D, V) with U * basis * V = D."""
        if self._snf is None:
            self._snf = smith_normal_form(self._rows, check=True)
        return self._snf

    def diagonal(self) -> tuple[int, ...]:
        _, D, _ = self.snf()
        return tuple(D[i][i] for i in range(self.rank))

    def u_inverse(self) -> list[list[int]]:
        if self._u_inverse is None:
            U, _, _ = self.snf()
            inv = invert_rational(U)
            self._u_inverse = [[int(x) for x in row] for row in inv]
        return self._u_inverse

    def member(self, p: Point) -> bool:
        v = _int_point(p)
        if p.dim != self.dim:
            raise InputError(f"dimension mismatch: point {p} vs lattice of dimension {self.dim}")
        U, _, _ = self.snf()
        w = matvec(U, list(v))
        diag = self.diagonal()
        for i, val in enumerate(w):
            if i < self.rank:
                if val % diag[i] != 0:
                    return False
            elif val != 0:
                return False
        return True

    def canonical_rep(self, p: Point) -> Point:
        """The unique coset representative with reduced transform coordinates.

        Two points get the same representative exactly when their difference
        lies in the lattice.
        """
        v = _int_point(p)
        if p.dim != self.dim:
            raise InputError(f"dimension mismatch: point {p} vs lattice of dimension {self.dim}")
        U, _, _ = self.snf()
        w = matvec(U, list(v))
        diag = self.diagonal()
        reduced = [w[i] % diag[i] if i < self.rank else w[i] for i in range(self.dim)]
        back = matvec(self.u_inverse(), reduced)
        return Point(back)

    def positivity_witness(self) -> Optional[Point]:
        """A nonzero nonnegative lattice vector if one exists, else None."""
        if self._positive is None:
            z = nonzero_cone_direction(self._rows)
            if z is None:
                self._positive = (True, None)
            else:
                w = Point(matvec(self._rows, z))
                self._positive = (False, w)
        return self._positive[1]

    def check_positive(self) -> None:
        w = self.positivity_witness()
        if w is not None:
            raise PositivityError(
                f"lattice contains the nonzero nonnegative vector {w}", witness=w
            )

    def __repr__(self):
        return f"Lattice(columns={self.columns!r})"


@dataclass(frozen=True)
class CosetSystem:
    """Equality and congruence description of one lattice coset.

    equalities: rows (coeffs, rhs) with coeffs . x == rhs.
    congruences: rows (coeffs, modulus, residue) with coeffs . x == residue
    (mod modulus), modulus >= 2.
    """

    dim: int
    equalities: tuple[tuple[tuple[int, ...], int], ...]
    congruences: tuple[tuple[tuple[int, ...], int, int], ...]

    def satisfied_by(self, p: Point) -> bool:
        v = _int_point(p)
        if p.dim != self.dim:
            raise InputError(f"dimension mismatch: point {p} vs system of dimension {self.dim}")
        for coeffs, rhs in self.equalities:
            if sum(c * x for c, x in zip(coeffs, v)) != rhs:
                return False
        for coeffs, mod, res in self.congruences:
            if (sum(c * x for c, x in zip(coeffs, v)) - res) % mod != 0:
                return False
        return True


def positivity_check(lattice: Lattice):
    """(True, None) when the lattice meets the nonnegative orthant in 0 only,
    else (False, witness) with a nonzero nonnegative lattice vector."""
    w = lattice.positivity_witness()
    return (w is None, w)


def coset_constraints(lattice: Lattice, rep: Point) -> CosetSystem:
    """Equalities and congruences cutting out the coset of rep."""
    c = _int_point(rep)
    if rep.dim != lattice.dim:
        raise InputError(f"dimension mismatch: point {rep} vs lattice of dimension {lattice.dim}")
    U, _, _ = lattice.snf()
    uc = matvec(U, list(c))
    diag = lattice.diagonal()
    eqs = []
    congs = []
    for i in range(lattice.dim):
        coeffs = tuple(U[i])
        if i >= lattice.rank:
            eqs.append((coeffs, uc[i]))
        elif diag[i] >= 2:
            congs.append((coeffs, diag[i], uc[i] % diag[i]))
    return CosetSystem(dim=lattice.dim, equalities=tuple(eqs), congruences=tuple(congs))


# ---------------------------------------------------------------------------
# Enumeration


def _canonical_reps(lattice: Lattice, reps: Iterable[Point]) -> list[tuple[int, ...]]:
    out = []
    seen = set()
    for rep in reps:
        canon = lattice.canonical_rep(rep)
        key = canon.as_int_tuple()
        if key not in seen:
            seen.add(key)
            out.append(_int_point(rep))
    if not out:
        raise InputError("at least one coset representative is required")
    return out


def _iter_coset_in_ranges(lattice, c, lo, hi) -> Iterator[Point]:
    """Points c + basis*t with lo_i <= x_i <= hi_i, bounds exact rationals."""
    rows = []
    m = lattice.rank
    for i in range(lattice.dim):
        coeffs = tuple(Fraction(lattice._rows[i][j]) for j in range(m))
        if hi[i] is not None:
            rows.append((coeffs, Fraction(hi[i]) - c[i]))
        if lo[i] is not None:
            rows.append((tuple(-x for x in coeffs), c[i] - Fraction(lo[i])))
    for t in fm_enumerate_integer(rows, m):
        coords = [c[i] + sum(lattice._rows[i][j] * t[j] for j in range(m))
                  for i in range(lattice.dim)]
        yield Point(coords)


def points_in_box(lattice: Lattice, reps: Sequence[Point], box: Box) -> tuple[Point, ...]:
    """All points of the given cosets lying in the closed box."""
    if box.lo.dim != lattice.dim:
        raise InputError(f"dimension mismatch: box of dimension {box.lo.dim} vs lattice of dimension {lattice.dim}")
    found = set()
    lo = list(box.lo.coords)
    hi = list(box.hi.coords)
    for c in _canonical_reps(lattice, reps):
        for p in _iter_coset_in_ranges(lattice, c, lo, hi):
            found.add(p)
    return tuple(sorted(found, key=point_key))


def _effective_bound(b: Fraction, strict: bool) -> int:
    # integer x satisfies x < b iff x <= b - 1 (b integral) or x <= floor(b)
    if strict and b.denominator == 1:
        return b.numerator - 1
    return floor(b)


def points_below(lattice: Lattice, reps: Sequence[Point], bound: Point,
                 strict: bool = False) -> tuple[Point, ...]:
    """All coset points weakly (or strictly) below the bound in every coordinate.

    Finite only when the lattice meets the nonnegative orthant in 0 alone;
    otherwise a PositivityError carries the violating lattice vector.
    """
    if bound.dim != lattice.dim:
        raise InputError(f"dimension mismatch: point {bound} vs lattice of dimension {lattice.dim}")
    lattice.check_positive()
    hi = [_effective_bound(b, strict) for b in bound.coords]
    lo = [None] * lattice.dim
    found = set()
    for c in _canonical_reps(lattice, reps):
        for p in _iter_coset_in_ranges(lattice, c, lo, hi):
            found.add(p)
    return tuple(sorted(found, key=point_key))


def _orthant_candidates(lattice: Lattice, c: tuple[int, ...], orthant: Orthant) -> set[Point]:
    """Superset of the coset's minimal orthant points, via reflected systems.

    In reflected coordinates the coset becomes an equality-and-congruence
    system over the naturals; each congruence gains a slack pair so the
    whole thing feeds a minimal-solutions search.  Projections of minimal
    extended solutions cover every minimal point, with possible extras that
    the caller filters exactly.
    """
    system = coset_constraints(lattice, Point(c))
    signs = orthant.signs
    n = lattice.dim
    naux = len(system.congruences)
    nvars = n + 2 * naux
    rows = []
    for coeffs, rhs in system.equalities:
        row = [coeffs[j] * signs[j] for j in range(n)] + [0] * (2 * naux)
        rows.append((tuple(row), rhs))
    for a, (coeffs, mod, res) in enumerate(system.congruences):
        row = [coeffs[j] * signs[j] for j in range(n)] + [0] * (2 * naux)
        row[n + 2 * a] = -mod
        row[n + 2 * a + 1] = mod
        rows.append((tuple(row), res))
    out = set()
    for sol in minimal_natural_solutions(rows, nvars):
        y = sol[:n]
        if not any(y):
            continue
        out.add(Point([signs[j] * y[j] for j in range(n)]))
    return out


def minimal_orthant_points(lattice: Lattice, reps: Sequence[Point], orthant: Orthant,
                           exclude_zero: bool = False) -> tuple[Point, ...]:
    """Minimal points of the coset union inside the orthant's reflected order.

    With exclude_zero the origin is removed from the set before taking
    minimal elements, which is how neighbor candidates are produced.
    """
    if len(orthant.signs) != lattice.dim:
        raise InputError(f"dimension mismatch: orthant {orthant} vs lattice of dimension {lattice.dim}")
    creps = _canonical_reps(lattice, reps)
    zero = zero_point(lattice.dim)
    has_zero = any(lattice.member(zero - Point(c)) for c in creps)
    if has_zero and not exclude_zero:
        return (zero,)
    candidates = set()
    for c in creps:
        candidates |= _orthant_candidates(lattice, c, orthant)
    skip = {zero} if exclude_zero else set()
    result = []
    for a in sorted(candidates, key=point_key):
        inside = set(points_in_box(lattice, [Point(c) for c in creps], cuboid(zero, a)))
        inside -= skip
        inside.discard(a)
        if not inside:
            result.append(a)
    return tuple(result)
