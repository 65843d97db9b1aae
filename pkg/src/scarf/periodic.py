"""Neighbor structure of periodic point sets.

A periodic set is a finite union of cosets of one lattice.  Faces at a
point are computed in two stages.  First, per orthant, a breadth-first walk
over minimal coset steps collects every point whose down-box holds at most
dmax+1 set points; these are the only possible star vertices once dmax
reaches the star dimension.  Second, faces among the candidates are tested
exactly against the full periodic set, so reported faces are always
correct and the report says whether the vertex list is known to be
complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import Face, LabeledComplex
from .diophantine import Lattice, minimal_orthant_points, points_below, points_in_box
from .errors import InputError, InternalError
from .geometry import Orthant, Point, all_orthants, cuboid, join2, point_key, zero_point

__all__ = [
    "PeriodicSet",
    "validate_periodic_set",
    "CompletenessReport",
    "StarResult",
    "FaceOrbit",
    "QuotientResult",
    "exists_strictly_below",
    "neighbors_of_zero",
    "star_faces",
    "star_at",
    "certified_star",
    "quotient_complex",
    "certified_quotient",
]


class PeriodicSet:
    """Union of finitely many cosets of an integer lattice."""

    __slots__ = ("lattice", "reps")

    def __init__(self, lattice: Lattice, reps):
        seen = {}
        for rep in reps:
            if not isinstance(rep, Point):
                rep = Point(rep)
            if rep.dim != lattice.dim:
                raise InputError(
                    f"dimension mismatch: representative {rep} vs lattice of dimension {lattice.dim}"
                )
            canon = lattice.canonical_rep(rep)
            seen.setdefault(canon.coords, canon)
        if not seen:
            raise InputError("a periodic set needs at least one coset representative")
        lattice.check_positive()
        self.lattice = lattice
        self.reps = tuple(sorted(seen.values(), key=point_key))

    @property
    def dim(self) -> int:
        return self.lattice.dim

    def contains(self, p: Point) -> bool:
        if not p.is_integral():
            return False
        return any(self.lattice.member(p - rep) for rep in self.reps)

    def translated(self, t: Point) -> "PeriodicSet":
        return PeriodicSet(self.lattice, [rep + t for rep in self.reps])

    def __eq__(self, other):
        if not isinstance(other, PeriodicSet):
            return NotImplemented
        return self.lattice.columns == other.lattice.columns and self.reps == other.reps

    def __hash__(self):
        return hash((self.lattice.columns, self.reps))

    def __repr__(self):
        return f"PeriodicSet(lattice={self.lattice!r}, reps={self.reps!r})"


def validate_periodic_set(basis_columns, cosets=None) -> PeriodicSet:
    """Build a periodic set from raw basis columns and coset vectors."""
    lattice = Lattice(basis_columns)
    if cosets is None:
        reps = [zero_point(lattice.dim)]
    else:
        reps = [Point(c) for c in cosets]
    return PeriodicSet(lattice, reps)


@dataclass(frozen=True)
class CompletenessReport:
    """What a star computation can promise about itself.

    candidate_counts lists, per orthant, how many set points passed the
    down-box cardinality test (the origin included).  certified means the
    observed star dimension stayed strictly under the search depth, in which
    case the candidate pool provably contained every star vertex.
    """

    dmax_used: int
    observed_star_dimension: int
    certified: bool
    candidate_counts: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class StarResult:
    """All faces through one point, with the completeness report."""

    center: Point
    neighbors: tuple[Point, ...]
    faces: tuple[Face, ...]
    report: CompletenessReport

    @property
    def dimension(self) -> int:
        return self.report.observed_star_dimension


@dataclass(frozen=True)
class FaceOrbit:
    """A translation class of faces, named by its canonical representative."""

    face: Face
    incidences: int

    @property
    def dim(self) -> int:
        return self.face.dim


@dataclass(frozen=True)
class QuotientResult:
    orbits: tuple[FaceOrbit, ...]
    f_vector: tuple[int, ...]
    report: CompletenessReport


def exists_strictly_below(A: PeriodicSet, bound: Point):
    """A set point strictly below the bound in every coordinate, or None.

    Deterministic: the lexicographically least such point is returned.
    """
    pts = points_below(A.lattice, A.reps, bound, strict=True)
    return pts[0] if pts else None


def _candidate_vertices(A: PeriodicSet, dmax: int):
    """Per orthant, the set points whose down-box has at most dmax+1 set points.

    Walks from the origin, stepping from coset l to coset k by the minimal
    nonzero points of the single coset (rep_k - rep_l) + L inside the
    orthant.  Every step lands in the set again, and any qualifying point
    is a maximal qualifying predecessor plus one such minimal step, so the
    walk reaches all of them.  The qualifying region itself is finite, which
    bounds the walk.
    """
    zero = zero_point(A.dim)
    reps = A.reps
    zero_idx = next(i for i, r in enumerate(reps) if A.lattice.member(r))
    card_memo: dict = {}

    def downbox_card(p: Point) -> int:
        key = p.coords
        if key not in card_memo:
            card_memo[key] = len(points_in_box(A.lattice, A.reps, cuboid(zero, p)))
        return card_memo[key]

    counts = []
    candidates: set[Point] = set()
    for orth in all_orthants(A.dim):
        move_memo: dict = {}

        def moves(l: int, k: int):
            diff = A.lattice.canonical_rep(reps[k] - reps[l])
            if diff.coords not in move_memo:
                move_memo[diff.coords] = minimal_orthant_points(
                    A.lattice, [diff], orth, exclude_zero=True
                )
            return move_memo[diff.coords]

        accepted = {zero}
        rejected: set[Point] = set()
        frontier = [(zero, zero_idx)]
        while frontier:
            nxt = []
            for u, l in frontier:
                for k in range(len(reps)):
                    for h in moves(l, k):
                        s = u + h
                        if s in accepted or s in rejected:
                            continue
                        if downbox_card(s) <= dmax + 1:
                            accepted.add(s)
                            nxt.append((s, k))
                        else:
                            rejected.add(s)
            frontier = nxt
        counts.append((str(orth), len(accepted)))
        candidates |= accepted
    candidates.discard(zero)
    return sorted(candidates, key=point_key), tuple(counts)


def _star_at_zero(A: PeriodicSet, dmax: int) -> StarResult:
    if dmax < 1:
        raise InputError(f"search depth must be at least 1, got {dmax}")
    zero = zero_point(A.dim)
    if not A.contains(zero):
        raise InputError("the point set does not contain the origin")
    witness_memo: dict = {}

    def is_face_join(jn: Point) -> bool:
        key = jn.coords
        if key not in witness_memo:
            witness_memo[key] = exists_strictly_below(A, jn)
        return witness_memo[key] is None

    if not is_face_join(zero):
        raise InputError(
            f"the origin is strictly dominated by {witness_memo[zero.coords]} "
            "and is not a vertex"
        )
    candidates, counts = _candidate_vertices(A, dmax)

    neighbors = tuple(v for v in candidates if is_face_join(join2(zero, v)))
    faces = [Face([zero])]
    level = [((), zero)]
    while level:
        nxt = []
        for idxs, jn in level:
            start = idxs[-1] + 1 if idxs else 0
            for j in range(start, len(neighbors)):
                njn = join2(jn, neighbors[j])
                if is_face_join(njn):
                    nidxs = idxs + (j,)
                    nxt.append((nidxs, njn))
                    faces.append(Face([zero] + [neighbors[i] for i in nidxs]))
        level = nxt
    observed = max(f.dim for f in faces)
    report = CompletenessReport(dmax, observed, observed < dmax, counts)
    return StarResult(zero, neighbors, tuple(sorted(faces, key=Face.key)), report)


def star_at(A: PeriodicSet, vertex: Point, dmax: int) -> StarResult:
    """All faces containing the given set point, up to the search depth."""
    if not A.contains(vertex):
        raise InputError(f"point {vertex} is not in the set")
    base = _star_at_zero(A.translated(-vertex), dmax)
    return StarResult(
        center=vertex,
        neighbors=tuple(v + vertex for v in base.neighbors),
        faces=tuple(f.translated(vertex) for f in base.faces),
        report=base.report,
    )


def neighbors_of_zero(A: PeriodicSet, dmax: int):
    """Set points joined to the origin by a 1-face, plus the report."""
    star = star_at(A, zero_point(A.dim), dmax)
    return star.neighbors, star.report


def star_faces(A: PeriodicSet, dmax: int):
    """All faces containing the origin, as a complex, plus the report.

    The star is not downward closed; the returned object is the plain face
    container with only the mandatory empty face added.
    """
    star = star_at(A, zero_point(A.dim), dmax)
    return LabeledComplex(star.faces), star.report


def certified_star(A: PeriodicSet, vertex=None, dmax_start: int = 2,
                   dmax_limit: int = 256) -> StarResult:
    """Double the search depth until the star certifies itself complete."""
    if vertex is None:
        vertex = zero_point(A.dim)
    dmax = dmax_start
    while dmax <= dmax_limit:
        star = star_at(A, vertex, dmax)
        if star.report.certified:
            return star
        dmax *= 2
    raise InternalError(f"star at {vertex} did not certify up to depth {dmax_limit}")


def _canonical_face(lattice: Lattice, face: Face) -> Face:
    # translating by a lattice vector preserves the vertex order, so pinning
    # the least vertex to its canonical representative is well defined
    v0 = face.vertices[0]
    return face.translated(lattice.canonical_rep(v0) - v0)


def quotient_complex(A: PeriodicSet, dmax: int) -> QuotientResult:
    """Faces of the whole complex up to lattice translation.

    Runs one star per coset and folds each face to the translate whose
    least vertex is a canonical representative.  Every k-vertex class is
    met once per vertex, so its incidence count should equal k; the count
    is reported rather than assumed.
    """
    orbit_map: dict = {}
    observed = -1
    certified = True
    combined: dict[str, int] = {}
    for rep in A.reps:
        star = star_at(A, rep, dmax)
        observed = max(observed, star.report.observed_star_dimension)
        certified = certified and star.report.certified
        for name, cnt in star.report.candidate_counts:
            combined[name] = combined.get(name, 0) + cnt
        for f in star.faces:
            canon = _canonical_face(A.lattice, f)
            entry = orbit_map.setdefault(canon.key(), [canon, 0])
            entry[1] += 1
    orbits = tuple(
        FaceOrbit(face=f, incidences=c)
        for f, c in sorted(orbit_map.values(), key=lambda e: e[0].key())
    )
    top = max((o.dim for o in orbits), default=-1)
    fvec = tuple(sum(1 for o in orbits if o.dim == d) for d in range(top + 1))
    report = CompletenessReport(dmax, observed, certified, tuple(sorted(combined.items())))
    return QuotientResult(orbits=orbits, f_vector=fvec, report=report)


def certified_quotient(A: PeriodicSet, dmax_start: int = 2,
                       dmax_limit: int = 256) -> QuotientResult:
    dmax = dmax_start
    while dmax <= dmax_limit:
        result = quotient_complex(A, dmax)
        if result.report.certified:
            return result
        dmax *= 2
    raise InternalError(f"quotient did not certify up to depth {dmax_limit}")
