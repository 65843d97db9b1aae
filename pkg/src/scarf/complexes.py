"""Finite abstract simplicial complexes whose faces carry join labels.

Every face stores its multidegree, the coordinatewise join of its vertices;
the empty face is always present and carries no multidegree.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Optional

from .errors import InputError
from .geometry import Point, join, point_key


class Face:
    """A simplex: canonically sorted distinct vertices plus their join."""

    __slots__ = ("vertices", "multidegree")

    def __init__(self, vertices: Iterable[Point]):
        vs = sorted(set(vertices), key=point_key)
        if vs:
            n = len(vs[0])
            if any(len(v) != n for v in vs):
                raise InputError("mixed vertex dimensions in one face")
        self.vertices = tuple(vs)
        self.multidegree = join(vs) if vs else None

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Face) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "Face{%s}" % ", ".join(repr(v) for v in self.vertices)

    def key(self):
        return (len(self.vertices), tuple(point_key(v) for v in self.vertices))

    def translated(self, t: Point) -> "Face":
        return Face(v + t for v in self.vertices)

    def without(self, v: Point) -> "Face":
        if v not in self.vertices:
            raise InputError(f"{v!r} is not a vertex of {self!r}")
        return Face(u for u in self.vertices if u != v)


class LabeledComplex:
    """A downward closed set of faces.  The empty face is always a member."""

    __slots__ = ("_faces",)

    def __init__(self, faces: Iterable[Face]):
        table = {f.vertices: f for f in faces}
        table.setdefault((), Face(()))
        self._faces = table

    @classmethod
    def from_closed(cls, faces: Iterable[Face]) -> "LabeledComplex":
        """Wrap an already downward closed family without re-closing it."""
        return cls(faces)

    @property
    def dimension(self) -> int:
        return max(len(vs) for vs in self._faces) - 1

    def faces(self) -> tuple[Face, ...]:
        return tuple(sorted(self._faces.values(), key=Face.key))

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, face) -> bool:
        vs = face.vertices if isinstance(face, Face) else Face(face).vertices
        return vs in self._faces

    def __eq__(self, other) -> bool:
        return isinstance(other, LabeledComplex) and set(self._faces) == set(other._faces)

    def __hash__(self):
        return hash(frozenset(self._faces))

    def vertices(self) -> tuple[Point, ...]:
        return tuple(f.vertices[0] for f in self._faces.values() if len(f) == 1)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts by dimension 0..dim; the empty face is not counted."""
        d = self.dimension
        if d < 0:
            return ()
        counts = [0] * (d + 1)
        for vs in self._faces:
            if vs:
                counts[len(vs) - 1] += 1
        return tuple(counts)

    def star(self, v: Point) -> tuple[Face, ...]:
        """All faces containing the vertex v."""
        if (v,) not in self._faces:
            raise InputError(f"{v!r} is not a vertex of the complex")
        return tuple(sorted((f for f in self._faces.values() if v in f.vertices), key=Face.key))


def build_complex(vertex_sets: Iterable[Iterable[Point]]) -> LabeledComplex:
    """Downward closure of the given vertex sets, with joins computed per face."""
    table = {(): Face(())}
    dim_seen = None
    for vs in vertex_sets:
        face = Face(vs)
        if face.vertices:
            n = len(face.vertices[0])
            if dim_seen is None:
                dim_seen = n
            elif n != dim_seen:
                raise InputError("mixed vertex dimensions across faces")
        for r in range(1, len(face.vertices) + 1):
            for combo in itertools.combinations(face.vertices, r):
                if combo not in table:
                    table[combo] = Face(combo)
    return LabeledComplex.from_closed(table.values())
