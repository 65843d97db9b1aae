"""Lattice cosets: constraint systems, box scans, minimal orthant points."""

import itertools
import random
from fractions import Fraction

import pytest

from scarf.diophantine import (
    CosetSystem,
    Lattice,
    coset_constraints,
    minimal_orthant_points,
    points_below,
    points_in_box,
    positivity_check,
)
from scarf.errors import InputError, PositivityError
from scarf.geometry import Box, Orthant, Point, cuboid, leq_in, point_key, zero_point

KER111 = Lattice([(1, -1, 0), (0, 1, -1)])  # kernel of x1 + x2 + x3
KER123 = Lattice([(2, -1, 0), (3, 0, -1)])  # kernel of x1 + 2 x2 + 3 x3
ZERO3 = zero_point(3)


def random_lattice(rng, dim, rank, lo=-3, hi=3):
    while True:
        cols = [tuple(rng.randint(lo, hi) for _ in range(dim)) for _ in range(rank)]
        try:
            return Lattice(cols)
        except InputError:
            continue


# ---------------------------------------------------------------------------
# Lattice construction and membership


def test_lattice_validation():
    with pytest.raises(InputError):
        Lattice([])
    with pytest.raises(InputError):
        Lattice([(1, 0), (1,)])
    with pytest.raises(InputError):
        Lattice([(1, 2), (2, 4)])  # dependent columns
    with pytest.raises(InputError):
        Lattice([(1, 0), (0, 1), (1, 1)])  # rank cannot exceed dimension
    with pytest.raises(InputError):
        Lattice([(True, False)])


def test_membership_fixtures():
    assert KER111.member(Point((1, -1, 0)))
    assert KER111.member(Point((5, -2, -3)))
    assert not KER111.member(Point((1, 0, 0)))
    L = Lattice([(2, 0), (0, 3)])
    assert L.member(Point((2, 3)))
    assert not L.member(Point((2, 2)))
    assert not L.member(Point((1, 0)))
    with pytest.raises(InputError):
        KER111.member(Point((1, 0)))
    with pytest.raises(InputError):
        KER111.member(Point((Fraction(1, 2), 0, Fraction(-1, 2))))


def test_diagonal_fixtures():
    assert Lattice([(2, 0), (0, 3)]).diagonal() == (1, 6)
    assert Lattice([(1, 0), (0, 1)]).diagonal() == (1, 1)
    assert KER111.diagonal() == (1, 1)
    assert Lattice([(2, 4)]).diagonal() == (2,)


def test_canonical_rep():
    rng = random.Random(410)
    for L in (KER111, KER123, Lattice([(2, 0), (0, 3)])):
        assert L.canonical_rep(zero_point(L.dim)) == zero_point(L.dim)
        for _ in range(50):
            p = Point(tuple(rng.randint(-6, 6) for _ in range(L.dim)))
            c = L.canonical_rep(p)
            assert L.member(p - c)
            shift = Point(L.columns[rng.randrange(L.rank)])
            assert L.canonical_rep(p + shift) == c
            q = Point(tuple(rng.randint(-6, 6) for _ in range(L.dim)))
            assert (L.canonical_rep(q) == c) == L.member(p - q)


# ---------------------------------------------------------------------------
# positivity


def test_positivity_fixtures():
    assert positivity_check(KER111) == (True, None)
    assert positivity_check(Lattice([(1, -1)])) == (True, None)
    ok, witness = positivity_check(Lattice([(1, 0)]))
    assert not ok
    assert witness is not None
    assert witness.coords[1] == 0 and witness.coords[0] > 0
    ok, witness = positivity_check(Lattice([(2, 0), (0, 3)]))
    assert not ok


def test_check_positive_raises():
    L = Lattice([(1, 0)])
    with pytest.raises(PositivityError) as info:
        L.check_positive()
    w = info.value.witness
    assert w is not None and any(w.coords)
    assert L.member(w)
    assert all(x >= 0 for x in w.coords)
    KER111.check_positive()  # no error


def test_positivity_random():
    rng = random.Random(411)
    for _ in range(80):
        L = random_lattice(rng, rng.randint(2, 3), rng.randint(1, 2))
        ok, witness = positivity_check(L)
        if ok:
            # a violating vector would show up inside a small box
            for vals in itertools.product(range(-2, 3), repeat=L.rank):
                if any(vals):
                    v = [sum(L.columns[j][i] * vals[j] for j in range(L.rank))
                         for i in range(L.dim)]
                    assert not (all(x >= 0 for x in v) and any(v))
        else:
            assert L.member(witness)
            assert all(x >= 0 for x in witness.coords) and any(witness.coords)


# ---------------------------------------------------------------------------
# coset constraint systems


def test_coset_constraints_full_lattice():
    system = coset_constraints(Lattice([(1, 0), (0, 1)]), Point((3, -2)))
    assert system.equalities == ()
    assert system.congruences == ()
    assert system.satisfied_by(Point((0, 0)))


def test_coset_constraints_hyperplane():
    system = coset_constraints(KER111, ZERO3)
    assert len(system.equalities) == 1
    assert system.congruences == ()
    for vals in itertools.product(range(-2, 3), repeat=3):
        assert system.satisfied_by(Point(vals)) == (sum(vals) == 0)


def test_coset_constraints_congruence():
    L = Lattice([(2, 0)])
    system = coset_constraints(L, Point((1, 5)))
    assert len(system.equalities) == 1
    assert len(system.congruences) == 1
    assert system.congruences[0][1] == 2
    assert system.satisfied_by(Point((3, 5)))
    assert system.satisfied_by(Point((1, 5)))
    assert system.satisfied_by(Point((-1, 5)))
    assert not system.satisfied_by(Point((2, 5)))
    assert not system.satisfied_by(Point((1, 4)))


def test_coset_constraints_random():
    rng = random.Random(412)
    for _ in range(60):
        dim = rng.randint(2, 3)
        L = random_lattice(rng, dim, rng.randint(1, dim))
        rep = Point(tuple(rng.randint(-4, 4) for _ in range(dim)))
        system = coset_constraints(L, rep)
        for _ in range(20):
            q = Point(tuple(rng.randint(-5, 5) for _ in range(dim)))
            assert system.satisfied_by(q) == L.member(q - rep)


def test_coset_constraints_dim_mismatch():
    with pytest.raises(InputError):
        coset_constraints(KER111, Point((1, 0)))
    system = coset_constraints(KER111, ZERO3)
    with pytest.raises(InputError):
        system.satisfied_by(Point((0, 0)))


# ---------------------------------------------------------------------------
# box scans


def test_points_in_box_fixtures():
    box = Box(Point((-1, -1, -1)), Point((1, 1, 1)))
    pts = points_in_box(KER111, [ZERO3], box)
    assert len(pts) == 7
    assert ZERO3 in pts
    assert Point((1, -1, 0)) in pts and Point((-1, 0, 1)) in pts

    unit = points_in_box(KER111, [Point((1, 0, 0))], Box(ZERO3, Point((1, 1, 1))))
    assert unit == (Point((0, 0, 1)), Point((0, 1, 0)), Point((1, 0, 0)))


def test_points_in_box_degenerate():
    v = Point((1, -1, 0))
    assert points_in_box(KER111, [ZERO3], Box(v, v)) == (v,)
    w = Point((1, 0, 0))
    assert points_in_box(KER111, [ZERO3], Box(w, w)) == ()


def test_points_in_box_rep_dedup():
    box = Box(Point((-1, -1, -1)), Point((1, 1, 1)))
    pts = points_in_box(KER111, [ZERO3, Point((1, -1, 0)), Point((2, -2, 0))], box)
    assert len(pts) == 7


def test_points_in_box_rational_bounds():
    half = Fraction(1, 2)
    box = Box(Point((-half, -half, -half)), Point((Fraction(3, 2),) * 3))
    pts = points_in_box(KER111, [Point((1, 0, 0))], box)
    assert pts == (Point((0, 0, 1)), Point((0, 1, 0)), Point((1, 0, 0)))


def test_points_in_box_dim_mismatch():
    with pytest.raises(InputError):
        points_in_box(KER111, [ZERO3], Box(Point((0, 0)), Point((1, 1))))


def test_points_in_box_random():
    rng = random.Random(413)
    for _ in range(50):
        dim = rng.randint(2, 3)
        L = random_lattice(rng, dim, rng.randint(1, dim))
        reps = [Point(tuple(rng.randint(-3, 3) for _ in range(dim)))
                for _ in range(rng.randint(1, 2))]
        lo = tuple(rng.randint(-4, 0) for _ in range(dim))
        hi = tuple(l + rng.randint(0, 4) for l in lo)
        got = points_in_box(L, reps, Box(Point(lo), Point(hi)))
        want = sorted(
            (Point(v) for v in itertools.product(*[range(l, h + 1) for l, h in zip(lo, hi)])
             if any(L.member(Point(v) - r) for r in reps)),
            key=point_key,
        )
        assert list(got) == want


# ---------------------------------------------------------------------------
# points below a bound


def test_points_below_fixtures():
    weak = points_below(KER111, [ZERO3], Point((1, 1, 1)))
    assert len(weak) == 10
    assert ZERO3 in weak and Point((1, 1, -2)) in weak

    strict = points_below(KER111, [ZERO3], Point((1, 1, 1)), strict=True)
    assert strict == (ZERO3,)

    assert points_below(KER111, [ZERO3], ZERO3, strict=True) == ()
    assert points_below(KER111, [ZERO3], ZERO3) == (ZERO3,)


def test_points_below_rational_bound():
    # for integer points, x < 3/2 and x <= 1 coincide
    b = Point((Fraction(3, 2),) * 3)
    assert points_below(KER111, [ZERO3], b, strict=True) == \
        points_below(KER111, [ZERO3], Point((1, 1, 1)))


def test_points_below_requires_positivity():
    with pytest.raises(PositivityError):
        points_below(Lattice([(1, 0)]), [Point((0, 0))], Point((5, 5)))


def scan_below(weights, L, reps, bound, strict):
    # kernel-of-weights cosets have fixed weighted sum, so the region is a box
    pts = set()
    for rep in reps:
        s = sum(w * c for w, c in zip(weights, rep.coords))
        ranges = []
        for i, w in enumerate(weights):
            other = sum(weights[j] * bound.coords[j] for j in range(len(weights)) if j != i)
            lo = int(-(-(s - other) // w))  # ceil
            ranges.append(range(lo, int(bound.coords[i]) + 1))
        for vals in itertools.product(*ranges):
            p = Point(vals)
            if not L.member(p - rep):
                continue
            if strict and not all(x < b for x, b in zip(vals, bound.coords)):
                continue
            if not strict and not all(x <= b for x, b in zip(vals, bound.coords)):
                continue
            pts.add(p)
    return sorted(pts, key=point_key)


def test_points_below_random():
    rng = random.Random(414)
    cases = [((1, 1, 1), KER111), ((1, 2, 3), KER123)]
    for _ in range(40):
        weights, L = cases[rng.randrange(2)]
        reps = [Point(tuple(rng.randint(-2, 2) for _ in range(3)))
                for _ in range(rng.randint(1, 2))]
        bound = Point(tuple(rng.randint(-1, 3) for _ in range(3)))
        strict = rng.random() < 0.5
        got = points_below(L, reps, bound, strict=strict)
        assert list(got) == scan_below(weights, L, reps, bound, strict)
        if strict:
            assert set(got) <= set(points_below(L, reps, bound))


# ---------------------------------------------------------------------------
# minimal orthant points


def test_minimal_orthant_fixtures():
    plus = Orthant.from_string("+++")
    assert minimal_orthant_points(KER111, [ZERO3], plus, exclude_zero=True) == ()
    assert minimal_orthant_points(KER111, [ZERO3], plus) == (ZERO3,)

    units = minimal_orthant_points(KER111, [Point((1, 0, 0))], plus)
    assert units == (Point((0, 0, 1)), Point((0, 1, 0)), Point((1, 0, 0)))

    mixed = minimal_orthant_points(KER111, [ZERO3], Orthant.from_string("+-+"),
                                   exclude_zero=True)
    assert mixed == (Point((0, -1, 1)), Point((1, -1, 0)))


def test_minimal_orthant_dim_mismatch():
    with pytest.raises(InputError):
        minimal_orthant_points(KER111, [ZERO3], Orthant.from_string("++"))


def brute_orthant_minimal(L, reps, orthant, radius, exclude_zero):
    pts = []
    for vals in itertools.product(range(-radius, radius + 1), repeat=L.dim):
        p = Point(vals)
        if not orthant.contains(p):
            continue
        if exclude_zero and not any(vals):
            continue
        if any(L.member(p - r) for r in reps):
            pts.append(p)
    return sorted((p for p in pts
                   if not any(q != p and leq_in(orthant, q, p) for q in pts)),
                  key=point_key)


def test_minimal_orthant_random():
    rng = random.Random(415)
    radius = 5
    for _ in range(40):
        dim = rng.randint(2, 3)
        L = random_lattice(rng, dim, rng.randint(1, 2), -2, 2)
        reps = [Point(tuple(rng.randint(-2, 2) for _ in range(dim)))
                for _ in range(rng.randint(1, 2))]
        orthant = Orthant(tuple(rng.choice((1, -1)) for _ in range(dim)))
        exclude = rng.random() < 0.5
        got = minimal_orthant_points(L, reps, orthant, exclude_zero=exclude)

        for i, a in enumerate(got):
            for j, b in enumerate(got):
                if i != j:
                    assert not leq_in(orthant, a, b)

        brute = brute_orthant_minimal(L, reps, orthant, radius, exclude)
        got_slice = [p for p in got if all(abs(x) <= radius for x in p.coords)]
        assert got_slice == brute
        for p in brute:
            assert any(leq_in(orthant, m, p) for m in got)


def test_minimal_orthant_downset_inside_box():
    # every point of the orthant downset of a result sits in its cuboid
    pts = minimal_orthant_points(KER123, [Point((1, 1, 1))], Orthant.from_string("++-"))
    for p in pts:
        box = cuboid(zero_point(3), p)
        assert box.lo.dim == 3
        assert leq_in(Orthant.from_string("++-"), zero_point(3), p)
