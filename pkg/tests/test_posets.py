"""Minimal elements, iterated layers, downset filtration."""

import random

import pytest

from scarf.errors import InputError
from scarf.geometry import Orthant, Point
from scarf.posets import (
    FinitePoset,
    dickson_layers,
    downset,
    filter_by_downset,
    minimal_elements,
)


def P(*rows):
    return FinitePoset([Point(r) for r in rows])


S4 = ((0, 1), (1, 0), (1, 1), (2, 0))


class TestMinimalElements:
    def test_fixture(self):
        assert minimal_elements(P(*S4)) == {Point((0, 1)), Point((1, 0))}

    def test_empty(self):
        assert minimal_elements(FinitePoset([])) == frozenset()

    def test_singleton(self):
        assert minimal_elements(P((3, 3))) == {Point((3, 3))}

    def test_negative_orthant(self):
        po = FinitePoset([Point((0, 1)), Point((1, 0)), Point((1, 1))], Orthant((-1, -1)))
        assert minimal_elements(po) == {Point((1, 1))}


class TestDicksonLayers:
    def test_fixture_k1(self):
        lay = dickson_layers(P(*S4), 1)
        assert [set(l) for l in lay.layers] == [
            {Point((0, 1)), Point((1, 0))},
            {Point((1, 1)), Point((2, 0))},
        ]
        assert lay.residual == frozenset()

    def test_k0_is_minimal(self):
        po = P(*S4)
        lay = dickson_layers(po, 0)
        assert len(lay.layers) == 1
        assert set(lay.layers[0]) == minimal_elements(po)
        assert lay.residual == {Point((1, 1)), Point((2, 0))}

    def test_chain(self):
        lay = dickson_layers(P((0, 0), (1, 1), (2, 2)), 2)
        assert [set(l) for l in lay.layers] == [
            {Point((0, 0))},
            {Point((1, 1))},
            {Point((2, 2))},
        ]

    def test_stops_when_exhausted(self):
        lay = dickson_layers(P((0, 0)), 9)
        assert len(lay.layers) == 1
        assert lay.residual == frozenset()

    def test_layers_partition_and_peel(self):
        rng = random.Random(5)
        pts = {tuple(rng.randint(0, 8) for _ in range(3)) for _ in range(60)}
        po = P(*pts)
        lay = dickson_layers(po, 4)
        seen: set = set()
        remaining = set(po)
        for layer in lay.layers:
            assert layer, "no empty layers"
            assert not (set(layer) & seen)
            assert set(layer) == minimal_elements(FinitePoset(remaining))
            seen |= set(layer)
            remaining -= set(layer)
        assert lay.residual == frozenset(remaining)


class TestDownset:
    def test_fixture(self):
        assert downset(Point((1, 1)), P(*S4)) == {
            Point((0, 1)),
            Point((1, 0)),
            Point((1, 1)),
        }

    def test_minimal_is_self(self):
        assert downset(Point((0, 1)), P(*S4)) == {Point((0, 1))}

    def test_external_point(self):
        assert downset(Point((0, 0)), P((1, 1))) == frozenset()

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            downset(Point((1, 1, 1)), P(*S4))


class TestFilterByDownset:
    def test_fixtures(self):
        po = P(*S4)
        assert filter_by_downset(po, 0) == {Point((0, 1)), Point((1, 0))}
        assert filter_by_downset(po, 1) == {Point((0, 1)), Point((1, 0)), Point((2, 0))}
        assert filter_by_downset(po, 2) == set(po)

    def test_k0_equals_minimal(self):
        rng = random.Random(17)
        for _ in range(20):
            pts = {tuple(rng.randint(0, 6) for _ in range(3)) for _ in range(25)}
            po = P(*pts)
            assert filter_by_downset(po, 0) == minimal_elements(po)

    def test_contained_in_layers_strictly(self):
        # The filtration sits inside the layer union, and can be smaller.
        po = P((0, 1), (1, 0), (1, 1))
        filt = filter_by_downset(po, 1)
        lay = dickson_layers(po, 1)
        union = set().union(*(set(l) for l in lay.layers))
        assert filt <= union
        assert filt < union  # (1,1) is in layer 1 but has downset size 3

    def test_monotone_in_k(self):
        rng = random.Random(23)
        pts = {tuple(rng.randint(0, 10) for _ in range(4)) for _ in range(80)}
        po = P(*pts)
        prev: frozenset = frozenset()
        for k in range(8):
            cur = filter_by_downset(po, k)
            assert prev <= cur
            prev = cur

    def test_matches_brute_force_with_orthants(self):
        rng = random.Random(31)
        for _ in range(15):
            pts = [Point((rng.randint(-5, 5), rng.randint(-5, 5))) for _ in range(30)]
            pts = list(dict.fromkeys(pts))
            orth = Orthant((rng.choice([1, -1]), rng.choice([1, -1])))
            po = FinitePoset(pts, orth)
            k = rng.randint(0, 3)
            expect = {
                s for s in pts
                if sum(1 for u in pts if orth.contains(s - u)) <= k + 1
            }
            assert filter_by_downset(po, k) == expect


class TestPosetValidation:
    def test_rejects_mixed_dimensions(self):
        with pytest.raises(InputError):
            FinitePoset([Point((1, 2)), Point((1, 2, 3))])

    def test_order_is_partial_order_on_samples(self):
        rng = random.Random(9)
        pts = [Point((rng.randint(-4, 4), rng.randint(-4, 4))) for _ in range(12)]
        orth = Orthant((1, -1))
        for a in pts:
            assert orth.contains(a - a)
            for b in pts:
                if orth.contains(b - a) and orth.contains(a - b):
                    assert a == b
                for c in pts:
                    if orth.contains(b - a) and orth.contains(c - b):
                        assert orth.contains(c - a)
