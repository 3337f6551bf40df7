"""Cardinality, largest gap, line count, and smallest enclosing balls.

The enclosing-ball oracle enumerates every pair-diameter and triple-circum
candidate (exact for point sets in the plane) instead of the production
randomized recursion.
"""

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ndist import (
    PointSet,
    UnsupportedScaleError,
    UsageError,
    cardinality_distance,
    enclosing_ball,
    enclosing_ball_diameter_distance,
    enclosing_ball_volume_distance,
    line_count_distance,
    max_gap_distance,
)
from ndist.classic import (
    cardinality_value,
    enclosing_area_value,
    enclosing_diameter_value,
    line_count_value,
    max_gap_value,
)

from conftest import clustered_rows, random_rows


# ---------------------------------------------------------------------------
# cardinality


def test_cardinality_counts_distinct_rows():
    assert cardinality_value([(0, 0), (0, 0), (1, 0)]) == 1.0
    assert cardinality_value([(1, 1), (1, 1), (1, 1)]) == 0.0
    assert cardinality_value([(0,), (1,), (2,), (0,)]) == 2.0
    assert cardinality_distance(PointSet.from_rows([(0, 0), (3, 4)])) == 1.0


@given(st.lists(st.integers(0, 3), min_size=2, max_size=8))
def test_cardinality_equals_set_size_minus_one(labels):
    rows = [(float(v), float(v)) for v in labels]
    assert cardinality_value(rows) == len(set(labels)) - 1


# ---------------------------------------------------------------------------
# largest gap


def test_max_gap_frozen():
    assert max_gap_value([1.0, 2.0, 5.0, 7.0]) == 3.0
    assert max_gap_value([7.0, 1.0, 5.0, 2.0]) == 3.0  # order free
    assert max_gap_value([4.0, 4.0]) == 0.0
    with pytest.raises(UsageError):
        max_gap_value([1.0])


def test_max_gap_distance_accepts_line_sets_and_sequences():
    ps = PointSet.from_rows([(1.0,), (2.0,), (5.0,), (7.0,)])
    assert max_gap_distance(ps) == 3.0
    assert max_gap_distance([0.0, 10.0]) == 10.0


@given(st.lists(st.floats(-100, 100), min_size=2, max_size=12))
def test_max_gap_equals_sorted_adjacent_difference(values):
    s = sorted(values)
    want = max(b - a for a, b in zip(s, s[1:]))
    assert max_gap_value(values) == want


# ---------------------------------------------------------------------------
# line count


def test_line_count_frozen():
    assert line_count_value([(0, 0), (1, 0), (0, 1)]) == 3.0
    assert line_count_value([(0, 0), (1, 0), (2, 0)]) == 1.0
    assert line_count_value([(0, 0), (1, 0), (1, 0)]) == 1.0
    assert line_count_value([(1, 1), (1, 1)]) == 0.0
    circle = [(math.cos(k), math.sin(k)) for k in range(5)]
    assert line_count_value(circle) == 10.0  # no three concyclic points align


def test_line_count_three_by_three_grid():
    grid = [(float(i), float(j)) for i in range(3) for j in range(3)]
    # 3 rows + 3 columns + 2 diagonals + 12 two-point lines
    assert line_count_value(grid) == 20.0


def test_line_count_collinear_subsets_merge():
    rows = [(0, 0), (1, 0), (2, 0), (0, 1)]
    # the three base points share one line; the apex adds one line per base point
    assert line_count_value(rows) == 4.0


def test_line_count_detects_reframed_midpoints():
    # an exactly planted midpoint must stay on its line after translation
    # and scaling move the rounding noise around
    rng = random.Random(2121)
    for trial in range(50):
        a = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        b = (rng.uniform(-1, 1), rng.uniform(-1, 1))
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        apex = (rng.uniform(-1, 1), rng.uniform(2, 3))
        shift = (rng.uniform(-5, 5), rng.uniform(-5, 5))
        scale = rng.choice((0.25, 3.0, 17.0))
        rows = [
            tuple(scale * (v + s) for v, s in zip(r, shift))
            for r in (a, b, mid, apex)
        ]
        assert line_count_value(rows) == 4.0, rows


def test_line_count_needs_the_plane():
    with pytest.raises(UsageError):
        line_count_distance(PointSet.from_rows([(0.0,), (1.0,)]))
    # 3-D input is fine
    assert line_count_value([(0, 0, 0), (1, 0, 0), (0, 1, 0)]) == 3.0


@given(st.integers(3, 7))
def test_line_count_convex_position(k):
    poly = [(math.cos(2 * math.pi * t / k), math.sin(2 * math.pi * t / k)) for t in range(k)]
    assert line_count_value(poly) == k * (k - 1) / 2


# ---------------------------------------------------------------------------
# smallest enclosing ball


def _circumcenter_2d(a, b, c):
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) < 1e-14:
        return None
    ux = (
        (a[0] ** 2 + a[1] ** 2) * (b[1] - c[1])
        + (b[0] ** 2 + b[1] ** 2) * (c[1] - a[1])
        + (c[0] ** 2 + c[1] ** 2) * (a[1] - b[1])
    ) / d
    uy = (
        (a[0] ** 2 + a[1] ** 2) * (c[0] - b[0])
        + (b[0] ** 2 + b[1] ** 2) * (a[0] - c[0])
        + (c[0] ** 2 + c[1] ** 2) * (b[0] - a[0])
    ) / d
    return (ux, uy)


def _oracle_min_ball_2d(rows):
    """Smallest (center, radius) over all pair and triple candidates."""
    best = None
    cands = []
    for a, b in itertools.combinations(rows, 2):
        cands.append((((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), math.dist(a, b) / 2))
    for a, b, c in itertools.combinations(rows, 3):
        cc = _circumcenter_2d(a, b, c)
        if cc is not None:
            cands.append((cc, math.dist(cc, a)))
    for center, radius in cands:
        if all(math.dist(p, center) <= radius * (1 + 1e-9) + 1e-12 for p in rows):
            if best is None or radius < best[1]:
                best = (center, radius)
    return best


def test_enclosing_ball_frozen_cases():
    res = enclosing_ball(PointSet.from_rows([(0, 0), (2, 0), (1, 1)]))
    assert tuple(res.center) == pytest.approx((1.0, 0.0), abs=1e-9)
    assert res.radius == pytest.approx(1.0, abs=1e-9)

    tri = [(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)]
    res = enclosing_ball(PointSet.from_rows(tri))
    assert res.radius == pytest.approx(1 / math.sqrt(3), abs=1e-9)
    assert tuple(res.center) == pytest.approx((0.5, math.sqrt(3) / 6), abs=1e-9)
    assert len(res.support) == 3

    res = enclosing_ball(PointSet.from_rows([(0, 0), (4, 0), (1, 1)]))
    assert tuple(res.center) == pytest.approx((2.0, 0.0), abs=1e-9)
    assert res.radius == pytest.approx(2.0, abs=1e-9)  # obtuse: diameter ball

    res = enclosing_ball(PointSet.from_rows([(0, 0), (3, 4)]))
    assert res.radius == pytest.approx(2.5, abs=1e-12)


def test_enclosing_ball_regular_tetrahedron():
    rows = [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    res = enclosing_ball(PointSet.from_rows(rows))
    assert tuple(res.center) == pytest.approx((0.5, 0.5, 0.5), abs=1e-9)
    assert res.radius == pytest.approx(math.sqrt(3) / 2, abs=1e-9)


def test_enclosing_ball_rejects_bad_dimensions():
    with pytest.raises(UnsupportedScaleError):
        enclosing_ball(PointSet.from_rows([(0.0,), (1.0,)]))
    with pytest.raises(UnsupportedScaleError):
        enclosing_ball(PointSet.from_rows([(0, 0, 0, 0), (1, 0, 0, 0)]))
    with pytest.raises(UsageError):
        enclosing_ball(PointSet.from_rows([(1, 1), (1, 1)]))


def test_enclosing_ball_matches_oracle_in_the_plane():
    rng = random.Random(3030)
    for trial in range(300):
        n = rng.randrange(2, 9)
        rows = clustered_rows(rng, n, 2)
        if all(r == rows[0] for r in rows):
            continue
        center, radius = _oracle_min_ball_2d(rows)
        res = enclosing_ball(PointSet.from_rows(rows))
        scale = max(radius, 1e-9)
        assert res.radius == pytest.approx(radius, abs=1e-7 * scale), rows
        assert math.dist(tuple(res.center), center) <= 1e-6 * scale, rows


def test_enclosing_ball_reported_geometry_is_consistent():
    rng = random.Random(4040)
    for trial in range(200):
        n = rng.randrange(2, 9)
        q = rng.choice((2, 3))
        rows = clustered_rows(rng, n, q)
        if all(r == rows[0] for r in rows):
            continue
        res = enclosing_ball(PointSet.from_rows(rows))
        r = res.radius
        for p in rows:
            assert math.dist(p, tuple(res.center)) <= r * (1 + 1e-9) + 1e-12
        for i in res.support:
            assert math.dist(rows[i], tuple(res.center)) >= r * (1 - 1e-7) - 1e-12
        assert 1 <= len(res.support) <= q + 1
        assert list(res.support) == sorted(set(res.support))


def test_enclosing_ball_seed_independent_geometry():
    rng = random.Random(5050)
    for trial in range(40):
        rows = clustered_rows(rng, rng.randrange(3, 8), 2)
        if all(r == rows[0] for r in rows):
            continue
        a = enclosing_ball(PointSet.from_rows(rows), seed=1)
        b = enclosing_ball(PointSet.from_rows(rows), seed=99)
        assert a.radius == pytest.approx(b.radius, abs=1e-10)
        assert math.dist(tuple(a.center), tuple(b.center)) <= 1e-8


def test_enclosing_ball_collinear_many_points():
    rows = [(float(i), 0.0) for i in range(7)]
    rng = random.Random(6060)
    for trial in range(10):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        res = enclosing_ball(PointSet.from_rows(shuffled), seed=trial)
        assert res.radius == pytest.approx(3.0, abs=1e-9)
        assert tuple(res.center) == pytest.approx((3.0, 0.0), abs=1e-9)


def test_diameter_and_area_values():
    rows = [(0, 0), (2, 0), (1, 1)]
    assert enclosing_diameter_value(rows, 2) == pytest.approx(2.0, abs=1e-9)
    assert enclosing_area_value(rows) == pytest.approx(math.pi, abs=1e-8)
    # two points one unit apart: disc of radius 1/2
    assert enclosing_area_value([(0, 0), (1, 0)]) == pytest.approx(math.pi / 4, abs=1e-9)


def test_diameter_and_area_distances():
    ps = PointSet.from_rows([(0, 0), (1, 0)])
    assert enclosing_ball_diameter_distance(ps) == pytest.approx(1.0, abs=1e-12)
    assert enclosing_ball_volume_distance(ps) == pytest.approx(math.pi / 4, abs=1e-12)
    dup = PointSet.from_rows([(1, 1), (1, 1)])
    assert enclosing_ball_diameter_distance(dup) == 0.0
    assert enclosing_ball_volume_distance(dup) == 0.0
    with pytest.raises(UnsupportedScaleError):
        enclosing_ball_volume_distance(PointSet.from_rows([(0, 0, 0), (1, 0, 0)]))
    # diameter works in 3-D
    ps3 = PointSet.from_rows([(0, 0, 0), (1, 0, 0)])
    assert enclosing_ball_diameter_distance(ps3) == pytest.approx(1.0, abs=1e-12)
