"""Primitives: norms, point sets, triangle classification, polynomials, bisection."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ndist import (
    Ball,
    PointSet,
    UsageError,
    bisect_root,
    chebyshev_T,
    classify_triangle,
    collinear,
    distance,
    pairwise_distances,
)

coord = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False)


def test_distance_both_norms():
    assert distance((0, 0), (3, 4)) == 5.0
    assert distance((0, 0), (3, 4), norm="chebyshev") == 4.0
    assert distance((1.5,), (4.0,)) == 2.5
    assert distance((1, 2, 3), (1, 2, 3)) == 0.0


def test_distance_rejects_bad_input():
    with pytest.raises(UsageError):
        distance((0, 0), (1, 2, 3))
    with pytest.raises(UsageError):
        distance((0, 0), (1, 1), norm="manhattan")
    with pytest.raises(UsageError):
        distance((0, float("nan")), (1, 1))


def test_pairwise_matrix_matches_scalar():
    rows = [(0.0, 0.0), (1.0, 2.0), (-3.0, 0.5), (1.0, 2.0)]
    for norm in ("euclidean", "chebyshev"):
        m = pairwise_distances(rows, norm=norm)
        assert m.shape == (4, 4)
        for i in range(4):
            for j in range(4):
                assert m[i, j] == pytest.approx(
                    distance(rows[i], rows[j], norm=norm), abs=1e-14
                )
    with pytest.raises(UsageError):
        pairwise_distances(rows, norm="taxicab")


def test_point_set_validation():
    with pytest.raises(UsageError):
        PointSet.from_rows([(0.0, 0.0)])  # n >= 2
    with pytest.raises(UsageError):
        PointSet(np.zeros((2, 2, 2)))
    with pytest.raises(UsageError):
        PointSet.from_rows([(0.0,), (math.inf,)])
    ps = PointSet.from_rows([(0, 0), (1, 0)])
    assert (ps.n, ps.q) == (2, 2)
    with pytest.raises(ValueError):
        ps.coords[0, 0] = 5.0  # storage is frozen


def test_point_set_replace_is_positional():
    ps = PointSet.from_rows([(0, 0), (1, 0), (2, 0)])
    qs = ps.replace(1, (5.0, 5.0))
    assert tuple(qs[1]) == (5.0, 5.0)
    assert tuple(ps[1]) == (1.0, 0.0)  # original untouched
    with pytest.raises(UsageError):
        ps.replace(0, (1.0,))


def test_ball_containment_and_validation():
    disc = Ball((0.0, 0.0), 1.0)
    assert disc.contains((1.0, 0.0))
    assert not disc.contains((1.0, 1.0))
    assert disc.contains((1.0 + 1e-12, 0.0), slack=1e-9)
    cube = Ball((0.0, 0.0), 1.0, norm="chebyshev")
    assert cube.contains((1.0, 1.0))  # corner of the square
    with pytest.raises(UsageError):
        Ball((0.0, 0.0), 0.0)
    with pytest.raises(UsageError):
        Ball((0.0, 0.0), 1.0, norm="taxicab")


def test_classify_triangle_frozen_cases():
    assert classify_triangle((0, 0), (1, 0), (0.5, 5.0)) == "acute"
    assert classify_triangle((0, 0), (2, 0), (0, 1)) == "right"
    assert classify_triangle((0, 0), (4, 0), (1, 1)) == "obtuse"
    assert classify_triangle((0, 0), (1, 0), (2, 0)) == "degenerate"
    assert classify_triangle((1, 1), (1, 1), (0, 0)) == "degenerate"
    assert classify_triangle((0, 0, 0), (1, 0, 0), (0, 1, 0)) == "right"


def test_classify_triangle_permutation_invariant():
    tris = [
        ((0, 0), (1, 0), (0.3, 0.9)),
        ((0, 0), (2, 0), (0, 1)),
        ((0, 0), (4, 0), (1, 1)),
        ((0, 0), (1, 0), (2, 0)),
    ]
    for tri in tris:
        kinds = {classify_triangle(*perm) for perm in itertools.permutations(tri)}
        assert len(kinds) == 1


def test_classify_scale_stability():
    # the right-angle band is relative, so scaling must not flip the label
    for s in (1e-6, 1.0, 1e6):
        pts = [(0.0, 0.0), (2.0 * s, 0.0), (0.0, 1.0 * s)]
        assert classify_triangle(*pts) == "right"


def test_collinear():
    assert collinear((0, 0), (2, 0), (7, 0))
    assert collinear((0, 0), (0, 0), (1, 1))  # degenerate span
    assert not collinear((0, 0), (1, 0), (0.5, 0.1))
    assert collinear((0, 0), (1, 0), (0.5, 1e-12))


def test_collinear_survives_reframing():
    a, b = (0.123456789, -0.987654321), (0.777333111, 0.414213562)
    mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
    for shift, scale in (((4.38, -2.26), 3.0), ((-0.51, 9.07), 17.0)):
        ta, tb, tm = (
            tuple(scale * (v + s) for v, s in zip(p, shift)) for p in (a, b, mid)
        )
        assert collinear(ta, tb, tm)
        assert classify_triangle(ta, tb, tm) == "degenerate"


@given(st.integers(min_value=0, max_value=12), st.floats(min_value=-1, max_value=1))
def test_chebyshev_T_matches_cosine_form(p, x):
    want = math.cos(p * math.acos(min(1.0, max(-1.0, x))))
    assert chebyshev_T(p, x) == pytest.approx(want, abs=1e-9)


def test_chebyshev_T_low_degrees():
    for x in (-0.7, 0.0, 0.3, 2.0):
        assert chebyshev_T(0, x) == 1.0
        assert chebyshev_T(1, x) == x
        assert chebyshev_T(2, x) == pytest.approx(2 * x * x - 1, rel=1e-15)
        assert chebyshev_T(3, x) == pytest.approx(4 * x**3 - 3 * x, rel=1e-14)
    with pytest.raises(UsageError):
        chebyshev_T(-1, 0.5)


def test_bisect_root():
    r = bisect_root(math.cos, 0.0, 2.0)
    assert r == pytest.approx(math.pi / 2, abs=1e-11)
    # sqrt(1 - x^2) = 2x has the closed-form root 1/sqrt(5)
    r = bisect_root(lambda x: chebyshev_T(1, math.sqrt(1 - x * x)) - 2 * x, 0.0, 1.0)
    assert r == pytest.approx(1 / math.sqrt(5), abs=1e-11)
    assert bisect_root(lambda x: x, 0.0, 1.0) == 0.0  # endpoint root
    with pytest.raises(UsageError):
        bisect_root(lambda x: 1.0 + x * x, -1.0, 1.0)  # no sign change
