"""Counting, gap, line, and smallest-enclosing-ball distances.

The enclosing ball comes from a randomized incremental search over boundary
supports (expected linear time); support circumcenters are solved in closed
form from 1x1 to 3x3 symmetric systems, so no linear-algebra package is
involved on the hot path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .errors import UnsupportedScaleError, UsageError
from .geometry import EUCLIDEAN, TAU_GEOM, Ball, PointSet
from .rng import SplitMix64, substream_seed

# Relative slack for boundary / containment decisions in the ball search.
_WELZL_SLACK = 1e-10


# ---------------------------------------------------------------------------
# Cardinality


def cardinality_value(rows) -> int:
    """Number of distinct coordinate tuples minus one."""
    return len({tuple(r) for r in rows}) - 1


def cardinality_distance(ps: PointSet) -> int:
    """Distinct points minus one.  Distinctness is exact coordinate equality."""
    return cardinality_value([tuple(r) for r in ps.coords.tolist()])


# ---------------------------------------------------------------------------
# Largest gap on the line


def max_gap_value(values) -> float:
    vals = sorted(float(v) for v in values)
    if len(vals) < 2:
        raise UsageError("the largest-gap distance needs at least two values")
    return max(b - a for a, b in zip(vals, vals[1:]))


def max_gap_distance(xs: Union[PointSet, Sequence[float]]) -> float:
    """Largest gap between consecutive sorted values on the real line."""
    if isinstance(xs, PointSet):
        if xs.q != 1:
            raise UsageError("the largest-gap distance is defined on the line (q = 1)")
        return max_gap_value(v[0] for v in xs.coords.tolist())
    return max_gap_value(xs)


# ---------------------------------------------------------------------------
# Lines through pairs


def line_count_value(rows) -> int:
    """Number of distinct lines spanned by pairs of distinct points.

    Two pairs span the same line exactly when all four points are collinear,
    so each line is identified by the full set of input points lying on it
    (within the standard geometric tolerance, relative to the pair's span).
    """
    distinct = list({tuple(r) for r in rows})
    m = len(distinct)
    if m <= 1:
        return 0
    if m == 2:
        return 1
    lines = set()
    tol2 = TAU_GEOM * TAU_GEOM
    for i in range(m - 1):
        p = distinct[i]
        for j in range(i + 1, m):
            u = tuple(b - a for a, b in zip(p, distinct[j]))
            uu = sum(c * c for c in u)
            members = []
            for k in range(m):
                if k == i or k == j:
                    members.append(k)
                    continue
                w = tuple(b - a for a, b in zip(p, distinct[k]))
                ww = sum(c * c for c in w)
                dot = sum(a * b for a, b in zip(u, w))
                # explicit rejection vector: the ww - dot^2/uu form cancels
                # catastrophically and drowns the tolerance in rounding noise
                t = dot / uu
                h2 = sum((b - t * a) ** 2 for a, b in zip(u, w))
                if h2 <= tol2 * max(uu, ww):
                    members.append(k)
            lines.add(tuple(members))
    return len(lines)


def line_count_distance(ps: PointSet) -> int:
    """How many distinct lines pass through at least two of the points."""
    if ps.q < 2:
        raise UsageError("the line-count distance needs ambient dimension q >= 2")
    return line_count_value([tuple(r) for r in ps.coords.tolist()])


# ---------------------------------------------------------------------------
# Smallest enclosing ball (q = 2 or 3)


@dataclass(frozen=True)
class EnclosingBall:
    """Smallest ball containing the input, with its defining boundary points."""

    ball: Ball
    support: Tuple[int, ...]

    @property
    def center(self):
        return self.ball.center

    @property
    def radius(self) -> float:
        return self.ball.radius


def _sq_dist(a, b) -> float:
    return sum((x - y) * (x - y) for x, y in zip(a, b))


def _solve_sym(g, rhs) -> Optional[list]:
    """Cramer solve of a k x k symmetric positive system, k in {1, 2, 3}.

    Returns None when the system is numerically singular (affinely dependent
    support), which the caller treats as a degenerate support set.
    """
    k = len(g)
    diag = 1.0
    for a in range(k):
        diag *= g[a][a]
    if k == 1:
        det = g[0][0]
        if abs(det) <= 1e-12 * diag or det == 0.0:
            return None
        return [rhs[0] / det]
    if k == 2:
        det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        if abs(det) <= 1e-12 * diag:
            return None
        return [
            (rhs[0] * g[1][1] - rhs[1] * g[0][1]) / det,
            (g[0][0] * rhs[1] - g[1][0] * rhs[0]) / det,
        ]
    a, b, c = g[0]
    d, e, f = g[1]
    gg, h, i = g[2]
    det = a * (e * i - f * h) - b * (d * i - f * gg) + c * (d * h - e * gg)
    if abs(det) <= 1e-12 * diag:
        return None
    x0 = (
        rhs[0] * (e * i - f * h)
        - b * (rhs[1] * i - f * rhs[2])
        + c * (rhs[1] * h - e * rhs[2])
    ) / det
    x1 = (
        a * (rhs[1] * i - f * rhs[2])
        - rhs[0] * (d * i - f * gg)
        + c * (d * rhs[2] - rhs[1] * gg)
    ) / det
    x2 = (
        a * (e * rhs[2] - rhs[1] * h)
        - b * (d * rhs[2] - rhs[1] * gg)
        + rhs[0] * (d * h - e * gg)
    ) / det
    return [x0, x1, x2]


def _circumball(support_rows) -> Optional[Tuple[Tuple[float, ...], float]]:
    """Center and radius of the ball with the given points on its boundary.

    The center lies in the affine hull of the support, which pins the unique
    smallest such ball.  None signals an affinely dependent support.
    """
    k = len(support_rows)
    if k == 0:
        return None
    base = support_rows[0]
    if k == 1:
        return tuple(base), 0.0
    rel = [tuple(b - a for a, b in zip(base, r)) for r in support_rows[1:]]
    g = [[sum(x * y for x, y in zip(ra, rb)) for rb in rel] for ra in rel]
    rhs = [0.5 * g[a][a] for a in range(k - 1)]
    alpha = _solve_sym(g, rhs)
    if alpha is None:
        return None
    center = list(base)
    for coef, r in zip(alpha, rel):
        for t in range(len(center)):
            center[t] += coef * r[t]
    radius = math.sqrt(_sq_dist(center, base))
    return tuple(center), radius


def _support_ball(rows, support) -> Tuple[Tuple[float, ...], float]:
    """Ball defined by a boundary index set, with a degenerate fallback.

    An affinely dependent support (exactly collinear triple, say) has no
    circumball; the farthest-pair ball over the support is then the right
    answer because the interior support points are redundant.
    """
    if not support:
        return tuple(rows[0]), -1.0  # radius < 0: contains nothing
    got = _circumball([rows[i] for i in support])
    if got is not None:
        return got
    best = (0.0, support[0], support[0])
    for a in range(len(support) - 1):
        for b in range(a + 1, len(support)):
            d2 = _sq_dist(rows[support[a]], rows[support[b]])
            if d2 > best[0]:
                best = (d2, support[a], support[b])
    _, i, j = best
    center = tuple(0.5 * (x + y) for x, y in zip(rows[i], rows[j]))
    return center, 0.5 * math.sqrt(best[0])


def _welzl(rows, order, limit, support, q):
    """Smallest ball of order[:limit] with `support` forced onto the boundary."""
    center, radius = _support_ball(rows, support)
    if len(support) == q + 1:
        return center, radius, tuple(support)
    result = (center, radius, tuple(support))
    for pos in range(limit):
        idx = order[pos]
        c, r, _ = result
        if r < 0.0 or _sq_dist(rows[idx], c) > (r * (1.0 + _WELZL_SLACK)) ** 2:
            result = _welzl(rows, order, pos, support + [idx], q)
    return result


def enclosing_ball(ps: PointSet, seed: int = 0) -> EnclosingBall:
    """Smallest ball containing every point, with its boundary support set.

    Randomized incremental insertion; `seed` fixes the insertion order, so
    results are reproducible.  The minimal ball itself is unique, only the
    reported support may differ between seeds on degenerate inputs.
    """
    if ps.q not in (2, 3):
        raise UnsupportedScaleError(
            "the enclosing-ball search is implemented for q in {2, 3}"
        )
    rows = [tuple(r) for r in ps.coords.tolist()]
    if len(set(rows)) < 2:
        raise UsageError("all points coincide; no ball with positive radius exists")
    order = list(range(ps.n))
    SplitMix64(substream_seed(seed, ps.n)).shuffle(order)
    center, _, support = _welzl(rows, order, ps.n, [], ps.q)
    # pin the radius to the exact farthest distance from the solved center
    radius = math.sqrt(max(_sq_dist(center, r) for r in rows))
    return EnclosingBall(Ball(center, radius, EUCLIDEAN), tuple(sorted(support)))


def _mb_value(rows, q: int, seed: int = 0) -> Tuple[Tuple[float, ...], float]:
    """Float-only center/radius kernel used by the samplers."""
    order = list(range(len(rows)))
    SplitMix64(substream_seed(seed, len(rows))).shuffle(order)
    center, _, _ = _welzl(rows, order, len(rows), [], q)
    radius = math.sqrt(max(_sq_dist(center, r) for r in rows))
    return center, radius


def enclosing_diameter_value(rows, q: int, seed: int = 0) -> float:
    if len({tuple(r) for r in rows}) < 2:
        return 0.0
    return 2.0 * _mb_value([tuple(r) for r in rows], q, seed)[1]


def enclosing_ball_diameter_distance(ps: PointSet, seed: int = 0) -> float:
    """Diameter of the smallest enclosing ball; zero when all points coincide."""
    if ps.q not in (2, 3):
        raise UnsupportedScaleError(
            "the enclosing-ball search is implemented for q in {2, 3}"
        )
    rows = [tuple(r) for r in ps.coords.tolist()]
    if len(set(rows)) < 2:
        return 0.0
    return 2.0 * _mb_value(rows, ps.q, seed)[1]


def enclosing_area_value(rows, seed: int = 0) -> float:
    if len({tuple(r) for r in rows}) < 2:
        return 0.0
    return math.pi * _mb_value([tuple(r) for r in rows], 2, seed)[1] ** 2


def enclosing_ball_volume_distance(ps: PointSet, seed: int = 0) -> float:
    """Area of the smallest enclosing disk (q = 2); zero when all coincide."""
    if ps.q != 2:
        raise UnsupportedScaleError(
            "the enclosing-ball area distance is implemented for q = 2 only"
        )
    rows = [tuple(r) for r in ps.coords.tolist()]
    if len(set(rows)) < 2:
        return 0.0
    return math.pi * _mb_value(rows, 2, seed)[1] ** 2
