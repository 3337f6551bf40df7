"""Inner-ball distances.

Both maps pick two input points, span a ball on them (Euclidean: the pair is
a diameter; Chebyshev: the pair sits on opposite faces of an axis-aligned
cube), and ask that the open interior contain no input point.  The distance
is the largest pair span for which such a placement exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .errors import UsageError
from .geometry import CHEBYSHEV, EUCLIDEAN, Ball, PointSet, classify_triangle, distance

# A point only counts as inside the open interior if it penetrates by more
# than TAU_IN times the ball's span; boundary contact never disqualifies.
TAU_IN = 1e-9

Rows = Sequence[Sequence[float]]


@dataclass(frozen=True)
class InnerBallResult:
    """Value plus the realizing pair and one admissible ball placement."""

    value: float
    witness_pair: Optional[Tuple[int, int]]
    ball: Optional[Ball]


def _as_rows(ps: PointSet) -> list:
    return [tuple(row) for row in ps.coords.tolist()]


# ---------------------------------------------------------------------------
# Euclidean: pair = diameter


def _sq(xi, xj) -> float:
    return sum((a - b) * (a - b) for a, b in zip(xi, xj))


def _euclidean_pairs(rows: Rows):
    """Nonzero pairs ordered by decreasing length, ties by index pair."""
    n = len(rows)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            d2 = _sq(rows[i], rows[j])
            if d2 > 0.0:
                out.append((d2, i, j))
    out.sort(key=lambda t: (-t[0], t[1], t[2]))
    return out


def _euclidean_feasible(rows: Rows, i: int, j: int, d2: float) -> bool:
    xi, xj = rows[i], rows[j]
    mid = tuple((a + b) * 0.5 for a, b in zip(xi, xj))
    limit2 = d2 * (0.5 - TAU_IN) ** 2
    for m, xm in enumerate(rows):
        if m == i or m == j:
            continue
        if _sq(xm, mid) < limit2:
            return False
    return True


def euclidean_pair_feasible(ps: PointSet, i: int, j: int) -> bool:
    """Does the segment (x_i, x_j) span an admissible diameter ball?

    Exposed because minimum-spanning-tree edges are expected to pass this
    predicate, which the test suite exercises as a standalone property.
    """
    rows = _as_rows(ps)
    d2 = _sq(rows[i], rows[j])
    if d2 == 0.0:
        return False
    return _euclidean_feasible(rows, i, j, d2)


def inner_euclidean_value(rows: Rows) -> float:
    """Largest pair distance whose diameter ball has an empty open interior."""
    for d2, i, j in _euclidean_pairs(rows):
        if _euclidean_feasible(rows, i, j, d2):
            return d2 ** 0.5
    return 0.0


def inner_euclidean_ball_distance(ps: PointSet) -> InnerBallResult:
    """Diameter of a largest inner Euclidean ball (first feasible pair in
    decreasing-length order; O(n^3) worst case)."""
    rows = _as_rows(ps)
    for d2, i, j in _euclidean_pairs(rows):
        if _euclidean_feasible(rows, i, j, d2):
            value = d2 ** 0.5
            mid = tuple((a + b) * 0.5 for a, b in zip(rows[i], rows[j]))
            return InnerBallResult(value, (i, j), Ball(mid, value / 2.0, EUCLIDEAN))
    return InnerBallResult(0.0, None, None)


def inner_euclidean_ball_distance_3(a, b, c) -> float:
    """Three-point closed form: the largest side for right or acute
    triangles, the median side otherwise (obtuse or collinear)."""
    sides = sorted((distance(b, c), distance(a, c), distance(a, b)))
    if sides[2] == 0.0:
        return 0.0
    kind = classify_triangle(a, b, c)
    if kind in ("right", "acute"):
        return sides[2]
    return sides[1]


# ---------------------------------------------------------------------------
# Chebyshev: pair on opposite faces of an axis-aligned cube


def _chebyshev_pairs(rows: Rows):
    n = len(rows)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            ell = max(abs(a - b) for a, b in zip(rows[i], rows[j]))
            if ell > 0.0:
                out.append((ell, i, j))
    out.sort(key=lambda t: (-t[0], t[1], t[2]))
    return out


def _chebyshev_center(rows: Rows, i: int, j: int, k: int, ell: float):
    """A feasible cube center for pair (i, j) spanning axis k, or None.

    The center's k-coordinate is forced to the pair midpoint.  On every other
    axis the admissible range is an interval, and the blocked region is a
    finite union of open intervals, so a feasible center exists iff one of
    the critical grid vertices ({interval endpoints} union {x_m +- ell/2}) is
    feasible.  Vertices are scanned in lexicographic order so the reported
    center is reproducible.
    """
    xi, xj = rows[i], rows[j]
    ck = (xi[k] + xj[k]) * 0.5
    half = ell * 0.5
    soft = half - TAU_IN * ell
    blockers = []
    for m, xm in enumerate(rows):
        if m == i or m == j:
            continue
        if abs(xm[k] - ck) < soft:
            blockers.append(xm)

    free = [t for t in range(len(xi)) if t != k]
    lo = {t: max(xi[t], xj[t]) - half for t in free}
    hi = {t: min(xi[t], xj[t]) + half for t in free}

    def assemble(values_by_axis) -> tuple:
        c = [0.0] * len(xi)
        c[k] = ck
        for t, v in values_by_axis:
            c[t] = v
        return tuple(c)

    if not blockers:
        return assemble([(t, lo[t]) for t in free])
    if not free:
        # q = 1 never reaches here (guarded by the caller); with the pair
        # axis fixed any blocker on it kills the placement
        return None

    grids = []
    for t in free:
        vals = {lo[t], hi[t]}
        for xm in blockers:
            for cand in (xm[t] - half, xm[t] + half):
                if lo[t] <= cand <= hi[t]:
                    vals.add(cand)
        grids.append(sorted(vals))

    for combo in itertools.product(*grids):
        blocked = False
        for xm in blockers:
            if all(abs(xm[t] - combo[a]) < soft for a, t in enumerate(free)):
                blocked = True
                break
        if not blocked:
            return assemble(list(zip(free, combo)))
    return None


def inner_chebyshev_value(rows: Rows) -> float:
    """Largest edge length of an admissible inner cube (q >= 2)."""
    q = len(rows[0])
    if q < 2:
        raise UsageError(
            "the inner Chebyshev ball needs q >= 2; use max_gap_distance on the line"
        )
    for ell, i, j in _chebyshev_pairs(rows):
        for k in range(q):
            if abs(rows[i][k] - rows[j][k]) == ell:
                if _chebyshev_center(rows, i, j, k, ell) is not None:
                    return ell
    return 0.0


def inner_chebyshev_ball_distance(ps: PointSet) -> InnerBallResult:
    """Edge length of a largest inner Chebyshev ball.

    Enumerates pairs by decreasing Chebyshev span (ties by index), and for
    each pair the spanning axes in increasing order; the first feasible
    placement wins.  The reported center is the lexicographically smallest
    feasible grid vertex.
    """
    if ps.q < 2:
        raise UsageError(
            "the inner Chebyshev ball needs q >= 2; use max_gap_distance on the line"
        )
    rows = _as_rows(ps)
    for ell, i, j in _chebyshev_pairs(rows):
        for k in range(ps.q):
            if abs(rows[i][k] - rows[j][k]) == ell:
                center = _chebyshev_center(rows, i, j, k, ell)
                if center is not None:
                    return InnerBallResult(ell, (i, j), Ball(center, ell / 2.0, CHEBYSHEV))
    return InnerBallResult(0.0, None, None)
