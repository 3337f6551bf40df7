"""Core geometric types and primitives.

Points are 1-D float arrays, point sets are (n, q) arrays with n >= 2.
Everything downstream (inner balls, tree lengths, enclosing balls) builds on
the two norms and the tolerance conventions fixed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import UsageError

# Collinearity / right-angle tolerance, applied relative to the largest
# squared side length of the triangle under test.
TAU_GEOM = 1e-9

EUCLIDEAN = "euclidean"
CHEBYSHEV = "chebyshev"
NORMS = (EUCLIDEAN, CHEBYSHEV)


def as_point(x) -> np.ndarray:
    """Coerce to a finite 1-D float64 point."""
    p = np.asarray(x, dtype=np.float64)
    if p.ndim != 1 or p.size < 1:
        raise UsageError(f"a point must be a 1-D sequence of reals, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise UsageError("point coordinates must be finite")
    return p


@dataclass(frozen=True)
class PointSet:
    """An ordered tuple of n >= 2 points sharing a dimension q >= 1.

    Duplicate points are allowed; order is meaningful (replacement operations
    are positional).
    """

    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=np.float64)
        if c.ndim != 2:
            raise UsageError(f"expected an (n, q) array of points, got shape {c.shape}")
        n, q = c.shape
        if n < 2:
            raise UsageError(f"a point set needs at least 2 points, got {n}")
        if q < 1:
            raise UsageError("points need at least one coordinate")
        if not np.all(np.isfinite(c)):
            raise UsageError("point coordinates must be finite")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coords", c)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]]) -> "PointSet":
        return cls(np.asarray(rows, dtype=np.float64))

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def q(self) -> int:
        return self.coords.shape[1]

    def __getitem__(self, i: int) -> np.ndarray:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def replace(self, i: int, point) -> "PointSet":
        """New PointSet with the i-th point swapped for ``point``."""
        p = as_point(point)
        if p.shape[0] != self.q:
            raise UsageError("replacement point has the wrong dimension")
        c = self.coords.copy()
        c[i] = p
        return PointSet(c)


@dataclass(frozen=True)
class Ball:
    """A norm ball: Euclidean disc/ball or an axis-aligned cube (Chebyshev)."""

    center: np.ndarray
    radius: float
    norm: str = EUCLIDEAN

    def __post_init__(self):
        center = as_point(self.center).copy()
        center.flags.writeable = False
        object.__setattr__(self, "center", center)
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise UsageError(f"ball radius must be positive and finite, got {self.radius}")
        if self.norm not in NORMS:
            raise UsageError(f"norm must be one of {NORMS}, got {self.norm!r}")

    def contains(self, point, slack: float = 0.0) -> bool:
        p = as_point(point)
        if self.norm == EUCLIDEAN:
            d = float(np.linalg.norm(p - self.center))
        else:
            d = float(np.max(np.abs(p - self.center)))
        return d <= self.radius + slack


def distance(a, b, norm: str = EUCLIDEAN) -> float:
    """Distance between two points under the chosen norm."""
    pa, pb = as_point(a), as_point(b)
    if pa.shape != pb.shape:
        raise UsageError(f"dimension mismatch: {pa.shape[0]} vs {pb.shape[0]}")
    if norm == EUCLIDEAN:
        return float(np.linalg.norm(pa - pb))
    if norm == CHEBYSHEV:
        return float(np.max(np.abs(pa - pb)))
    raise UsageError(f"unknown norm {norm!r}")


def pairwise_distances(points, norm: str = EUCLIDEAN) -> np.ndarray:
    """Symmetric (n, n) distance matrix for an (n, q) array or PointSet."""
    c = points.coords if isinstance(points, PointSet) else np.asarray(points, dtype=np.float64)
    diff = c[:, None, :] - c[None, :, :]
    if norm == EUCLIDEAN:
        return np.sqrt(np.sum(diff * diff, axis=2))
    if norm == CHEBYSHEV:
        return np.max(np.abs(diff), axis=2)
    raise UsageError(f"unknown norm {norm!r}")


def classify_triangle(a, b, c) -> str:
    """Classify the triangle abc by its largest angle.

    Returns one of "acute", "right", "obtuse", "degenerate".  Collinear
    triples (including coincident points) are degenerate.  Both the
    degeneracy and the right-angle band use TAU_GEOM relative to the largest
    squared side.
    """
    pa, pb, pc = as_point(a), as_point(b), as_point(c)
    if not (pa.shape == pb.shape == pc.shape):
        raise UsageError("triangle vertices must share a dimension")
    s2 = sorted(
        (
            float(np.sum((pa - pb) ** 2)),
            float(np.sum((pb - pc) ** 2)),
            float(np.sum((pc - pa) ** 2)),
        )
    )
    big = s2[2]
    if big == 0.0:
        return "degenerate"
    # 2*area = |u| * |rejection of v from u|, stable in any dimension; the
    # Gram-determinant form cancels catastrophically near degeneracy, which
    # is exactly where the band has to be trustworthy
    u = pb - pa
    v = pc - pa
    uu = float(np.dot(u, u))
    if uu == 0.0:
        return "degenerate"
    rej = v - (float(np.dot(u, v)) / uu) * u
    two_area = math.sqrt(uu * float(np.dot(rej, rej)))
    if two_area <= TAU_GEOM * big:
        return "degenerate"
    disc = s2[0] + s2[1] - s2[2]
    if abs(disc) <= TAU_GEOM * big:
        return "right"
    return "obtuse" if disc < 0.0 else "acute"


def collinear(a, b, c, tol: float = TAU_GEOM) -> bool:
    """True when c lies on the line through a and b (or the span degenerates).

    The test compares the distance from c to the line against
    ``tol * max(|b-a|, |c-a|)``.
    """
    pa, pb, pc = as_point(a), as_point(b), as_point(c)
    u = pb - pa
    v = pc - pa
    uu = float(np.dot(u, u))
    vv = float(np.dot(v, v))
    if uu == 0.0:
        return True
    rej = v - (float(np.dot(u, v)) / uu) * u
    h = math.sqrt(float(np.dot(rej, rej)))
    return h <= tol * math.sqrt(max(uu, vv))


def chebyshev_T(p: int, x: float) -> float:
    """First-kind Chebyshev polynomial T_p(x) by the three-term recurrence."""
    if p < 0:
        raise UsageError("polynomial degree must be >= 0")
    if p == 0:
        return 1.0
    prev, cur = 1.0, float(x)
    for _ in range(p - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def bisect_root(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> float:
    """Root of f on [lo, hi] by bisection to bracket width <= tol.

    Requires a sign change on the bracket.  Capped at 200 halvings, which is
    far beyond float resolution for any sane bracket.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise UsageError("bisect_root requires f(lo) and f(hi) to differ in sign")
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0.0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)
