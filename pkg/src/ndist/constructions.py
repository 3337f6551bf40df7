"""Named extremal configurations for the simplex ratio.

Each construction either attains a proven best constant exactly or
approaches a non-attained supremum through an explicit epsilon.  They serve
three purposes: regression anchors for the attained constants, seeds for
the best-constant search, and CLI-exportable witnesses.

Coordinates are kept binary-exact wherever the attained ratio is supposed
to be exact, so the ratio checks can run at 1e-12.
"""

from __future__ import annotations

import math
from typing import List, Optional

from .errors import UsageError
from .lab import Configuration, solve_lambda_n

CONSTRUCTION_NAMES = (
    "midpoint-collapse",
    "collapse",
    "equilateral-centroid",
    "ngon-centroid",
    "figure4",
    "circle-arc",
    "circle-lines",
    "collapse-pair-midpoint",
)

_DEFAULT_EPSILON = 1e-3


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def _pad(row, q: int):
    return tuple(row) + (0.0,) * (q - len(row))


def construct(name: str, n: int, q: int, epsilon: Optional[float] = None) -> Configuration:
    """Build a named configuration for n points in dimension q.

    ``epsilon`` applies to figure4 and circle-arc only (default 1e-3); both
    suprema are non-attained, so the parameter controls how closely the
    configuration approaches them.  Incompatible parameters raise.
    """
    _require(n >= 2, "constructions need n >= 2")
    _require(q >= 1, "constructions need q >= 1")
    if epsilon is not None and epsilon < 0.0:
        raise UsageError("epsilon must be >= 0")
    eps = _DEFAULT_EPSILON if epsilon is None else float(epsilon)

    if name == "midpoint-collapse":
        if q == 1:
            rows = [(0.0,)] + [(1.0,)] * (n - 1)
            return Configuration.from_rows(rows, (0.5,))
        # tilted duplicate: every coordinate a distinct power of two, so no
        # axis-aligned square can dodge sideways past the midpoint
        b = tuple(2.0 ** (-t) for t in range(q))
        rows = [(0.0,) * q] + [b] * (n - 1)
        return Configuration.from_rows(rows, tuple(v / 2.0 for v in b))

    if name == "collapse":
        e1 = _pad((1.0,), q)
        rows = [(0.0,) * q] + [e1] * (n - 1)
        return Configuration.from_rows(rows, e1)

    if name == "equilateral-centroid":
        _require(n == 3, "equilateral-centroid requires n = 3")
        _require(q >= 2, "equilateral-centroid requires q >= 2")
        s = math.sqrt(3.0)
        rows = [
            _pad((0.0, 0.0), q),
            _pad((1.0, 0.0), q),
            _pad((0.5, s / 2.0), q),
        ]
        return Configuration.from_rows(rows, _pad((0.5, s / 6.0), q))

    if name == "ngon-centroid":
        _require(n >= 3, "ngon-centroid requires n >= 3")
        _require(q >= 2, "ngon-centroid requires q >= 2")
        rows = [
            _pad((math.cos(2.0 * math.pi * k / n), math.sin(2.0 * math.pi * k / n)), q)
            for k in range(n)
        ]
        return Configuration.from_rows(rows, (0.0,) * q)

    if name == "figure4":
        _require(n == 3 and q == 2, "figure4 requires n = 3, q = 2")
        h = math.sqrt(2.0) / 2.0
        rows = [(-1.0, 0.0), (1.0, 0.0), (h, h)]
        return Configuration.from_rows(rows, (0.0, math.sqrt(2.0) - 1.0 + eps))

    if name == "circle-arc":
        _require(n >= 4 and q == 2, "circle-arc requires n >= 4, q = 2")
        return _circle_arc(n, eps)

    if name == "circle-lines":
        _require(n >= 3 and q == 2, "circle-lines requires n >= 3, q = 2")
        rows = [
            (math.cos(2.0 * math.pi * k / n), -math.sin(2.0 * math.pi * k / n))
            for k in range(n)
        ]
        return Configuration.from_rows(rows, rows[0])

    if name == "collapse-pair-midpoint":
        _require(n >= 3, "collapse-pair-midpoint requires n >= 3")
        mid = _pad((0.5,), q)
        rows = [(0.0,) * q, _pad((1.0,), q)] + [mid] * (n - 2)
        return Configuration.from_rows(rows, mid)

    known = ", ".join(CONSTRUCTION_NAMES)
    raise UsageError(f"unknown construction {name!r}; choose one of: {known}")


def _circle_arc(n: int, eps: float) -> Configuration:
    """Doubled points on the upper unit circle, spaced by the arc root.

    The first two points sit at (-1, 0) and (1, 0); p = floor(n/2) - 1
    distinct arc points follow at angles pi - i*alpha with
    alpha = 2*arcsin(lambda_n), each doubled (the last tripled when n is
    odd).  z starts at the midpoint of (1, 0) and the last arc point and is
    pushed radially outward by eps: at eps = 0 the midpoint lies exactly on
    a Thales circle through one of the arc points and the ratio drops for
    small n, while the outward nudge perturbs the attained chords only at
    order eps^2.
    """
    bound = solve_lambda_n(n)
    lam = bound.lam
    p = bound.p
    alpha = 2.0 * math.asin(lam)
    arc = [
        (math.cos(math.pi - i * alpha), math.sin(math.pi - i * alpha))
        for i in range(1, p + 1)
    ]
    rows = [(-1.0, 0.0), (1.0, 0.0)]
    for y in arc[:-1]:
        rows += [y, y]
    rows += [arc[-1]] * (2 if n % 2 == 0 else 3)
    assert len(rows) == n
    z0 = ((1.0 + arc[-1][0]) / 2.0, arc[-1][1] / 2.0)
    r0 = math.hypot(*z0)
    stretch = 1.0 + eps / r0
    return Configuration.from_rows(rows, (z0[0] * stretch, z0[1] * stretch))


def seed_configurations(n: int, q: int) -> List[Configuration]:
    """Every construction compatible with (n, q), in canonical order.

    Used to seed the best-constant search before its random restarts.
    """
    out = []
    for name in CONSTRUCTION_NAMES:
        try:
            out.append(construct(name, n, q))
        except UsageError:
            continue
    return out
