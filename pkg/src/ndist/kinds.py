"""Registry of the implemented n-point distances.

Each kind bundles a float kernel over raw coordinate tuples (the hot path
for fuzzing and search), a compatibility check for (n, q), and the proven
or known bracket for its best simplex-ratio constant.  The public
dataclass-returning APIs live in their own modules; this registry is what
the lab and the CLI dispatch through.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from . import classic, inner_balls, trees
from .errors import UnsupportedScaleError, UsageError

# Exact best constant of the inner Euclidean ball 3-distance:
# sqrt(20 + 2*sqrt(2)) / 7, equivalently 2 / sqrt(10 - sqrt(2)).
RHO = math.sqrt(20.0 + 2.0 * math.sqrt(2.0)) / 7.0


@dataclass(frozen=True)
class Kind:
    """One distance kind: kernel plus domain and degree metadata.

    ``degree`` is the positive-homogeneity degree under scaling all points:
    1 for lengths, 2 for areas, 0 for counts.
    """

    name: str
    kernel: Callable[[list, int], float]
    degree: int
    integer_valued: bool

    def check_domain(self, n: int, q: int) -> None:
        _DOMAIN_CHECKS[self.name](n, q)


def _need(cond: bool, message: str, unsupported: bool = False) -> None:
    if not cond:
        raise (UnsupportedScaleError if unsupported else UsageError)(message)


def _domain_any(n: int, q: int) -> None:
    _need(n >= 2, "need at least two points")
    _need(q >= 1, "need at least one coordinate")


def _domain_q2plus(n: int, q: int) -> None:
    _domain_any(n, q)
    _need(q >= 2, "this distance needs ambient dimension q >= 2")


def _domain_line(n: int, q: int) -> None:
    _domain_any(n, q)
    _need(q == 1, "the largest-gap distance is defined on the line (q = 1)")


def _domain_steiner(n: int, q: int) -> None:
    _domain_any(n, q)
    _need(q == 2, "the shortest-network distance is implemented for q = 2 only", True)
    _need(n <= 7, "the shortest-network distance is implemented for n <= 7", True)


def _domain_ball(n: int, q: int) -> None:
    _domain_any(n, q)
    _need(q in (2, 3), "the enclosing-ball search is implemented for q in {2, 3}", True)


def _domain_disk(n: int, q: int) -> None:
    _domain_any(n, q)
    _need(q == 2, "the enclosing-ball area distance is implemented for q = 2 only", True)


_DOMAIN_CHECKS: Dict[str, Callable[[int, int], None]] = {
    "inner-euclidean": _domain_any,
    "inner-chebyshev": _domain_q2plus,
    "mst": _domain_any,
    "steiner": _domain_steiner,
    "cardinality": _domain_any,
    "max-gap": _domain_line,
    "line-count": _domain_q2plus,
    "enclosing-diameter": _domain_ball,
    "enclosing-area": _domain_disk,
}


KINDS: Dict[str, Kind] = {
    "inner-euclidean": Kind(
        "inner-euclidean", lambda rows, q: inner_balls.inner_euclidean_value(rows), 1, False
    ),
    "inner-chebyshev": Kind(
        "inner-chebyshev", lambda rows, q: inner_balls.inner_chebyshev_value(rows), 1, False
    ),
    "mst": Kind("mst", lambda rows, q: trees.mst_length(rows), 1, False),
    "steiner": Kind("steiner", lambda rows, q: trees.steiner_length(rows), 1, False),
    "cardinality": Kind(
        "cardinality", lambda rows, q: float(classic.cardinality_value(rows)), 0, True
    ),
    "max-gap": Kind(
        "max-gap", lambda rows, q: classic.max_gap_value(r[0] for r in rows), 1, False
    ),
    "line-count": Kind(
        "line-count", lambda rows, q: float(classic.line_count_value(rows)), 0, True
    ),
    "enclosing-diameter": Kind(
        "enclosing-diameter",
        lambda rows, q: classic.enclosing_diameter_value(rows, q),
        1,
        False,
    ),
    "enclosing-area": Kind(
        "enclosing-area", lambda rows, q: classic.enclosing_area_value(rows), 2, False
    ),
}


def kind_names() -> Tuple[str, ...]:
    return tuple(KINDS)


def get_kind(name: str) -> Kind:
    try:
        return KINDS[name]
    except KeyError:
        known = ", ".join(KINDS)
        raise UsageError(f"unknown distance kind {name!r}; choose one of: {known}")


def ensure_supported(name: str, n: int, q: int) -> Kind:
    kind = get_kind(name)
    kind.check_domain(n, q)
    return kind


def proven_bounds(name: str, n: int, q: int) -> Tuple[float, float]:
    """Best proven bracket [lower, upper] for the best constant of a kind.

    Lower bounds come from explicit configurations; upper bounds from the
    proved simplex-ratio estimates.  Where the exact constant is known the
    bracket collapses to a point.  1.0 means "nothing better than the
    generic bound is proven"; the line-count upper bound is strict (the
    supremum is conjectured to sit below it).
    """
    kind = ensure_supported(name, n, q)
    inv_n1 = 1.0 / (n - 1.0)
    if name == "inner-chebyshev" or name == "max-gap":
        return (2.0 / n, 2.0 / n)
    if name == "inner-euclidean":
        if n == 2:
            return (1.0, 1.0)
        if n == 3:
            return (RHO, RHO)
        from .lab import solve_lambda_n  # lazy: lab depends on this module

        return (solve_lambda_n(n).lower_bound, 1.0)
    if name == "mst":
        if n == 2:
            return (1.0, 1.0)
        if n == 3:
            return (1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0))
        if n == 4:
            return (math.sqrt(2.0) / 4.0, 2.0 / n)
        return (inv_n1, 2.0 / n)
    if name == "steiner":
        if n == 2:
            return (1.0, 1.0)
        if n == 3:
            return (0.5, 0.5)
        return (inv_n1, 2.0 / n)
    if name == "cardinality":
        return (inv_n1, inv_n1)
    if name == "line-count":
        if n == 2:
            return (1.0, 1.0)
        return (1.0 / (n - 2.0 + 2.0 / n), 1.0 / (n - 2.0))
    if name == "enclosing-diameter":
        if q == 2:
            return (inv_n1, inv_n1)
        return (inv_n1, 1.0)
    assert kind.name == "enclosing-area"
    return (1.0 / (n - 1.5), 1.0 / (n - 1.5))
