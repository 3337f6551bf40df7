"""Simplex-inequality laboratory: ratios, fuzzing, and best-constant search.

The simplex ratio of a configuration (x_1, ..., x_n; z) is the distance of
the tuple divided by the sum of the n evaluations in which one point is
replaced by z.  Everything here is deterministic: trials and restarts draw
from per-index substreams, and parallel runs reduce in index order, so the
worker count never changes a result.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import SimplexViolationError, UsageError
from .geometry import PointSet, as_point, bisect_root, chebyshev_T
from .kinds import Kind, ensure_supported, proven_bounds
from .rng import SplitMix64, substream_seed

# A sampled ratio counts as a violation above 1 + this slack.
VIOLATION_SLACK = 1e-9

_SAMPLERS = ("uniform", "collapse")

# Keep at most this many violation witnesses in a report.
_MAX_STORED_VIOLATIONS = 32


@dataclass(frozen=True)
class Configuration:
    """A point tuple together with the replacement point z."""

    points: PointSet
    z: np.ndarray

    def __post_init__(self):
        zz = as_point(self.z).copy()
        if zz.shape[0] != self.points.q:
            raise UsageError("z must live in the same dimension as the points")
        zz.flags.writeable = False
        object.__setattr__(self, "z", zz)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], z: Sequence[float]) -> "Configuration":
        return cls(PointSet.from_rows(rows), np.asarray(z, dtype=np.float64))


@dataclass(frozen=True)
class RatioWitness:
    """A configuration with its evaluated simplex ratio."""

    config: Configuration
    distance_kind: str
    numerator: float
    denominator: float
    ratio: float


@dataclass(frozen=True)
class LambdaBound:
    """Root lambda_n of the arc equation and the bound 1/(n*lambda_n)."""

    n: int
    p: int
    lam: float
    lower_bound: float


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a randomized simplex-inequality sweep."""

    distance_kind: str
    n: int
    q: int
    trials: int
    seed: int
    sampler: str
    max_ratio: float
    witness: Optional[RatioWitness]
    violation_count: int
    violations: List[RatioWitness] = field(default_factory=list)
    skipped: int = 0


@dataclass(frozen=True)
class BestConstantReport:
    """Best ratio found by the multistart pattern search."""

    distance_kind: str
    n: int
    q: int
    best: RatioWitness
    restarts: int
    iterations: int
    seed: int
    proven_bounds: Tuple[float, float]


# ---------------------------------------------------------------------------
# Ratio evaluation


def _replaced_sum(kind: Kind, rows: list, z: tuple, q: int) -> float:
    return math.fsum(
        kind.kernel(rows[:i] + [z] + rows[i + 1 :], q) for i in range(len(rows))
    )


def _rows_of(config: Configuration) -> Tuple[list, tuple]:
    rows = [tuple(r) for r in config.points.coords.tolist()]
    return rows, tuple(float(v) for v in config.z)


def simplex_sum(config: Configuration, distance_kind: str) -> float:
    """Sum of the n replaced evaluations, the simplex-inequality right side."""
    kind = ensure_supported(distance_kind, config.points.n, config.points.q)
    rows, z = _rows_of(config)
    return _replaced_sum(kind, rows, z, config.points.q)


def simplex_ratio(config: Configuration, distance_kind: str) -> RatioWitness:
    """Evaluate d(x_1..x_n) / sum_i d(..z..) for one configuration.

    Undefined when all points coincide (the numerator and every denominator
    term vanish).  A zero denominator against a positive numerator would
    disprove the distance axioms, so it raises rather than returning inf;
    with at least two distinct points it cannot happen for any implemented
    kind (the replacement sets can't all be constant tuples).
    """
    n, q = config.points.n, config.points.q
    kind = ensure_supported(distance_kind, n, q)
    rows, z = _rows_of(config)
    if len(set(rows)) < 2:
        raise UsageError("the simplex ratio is undefined when all points coincide")
    numerator = kind.kernel(rows, q)
    denominator = _replaced_sum(kind, rows, z, q)
    if denominator <= 0.0:
        raise SimplexViolationError(
            f"{distance_kind}: positive numerator {numerator} against "
            f"denominator {denominator}",
            witness=config,
        )
    return RatioWitness(config, distance_kind, numerator, denominator, numerator / denominator)


# ---------------------------------------------------------------------------
# Randomized checking


def _sample_trial(rng: SplitMix64, n: int, q: int, sampler: str):
    """One (rows, z) draw.  Draw order is fixed so streams are reproducible."""
    rows = [tuple(rng.random() for _ in range(q)) for _ in range(n)]
    z: Optional[tuple] = None
    if sampler == "collapse":
        # half the time, collapse a random subset onto one of its members
        if n >= 3 and rng.random() < 0.5:
            size = 2 + rng.randint(n - 2)
            chosen = rng.sample_indices(n, size)
            src = rows[chosen[0]]
            for t in chosen[1:]:
                rows[t] = src
        # independently, half the time z probes a pairwise midpoint
        if rng.random() < 0.5:
            a, b = rng.sample_indices(n, 2)
            z = tuple(0.5 * (x + y) for x, y in zip(rows[a], rows[b]))
    if z is None:
        z = tuple(rng.random() for _ in range(q))
    return rows, z


def check_simplex_inequality(
    distance_kind: str,
    n: int,
    q: int,
    trials: int,
    seed: int = 0,
    sampler: str = "uniform",
    workers: int = 1,
) -> CheckReport:
    """Fuzz the simplex inequality with seeded random configurations.

    Reports the maximum observed ratio with its witness and collects any
    ratio above 1 + 1e-9 as a violation (report content, not an exception).
    Trial t draws from substream (seed, t); the reduction scans results in
    trial order, so reports are identical for any worker count.
    """
    kind = ensure_supported(distance_kind, n, q)
    if trials < 1:
        raise UsageError("trials must be >= 1")
    if sampler not in _SAMPLERS:
        raise UsageError(f"sampler must be one of {_SAMPLERS}, got {sampler!r}")

    def run_trial(t: int):
        rng = SplitMix64(substream_seed(seed, t))
        rows, z = _sample_trial(rng, n, q, sampler)
        numerator = kind.kernel(rows, q)
        if numerator == 0.0:
            return None
        denominator = _replaced_sum(kind, rows, z, q)
        if denominator <= 0.0:
            return (math.inf, numerator, denominator, rows, z)
        return (numerator / denominator, numerator, denominator, rows, z)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(run_trial, range(trials), chunksize=256)
            results = list(results)
    else:
        results = map(run_trial, range(trials))

    best = None
    skipped = 0
    violation_count = 0
    violations: List[RatioWitness] = []
    for res in results:
        if res is None:
            skipped += 1
            continue
        ratio, numerator, denominator, rows, z = res
        if best is None or ratio > best[0]:
            best = res
        if ratio > 1.0 + VIOLATION_SLACK:
            violation_count += 1
            if len(violations) < _MAX_STORED_VIOLATIONS:
                violations.append(
                    RatioWitness(
                        Configuration.from_rows(rows, z),
                        distance_kind,
                        numerator,
                        denominator,
                        ratio,
                    )
                )
    witness = None
    max_ratio = 0.0
    if best is not None:
        ratio, numerator, denominator, rows, z = best
        max_ratio = ratio
        witness = RatioWitness(
            Configuration.from_rows(rows, z), distance_kind, numerator, denominator, ratio
        )
    return CheckReport(
        distance_kind,
        n,
        q,
        trials,
        seed,
        sampler,
        max_ratio,
        witness,
        violation_count,
        violations,
        skipped,
    )


# ---------------------------------------------------------------------------
# Best-constant search


def _normalize(vec: List[float], n: int, q: int) -> Optional[List[float]]:
    """Translate the points' centroid to the origin, scale span to 1.

    Valid because every kind is translation invariant and positively
    homogeneous (the ratio cancels the scaling).  Returns None when all
    points coincide, which no valid candidate may do.
    """
    cent = [0.0] * q
    for i in range(n):
        for t in range(q):
            cent[t] += vec[i * q + t]
    for t in range(q):
        cent[t] /= n
    out = [0.0] * len(vec)
    for i in range(n + 1):
        for t in range(q):
            out[i * q + t] = vec[i * q + t] - cent[t]
    span2 = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            d2 = 0.0
            for t in range(q):
                diff = out[i * q + t] - out[j * q + t]
                d2 += diff * diff
            if d2 > span2:
                span2 = d2
    if span2 <= 0.0:
        return None
    span = math.sqrt(span2)
    return [v / span for v in out]


def _ratio_of_vec(kind: Kind, vec: List[float], n: int, q: int) -> float:
    rows = [tuple(vec[i * q : (i + 1) * q]) for i in range(n)]
    z = tuple(vec[n * q : (n + 1) * q])
    numerator = kind.kernel(rows, q)
    if numerator <= 0.0:
        return -math.inf
    denominator = _replaced_sum(kind, rows, z, q)
    if denominator <= 0.0:
        return -math.inf
    return numerator / denominator


def _pattern_search(kind: Kind, start: List[float], n: int, q: int, iters: int):
    """Coordinate pattern search: poll +/- step on each of the (n+1)q axes.

    Strict-improvement acceptance with a fixed poll order keeps the search
    deterministic; the step halves after a full failed poll and the search
    stops below 1e-7 (or at the iteration cap).
    """
    vec = _normalize(start, n, q)
    if vec is None:
        return None, -math.inf, 0
    value = _ratio_of_vec(kind, vec, n, q)
    step = 0.25
    used = 0
    dim = (n + 1) * q
    while step >= 1e-7 and used < iters:
        used += 1
        improved = False
        for idx in range(dim):
            for sign in (1.0, -1.0):
                cand = list(vec)
                cand[idx] += sign * step
                cand = _normalize(cand, n, q)
                if cand is None:
                    continue
                cval = _ratio_of_vec(kind, cand, n, q)
                if cval > value:
                    value = cval
                    vec = cand
                    improved = True
        if not improved:
            step *= 0.5
    return vec, value, used


def estimate_best_constant(
    distance_kind: str,
    n: int,
    q: int,
    restarts: int = 64,
    iters: int = 150,
    seed: int = 0,
    workers: int = 1,
) -> BestConstantReport:
    """Multistart pattern search for the best simplex-ratio constant.

    The first restarts begin from the known extremal constructions that fit
    (n, q); the rest from uniform random configurations drawn from
    per-restart substreams.  The reduction prefers strictly larger values
    and lower restart indices, so reports are worker-count independent.
    """
    kind = ensure_supported(distance_kind, n, q)
    if restarts < 1 or iters < 1:
        raise UsageError("restarts and iters must be >= 1")
    from .constructions import seed_configurations  # lazy: avoids an import cycle

    seeds = seed_configurations(n, q)

    def run_restart(r: int):
        if r < len(seeds):
            config = seeds[r]
            start = [float(v) for row in config.points.coords for v in row]
            start += [float(v) for v in config.z]
        else:
            rng = SplitMix64(substream_seed(seed, r))
            start = [rng.random() for _ in range((n + 1) * q)]
        return _pattern_search(kind, start, n, q, iters)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_restart, range(restarts)))
    else:
        results = [run_restart(r) for r in range(restarts)]

    best_vec = None
    best_value = -math.inf
    total_iters = 0
    for vec, value, used in results:
        total_iters += used
        if vec is not None and value > best_value:
            best_value = value
            best_vec = vec
    if best_vec is None:
        raise UsageError("no valid configuration found; increase restarts")
    rows = [best_vec[i * q : (i + 1) * q] for i in range(n)]
    z = best_vec[n * q : (n + 1) * q]
    witness = simplex_ratio(Configuration.from_rows(rows, z), distance_kind)
    return BestConstantReport(
        distance_kind,
        n,
        q,
        witness,
        restarts,
        total_iters,
        seed,
        proven_bounds(distance_kind, n, q),
    )


# ---------------------------------------------------------------------------
# The arc-spacing root and its lower bound


def solve_lambda_n(n: int) -> LambdaBound:
    """Solve the arc-spacing equation for lambda_n.

    p = floor(n/2) - 1; lambda_n is the unique root of
    T_p(sqrt(1 - x^2)) = 2x in (0, sin(pi/(2p+4))), found by bisection to
    1e-12.  The associated lower bound 1/(n*lambda_n) dominates the chain
    1/(n*sin(pi/(2p+4))) > (2p+4)/(n*pi) > 1/pi, which is asserted.
    """
    if n < 4:
        raise UsageError("the arc-spacing bound needs n >= 4")
    p = n // 2 - 1
    hi = math.sin(math.pi / (2 * p + 4))

    def f(x: float) -> float:
        return chebyshev_T(p, math.sqrt(max(1.0 - x * x, 0.0))) - 2.0 * x

    lam = bisect_root(f, 0.0, hi, tol=1e-12)
    bound = 1.0 / (n * lam)
    chain = (1.0 / (n * hi), (2 * p + 4) / (n * math.pi), 1.0 / math.pi)
    if not (bound > chain[0] > chain[1] > chain[2]):
        raise SimplexViolationError(
            f"lambda chain violated for n={n}: {bound} vs {chain}"
        )
    return LambdaBound(n, p, lam, bound)


def lambda_bound_table(ns: Sequence[int]) -> List[LambdaBound]:
    """Arc-spacing bounds for each n, in input order."""
    return [solve_lambda_n(n) for n in ns]
