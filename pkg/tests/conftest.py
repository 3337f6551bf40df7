"""Shared test helpers: seeded samplers and report canonicalization."""

import random

import pytest

from ndist import Configuration, PointSet


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_rows(rng, n, q, lo=-1.0, hi=1.0):
    return [tuple(rng.uniform(lo, hi) for _ in range(q)) for _ in range(n)]


def clustered_rows(rng, n, q):
    """Rows with a fair chance of exact duplicates, the regime where most
    distances have corner cases."""
    rows = random_rows(rng, n, q)
    if n >= 3 and rng.random() < 0.5:
        k = rng.randrange(2, n + 1)
        picks = rng.sample(range(n), k)
        for i in picks[1:]:
            rows[i] = rows[picks[0]]
    return rows


def random_config(rng, n, q):
    rows = clustered_rows(rng, n, q)
    if rng.random() < 0.5 and n >= 2:
        i, j = rng.sample(range(n), 2)
        z = tuple((a + b) / 2.0 for a, b in zip(rows[i], rows[j]))
    else:
        z = tuple(rng.uniform(-1.0, 1.0) for _ in range(q))
    return Configuration(PointSet.from_rows(rows), z)


def canon_witness(w):
    """Hashable snapshot of a RatioWitness (ndarray fields defeat ==)."""
    if w is None:
        return None
    pts = tuple(tuple(row) for row in w.config.points.coords.tolist())
    z = tuple(w.config.z.tolist())
    return (pts, z, w.distance_kind, w.numerator, w.denominator, w.ratio)


def canon_check_report(r):
    return (
        r.distance_kind,
        r.n,
        r.q,
        r.trials,
        r.seed,
        r.sampler,
        r.max_ratio,
        canon_witness(r.witness),
        r.violation_count,
        tuple(canon_witness(v) for v in r.violations),
        r.skipped,
    )


def canon_best_report(r):
    return (
        r.distance_kind,
        r.n,
        r.q,
        canon_witness(r.best),
        r.restarts,
        r.iterations,
        r.seed,
        r.proven_bounds,
    )
