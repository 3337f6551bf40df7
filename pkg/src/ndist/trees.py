"""Tree-length distances: minimum spanning trees and shortest Steiner networks.

The spanning-tree length is exact (greedy edge growth).  The Steiner length
is exact for up to three distinct terminals (Fermat point) and is computed
for four to seven terminals in the plane by enumerating every full topology
with n - 2 junctions and minimizing each one's total length; degenerate
topologies appear as limits when junctions collapse onto terminals, and the
spanning tree caps the result from above.

Both spanning-tree routines report the total as an exactly rounded sum
(math.fsum) of their edge lengths, so two trees with the same edge multiset
report bit-identical totals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from numba import njit

from .errors import UnsupportedScaleError, UsageError
from .geometry import TAU_GEOM, PointSet, as_point, pairwise_distances

# Junction angle threshold: a vertex whose angle reaches 2*pi/3 (within
# TAU_GEOM radians) absorbs the junction.
_FERMAT_ANGLE = 2.0 * math.pi / 3.0

# A junction within 1e-9 * scale of a terminal counts as collapsed onto it.
_COLLAPSE_TOL = 1e-9


@dataclass(frozen=True)
class Tree:
    """A spanning tree over the input points."""

    vertices: PointSet
    edges: List[Tuple[int, int]]
    total_length: float


@dataclass(frozen=True)
class SteinerResult:
    """Shortest-network length with the surviving junction points."""

    length: float
    steiner_points: List[np.ndarray]
    topology_id: str


# ---------------------------------------------------------------------------
# Minimum spanning tree


def _prim_edges(rows) -> List[Tuple[int, int]]:
    """Greedy edge growth on a list of coordinate tuples, O(n^2)."""
    n = len(rows)
    in_tree = [False] * n
    in_tree[0] = True
    best = [0.0] * n
    best_from = [0] * n
    for v in range(1, n):
        best[v] = _dist2(rows[0], rows[v])
    best[0] = math.inf
    edges = []
    for _ in range(n - 1):
        v = min((u for u in range(n) if not in_tree[u]), key=lambda u: (best[u], u))
        u = best_from[v]
        edges.append((min(u, v), max(u, v)))
        in_tree[v] = True
        best[v] = math.inf
        for w in range(n):
            if not in_tree[w]:
                d2 = _dist2(rows[v], rows[w])
                if d2 < best[w]:
                    best[w] = d2
                    best_from[w] = v
    return edges


def _dist2(a, b) -> float:
    return sum((x - y) * (x - y) for x, y in zip(a, b))


def _edge_lengths(rows, edges) -> List[float]:
    return [math.sqrt(_dist2(rows[u], rows[v])) for u, v in edges]


def mst_length(rows) -> float:
    """Total spanning-tree length of a list of coordinate tuples."""
    edges = _prim_edges(rows)
    return math.fsum(sorted(_edge_lengths(rows, edges)))


def mst_distance(ps: PointSet) -> Tree:
    """Minimum total edge length over spanning trees (greedy edge growth)."""
    rows = [tuple(r) for r in ps.coords.tolist()]
    edges = _prim_edges(rows)
    total = math.fsum(sorted(_edge_lengths(rows, edges)))
    return Tree(ps, edges, total)


@njit(cache=True)
def _bruteforce_scan(dist: np.ndarray):  # pragma: no cover - jitted
    """Index of the cheapest labeled tree over all n^(n-2) encodings."""
    n = dist.shape[0]
    m = n - 2
    seq = np.zeros(m, dtype=np.int64)
    degree = np.empty(n, dtype=np.int64)
    best = 1e300
    best_index = 0
    index = 0
    while True:
        for v in range(n):
            degree[v] = 1
        for t in range(m):
            degree[seq[t]] += 1
        total = 0.0
        for t in range(m):
            leaf = -1
            for v in range(n):
                if degree[v] == 1:
                    leaf = v
                    break
            total += dist[leaf, seq[t]]
            degree[leaf] -= 1
            degree[seq[t]] -= 1
        u = -1
        for v in range(n):
            if degree[v] == 1:
                if u < 0:
                    u = v
                else:
                    total += dist[u, v]
                    break
        if total < best:
            best = total
            best_index = index
        pos = m - 1
        while pos >= 0 and seq[pos] == n - 1:
            seq[pos] = 0
            pos -= 1
        if pos < 0:
            break
        seq[pos] += 1
        index += 1
    return best_index


def _decode_sequence(seq: List[int], n: int) -> List[Tuple[int, int]]:
    """Edges of the labeled tree encoded by a length n-2 vertex sequence."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return edges


def mst_distance_bruteforce(ps: PointSet) -> float:
    """Exhaustive minimum over all n^(n-2) labeled spanning trees.

    Deliberately independent of the greedy construction so the two can
    cross-check each other.  Limited to n <= 8.
    """
    if ps.n > 8:
        raise UsageError("brute-force spanning-tree search is limited to n <= 8")
    rows = [tuple(r) for r in ps.coords.tolist()]
    n = ps.n
    if n == 2:
        return math.sqrt(_dist2(rows[0], rows[1]))
    best_index = int(_bruteforce_scan(pairwise_distances(ps.coords)))
    # re-derive the encoding from its flat index (mixed radix, last digit fastest)
    seq = []
    idx = best_index
    for _ in range(n - 2):
        seq.append(idx % n)
        idx //= n
    seq.reverse()
    edges = _decode_sequence(seq, n)
    return math.fsum(sorted(_edge_lengths(rows, edges)))


# ---------------------------------------------------------------------------
# Fermat point and three-terminal networks


def _vertex_angles(pa, pb, pc):
    """Angle at each vertex; degenerate rays give angle 0."""
    out = []
    for v, x, y in ((pa, pb, pc), (pb, pa, pc), (pc, pa, pb)):
        u1 = x - v
        u2 = y - v
        n1 = float(np.linalg.norm(u1))
        n2 = float(np.linalg.norm(u2))
        if n1 == 0.0 or n2 == 0.0:
            out.append(0.0)
            continue
        cosang = float(np.dot(u1, u2)) / (n1 * n2)
        out.append(math.acos(min(1.0, max(-1.0, cosang))))
    return out


def fermat_point(a, b, c) -> np.ndarray:
    """Point minimizing the summed distance to three points.

    A vertex whose angle reaches 2*pi/3 (minus TAU_GEOM) is the minimizer and
    is returned as-is.  Otherwise the minimizer is interior and found by
    iteratively re-weighted averaging, run until successive iterates move by
    less than 1e-13 * scale (capped at 10^4 rounds).
    """
    pa, pb, pc = as_point(a), as_point(b), as_point(c)
    if pa.shape != pb.shape or pb.shape != pc.shape:
        raise UsageError("points must share a dimension")
    # coincident points: the doubled point absorbs the minimum
    if np.array_equal(pa, pb) or np.array_equal(pa, pc):
        return pa.copy()
    if np.array_equal(pb, pc):
        return pb.copy()

    angles = _vertex_angles(pa, pb, pc)
    verts = (pa, pb, pc)
    for idx in range(3):
        if angles[idx] >= _FERMAT_ANGLE - TAU_GEOM:
            return verts[idx].copy()

    pts = np.stack(verts)
    scale = max(
        float(np.linalg.norm(pa - pb)),
        float(np.linalg.norm(pb - pc)),
        float(np.linalg.norm(pc - pa)),
    )
    eps = 1e-12 * scale
    stop = 1e-13 * scale
    x = pts.mean(axis=0)
    for _ in range(10_000):
        d = np.sqrt(np.sum((pts - x) ** 2, axis=1))
        w = 1.0 / np.maximum(d, eps)
        x_new = (w[:, None] * pts).sum(axis=0) / w.sum()
        if float(np.linalg.norm(x_new - x)) < stop:
            x = x_new
            break
        x = x_new
    return x


def steiner3_distance(a, b, c) -> SteinerResult:
    """Shortest network connecting three points (through the Fermat point)."""
    pa, pb, pc = as_point(a), as_point(b), as_point(c)
    f = fermat_point(pa, pb, pc)
    pts = np.stack((pa, pb, pc))
    dist_to_terms = np.sqrt(np.sum((pts - f) ** 2, axis=1))
    length = float(dist_to_terms.sum())
    scale = max(float(np.max(pairwise_distances(pts))), 1.0e-300)
    if float(dist_to_terms.min()) <= _COLLAPSE_TOL * scale:
        v = int(np.argmin(dist_to_terms))
        edges = sorted(f"t{min(v, o)}-t{max(v, o)}" for o in range(3) if o != v)
        return SteinerResult(length, [], ",".join(edges))
    return SteinerResult(length, [f], "s0-t0,s0-t1,s0-t2")


# ---------------------------------------------------------------------------
# Full-topology enumeration for 4..7 terminals in the plane


@njit(cache=True)
def _optimize_topology(verts, adj, n_term, n_st, scale):  # pragma: no cover
    """Gauss-Seidel re-weighted averaging on one full topology.

    Each junction update is a majorize-minimize step, so the total length
    never increases; stop once a sweep improves it by < 1e-12 * scale.
    """
    eps = 1e-12 * scale
    tol = 1e-12 * scale
    # a few averaging passes spread the initial junctions sensibly
    for _ in range(n_st + 2):
        for j in range(n_st):
            vj = n_term + j
            ax = 0.0
            ay = 0.0
            for t in range(3):
                u = adj[j, t]
                ax += verts[u, 0]
                ay += verts[u, 1]
            verts[vj, 0] = ax / 3.0
            verts[vj, 1] = ay / 3.0
    prev = 1e300
    result = prev
    for _ in range(2000):
        for j in range(n_st):
            vj = n_term + j
            sx = 0.0
            sy = 0.0
            sw = 0.0
            for t in range(3):
                u = adj[j, t]
                dx = verts[vj, 0] - verts[u, 0]
                dy = verts[vj, 1] - verts[u, 1]
                d = math.sqrt(dx * dx + dy * dy)
                if d < eps:
                    d = eps
                w = 1.0 / d
                sx += w * verts[u, 0]
                sy += w * verts[u, 1]
                sw += w
            verts[vj, 0] = sx / sw
            verts[vj, 1] = sy / sw
        total = 0.0
        for j in range(n_st):
            vj = n_term + j
            for t in range(3):
                u = adj[j, t]
                if u < n_term or u > vj:
                    dx = verts[vj, 0] - verts[u, 0]
                    dy = verts[vj, 1] - verts[u, 1]
                    total += math.sqrt(dx * dx + dy * dy)
        result = total
        if prev - total < tol:
            break
        prev = total
    return result


_TOPOLOGY_CACHE: dict = {}


def _full_topologies(k: int):
    """All full Steiner topologies on k labeled terminals (k - 2 junctions).

    Built by repeatedly splitting an edge of a smaller topology with a new
    junction that picks up the next terminal; vertex ids are terminals
    0..k-1 then junctions k..2k-3.  Returns adjacency arrays (junction ->
    its three neighbors) for the optimizer.  Counts: 3, 15, 105, 945 for
    k = 4..7, the double factorial (2k-5)!!.
    """
    if k in _TOPOLOGY_CACHE:
        return _TOPOLOGY_CACHE[k]
    base = [[(0, k), (1, k), (2, k)]]  # one junction joining t0,t1,t2
    n_st = 1
    for t in range(3, k):
        new_junction = k + n_st
        grown = []
        for edges in base:
            for e_idx in range(len(edges)):
                u, v = edges[e_idx]
                new_edges = edges[:e_idx] + edges[e_idx + 1 :]
                new_edges += [(u, new_junction), (v, new_junction), (t, new_junction)]
                grown.append(new_edges)
        base = grown
        n_st += 1
    out = []
    for edges in base:
        adj = np.zeros((n_st, 3), dtype=np.int64)
        fill = np.zeros(n_st, dtype=np.int64)
        for u, v in edges:
            for w, o in ((u, v), (v, u)):
                if w >= k:
                    adj[w - k, fill[w - k]] = o
                    fill[w - k] += 1
        out.append(adj)
    _TOPOLOGY_CACHE[k] = out
    return out


def _dedupe(pts: np.ndarray):
    """Indices of first occurrences of exactly-equal rows, in input order."""
    seen = set()
    keep = []
    for idx, row in enumerate(pts):
        key = row.tobytes()
        if key not in seen:
            seen.add(key)
            keep.append(idx)
    return keep


def _steiner_solve(pts: np.ndarray):
    """Length and junction positions for 1..7 distinct points in the plane."""
    keep = _dedupe(pts)
    dpts = pts[keep]
    k = len(keep)
    if k == 1:
        return 0.0, np.zeros((0, 2))
    if k == 2:
        return float(np.linalg.norm(dpts[0] - dpts[1])), np.zeros((0, 2))
    if k == 3:
        f = fermat_point(dpts[0], dpts[1], dpts[2])
        length = float(np.sqrt(np.sum((dpts - f) ** 2, axis=1)).sum())
        return length, f[None, :]
    scale = float(np.max(pairwise_distances(dpts)))
    rows = [tuple(r) for r in dpts.tolist()]
    best_len = mst_length(rows)
    best_pos = np.zeros((0, 2))
    n_st = k - 2
    for adj in _full_topologies(k):
        verts = np.zeros((k + n_st, 2))
        verts[:k] = dpts
        total = float(_optimize_topology(verts, adj, k, n_st, scale))
        if total < best_len - 1e-15 * scale:
            best_len = total
            best_pos = verts[k:].copy()
    return best_len, best_pos


def _fermat_length_xy(a, b, c) -> float:
    """Summed distance from the three-point minimizer, on plain floats.

    Coincident pairs collapse to a segment and a vertex angle of 2*pi/3 or
    more absorbs the junction, as in fermat_point.  The interior case uses
    the exact identity L^2 = (|ab|^2 + |bc|^2 + |ca|^2)/2 + 2*sqrt(3)*area,
    so no iteration is involved.
    """
    if a == b:
        return math.hypot(a[0] - c[0], a[1] - c[1])
    if a == c or b == c:
        return math.hypot(a[0] - b[0], a[1] - b[1])
    pts = (a, b, c)
    cos_cut = math.cos(_FERMAT_ANGLE - TAU_GEOM)
    for idx in range(3):
        v = pts[idx]
        x = pts[(idx + 1) % 3]
        y = pts[(idx + 2) % 3]
        u1 = (x[0] - v[0], x[1] - v[1])
        u2 = (y[0] - v[0], y[1] - v[1])
        n1 = math.hypot(*u1)
        n2 = math.hypot(*u2)
        cosang = (u1[0] * u2[0] + u1[1] * u2[1]) / (n1 * n2)
        if cosang <= cos_cut:
            return n1 + n2
    ab = (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
    bc = (b[0] - c[0]) ** 2 + (b[1] - c[1]) ** 2
    ca = (a[0] - c[0]) ** 2 + (a[1] - c[1]) ** 2
    cross = abs(
        (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    )
    return math.sqrt(0.5 * (ab + bc + ca) + math.sqrt(3.0) * cross)


def steiner_length(rows) -> float:
    """Float-only shortest-network length (plane, n <= 7)."""
    tuples = [tuple(float(v) for v in r) for r in rows]
    if any(len(r) != 2 for r in tuples):
        raise UnsupportedScaleError(
            "the shortest-network distance is implemented for q = 2 only"
        )
    if len(tuples) > 7:
        raise UnsupportedScaleError(
            "the shortest-network distance is implemented for n <= 7"
        )
    distinct = list(dict.fromkeys(tuples))
    if len(distinct) == 1:
        return 0.0
    if len(distinct) == 2:
        a, b = distinct
        return math.hypot(a[0] - b[0], a[1] - b[1])
    if len(distinct) == 3:
        return _fermat_length_xy(*distinct)
    return _steiner_solve(np.asarray(distinct, dtype=np.float64))[0]


def steiner_distance(ps: PointSet) -> SteinerResult:
    """Shortest connected network spanning the points (junctions allowed).

    Exact for up to three distinct points; for four to seven the minimum
    over all full topologies, with junction collapse covering the degenerate
    topologies and the spanning tree as an upper bound.
    """
    if ps.q != 2:
        raise UnsupportedScaleError(
            "the shortest-network distance is implemented for q = 2 only"
        )
    if ps.n > 7:
        raise UnsupportedScaleError(
            "the shortest-network distance is implemented for n <= 7"
        )
    pts = ps.coords
    if ps.n == 2:
        return SteinerResult(float(np.linalg.norm(pts[0] - pts[1])), [], "t0-t1")
    if ps.n == 3:
        return steiner3_distance(pts[0], pts[1], pts[2])
    length, spos = _steiner_solve(pts)
    scale = max(float(np.max(pairwise_distances(pts))), 1.0e-300)
    survivors: List[np.ndarray] = []
    for s in spos:
        d = np.sqrt(np.sum((pts - s) ** 2, axis=1))
        if float(d.min()) > _COLLAPSE_TOL * scale:
            if all(
                float(np.linalg.norm(s - t)) > _COLLAPSE_TOL * scale
                for t in survivors
            ):
                survivors.append(s)
    survivors.sort(key=lambda s: (s[0], s[1]))
    topo = _topology_label(pts, survivors)
    return SteinerResult(length, survivors, topo)


def _topology_label(pts: np.ndarray, steiner_pts) -> str:
    """Canonical edge-list label for the final network.

    Junctions are labeled s0, s1, ... in coordinate order.  A spanning tree
    over terminals plus junctions reproduces the optimized network's edges,
    because an optimal Steiner tree is a minimum spanning tree of its own
    vertex set.
    """
    keep = _dedupe(pts)
    labels = [f"t{i}" for i in keep] + [f"s{j}" for j in range(len(steiner_pts))]
    merged = [tuple(pts[i].tolist()) for i in keep]
    merged += [tuple(float(v) for v in s) for s in steiner_pts]
    edges = _prim_edges(merged)
    named = sorted("-".join(sorted((labels[u], labels[v]))) for u, v in edges)
    return ",".join(named)
