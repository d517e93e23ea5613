"""Rate-region geometry.

Pareto frontiers, time-sharing hulls, membership tests, and the additive
and multiplicative gap metrics between an outer and an inner region. Gap
metrics are defined on sampled frontiers and resolved by bisection, which
is exact enough for regions built from one-parameter families of
half-plane constraints.
"""

import math
from dataclasses import dataclass

import numpy as np

# slack absorbing float rounding when a frontier point is tested against
# the frontier it was interpolated from
EDGE_EPS = 1e-12


@dataclass(frozen=True)
class BoundTriple:
    """One rate polytope {R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}
    in the nonnegative quadrant.

    r2_max may be +inf when no standalone R2 constraint exists. r1_raw
    and sum_raw carry pre-clamp values: the rate caps are clamped at zero
    for region geometry, while identity checks and binning-feasibility
    arithmetic use the raw values. They default to the clamped caps.
    """

    r1_max: float
    r2_max: float
    sum_max: float
    r1_raw: float | None = None
    sum_raw: float | None = None
    degenerate: bool = False

    def __post_init__(self):
        r1 = float(self.r1_max)
        r2 = float(self.r2_max)
        s = float(self.sum_max)
        if not (math.isfinite(r1) and r1 >= 0.0):
            raise ValueError(f"r1_max must be finite and nonnegative, got {r1}")
        if math.isnan(r2) or r2 < 0.0:
            raise ValueError(f"r2_max must be nonnegative (or +inf), got {r2}")
        if not (math.isfinite(s) and s >= 0.0):
            raise ValueError(f"sum_max must be finite and nonnegative, got {s}")
        raw1 = r1 if self.r1_raw is None else float(self.r1_raw)
        raws = s if self.sum_raw is None else float(self.sum_raw)
        if math.isnan(raw1) or math.isnan(raws):
            raise ValueError("raw values must not be NaN")
        object.__setattr__(self, "r1_max", r1)
        object.__setattr__(self, "r2_max", r2)
        object.__setattr__(self, "sum_max", s)
        object.__setattr__(self, "r1_raw", raw1)
        object.__setattr__(self, "sum_raw", raws)

    def contains(self, r1, r2, tol=0.0) -> bool:
        """Membership of a rate pair in the clamped polytope."""
        return (
            r1 >= -tol
            and r2 >= -tol
            and r1 <= self.r1_max + tol
            and r2 <= self.r2_max + tol
            and r1 + r2 <= self.sum_max + tol
        )


@dataclass(frozen=True)
class RateRegion:
    """Pareto frontier of a rate region.

    Vertices are sorted by r1 strictly ascending with r2 strictly
    descending. The region is the downward closure (toward the axes) of
    the convex hull of the vertices when convexified, otherwise of the
    union of vertex-anchored rectangles.
    """

    vertices: tuple
    convexified: bool = False

    def __post_init__(self):
        verts = tuple((float(x), float(y)) for x, y in self.vertices)
        if not verts:
            raise ValueError("a region needs at least one vertex")
        for x, y in verts:
            if not (math.isfinite(x) and math.isfinite(y) and x >= 0.0 and y >= 0.0):
                raise ValueError(f"vertex ({x}, {y}) must be finite and nonnegative")
        for (x0, y0), (x1, y1) in zip(verts, verts[1:]):
            if not (x1 > x0 and y1 < y0):
                raise ValueError("vertices must be strictly Pareto sorted")
        object.__setattr__(self, "vertices", verts)

    @property
    def max_r1(self) -> float:
        return self.vertices[-1][0]

    @property
    def max_r2(self) -> float:
        return self.vertices[0][1]


def pareto_prune(points) -> list:
    """Strict Pareto set of (r1, r2) points, sorted r1 asc / r2 desc."""
    uniq = sorted({(float(x), float(y)) for x, y in points}, key=lambda p: (-p[0], -p[1]))
    out = []
    best = -math.inf
    for x, y in uniq:
        if y > best:
            out.append((x, y))
            best = y
    out.reverse()
    return out


def _upper_concave_hull(pts) -> list:
    """Upper concave envelope of Pareto-sorted points (collinear dropped)."""
    if len(pts) <= 2:
        return list(pts)
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0.0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def region_from_points(points, convexify=False) -> RateRegion:
    """Region whose frontier passes through the Pareto set of `points`."""
    cleaned = []
    for x, y in points:
        x, y = float(x), float(y)
        if x < 0.0:
            if x < -1e-9:
                raise ValueError(f"negative rate coordinate {x}")
            x = 0.0
        if y < 0.0:
            if y < -1e-9:
                raise ValueError(f"negative rate coordinate {y}")
            y = 0.0
        cleaned.append((x, y))
    pts = pareto_prune(cleaned)
    if convexify:
        pts = _upper_concave_hull(pts)
    return RateRegion(tuple(pts), convexified=convexify)


def from_triples(triples, convexify=False) -> RateRegion:
    """Region spanned by a collection of BoundTriple polytopes.

    Enumerates each triple's frontier corners, merges, Pareto-prunes, and
    optionally takes the time-sharing hull. An empty collection yields
    the origin-only region.
    """
    pts = [(0.0, 0.0)]
    for t in triples:
        a, b, c = t.r1_max, t.r2_max, t.sum_max
        pts.append((0.0, min(b, c)))
        pts.append((min(a, c), 0.0))
        if c >= a:
            pts.append((a, min(b, c - a)))
        if math.isfinite(b) and c >= b:
            pts.append((min(a, c - b), b))
    return region_from_points(pts, convexify)


def _vertex_arrays(region):
    v = np.asarray(region.vertices, dtype=float)
    return v[:, 0], v[:, 1]


def frontier_r2(region, r1s):
    """Largest r2 with (r1, r2) in the region; -inf beyond its r1 span."""
    xs, ys = _vertex_arrays(region)
    q = np.asarray(r1s, dtype=float)
    scalar = q.ndim == 0
    q = np.atleast_1d(q)
    inside = q <= xs[-1] + EDGE_EPS
    qc = np.minimum(q, xs[-1])
    if region.convexified:
        out = np.interp(qc, xs, ys)
    else:
        idx = np.minimum(np.searchsorted(xs, qc, side="left"), len(xs) - 1)
        out = ys[idx]
    out = np.where(inside, out, -np.inf)
    return float(out[0]) if scalar else out


def contains_many(region, r1s, r2s, tol=0.0):
    """Vectorized membership with L-inf inflation by `tol`."""
    xs = np.maximum(np.asarray(r1s, dtype=float) - tol, 0.0)
    ys = np.asarray(r2s, dtype=float) - tol
    return ys <= frontier_r2(region, xs) + EDGE_EPS


def contains(region, point, tol=0.0) -> bool:
    """True iff `point` lies in the region inflated by `tol` (L-inf)."""
    r1, r2 = point
    return bool(contains_many(region, np.asarray([r1]), np.asarray([r2]), tol)[0])


def scale_region(region, factor) -> RateRegion:
    """Region with every vertex scaled by a positive factor."""
    factor = float(factor)
    if not factor > 0.0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    verts = tuple((x * factor, y * factor) for x, y in region.vertices)
    return RateRegion(verts, convexified=region.convexified)


def _frontier_samples(region, grid):
    xs, _ = _vertex_arrays(region)
    q = np.unique(np.concatenate([np.linspace(0.0, xs[-1], max(int(grid), 2)), xs]))
    return q, frontier_r2(region, q)


def additive_gap(outer, inner, grid=512, tol=1e-6) -> float:
    """Smallest g >= 0 so the outer frontier shifted down by g bits per
    user (clamped at zero) lands inside the inner region.

    Resolved by bisection to `tol` on `grid` outer-frontier samples.
    """
    xs, ys = _frontier_samples(outer, grid)

    def ok(g):
        return bool(
            np.all(contains_many(inner, np.maximum(xs - g, 0.0), np.maximum(ys - g, 0.0)))
        )

    if ok(0.0):
        return 0.0
    lo = 0.0
    hi = float(max(xs.max(), ys.max()))
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def multiplicative_gap(outer, inner, grid=512, tol=1e-6) -> float:
    """Smallest M >= 1 so every outer frontier point scaled by 1/M lies in
    the inner region; +inf when no finite factor works (origin-only inner
    against a nonzero outer).
    """
    xs, ys = _frontier_samples(outer, grid)
    if max(float(xs.max()), float(ys.max())) <= EDGE_EPS:
        return 1.0

    def ok(m):
        return bool(np.all(contains_many(inner, xs / m, ys / m)))

    if ok(1.0):
        return 1.0
    hi = 2.0
    while not ok(hi):
        hi *= 2.0
        if hi > 1e12:
            return math.inf
    lo = hi / 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi
