"""Closed-form rate bounds for the standard-form AWGN cognitive
interference channel and the constant-gap certificates comparing them.

Everything is in bits (base-2 logarithms). The outer bound and both gap
certificates are defined for strong interference (|b| > 1) only and
raise RegimeError otherwise; the weak regime has an exact solution that
is out of scope here. The inner bound evaluators accept any channel.

Power-split convention: at split alpha, the cognitive sender spends
alpha*p1 on its private codeword and beamforms the rest with the primary,
so the complement 1 - alpha drives the cross terms of both combination
variances. This choice keeps the total transmit power at p1 and makes
the inner sum cap equal the outer sum cap minus gap_alpha exactly.
"""

import math
from dataclasses import dataclass

import numpy as np

from .channels import GaussianChannel, RegimeError
from .regions import BoundTriple, RateRegion, region_from_points
from .regions import additive_gap as region_additive_gap
from .regions import from_triples

# absorbs last-ulp rounding when two routes to the same rate are compared
RATE_SLACK = 1e-12


def _require_strong(ch):
    if ch.regime != "strong":
        raise RegimeError(
            f"|b| = {ch.abs_b} is not > 1: bound defined only for strong interference"
        )


def _require_alpha(alpha):
    a = float(alpha)
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"alpha must be in [0, 1], got {alpha}")
    return a


def cross_variances(ch, alpha, literal_alpha=False):
    """Variances of X1 + a*X2 and |b|*X1 + X2 at power split alpha.

    literal_alpha=True evaluates the alternative reading with alpha
    instead of its complement in the cross terms; it exists for
    comparison only and no identity is claimed for it.
    """
    a = _require_alpha(alpha)
    cross = a if literal_alpha else 1.0 - a
    p1, p2 = ch.p1, ch.p2
    g = ch.a
    v1 = p1 + abs(g) ** 2 * p2 + 2.0 * g.real * math.sqrt(cross * p1 * p2)
    v2 = ch.abs_b**2 * p1 + p2 + 2.0 * math.sqrt(cross) * ch.abs_b * math.sqrt(p1 * p2)
    return max(v1, 0.0), max(v2, 0.0)


def gap_alpha(ch, alpha, literal_alpha=False) -> float:
    """Per-split certificate log2(1 + V/(1 + V)) with V = Var[X1 + a*X2].

    Always in [0, 1): it is the exact componentwise distance between the
    outer triple and the specialized inner triple at the same split.
    """
    v1, _ = cross_variances(ch, alpha, literal_alpha)
    return math.log2(1.0 + v1 / (1.0 + v1))


def outer_triple(ch, alpha) -> BoundTriple:
    """Strong-interference outer bound at power split alpha: an R1 cap and
    a beamforming sum cap, with no standalone R2 constraint."""
    _require_strong(ch)
    a = _require_alpha(alpha)
    r1 = math.log2(1.0 + a * ch.p1)
    s = math.log2(
        1.0
        + ch.abs_b**2 * ch.p1
        + ch.p2
        + 2.0 * math.sqrt((1.0 - a) * ch.abs_b**2 * ch.p1 * ch.p2)
    )
    return BoundTriple(r1, math.inf, s)


def outer_r2_of_r1(ch, r1) -> float:
    """The outer bound as the largest R2 at a given R1 in [0, log2(1+p1)].

    Inverts R1 = log2(1 + alpha*p1) in base 2, so the residual
    beamforming power is 1 + p1 - 2^R1.
    """
    _require_strong(ch)
    r1 = float(r1)
    r1_cap = math.log2(1.0 + ch.p1)
    if not -RATE_SLACK <= r1 <= r1_cap + RATE_SLACK:
        raise ValueError(f"r1 must lie in [0, {r1_cap}], got {r1}")
    r1 = min(max(r1, 0.0), r1_cap)
    resid = max(1.0 + ch.p1 - 2.0**r1, 0.0)
    return (
        math.log2(
            1.0
            + ch.abs_b**2 * ch.p1
            + ch.p2
            + 2.0 * math.sqrt(ch.abs_b**2 * resid * ch.p2)
        )
        - r1
    )


@dataclass(frozen=True)
class InnerParams:
    """Free parameters of the binning inner bound: power split alpha and the
    dithering noise variances of the two auxiliary codebooks. rho is the
    complex correlation of those noises; None selects the minimizing value,
    which the closed form absorbs through a clamped cross term."""

    alpha: float
    sigma1_sq: float = 1.0
    sigma2_sq: float = 0.0
    rho: complex | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", _require_alpha(self.alpha))
        for name in ("sigma1_sq", "sigma2_sq"):
            v = float(getattr(self, name))
            if not (math.isfinite(v) and v >= 0.0):
                raise ValueError(f"{name} must be finite and nonnegative, got {v}")
            object.__setattr__(self, name, v)
        if self.rho is not None:
            r = complex(self.rho)
            if abs(r) > 1.0 + 1e-12:
                raise ValueError(f"|rho| must be at most 1, got {abs(r)}")
            object.__setattr__(self, "rho", r)


def inner_triple_general(ch, params: InnerParams) -> BoundTriple:
    """Binning inner bound with free noise variances.

    With sigma2_sq = 0 either variance can vanish; the sum correction is
    then evaluated through its continuous limit (the clamped cross term
    is zero there and rho becomes irrelevant). A zero private signal with
    sigma1_sq = 0 degenerates the R1 bound to zero, flagged on the triple.
    """
    a = params.alpha
    s1, s2 = params.sigma1_sq, params.sigma2_sq
    v1, v2 = cross_variances(ch, a)
    b = ch.abs_b
    pa = a * ch.p1  # private power

    degenerate = False
    num = s1 + pa
    if num <= 0.0:
        r1_raw = -math.inf
        degenerate = True
    else:
        r1_raw = math.log2(num) - math.log2(s1 + v1 / (1.0 + v1))

    t2 = s2 + b**2 * pa
    pen2 = 0.0 if t2 <= 0.0 else math.log2(1.0 + s2 * b**2 * pa / t2)
    r2 = math.log2(1.0 + v2) - pen2

    if params.rho is None:
        esq = max(b * pa - math.sqrt(s1 * s2), 0.0) ** 2
    else:
        esq = abs(b * pa + params.rho * math.sqrt(s1 * s2)) ** 2
    if esq <= 0.0:
        corr = 0.0
    else:
        ratio = min(esq / ((b**2 * pa + s2) * (pa + s1)), 1.0)
        corr = math.log2(1.0 - ratio) if ratio < 1.0 else -math.inf
    sum_raw = r1_raw + r2 + corr

    r1_max = 0.0 if r1_raw == -math.inf else max(r1_raw, 0.0)
    sum_max = 0.0 if sum_raw == -math.inf else max(sum_raw, 0.0)
    return BoundTriple(
        r1_max,
        max(r2, 0.0),
        sum_max,
        r1_raw=r1_raw,
        sum_raw=sum_raw,
        degenerate=degenerate,
    )


def inner_triple_special(ch, alpha, literal_alpha=False) -> BoundTriple:
    """Inner bound at the reference noise choice (unit first variance, zero
    second): the outer caps minus gap_alpha on R1 and on the sum. The R2
    cap duplicates the outer sum cap and is kept for the redundancy check.
    """
    a = _require_alpha(alpha)
    g = gap_alpha(ch, a, literal_alpha)
    _, v2 = cross_variances(ch, a, literal_alpha)
    r1_raw = math.log2(1.0 + a * ch.p1) - g
    r2 = math.log2(1.0 + v2)
    sum_raw = r2 - g
    return BoundTriple(
        max(r1_raw, 0.0), r2, max(sum_raw, 0.0), r1_raw=r1_raw, sum_raw=sum_raw
    )


def _tdma_peak(ch) -> float:
    return math.log2(1.0 + (ch.abs_b * math.sqrt(ch.p1) + math.sqrt(ch.p2)) ** 2)


def tdma_r2_of_r1(ch, r1) -> float:
    """Time-sharing line between silencing the primary sender and joint
    beamforming to the primary receiver; a single point when p1 = 0."""
    r1 = float(r1)
    r1_cap = math.log2(1.0 + ch.p1)
    if not -RATE_SLACK <= r1 <= r1_cap + RATE_SLACK:
        raise ValueError(f"r1 must lie in [0, {r1_cap}], got {r1}")
    peak = _tdma_peak(ch)
    if r1_cap == 0.0:
        return peak
    r1 = min(max(r1, 0.0), r1_cap)
    return (1.0 - r1 / r1_cap) * peak


def tdma_region(ch) -> RateRegion:
    """The time-sharing segment as a convex rate region."""
    r1_cap = math.log2(1.0 + ch.p1)
    return region_from_points([(0.0, _tdma_peak(ch)), (r1_cap, 0.0)], convexify=True)


def tdma_linear_slack(ch, m, r1) -> float:
    """Slack of the linearized factor-m comparison at one R1.

    Nonnegative iff the time-sharing line scaled by m dominates the
    linear upper envelope of the outer bound there. Linear in R1, so
    checking the two interval endpoints settles the whole interval.
    """
    r1_cap = math.log2(1.0 + ch.p1)
    if r1_cap == 0.0:
        raise ValueError("the linearized comparison needs p1 > 0")
    peak = _tdma_peak(ch)
    return (1.0 - float(r1) / (float(m) * r1_cap)) * float(m) * peak - peak + float(r1)


def _outer_samples(ch, r1_grid):
    r1_cap = math.log2(1.0 + ch.p1)
    rs = np.linspace(0.0, r1_cap, max(int(r1_grid), 2))
    outer_vals = np.asarray([outer_r2_of_r1(ch, float(r)) for r in rs])
    return rs, outer_vals, r1_cap


def min_multiplicative_M(ch, r1_grid=512, tol=1e-6) -> float:
    """Smallest M >= 1 with M * tdma(R1 / M) >= outer(R1) on an R1 grid.

    Resolved by bisection to `tol`; a factor of two always suffices, so
    the bracket is [1, 2].
    """
    _require_strong(ch)
    rs, outer_vals, r1_cap = _outer_samples(ch, r1_grid)
    peak = _tdma_peak(ch)

    def scaled(m):
        if r1_cap == 0.0:
            return np.full_like(rs, m * peak)
        return (m - rs / r1_cap) * peak

    def ok(m):
        return bool(np.all(scaled(m) + RATE_SLACK >= outer_vals))

    if ok(1.0):
        return 1.0
    lo, hi = 1.0, 2.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def outer_region(ch, alpha_grid=512) -> RateRegion:
    """Envelope of the outer triples over an alpha grid (convex hull)."""
    alphas = np.linspace(0.0, 1.0, max(int(alpha_grid), 2))
    return from_triples([outer_triple(ch, float(x)) for x in alphas], convexify=True)


def inner_region(ch, alpha_grid=512) -> RateRegion:
    """Hull of the specialized inner triples over an alpha grid."""
    alphas = np.linspace(0.0, 1.0, max(int(alpha_grid), 2))
    return from_triples(
        [inner_triple_special(ch, float(x)) for x in alphas], convexify=True
    )


@dataclass(frozen=True)
class GapReport:
    """Constant-gap certificate for one channel.

    additive_gap_bits compares the outer envelope against the hull of the
    specialized inner bound; multiplicative_gap is the time-sharing
    factor. worst_alpha and worst_r1 are the witnesses (largest per-split
    certificate, tightest grid point of the factor comparison), which
    together with the grid sizes make the report reproducible.
    """

    channel: GaussianChannel
    additive_gap_bits: float
    multiplicative_gap: float
    worst_alpha: float
    worst_r1: float
    alpha_grid: int
    r1_grid: int

    def __post_init__(self):
        if not (math.isfinite(self.additive_gap_bits) and self.additive_gap_bits >= 0.0):
            raise ValueError(f"additive gap must be finite and nonnegative, got {self.additive_gap_bits}")
        if not (math.isfinite(self.multiplicative_gap) and self.multiplicative_gap >= 1.0):
            raise ValueError(f"multiplicative gap must be finite and >= 1, got {self.multiplicative_gap}")


def additive_gap_report(ch, alpha_grid=512, r1_grid=512, tol=1e-6) -> GapReport:
    """Full gap certificate for one strong-interference channel."""
    _require_strong(ch)
    alpha_grid = max(int(alpha_grid), 2)
    r1_grid = max(int(r1_grid), 2)
    outer = outer_region(ch, alpha_grid)
    inner = inner_region(ch, alpha_grid)
    add = region_additive_gap(outer, inner, grid=r1_grid, tol=tol)
    mult = min_multiplicative_M(ch, r1_grid=r1_grid, tol=tol)

    alphas = np.linspace(0.0, 1.0, alpha_grid)
    gaps = np.asarray([gap_alpha(ch, float(x)) for x in alphas])
    worst_alpha = float(alphas[int(np.argmax(gaps))])

    rs, outer_vals, r1_cap = _outer_samples(ch, r1_grid)
    peak = _tdma_peak(ch)
    if r1_cap == 0.0:
        slack = np.full_like(rs, mult * peak) - outer_vals
    else:
        slack = (mult - rs / r1_cap) * peak - outer_vals
    worst_r1 = float(rs[int(np.argmin(slack))])

    return GapReport(
        channel=ch,
        additive_gap_bits=add,
        multiplicative_gap=mult,
        worst_alpha=worst_alpha,
        worst_r1=worst_r1,
        alpha_grid=alpha_grid,
        r1_grid=r1_grid,
    )
