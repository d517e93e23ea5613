"""Rate bounds for discrete memoryless cognitive interference channels.

Per input distribution, every bound here reduces to one BoundTriple. The
semi-deterministic capacity triple and the general outer-bound triple
coincide whenever Y1 is a noiseless function of the inputs, and the
binning inner bound matches them after the auxiliary substitution
U1 = Y1, U2 = U. For fully deterministic channels the capacity triple
specializes further through U = Y2. search_region approximates the union
over all input distributions by sampling.
"""

import itertools
import math
from typing import NamedTuple

import numpy as np

from .channels import DmChannel, RegimeError
from .info import (
    JointDist,
    entropy,
    mutual_information,
    push_through,
    sample_joint,
)
from .regions import BoundTriple, RateRegion, from_triples

FAMILIES = ("semidet", "det", "outer", "binning")


def _require_axes(dist, expected):
    if set(dist.names) != set(expected):
        raise ValueError(f"distribution axes {dist.names} must be exactly {expected}")


def semidet_inner_triple(dist, ch: DmChannel) -> BoundTriple:
    """Capacity triple of the semi-deterministic channel at one P(U, X1, X2):
    R1 <= H(Y1|X2), R2 <= I(Y2; U, X2), and their binning sum cap.
    """
    _require_axes(dist, ("U", "X1", "X2"))
    j = push_through(dist, ch)
    a = entropy(j, "Y1", "X2")
    b = mutual_information(j, "Y2", ("U", "X2"))
    c = b + entropy(j, "Y1", ("U", "X2"))
    return BoundTriple(a, b, c)


def dm_outer_triple(dist, ch: DmChannel) -> BoundTriple:
    """General outer-bound triple at one P(U, X1, X2); valid for any
    discrete memoryless channel, deterministic or not.
    """
    _require_axes(dist, ("U", "X1", "X2"))
    j = push_through(dist, ch)
    a = mutual_information(j, "Y1", "X1", "X2")
    b = mutual_information(j, "Y2", ("U", "X2"))
    c = b + mutual_information(j, "Y1", "X1", ("X2", "U"))
    return BoundTriple(a, b, c)


class BinningMeasures(NamedTuple):
    """The four mutual informations driving the binning inner bound."""

    i_y1_u1: float
    i_u1_x2: float
    i_y2_u2x2: float
    i_u1_u2x2: float

    @property
    def r1_raw(self) -> float:
        return self.i_y1_u1 - self.i_u1_x2

    @property
    def r2_cap(self) -> float:
        return self.i_y2_u2x2

    @property
    def sum_raw(self) -> float:
        return self.i_y1_u1 + self.i_y2_u2x2 - self.i_u1_u2x2

    def feasible(self, r1, r2, eps=1e-12) -> bool:
        """Closed-form feasibility of (r1, r2) with nonnegative binning
        overheads: intersect the admissible interval for the first
        binning rate with the budget left by the second.

        eps absorbs last-ulp rounding between the four measures, so rate
        pairs that are feasible by algebra (the output substitutions) do
        not flip at exact-equality boundaries.
        """
        if r1 < 0.0 or r2 < 0.0:
            raise ValueError("rates must be nonnegative")
        lo = self.i_u1_x2
        hi = self.i_y1_u1 - r1
        if hi < lo - eps:
            return False
        budget = self.i_y2_u2x2 - r2
        if budget < -eps:
            return False
        return max(lo, self.i_u1_u2x2 - budget) <= hi + eps


def binning_measures(dist, ch: DmChannel) -> BinningMeasures:
    """Evaluate the binning-bound measures at one P(U1, U2, X1, X2)."""
    _require_axes(dist, ("U1", "U2", "X1", "X2"))
    j = push_through(dist, ch)
    return BinningMeasures(
        i_y1_u1=mutual_information(j, "Y1", "U1"),
        i_u1_x2=mutual_information(j, "U1", "X2"),
        i_y2_u2x2=mutual_information(j, "Y2", ("U2", "X2")),
        i_u1_u2x2=mutual_information(j, "U1", ("U2", "X2")),
    )


def binning_inner_triple(dist, ch: DmChannel) -> BoundTriple:
    """Binning inner bound after eliminating the binning overhead rates.

    The raw R1 bound may be negative; it is clamped at zero for the
    polytope while the raw value still feeds the sum bound, preserving
    the identity sum = R1bound + R2bound - I(U1; U2 | X2).
    """
    m = binning_measures(dist, ch)
    a_raw = m.r1_raw
    b = m.r2_cap
    c_raw = m.sum_raw
    return BoundTriple(
        max(a_raw, 0.0), b, max(c_raw, 0.0), r1_raw=a_raw, sum_raw=c_raw
    )


def binning_feasible(r1, r2, dist, ch: DmChannel) -> bool:
    """True iff nonnegative binning overhead rates exist that support the
    rate pair (r1, r2) at this P(U1, U2, X1, X2)."""
    return binning_measures(dist, ch).feasible(float(r1), float(r2))


def det_capacity_triple(dist, ch: DmChannel) -> BoundTriple:
    """Capacity triple of a fully deterministic channel at one P(X1, X2):
    R1 <= H(Y1|X2), R2 <= H(Y2), R1 + R2 <= H(Y2) + H(Y1|Y2, X2).
    """
    if not ch.is_deterministic():
        raise RegimeError("channel has a stochastic Y2 kernel")
    _require_axes(dist, ("X1", "X2"))
    j = push_through(dist, ch)
    a = entropy(j, "Y1", "X2")
    b = entropy(j, "Y2")
    c = b + entropy(j, "Y1", ("Y2", "X2"))
    return BoundTriple(a, b, c)


def det_sumrate_outer(dist, ch: DmChannel) -> float:
    """Sum-rate outer bound for fully deterministic channels,
    I(X1, X2; Y2) + I(Y1; X1 | Y2, X2); equals the capacity sum cap."""
    if not ch.is_deterministic():
        raise RegimeError("channel has a stochastic Y2 kernel")
    _require_axes(dist, ("X1", "X2"))
    j = push_through(dist, ch)
    return mutual_information(j, ("X1", "X2"), "Y2") + mutual_information(
        j, "Y1", "X1", ("Y2", "X2")
    )


def specialize_u(dist, rule, ch: DmChannel) -> JointDist:
    """Attach auxiliaries pinned to channel outputs.

    rule "U=Y2" turns a P(X1, X2) into P(U, X1, X2) with U the
    deterministic Y2 value (requires a deterministic kernel). rule
    "U1=Y1,U2=U" turns a P(U, X1, X2) into P(U1, U2, X1, X2) with
    U1 = f1(X1, X2) and U2 a copy of U.
    """
    key = str(rule).replace(" ", "").upper()
    if key == "U=Y2":
        _require_axes(dist, ("X1", "X2"))
        if not ch.is_deterministic():
            raise ValueError("rule U=Y2 needs a deterministic Y2 kernel")
        t = dist.marginal(("X1", "X2"))
        onehot = (np.arange(ch.ny2)[:, None, None] == ch.f2_table[None, :, :]).astype(float)
        return JointDist(("U", "X1", "X2"), onehot * t[None, :, :])
    if key == "U1=Y1,U2=U":
        _require_axes(dist, ("U", "X1", "X2"))
        t = dist.marginal(("U", "X1", "X2"))
        onehot = (np.arange(ch.ny1)[:, None, None] == ch.f1_table[None, :, :]).astype(float)
        return JointDist(
            ("U1", "U2", "X1", "X2"), onehot[:, None, :, :] * t[None, :, :, :]
        )
    raise ValueError(f"unknown rule {rule!r}; use 'U=Y2' or 'U1=Y1,U2=U'")


def default_u_card(ch: DmChannel) -> int:
    """Heuristic auxiliary cardinality |X1|*|X2| + 1 used by the samplers.

    No optimality claim is attached to it; region metadata records it.
    """
    return ch.nx1 * ch.nx2 + 1


def family_axes(ch: DmChannel, family, u_card=0):
    """Sampling axes (name, cardinality) for one bound family."""
    u = int(u_card) if u_card else default_u_card(ch)
    if family in ("semidet", "outer"):
        return [("U", u), ("X1", ch.nx1), ("X2", ch.nx2)]
    if family == "det":
        return [("X1", ch.nx1), ("X2", ch.nx2)]
    if family == "binning":
        return [("U1", u), ("U2", u), ("X1", ch.nx1), ("X2", ch.nx2)]
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


_TRIPLE_FNS = {
    "semidet": semidet_inner_triple,
    "outer": dm_outer_triple,
    "det": det_capacity_triple,
    "binning": binning_inner_triple,
}


def search_region(
    ch: DmChannel,
    family,
    method="dirichlet",
    samples=200,
    k=None,
    seed=None,
    u_card=0,
    convexify=True,
    cap=4096,
) -> RateRegion:
    """Frontier of sampled bound triples for one family.

    The union over all input distributions is approximated by a sampled
    stream (grid enumeration or seeded Dirichlet draws) and collapsed to
    a Pareto frontier, convexified by default (time sharing). The result
    is deterministic for a fixed seed or grid.
    """
    axes = family_axes(ch, family, u_card)
    triple_fn = _TRIPLE_FNS[family]
    stream = sample_joint(axes, method, k=k, seed=seed, cap=cap)
    if method == "dirichlet":
        stream = itertools.islice(stream, int(samples))
    triples = [triple_fn(dist, ch) for dist in stream]
    return from_triples(triples, convexify=convexify)
