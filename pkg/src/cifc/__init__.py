"""Capacity-bound toolkit for the two-user cognitive interference channel.

Evaluates inner and outer rate bounds for discrete memoryless channels
whose cognitive output is a deterministic function of the inputs, and
for the complex AWGN channel in standard form, then certifies that the
bounds pin capacity down to one bit additively and a factor of two
multiplicatively in the strong-interference regime.
"""

from .channels import (
    CapError,
    DmChannel,
    GaussianChannel,
    RegimeError,
    deterministic_channel,
    linear_deterministic,
    random_deterministic,
    random_semidet,
)
from .dm_bounds import (
    binning_feasible,
    binning_inner_triple,
    binning_measures,
    det_capacity_triple,
    det_sumrate_outer,
    dm_outer_triple,
    search_region,
    semidet_inner_triple,
    specialize_u,
)
from .gaussian import (
    GapReport,
    InnerParams,
    additive_gap_report,
    cross_variances,
    gap_alpha,
    inner_triple_general,
    inner_triple_special,
    min_multiplicative_M,
    outer_r2_of_r1,
    outer_triple,
    tdma_r2_of_r1,
)
from .info import (
    JointDist,
    attach_random_auxiliary,
    entropy,
    mutual_information,
    push_through,
    random_joint,
    sample_joint,
    uniform_joint,
)
from .regions import (
    BoundTriple,
    RateRegion,
    additive_gap,
    contains,
    from_triples,
    multiplicative_gap,
    scale_region,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTriple",
    "CapError",
    "DmChannel",
    "GapReport",
    "GaussianChannel",
    "InnerParams",
    "JointDist",
    "RateRegion",
    "RegimeError",
    "additive_gap",
    "additive_gap_report",
    "attach_random_auxiliary",
    "binning_feasible",
    "binning_inner_triple",
    "binning_measures",
    "contains",
    "cross_variances",
    "det_capacity_triple",
    "det_sumrate_outer",
    "deterministic_channel",
    "dm_outer_triple",
    "entropy",
    "from_triples",
    "gap_alpha",
    "inner_triple_general",
    "inner_triple_special",
    "linear_deterministic",
    "min_multiplicative_M",
    "multiplicative_gap",
    "mutual_information",
    "outer_r2_of_r1",
    "outer_triple",
    "push_through",
    "random_deterministic",
    "random_joint",
    "random_semidet",
    "sample_joint",
    "scale_region",
    "search_region",
    "semidet_inner_triple",
    "specialize_u",
    "tdma_r2_of_r1",
    "uniform_joint",
]
