"""Channel models for the two-user cognitive interference channel.

Two families are supported: the complex AWGN channel in standard form
(unit noise variances, cross gains a and |b|) and finite-alphabet
discrete memoryless channels whose first output is a noiseless function
of the channel inputs.
"""

import math
from dataclasses import dataclass

import numpy as np

KERNEL_TOL = 1e-12
DEFAULT_SHIFT_CAP = 6


class RegimeError(ValueError):
    """An evaluator was called outside the regime it is defined for."""


class CapError(ValueError):
    """An alphabet or table size exceeds the configured cap."""


def _finite_power(value, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{name} must be a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    if value < 0.0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class GaussianChannel:
    """Complex AWGN cognitive interference channel in standard form.

    Receiver outputs are Y1 = X1 + a*X2 + Z1 and Y2 = |b|*X1 + X2 + Z2
    with unit-variance circularly symmetric noise and average transmit
    power limits p1 and p2. Only |b| enters any rate formula, so the
    stored phase of b is never read by an evaluator; a enters through
    |a| and Re(a) only.
    """

    a: complex
    b: complex
    p1: float
    p2: float

    def __post_init__(self):
        a = complex(self.a)
        b = complex(self.b)
        for name, gain in (("a", a), ("b", b)):
            if not (math.isfinite(gain.real) and math.isfinite(gain.imag)):
                raise ValueError(f"gain {name} must be finite, got {gain!r}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "p1", _finite_power(self.p1, "p1"))
        object.__setattr__(self, "p2", _finite_power(self.p2, "p2"))

    @property
    def abs_b(self) -> float:
        return abs(self.b)

    @property
    def regime(self) -> str:
        """Interference regime: "weak" when |b| <= 1, "strong" otherwise."""
        return "weak" if self.abs_b <= 1.0 else "strong"


@dataclass(frozen=True, eq=False)
class DmChannel:
    """Finite-alphabet channel with a deterministic first output.

    Y1 = f1(X1, X2) with certainty, stored as an integer table over the
    input pair. Y2 is drawn from the conditional pmf y2_kernel[x1, x2, :].
    The channel is fully deterministic when every kernel row is a point
    mass. Instances are immutable; the backing arrays are read-only.
    """

    f1_table: np.ndarray
    y2_kernel: np.ndarray
    ny1: int = 0  # inferred from f1_table when left at 0

    def __post_init__(self):
        f1 = np.asarray(self.f1_table)
        if f1.ndim != 2 or f1.size == 0 or not np.issubdtype(f1.dtype, np.integer):
            raise ValueError("f1_table must be a nonempty 2-D integer array")
        kernel = np.asarray(self.y2_kernel, dtype=float)
        if kernel.ndim != 3 or kernel.shape[:2] != f1.shape or kernel.shape[2] == 0:
            raise ValueError(
                "y2_kernel must have shape (nx1, nx2, ny2) matching f1_table"
            )
        ny1 = int(self.ny1) if self.ny1 else int(f1.max()) + 1
        if ny1 < 1 or int(f1.min()) < 0 or int(f1.max()) >= ny1:
            raise ValueError(f"f1_table entries must lie in [0, {ny1})")
        if not np.all(np.isfinite(kernel)):
            raise ValueError("y2_kernel entries must be finite")
        if float(kernel.min()) < 0.0 or float(kernel.max()) > 1.0:
            raise ValueError("y2_kernel entries must lie in [0, 1]")
        rows = kernel.sum(axis=2)
        if float(np.abs(rows - 1.0).max()) > KERNEL_TOL:
            raise ValueError("every y2_kernel row must sum to 1")
        f1 = f1.astype(np.int64, copy=True)
        f1.setflags(write=False)
        kernel = kernel.copy()
        kernel.setflags(write=False)
        object.__setattr__(self, "f1_table", f1)
        object.__setattr__(self, "y2_kernel", kernel)
        object.__setattr__(self, "ny1", ny1)

    @property
    def nx1(self) -> int:
        return self.f1_table.shape[0]

    @property
    def nx2(self) -> int:
        return self.f1_table.shape[1]

    @property
    def ny2(self) -> int:
        return self.y2_kernel.shape[2]

    def is_deterministic(self) -> bool:
        """True iff every Y2 kernel row is a point mass."""
        k = self.y2_kernel
        return bool(np.all((k == 0.0) | (k == 1.0)))

    @property
    def f2_table(self) -> np.ndarray:
        """The Y2 map of a fully deterministic channel."""
        if not self.is_deterministic():
            raise ValueError("channel has a stochastic Y2 kernel, no f2 table")
        f2 = np.argmax(self.y2_kernel, axis=2).astype(np.int64)
        f2.setflags(write=False)
        return f2


def deterministic_channel(f1_table, f2_table, ny1=0, ny2=0) -> DmChannel:
    """Build a fully deterministic channel from two output maps.

    The Y2 map becomes a 0/1 kernel, so is_deterministic() holds on the
    result and f2_table round-trips exactly.
    """
    f2 = np.asarray(f2_table)
    if f2.ndim != 2 or f2.size == 0 or not np.issubdtype(f2.dtype, np.integer):
        raise ValueError("f2_table must be a nonempty 2-D integer array")
    ny2 = int(ny2) if ny2 else int(f2.max()) + 1
    if ny2 < 1 or int(f2.min()) < 0 or int(f2.max()) >= ny2:
        raise ValueError(f"f2_table entries must lie in [0, {ny2})")
    kernel = np.eye(ny2)[f2]
    return DmChannel(f1_table, kernel, ny1=ny1)


def linear_deterministic(n11, n12, n21, n22, cap=DEFAULT_SHIFT_CAP) -> DmChannel:
    """Shift-matrix test channel over length-q binary vectors, q = max gain.

    Inputs and outputs are integers in [0, 2^q) read as bit vectors; a
    gain of n contributes the top n bits of the sender, i.e. an integer
    right shift by q - n, and contributions combine by XOR. Dense tables
    grow as 2^(3q), so q is capped (default 6).
    """
    gains = (n11, n12, n21, n22)
    for g in gains:
        if isinstance(g, bool) or not isinstance(g, (int, np.integer)) or g < 0:
            raise ValueError(f"gains must be nonnegative integers, got {gains}")
    q = int(max(gains))
    if q > cap:
        raise CapError(f"max gain {q} exceeds the cap {cap}; tables would be 2^{3 * q} cells")
    size = 1 << q
    x1 = np.arange(size, dtype=np.int64)[:, None]
    x2 = np.arange(size, dtype=np.int64)[None, :]
    f1 = (x1 >> (q - n11)) ^ (x2 >> (q - n12))
    f2 = (x1 >> (q - n21)) ^ (x2 >> (q - n22))
    return deterministic_channel(
        np.broadcast_to(f1, (size, size)).copy(),
        np.broadcast_to(f2, (size, size)).copy(),
        ny1=size,
        ny2=size,
    )


def random_semidet(rng, nx1=2, nx2=2, ny1=2, ny2=2) -> DmChannel:
    """Random channel: uniform Y1 map, Dirichlet rows for the Y2 kernel."""
    f1 = rng.integers(0, ny1, size=(nx1, nx2))
    kernel = rng.dirichlet(np.ones(ny2), size=(nx1, nx2))
    return DmChannel(f1, kernel, ny1=ny1)


def random_deterministic(rng, nx1=2, nx2=2, ny1=2, ny2=2) -> DmChannel:
    """Random fully deterministic channel (uniform output maps)."""
    f1 = rng.integers(0, ny1, size=(nx1, nx2))
    f2 = rng.integers(0, ny2, size=(nx1, nx2))
    return deterministic_channel(f1, f2, ny1=ny1, ny2=ny2)
