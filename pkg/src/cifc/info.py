"""Exact information measures on dense joint probability tables.

All measures are in bits (base-2 logarithms). Probabilities below
ZERO_EPS are treated as exact zeros in entropy sums, which implements
the 0*log(0) = 0 convention at simplex boundaries.
"""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .channels import CapError, DmChannel

PROB_TOL = 1e-12
ZERO_EPS = 1e-15
DEFAULT_CELL_CAP = 4096

# letters y and z are reserved for channel outputs in push_through
_AXIS_LETTERS = "abcdefgh"


def _as_names(arg):
    if isinstance(arg, str):
        return (arg,)
    return tuple(arg)


@dataclass(frozen=True, eq=False)
class JointDist:
    """Immutable dense probability table over named finite variables."""

    names: tuple
    table: np.ndarray

    def __post_init__(self):
        names = tuple(str(n) for n in _as_names(self.names))
        if not names:
            raise ValueError("a joint distribution needs at least one axis")
        if len(set(names)) != len(names):
            raise ValueError(f"axis names must be unique, got {names}")
        table = np.asarray(self.table, dtype=float)
        if table.ndim != len(names):
            raise ValueError(
                f"table has {table.ndim} axes but {len(names)} names were given"
            )
        if table.size == 0:
            raise ValueError("table must be nonempty")
        if not np.all(np.isfinite(table)):
            raise ValueError("probabilities must be finite")
        if float(table.min()) < 0.0:
            raise ValueError("probabilities must be nonnegative")
        total = float(table.sum())
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(f"table mass must be 1, got {total!r}")
        table = table.copy()
        table.setflags(write=False)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "table", table)

    def axis_index(self, name) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown axis {name!r}; axes are {self.names}") from None

    def card(self, name) -> int:
        return self.table.shape[self.axis_index(name)]

    def marginal(self, keep) -> np.ndarray:
        """Marginal table with axes in the order given by `keep`."""
        keep = _as_names(keep)
        if len(set(keep)) != len(keep):
            raise ValueError(f"duplicate axis in {keep}")
        for n in keep:
            self.axis_index(n)
        drop = tuple(i for i, n in enumerate(self.names) if n not in keep)
        m = self.table.sum(axis=drop) if drop else self.table
        remaining = [n for n in self.names if n in keep]
        perm = [remaining.index(n) for n in keep]
        if perm != list(range(len(perm))):
            m = np.transpose(m, perm)
        return m


def _validate_groups(dist, *groups):
    seen = set()
    for grp in groups:
        for n in grp:
            dist.axis_index(n)
            if n in seen:
                raise ValueError(f"axis {n!r} appears in more than one argument")
            seen.add(n)


def _entropy_of(dist, names) -> float:
    if not names:
        return 0.0
    p = dist.marginal(names).ravel()
    p = p[p > ZERO_EPS]
    if p.size == 0:
        return 0.0
    return float(-(p * np.log2(p)).sum())


def entropy(dist, targets, given=()) -> float:
    """Conditional entropy H(targets | given) in bits."""
    t = _as_names(targets)
    g = _as_names(given)
    _validate_groups(dist, t, g)
    value = _entropy_of(dist, t + g) - _entropy_of(dist, g)
    return value if value > 0.0 else 0.0


def mutual_information(dist, left, right, given=()) -> float:
    """Conditional mutual information I(left; right | given) in bits."""
    a = _as_names(left)
    b = _as_names(right)
    g = _as_names(given)
    _validate_groups(dist, a, b, g)
    value = entropy(dist, a, g) - entropy(dist, a, b + g)
    return value if value > 0.0 else 0.0


def push_through(dist, ch: DmChannel) -> JointDist:
    """Extend a distribution over the channel inputs with the output axes.

    Y1 is a point mass at f1(x1, x2); Y2 carries the kernel weights. The
    new axes are appended, so the marginal over the original axes is
    unchanged. The input must contain X1 and X2 with matching
    cardinalities and must not already contain Y1 or Y2.
    """
    names = dist.names
    for required in ("X1", "X2"):
        if required not in names:
            raise ValueError(f"distribution lacks axis {required}")
    for forbidden in ("Y1", "Y2"):
        if forbidden in names:
            raise ValueError(f"distribution already has axis {forbidden}")
    if dist.card("X1") != ch.nx1 or dist.card("X2") != ch.nx2:
        raise ValueError(
            f"input cardinalities ({dist.card('X1')}, {dist.card('X2')}) do not "
            f"match the channel ({ch.nx1}, {ch.nx2})"
        )
    if len(names) > len(_AXIS_LETTERS):
        raise ValueError(f"at most {len(_AXIS_LETTERS)} input axes supported")
    letters = _AXIS_LETTERS[: len(names)]
    i = letters[names.index("X1")]
    j = letters[names.index("X2")]
    onehot_y1 = (ch.f1_table[..., None] == np.arange(ch.ny1)).astype(float)
    out = np.einsum(
        f"{letters},{i}{j}y,{i}{j}z->{letters}yz",
        dist.table,
        onehot_y1,
        ch.y2_kernel,
    )
    return JointDist(names + ("Y1", "Y2"), out)


def _compositions(total: int, cells: int) -> Iterator[tuple]:
    if cells == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, cells - 1):
            yield (head,) + tail


def sample_joint(axes, method, k=None, seed=None, cap=DEFAULT_CELL_CAP):
    """Stream joint tables over the given (name, cardinality) axes.

    method "grid" enumerates every table whose entries are integer
    multiples of 1/k (finite stream, C(k + n - 1, n - 1) tables over n
    cells). method "dirichlet" yields flat-Dirichlet draws, reproducible
    for a fixed seed; that stream is infinite, so slice it.
    """
    axes = [(str(n), int(c)) for n, c in axes]
    if not axes or any(c < 1 for _, c in axes):
        raise ValueError(f"axes must be nonempty with positive cardinalities: {axes}")
    names = tuple(n for n, _ in axes)
    shape = tuple(c for _, c in axes)
    cells = int(np.prod(shape))
    if cells > cap:
        raise CapError(f"table of {cells} cells exceeds the cap {cap}")
    if method == "grid":
        if k is None or int(k) < 1:
            raise ValueError("grid sampling needs an integer k >= 1")
        k = int(k)

        def grid_stream():
            for comp in _compositions(k, cells):
                yield JointDist(names, np.asarray(comp, dtype=float).reshape(shape) / k)

        return grid_stream()
    if method == "dirichlet":
        if seed is None:
            raise ValueError("dirichlet sampling needs a seed")

        def dirichlet_stream():
            rng = np.random.default_rng(seed)
            ones = np.ones(cells)
            while True:
                yield JointDist(names, rng.dirichlet(ones).reshape(shape))

        return dirichlet_stream()
    raise ValueError(f"unknown sampling method {method!r}")


def uniform_joint(axes) -> JointDist:
    """Uniform distribution over the given (name, cardinality) axes."""
    axes = [(str(n), int(c)) for n, c in axes]
    names = tuple(n for n, _ in axes)
    shape = tuple(c for _, c in axes)
    cells = int(np.prod(shape))
    return JointDist(names, np.full(shape, 1.0 / cells))


def random_joint(rng, axes) -> JointDist:
    """One flat-Dirichlet draw over the given (name, cardinality) axes."""
    axes = [(str(n), int(c)) for n, c in axes]
    names = tuple(n for n, _ in axes)
    shape = tuple(c for _, c in axes)
    cells = int(np.prod(shape))
    return JointDist(names, rng.dirichlet(np.ones(cells)).reshape(shape))


def attach_random_auxiliary(dist, name, card, rng) -> JointDist:
    """Prepend an axis with a random conditional pmf given all existing axes.

    The marginal over the existing axes is preserved, which makes this the
    canonical way to scan auxiliary variables at a fixed input law.
    """
    if name in dist.names:
        raise ValueError(f"axis {name!r} already present")
    cond = rng.dirichlet(np.ones(int(card)), size=dist.table.shape)
    joint = np.moveaxis(cond * dist.table[..., None], -1, 0)
    return JointDist((str(name),) + dist.names, joint)
