import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cifc.channels import CapError, DmChannel, deterministic_channel, random_semidet
from cifc.info import (
    JointDist,
    attach_random_auxiliary,
    entropy,
    mutual_information,
    push_through,
    random_joint,
    sample_joint,
    uniform_joint,
)
from oracles import slow_conditional_entropy, slow_mutual_information

XOR = np.array([[0, 1], [1, 0]])
AND = np.array([[0, 0], [0, 1]])
IDENT2 = np.array([[0, 1], [0, 1]])  # y2 = x2


@st.composite
def joint_dists(draw, names=("A", "B", "C")):
    cards = [draw(st.integers(min_value=1, max_value=3)) for _ in names]
    cells = int(np.prod(cards))
    weights = draw(
        st.lists(
            st.floats(min_value=0.0, max_value=1.0, allow_nan=False),
            min_size=cells,
            max_size=cells,
        )
    )
    total = sum(weights)
    if total <= 0.0:
        weights = [1.0] * cells
        total = float(cells)
    table = np.asarray(weights, dtype=float).reshape(cards) / total
    table = table / table.sum()
    return JointDist(tuple(names), table)


class TestJointDist:
    def test_mass_must_be_one(self):
        with pytest.raises(ValueError):
            JointDist(("A",), np.array([0.5, 0.4]))

    def test_negative_mass_rejected(self):
        with pytest.raises(ValueError):
            JointDist(("A",), np.array([1.5, -0.5]))

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError):
            JointDist(("A", "A"), np.ones((2, 2)) / 4)

    def test_marginal_orders_axes_as_requested(self):
        table = np.arange(1, 7, dtype=float).reshape(2, 3)
        table /= table.sum()
        d = JointDist(("A", "B"), table)
        np.testing.assert_allclose(d.marginal(("B", "A")), table.T)

    def test_unknown_axis(self):
        d = uniform_joint([("A", 2)])
        with pytest.raises(ValueError):
            entropy(d, "Z")


class TestEntropy:
    def test_uniform_bit(self):
        assert entropy(uniform_joint([("A", 2)]), "A") == 1.0

    def test_xor_conditional(self):
        ch = deterministic_channel(XOR, IDENT2)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        assert abs(entropy(j, "Y1", "X2") - 1.0) < 1e-12

    def test_deterministic_output_given_inputs(self):
        ch = deterministic_channel(XOR, AND)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        assert entropy(j, "Y1", ("X1", "X2")) == 0.0
        assert entropy(j, "Y2", ("X1", "X2")) == 0.0

    def test_overlapping_groups_rejected(self):
        d = uniform_joint([("A", 2), ("B", 2)])
        with pytest.raises(ValueError):
            entropy(d, "A", "A")
        with pytest.raises(ValueError):
            mutual_information(d, "A", ("A", "B"))


class TestMutualInformation:
    def test_independent_bits(self):
        assert mutual_information(uniform_joint([("A", 2), ("B", 2)]), "A", "B") == 0.0

    def test_self_information_is_entropy(self):
        rng = np.random.default_rng(5)
        d = random_joint(rng, [("A", 3), ("B", 2)])
        # I(A; A') via a duplicated axis is not expressible; check I(A;B) <= H(A)
        ch = deterministic_channel(XOR, IDENT2)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        assert abs(mutual_information(j, "Y1", ("X1", "X2")) - entropy(j, "Y1")) < 1e-12

    def test_xor_channel_example(self):
        ch = deterministic_channel(XOR, IDENT2)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        assert abs(mutual_information(j, "Y1", "X1", "X2") - 1.0) < 1e-12


@settings(max_examples=60, deadline=None)
@given(joint_dists())
def test_chain_rule(d):
    lhs = entropy(d, ("A", "B"), "C")
    rhs = entropy(d, "A", "C") + entropy(d, "B", ("A", "C"))
    assert abs(lhs - rhs) < 1e-9


@settings(max_examples=60, deadline=None)
@given(joint_dists())
def test_mi_identity_and_symmetry(d):
    mi = mutual_information(d, "A", "B", "C")
    assert mi >= 0.0
    assert abs(mi - (entropy(d, "A", "C") - entropy(d, "A", ("B", "C")))) < 1e-9
    assert abs(mi - mutual_information(d, "B", "A", "C")) < 1e-9


@settings(max_examples=30, deadline=None)
@given(joint_dists())
def test_measures_match_slow_oracle(d):
    h = entropy(d, "A", ("B", "C"))
    assert abs(h - slow_conditional_entropy(d.names, d.table, ("A",), ("B", "C"))) < 1e-9
    mi = mutual_information(d, "A", "B")
    assert abs(mi - slow_mutual_information(d.names, d.table, ("A",), ("B",))) < 1e-9


class TestPushThrough:
    def test_deterministic_push(self):
        ch = deterministic_channel(XOR, IDENT2)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        assert j.names == ("X1", "X2", "Y1", "Y2")
        # Y1 = X1 xor X2 and Y2 = X2 almost surely
        for x1, x2 in itertools.product(range(2), range(2)):
            assert j.table[x1, x2, x1 ^ x2, x2] == 0.25

    def test_point_mass_input(self):
        ch = deterministic_channel(XOR, AND)
        table = np.zeros((2, 2))
        table[0, 1] = 1.0
        j = push_through(JointDist(("X1", "X2"), table), ch)
        assert j.table[0, 1, 1, 0] == 1.0

    def test_symmetric_kernel_gives_uniform_y2(self):
        kernel = np.full((2, 2, 2), 0.5)
        ch = DmChannel(XOR, kernel)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        y2 = j.marginal("Y2")
        np.testing.assert_allclose(y2, [0.5, 0.5])
        assert mutual_information(j, "Y2", ("X1", "X2", "Y1")) < 1e-12

    def test_marginal_preserved(self):
        rng = np.random.default_rng(11)
        ch = random_semidet(rng)
        d = random_joint(rng, [("U", 3), ("X1", 2), ("X2", 2)])
        j = push_through(d, ch)
        np.testing.assert_allclose(
            j.table.sum(axis=(3, 4)), d.table, rtol=0.0, atol=1e-15
        )

    def test_semidet_identity(self):
        # for deterministic Y1, I(Y1; X1 | X2) = H(Y1 | X2)
        rng = np.random.default_rng(12)
        for _ in range(20):
            ch = random_semidet(rng)
            d = random_joint(rng, [("X1", 2), ("X2", 2)])
            j = push_through(d, ch)
            assert abs(
                mutual_information(j, "Y1", "X1", "X2") - entropy(j, "Y1", "X2")
            ) <= 1e-12

    def test_axis_mismatch(self):
        ch = deterministic_channel(XOR, AND)
        with pytest.raises(ValueError):
            push_through(uniform_joint([("X1", 3), ("X2", 2)]), ch)
        with pytest.raises(ValueError):
            push_through(uniform_joint([("X1", 2)]), ch)
        j = push_through(uniform_joint([("X1", 2), ("X2", 2)]), ch)
        with pytest.raises(ValueError):
            push_through(j, ch)


class TestSamplers:
    def test_grid_denominator_one(self):
        tables = [d.table for d in sample_joint([("A", 2)], "grid", k=1)]
        assert sorted(tuple(t) for t in tables) == [(0.0, 1.0), (1.0, 0.0)]

    def test_grid_denominator_two(self):
        tables = list(sample_joint([("A", 2)], "grid", k=2))
        assert len(tables) == 3  # stars and bars: C(3, 1)
        masses = sorted(tuple(d.table) for d in tables)
        assert masses == [(0.0, 1.0), (0.5, 0.5), (1.0, 0.0)]

    def test_grid_count_stars_and_bars(self):
        n = sum(1 for _ in sample_joint([("A", 2), ("B", 2)], "grid", k=3))
        assert n == math.comb(3 + 3, 3)

    def test_dirichlet_reproducible(self):
        first = [d.table for _, d in zip(range(2), sample_joint([("A", 4)], "dirichlet", seed=7))]
        second = [d.table for _, d in zip(range(2), sample_joint([("A", 4)], "dirichlet", seed=7))]
        for a, b in zip(first, second):
            np.testing.assert_array_equal(a, b)

    def test_cell_cap(self):
        with pytest.raises(CapError):
            sample_joint([("A", 100), ("B", 100)], "dirichlet", seed=0)

    def test_dirichlet_needs_seed(self):
        with pytest.raises(ValueError):
            sample_joint([("A", 2)], "dirichlet")

    def test_attach_random_auxiliary_preserves_marginal(self):
        rng = np.random.default_rng(3)
        base = random_joint(rng, [("X1", 2), ("X2", 2)])
        ext = attach_random_auxiliary(base, "U", 4, rng)
        assert ext.names == ("U", "X1", "X2")
        np.testing.assert_allclose(ext.table.sum(axis=0), base.table, atol=1e-14)
