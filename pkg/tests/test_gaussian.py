import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cifc.channels import GaussianChannel, RegimeError
from cifc.gaussian import (
    InnerParams,
    additive_gap_report,
    cross_variances,
    gap_alpha,
    inner_region,
    inner_triple_general,
    inner_triple_special,
    min_multiplicative_M,
    outer_r2_of_r1,
    outer_region,
    outer_triple,
    tdma_linear_slack,
    tdma_r2_of_r1,
    tdma_region,
)
from cifc.regions import multiplicative_gap

REF = GaussianChannel(0, 2, 1.0, 1.0)
LOG2_6 = math.log2(6)
LOG2_10 = math.log2(10)
LOG2_15 = math.log2(1.5)

# frozen by the bisection on the default 512-point grid at tol 1e-6
REF_MIN_M = 1.5121088


@st.composite
def channels_strong(draw):
    p1 = draw(st.floats(min_value=0.0, max_value=50.0))
    p2 = draw(st.floats(min_value=0.0, max_value=50.0))
    b = draw(st.floats(min_value=1.01, max_value=20.0))
    a_re = draw(st.floats(min_value=-5.0, max_value=5.0))
    a_im = draw(st.floats(min_value=-5.0, max_value=5.0))
    return GaussianChannel(complex(a_re, a_im), b, p1, p2)


class TestCrossVariances:
    def test_full_private_power(self):
        v1, v2 = cross_variances(REF, 1.0)
        assert (v1, v2) == (1.0, 5.0)

    def test_full_beamforming(self):
        v1, v2 = cross_variances(REF, 0.0)
        assert (v1, v2) == (1.0, 9.0)

    def test_zero_power(self):
        ch = GaussianChannel(0, 2, 0.0, 0.0)
        assert cross_variances(ch, 0.5) == (0.0, 0.0)

    def test_alpha_out_of_range(self):
        with pytest.raises(ValueError):
            cross_variances(REF, 1.5)

    def test_literal_alpha_variant(self):
        # the comparison switch moves the split into the cross terms
        ch = GaussianChannel(1, 2, 1.0, 1.0)
        v1_lit, _ = cross_variances(ch, 0.0, literal_alpha=True)
        v1_std, _ = cross_variances(ch, 0.0)
        assert v1_lit == 2.0 and v1_std == 4.0


class TestOuterTriple:
    def test_worked_alpha_one(self):
        t = outer_triple(REF, 1.0)
        assert t.r1_max == 1.0
        assert math.isinf(t.r2_max)
        assert abs(t.sum_max - LOG2_6) < 1e-12

    def test_worked_alpha_zero(self):
        t = outer_triple(REF, 0.0)
        assert t.r1_max == 0.0
        assert abs(t.sum_max - LOG2_10) < 1e-12

    def test_zero_power(self):
        t = outer_triple(GaussianChannel(0, 2, 0.0, 0.0), 0.5)
        assert t.r1_max == 0.0 and t.sum_max == 0.0

    def test_weak_channel_rejected(self):
        with pytest.raises(RegimeError):
            outer_triple(GaussianChannel(0, 0.5, 1.0, 1.0), 0.5)

    def test_monotone_in_alpha(self):
        alphas = np.linspace(0.0, 1.0, 101)
        triples = [outer_triple(REF, float(a)) for a in alphas]
        r1s = [t.r1_max for t in triples]
        sums = [t.sum_max for t in triples]
        assert all(x <= y + 1e-12 for x, y in zip(r1s, r1s[1:]))
        assert all(x >= y - 1e-12 for x, y in zip(sums, sums[1:]))


class TestOuterR2OfR1:
    def test_endpoints(self):
        assert abs(outer_r2_of_r1(REF, 0.0) - LOG2_10) < 1e-12
        assert abs(outer_r2_of_r1(REF, 1.0) - (LOG2_6 - 1.0)) < 1e-12

    def test_substitution_identity(self):
        for a in np.linspace(0.0, 1.0, 57):
            a = float(a)
            t = outer_triple(REF, a)
            r1 = math.log2(1.0 + a * REF.p1)
            assert abs(outer_r2_of_r1(REF, r1) - (t.sum_max - r1)) < 1e-12

    def test_out_of_interval(self):
        with pytest.raises(ValueError):
            outer_r2_of_r1(REF, 1.5)
        with pytest.raises(ValueError):
            outer_r2_of_r1(REF, -0.5)


class TestGapAlpha:
    def test_zero_power(self):
        assert gap_alpha(GaussianChannel(0, 2, 0.0, 0.0), 0.3) == 0.0

    def test_unit_cross_variance(self):
        for a in (0.0, 0.25, 1.0):
            assert abs(gap_alpha(REF, a) - LOG2_15) < 1e-12

    @settings(max_examples=60, deadline=None)
    @given(channels_strong(), st.floats(min_value=0.0, max_value=1.0))
    def test_strictly_below_one_bit(self, ch, alpha):
        g = gap_alpha(ch, alpha)
        assert 0.0 <= g < 1.0


class TestInnerSpecial:
    def test_equals_outer_minus_gap(self):
        for a in np.linspace(0.0, 1.0, 33):
            a = float(a)
            t_out = outer_triple(REF, a)
            t_in = inner_triple_special(REF, a)
            g = gap_alpha(REF, a)
            assert abs(t_out.r1_max - t_in.r1_raw - g) < 1e-12
            assert abs(t_out.sum_max - t_in.sum_raw - g) < 1e-12

    def test_redundant_r2_cap(self):
        for a in np.linspace(0.0, 1.0, 33):
            a = float(a)
            assert abs(
                inner_triple_special(REF, a).r2_max - outer_triple(REF, a).sum_max
            ) < 1e-12

    def test_worked_alpha_zero(self):
        t = inner_triple_special(REF, 0.0)
        assert t.r1_max == 0.0
        assert abs(t.sum_max - (LOG2_10 - LOG2_15)) < 1e-5

    def test_zero_power(self):
        t = inner_triple_special(GaussianChannel(0, 2, 0.0, 0.0), 0.7)
        assert t.r1_max == t.sum_max == 0.0


class TestInnerGeneral:
    def test_reference_params_match_special(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            ch = GaussianChannel(
                complex(rng.uniform(-3, 3), rng.uniform(-3, 3)),
                rng.uniform(1.01, 10.0),
                rng.uniform(0, 20),
                rng.uniform(0, 20),
            )
            a = float(rng.uniform(0, 1))
            g = inner_triple_general(ch, InnerParams(alpha=a))
            s = inner_triple_special(ch, a)
            assert abs(g.r1_max - s.r1_max) < 1e-12
            assert abs(g.r2_max - s.r2_max) < 1e-12
            assert abs(g.sum_max - s.sum_max) < 1e-12

    def test_worked_constants(self):
        g = inner_triple_general(REF, InnerParams(alpha=1.0))
        assert abs(g.r1_max - (1.0 - LOG2_15)) < 1e-12
        assert abs(g.sum_max - 2.0) < 1e-12

    def test_zero_power_degenerates(self):
        ch = GaussianChannel(0, 2, 0.0, 0.0)
        t = inner_triple_general(ch, InnerParams(alpha=0.5, sigma1_sq=0.0))
        assert t.degenerate
        assert t.r1_max == t.sum_max == 0.0

    def test_fixed_rho_never_beats_minimizer(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            ch = GaussianChannel(0, 2, rng.uniform(0, 5), rng.uniform(0, 5))
            a = float(rng.uniform(0, 1))
            params_auto = InnerParams(alpha=a, sigma1_sq=0.7, sigma2_sq=0.4)
            phase = cmath.exp(2j * math.pi * rng.uniform())
            params_fixed = InnerParams(
                alpha=a, sigma1_sq=0.7, sigma2_sq=0.4, rho=0.9 * phase
            )
            auto = inner_triple_general(ch, params_auto)
            fixed = inner_triple_general(ch, params_fixed)
            assert fixed.sum_max <= auto.sum_max + 1e-12

    def test_rho_magnitude_validated(self):
        with pytest.raises(ValueError):
            InnerParams(alpha=0.5, rho=1.5)


class TestTdma:
    def test_beamforming_corner(self):
        assert abs(tdma_r2_of_r1(REF, 0.0) - LOG2_10) < 1e-12

    def test_silencing_corner(self):
        assert tdma_r2_of_r1(REF, 1.0) == 0.0

    def test_midpoint(self):
        assert abs(tdma_r2_of_r1(REF, 0.5) - 0.5 * LOG2_10) < 1e-12

    def test_zero_p1_degenerates_to_point(self):
        ch = GaussianChannel(0, 2, 0.0, 1.0)
        assert abs(tdma_r2_of_r1(ch, 0.0) - 1.0) < 1e-12
        with pytest.raises(ValueError):
            tdma_r2_of_r1(ch, 0.5)

    def test_region_vertices(self):
        region = tdma_region(REF)
        assert region.vertices == ((0.0, LOG2_10), (1.0, 0.0))


class TestMultiplicativeGapFactor:
    def test_reference_regression(self):
        assert abs(min_multiplicative_M(REF) - REF_MIN_M) < 1e-4

    def test_matches_closed_form_oracle(self):
        for ch in (REF, GaussianChannel(1, 3, 5.0, 0.5), GaussianChannel(0, 1.1, 20.0, 2.0)):
            r1_cap = math.log2(1.0 + ch.p1)
            peak = math.log2(1.0 + (ch.abs_b * math.sqrt(ch.p1) + math.sqrt(ch.p2)) ** 2)
            rs = np.linspace(0.0, r1_cap, 512)
            need = max(
                1.0,
                max(outer_r2_of_r1(ch, float(r)) / peak + float(r) / r1_cap for r in rs),
            )
            assert abs(min_multiplicative_M(ch) - need) < 2e-6

    def test_matches_region_route(self):
        for ch in (REF, GaussianChannel(2j, 5, 10.0, 1.0)):
            m_direct = min_multiplicative_M(ch)
            m_region = multiplicative_gap(outer_region(ch, 256), tdma_region(ch), grid=512)
            assert abs(m_direct - m_region) < 1e-3

    def test_small_p1_limit(self):
        # as p1 shrinks the comparison tightens at the right endpoint,
        # where the requirement 2 - log2(1+p1)/peak approaches 2
        ch = GaussianChannel(0, 2, 1e-6, 1.0)
        m = min_multiplicative_M(ch)
        assert 1.9 <= m <= 2.0 + 1e-6
        r1_cap = math.log2(1.0 + ch.p1)
        peak = math.log2(1.0 + (2.0 * math.sqrt(ch.p1) + 1.0) ** 2)
        endpoint = 1.0 + outer_r2_of_r1(ch, r1_cap) / peak
        assert abs(m - endpoint) < 1e-5

    def test_weak_rejected(self):
        with pytest.raises(RegimeError):
            min_multiplicative_M(GaussianChannel(0, 0.9, 1.0, 1.0))

    def test_linearized_endpoints(self):
        for ch in (REF, GaussianChannel(1 + 1j, 1.01, 0.1, 100.0)):
            assert tdma_linear_slack(ch, 1.0, 0.0) >= 0.0
            assert tdma_linear_slack(ch, 2.0, math.log2(1.0 + ch.p1)) >= 0.0


class TestGapReport:
    def test_reference_channel(self):
        rep = additive_gap_report(REF, alpha_grid=128, r1_grid=128)
        assert abs(rep.additive_gap_bits - LOG2_15) < 1e-5
        assert abs(rep.multiplicative_gap - REF_MIN_M) < 1e-3
        assert 0.0 <= rep.worst_alpha <= 1.0
        assert 0.0 <= rep.worst_r1 <= 1.0

    def test_zero_power_gap_is_zero(self):
        rep = additive_gap_report(GaussianChannel(0, 2, 0.0, 0.0), alpha_grid=16, r1_grid=16)
        assert rep.additive_gap_bits == 0.0
        assert rep.multiplicative_gap == 1.0

    def test_per_alpha_difference_is_gap_alpha(self):
        alphas = np.linspace(0.0, 1.0, 64)
        for a in alphas:
            a = float(a)
            t_out = outer_triple(REF, a)
            t_in = inner_triple_special(REF, a)
            g = gap_alpha(REF, a)
            assert abs(max(t_out.r1_max - t_in.r1_raw, t_out.sum_max - t_in.sum_raw) - g) < 1e-9

    def test_weak_rejected(self):
        with pytest.raises(RegimeError):
            additive_gap_report(GaussianChannel(0, 1.0, 1.0, 1.0))


@settings(max_examples=40, deadline=None)
@given(channels_strong(), st.floats(min_value=0.0, max_value=1.0))
def test_phase_invariance(ch, alpha):
    # |b| is all that matters for b; a enters through |a| and Re(a) only
    rotated = GaussianChannel(ch.a, abs(ch.b), ch.p1, ch.p2)
    assert cross_variances(ch, alpha) == cross_variances(rotated, alpha)
    conj = GaussianChannel(ch.a.conjugate(), ch.b, ch.p1, ch.p2)
    assert gap_alpha(ch, alpha) == gap_alpha(conj, alpha)
    t1 = outer_triple(ch, alpha)
    t2 = outer_triple(rotated, alpha)
    assert (t1.r1_max, t1.sum_max) == (t2.r1_max, t2.sum_max)


@settings(max_examples=30, deadline=None)
@given(channels_strong(), st.floats(min_value=0.0, max_value=1.0))
def test_special_inner_identities(ch, alpha):
    t_out = outer_triple(ch, alpha)
    t_in = inner_triple_special(ch, alpha)
    g = gap_alpha(ch, alpha)
    assert abs(t_out.r1_max - t_in.r1_raw - g) < 1e-12
    assert abs(t_out.sum_max - t_in.sum_raw - g) < 1e-12
    assert abs(t_in.r2_max - t_out.sum_max) < 1e-12
    gen = inner_triple_general(ch, InnerParams(alpha=alpha))
    assert abs(gen.r1_max - t_in.r1_max) < 1e-12
    assert abs(gen.sum_max - t_in.sum_max) < 1e-12
