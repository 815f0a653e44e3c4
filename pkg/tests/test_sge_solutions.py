"""Tests for the N=1 solutions, energy maps, residuals and trains."""

import cmath
import math

import numpy as np
import pytest

from sge_elliptic.config import settings
from sge_elliptic.exceptions import (
    BranchJump,
    DomainError,
    EnergyRange,
    SuperluminalVelocity,
)
from sge_elliptic.models import BreatherSpectrum, GridSpec, KinkSpectrum, TrainKind, TrainParams
from sge_elliptic.services import sge_solutions as sol
from sge_elliptic.services.elliptic_core import complete_K

RESIDUAL_TIMES = np.arange(-3.0, 3.01, 0.5)


class TestRegimes:
    def test_breather_rejects_kink_energies(self):
        with pytest.raises(EnergyRange, match="breather requires H ≤ 2"):
            sol.breather_direct(0.0, 2.5)

    def test_kink_rejects_breather_energies(self):
        with pytest.raises(EnergyRange, match="kink requires H ≥ 2"):
            sol.kink_direct(0.0, 1.0)

    def test_non_positive_energy(self):
        with pytest.raises(EnergyRange):
            sol.breather_modulus(0.0)

    def test_moduli(self):
        assert sol.breather_modulus(1.0).k == pytest.approx(math.sqrt(0.5))
        assert sol.kink_modulus(4.0).k == pytest.approx(math.sqrt(0.5))


class TestBreather:
    @pytest.mark.parametrize("t", [-2.3, 0.0, 0.7, 3.1])
    def test_arcsine_and_log_forms_agree(self, t):
        arcsine, log_form = sol.breather_direct_forms(t, 1.2)
        assert abs(log_form.real - arcsine) < 1e-12
        assert abs(log_form.imag) < 1e-12

    def test_starts_at_zero_and_peaks_at_quarter_period(self):
        H = 1.0
        K = complete_K(sol.breather_modulus(H)).real
        assert sol.breather_direct(0.0, H) == pytest.approx(0.0, abs=1e-15)
        assert sol.breather_direct(K, H) == pytest.approx(2 * math.asin(math.sqrt(0.5)), abs=1e-12)

    def test_period_four_K(self):
        H = 0.8
        K = complete_K(sol.breather_modulus(H)).real
        for t in (0.2, 1.4):
            assert sol.breather_direct(t + 4 * K, H) == pytest.approx(sol.breather_direct(t, H), abs=1e-11)

    def test_argument_is_unimodular(self):
        assert abs(sol.breather_argument(0.9, 1.5)) == pytest.approx(1.0, abs=1e-13)

    def test_grid_matches_pointwise(self):
        grid = GridSpec.parse("-5:5:0.1")
        sample = sol.breather_direct_grid(grid, 1.0)
        assert len(sample.t) == 101
        pointwise = [sol.breather_direct(float(t), 1.0) for t in sample.t]
        np.testing.assert_allclose(sample.q, pointwise, atol=1e-12)


class TestKink:
    @pytest.mark.parametrize("t", [-0.4, 0.0, 0.3])
    def test_arcsine_matches_log_while_cn_positive(self, t):
        arcsine, log_form = sol.kink_direct_forms(t, 4.0)
        assert abs(log_form.real - arcsine) < 1e-12

    def test_grid_advances_by_two_pi(self):
        H = 4.0
        m = sol.kink_modulus(H)
        period = 2 * m.k.real * complete_K(m).real
        sample = sol.kink_direct_grid(GridSpec(t_min=0.0, t_max=period, step=period / 50), H)
        assert sample.q[0] == pytest.approx(0.0, abs=1e-14)
        assert sample.q[-1] - sample.q[0] == pytest.approx(2 * math.pi, abs=1e-9)
        assert np.all(np.diff(sample.q) > 0)

    def test_coarse_grid_raises_branch_jump(self):
        H = 10.0
        m = sol.kink_modulus(H)
        period = 2 * m.k.real * complete_K(m).real
        with pytest.raises(BranchJump):
            sol.kink_direct_grid(GridSpec(t_min=0.0, t_max=3 * period, step=period), H)

    def test_w_zero_is_singular(self):
        with pytest.raises(BranchJump):
            sol.q_from_argument(0)


class TestSeparatrix:
    def test_centre_is_pi(self):
        assert sol.separatrix(0.0, 0.0) == pytest.approx(math.pi)
        assert sol.separatrix(0.0, 0.0, sign=-1) == pytest.approx(math.pi)

    def test_log_form_matches(self):
        for x, t in ((0.5, 0.0), (-1.2, 0.4), (2.0, -1.0)):
            assert sol.separatrix_log(x, t, v=0.4) == pytest.approx(sol.separatrix(x, t, v=0.4), abs=1e-12)

    def test_limits(self):
        assert sol.separatrix(40.0, 0.0) == pytest.approx(2 * math.pi)
        assert sol.separatrix(-40.0, 0.0) == pytest.approx(0.0, abs=1e-15)
        assert sol.separatrix(1e6, 0.0) == 2 * math.pi

    def test_far_tails_do_not_overflow(self):
        assert sol.separatrix(800.0, 0.0) == pytest.approx(2 * math.pi)
        assert sol.separatrix(-800.0, 0.0) == pytest.approx(0.0, abs=1e-15)
        assert sol.separatrix(800.0, 0.0, sign=-1) == pytest.approx(0.0, abs=1e-15)
        assert sol.separatrix_argument(800.0, 0.0) == pytest.approx(-1.0)
        assert sol.separatrix_argument(-800.0, 0.0) == pytest.approx(1.0)

    def test_fast_antikink_over_long_times(self):
        for t in (100.0, 300.0, 600.0):
            w = sol.separatrix_argument(0.0, t, v=-0.9)
            assert abs(w) == pytest.approx(1.0)
            assert sol.separatrix(0.0, t, v=-0.9) == pytest.approx(2 * math.pi)

    def test_travels_with_velocity(self):
        v = 0.6
        assert sol.separatrix(v * 2.0, 2.0, v=v) == pytest.approx(math.pi)

    def test_superluminal(self):
        with pytest.raises(SuperluminalVelocity):
            sol.separatrix(0.0, 0.0, v=1.0)

    def test_sign(self):
        with pytest.raises(DomainError):
            sol.separatrix(0.0, 0.0, sign=0)

    def test_grid_range(self):
        sample = sol.separatrix_grid(GridSpec.parse("-5:5:0.5"), x=0.3, v=0.2)
        assert np.all((sample.q >= 0) & (sample.q <= 2 * math.pi))


class TestSeparatrixLimit:
    @pytest.mark.parametrize("t", [-2.0, -0.5, 0.0, 1.0, 2.0])
    def test_continuity_across_two(self, t):
        profile = sol.separatrix_profile(t)
        assert abs(sol.breather_direct(t, 2.0 - 1e-6) - profile) < 1e-3
        assert abs(sol.kink_direct(t, 2.0 + 1e-6) - profile) < 1e-3

    @pytest.mark.parametrize("t", [-1.5, 0.0, 0.8])
    def test_both_regimes_reach_the_profile_at_two(self, t):
        profile = sol.separatrix_profile(t)
        assert sol.breather_direct(t, 2.0) == pytest.approx(profile, abs=1e-12)
        assert sol.kink_direct(t, 2.0) == pytest.approx(profile, abs=1e-12)


class TestEnergyMaps:
    def test_breather_spectrum(self):
        assert sol.energy_from_spectrum(BreatherSpectrum(phi=1.5 * math.pi)) == pytest.approx(1.0)
        assert sol.spectrum_from_energy(1.0).phi == pytest.approx(1.5 * math.pi)

    def test_separatrix_spectrum(self):
        s = sol.spectrum_from_energy(2.0)
        assert isinstance(s, BreatherSpectrum)
        assert s.phi == pytest.approx(math.pi)

    def test_kink_spectrum(self):
        s = sol.spectrum_from_energy(4.0)
        assert isinstance(s, KinkSpectrum)
        assert s.eta == pytest.approx(math.acosh(3.0))
        assert sol.energy_from_spectrum(s) == pytest.approx(4.0)

    def test_rejects_non_positive(self):
        with pytest.raises(EnergyRange):
            sol.spectrum_from_energy(0.0)


class TestResidual:
    @pytest.mark.parametrize("H", [0.2, 1.0, 1.8])
    def test_breather_solves_sge(self, H):
        residual = sol.sge_residual(lambda t: sol.breather_direct(t, H), RESIDUAL_TIMES)
        assert residual <= settings.VERIFY_TOL_TRAIN

    @pytest.mark.parametrize("H", [2.5, 4.0, 10.0])
    def test_kink_solves_sge(self, H):
        residual = sol.sge_residual(lambda t: sol.kink_direct(t, H), RESIDUAL_TIMES)
        assert residual <= settings.VERIFY_TOL_TRAIN

    def test_separatrix_profile_solves_sge(self):
        residual = sol.sge_residual(sol.separatrix_profile, RESIDUAL_TIMES)
        assert residual <= settings.VERIFY_TOL_TRAIN

    def test_constant_solutions(self):
        assert sol.sge_residual(lambda t: 0.0, RESIDUAL_TIMES) == 0.0
        assert sol.sge_residual(lambda t: math.pi, RESIDUAL_TIMES) < 1e-15

    def test_needs_interior_points(self):
        with pytest.raises(DomainError):
            sol.sge_residual(lambda t: 0.0, [0.0, 1.0, 2.0])

    def test_non_solution_is_detected(self):
        assert sol.sge_residual(lambda t: math.sin(t), RESIDUAL_TIMES) > 0.1

    @pytest.mark.parametrize("H", [0.5, 1.5, 3.0, 6.0])
    def test_energy_is_conserved(self, H):
        evaluator = (lambda t: sol.breather_direct(t, H)) if H < 2 else (lambda t: sol.kink_direct(t, H))
        assert sol.energy_conservation(evaluator, RESIDUAL_TIMES, H) < 1e-7


@pytest.fixture
def kink_train_params():
    return TrainParams(kind=TrainKind.KINK, v=0.3, L=6.0, n_max=20)


@pytest.fixture
def breather_train_params():
    return TrainParams(kind=TrainKind.BREATHER, v=0.3, L=6.0, n_max=20)


TRAIN_SAMPLES = [(x, t) for x in (-4.0, -0.5, 0.0, 1.3, 5.2) for t in (0.0, 0.7)]


class TestTrains:
    def test_period_from_B(self, kink_train_params):
        p = kink_train_params
        assert sol.train_period(p.B, p.kappa) == pytest.approx(p.L)

    def test_kink_train_winds_two_pi_per_period(self, kink_train_params):
        p = kink_train_params
        for x in (-1.0, 0.4, 2.5):
            assert sol.kink_train(x + p.L, 0.3, p) - sol.kink_train(x, 0.3, p) == pytest.approx(2 * math.pi, abs=1e-9)

    def test_breather_train_has_no_winding(self, breather_train_params):
        p = breather_train_params
        for x in (-1.0, 0.4, 2.5):
            assert sol.breather_train(x + 2 * p.L, 0.3, p) == pytest.approx(sol.breather_train(x, 0.3, p), abs=1e-9)

    def test_breather_train_single_pair(self):
        p = TrainParams(kind=TrainKind.BREATHER, v=0.3, L=6.0, n_max=0)
        x = 0.4
        kink = 4 * math.atan(math.exp(p.kappa * x))
        antikink = 4 * math.atan(math.exp(-p.kappa * (x + p.L)))
        assert sol.breather_train(x, 0.0, p) == pytest.approx(kink + antikink - 4 * math.pi, abs=1e-12)
        assert sol.breather_train(x, 0.0, p) == pytest.approx(-8.605, abs=1e-3)

    def test_breather_train_sits_two_pi_below_pairing(self, breather_train_params):
        p = breather_train_params
        x, t = 1.3, 0.7
        pairs = sum(
            4 * math.atan(math.exp(p.kappa * (x - 2 * n * p.L) + p.w * t))
            + 4 * math.atan(math.exp(-(p.kappa * (x - (2 * n - 1) * p.L) + p.w * t)))
            - 2 * math.pi
            for n in range(-p.n_max, p.n_max + 1)
        )
        assert sol.breather_train(x, t, p) == pytest.approx(pairs - 2 * math.pi, abs=1e-9)

    def test_wrong_kind(self, kink_train_params, breather_train_params):
        with pytest.raises(DomainError):
            sol.breather_train(0.0, 0.0, kink_train_params)
        with pytest.raises(DomainError):
            sol.kink_train(0.0, 0.0, breather_train_params)
        with pytest.raises(DomainError):
            sol.kink_train_theta(0.0, 0.0, breather_train_params)

    @pytest.mark.parametrize("kind", [TrainKind.KINK, TrainKind.BREATHER])
    def test_theta_side_matches_sum(self, kind):
        p = TrainParams(kind=kind, v=0.3, L=6.0, n_max=20)
        assert sol.train_residual(p, TRAIN_SAMPLES) <= settings.VERIFY_TOL_TRAIN

    def test_theta_q_matches_sum_modulo_four_pi(self, kink_train_params):
        p = kink_train_params
        for x, t in TRAIN_SAMPLES:
            diff = sol.kink_train_theta(x, t, p) - sol.kink_train(x, t, p)
            assert abs(diff - 4 * math.pi * round(diff / (4 * math.pi))) < 1e-8

    @pytest.mark.parametrize("kind", [TrainKind.KINK, TrainKind.BREATHER])
    def test_theta_q_matches_sum_with_offset(self, kind):
        p = TrainParams(kind=kind, v=0.3, L=6.0, n_max=20)
        assert sol.train_offset_residual(p, TRAIN_SAMPLES) < 1e-8

    def test_breather_theta_q_is_two_pi_above_sum(self, breather_train_params):
        p = breather_train_params
        for x, t in TRAIN_SAMPLES:
            diff = sol.breather_train_theta(x, t, p) - sol.breather_train(x, t, p) - 2 * math.pi
            assert abs(diff - 4 * math.pi * round(diff / (4 * math.pi))) < 1e-8
        with pytest.raises(DomainError):
            sol.breather_train_theta(0.0, 0.0, TrainParams(kind=TrainKind.KINK, v=0.3, L=6.0))

    @pytest.mark.parametrize("kind", [TrainKind.KINK, TrainKind.BREATHER])
    def test_product_form(self, kind):
        p = TrainParams(kind=kind, v=0.3, L=6.0)
        for x, t in TRAIN_SAMPLES[:4]:
            series = sol.train_theta_argument(x, t, p)
            product = sol.train_theta_argument(x, t, p, n_terms=30)
            assert abs(series - product) < 1e-10

    def test_wrong_period_breaks_agreement(self, kink_train_params):
        p = kink_train_params
        wrong = p.model_copy(update={"L": 6.3})
        assert sol.train_residual(wrong, TRAIN_SAMPLES, B=p.B) > 1e-3

    def test_fit_recovers_period(self, breather_train_params):
        L_fit, residual = sol.fit_train_period(breather_train_params, TRAIN_SAMPLES)
        assert L_fit == pytest.approx(6.0, abs=1e-5)
        assert residual <= settings.VERIFY_TOL_TRAIN

    def test_fit_needs_samples(self, kink_train_params):
        with pytest.raises(DomainError):
            sol.fit_train_period(kink_train_params, [])

    def test_sum_side_unimodular_argument(self, kink_train_params):
        value = sol.train_theta_argument(0.2, 0.1, kink_train_params)
        assert abs(value) == pytest.approx(1.0, abs=1e-12)
        assert abs(cmath.exp(-0.5j * sol.kink_train(0.2, 0.1, kink_train_params)) - value) < 1e-10


def test_fit_logs_defined_and_fitted_period(kink_train_params, log_records):
    sol.fit_train_period(kink_train_params, TRAIN_SAMPLES[:4])
    fitted = [r for r in log_records if r["message"] == "Fitted train period"]
    assert len(fitted) == 1
    assert fitted[0]["extra"]["L_defined"] == pytest.approx(6.0)
    assert fitted[0]["extra"]["kind"] == "kink"
