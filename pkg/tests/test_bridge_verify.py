"""Tests for the direct↔theta bridges, period integrals and the kink↔breather chain."""

import math

import numpy as np
import pytest

from sge_elliptic.config import settings
from sge_elliptic.exceptions import Degenerate, DomainError
from sge_elliptic.models import BreatherSpectrum, GridSpec, KinkSpectrum, Modulus, SolutionKind
from sge_elliptic.services import bridge_verify as bv
from sge_elliptic.services.sge_solutions import breather_modulus, kink_modulus, theta_rep

GRID = GridSpec.parse("-3:3:0.1").points()


def _failed(checks):
    return [(c.name, c.residual) for c in checks if not c.passed]


class TestBreatherBridge:
    @pytest.mark.parametrize("k_b", [0.2, 0.6, 0.9])
    def test_relations_hold(self, k_b):
        bridge = bv.breather_bridge(Modulus.from_k(k_b))
        assert _failed(bv.breather_bridge_checks(bridge)) == []

    def test_lattice_halves_tau(self):
        bridge = bv.breather_bridge(Modulus.from_k(0.6))
        assert abs(bridge.tau_1 - 0.5 * (1 + bridge.tau_b)) < 1e-15
        assert bridge.t0 == bridge.K_b

    def test_falls_back_to_the_working_branch(self):
        m = Modulus.from_k(0.7)
        preferred = bv.breather_bridge(m)
        other = bv.breather_bridge(m, branch=-preferred.branch)
        assert other.branch == preferred.branch
        assert other.sqrt_k1_prime == preferred.sqrt_k1_prime

    def test_rejects_modulus_above_one(self):
        with pytest.raises(DomainError):
            bv.breather_bridge(Modulus.from_k(1.2))

    def test_rejects_bad_branch(self):
        with pytest.raises(DomainError):
            bv.breather_bridge(Modulus.from_k(0.5), branch=2)

    @pytest.mark.parametrize("k_b", [0.3, 0.6, 0.9])
    def test_lattice_moduli_that_match(self, k_b):
        bridge = bv.breather_bridge(Modulus.from_k(k_b))
        checks = {c.name: c for c in bv.breather_bridge_checks(bridge)}
        for name in ("breather.k1_prime", "breather.landen_complement", "breather.theta_modulus"):
            assert checks[name].passed, (name, checks[name].residual)
        assert bv.printed_identification_residual(bridge) > 0.5

    def test_k1_prime_is_rotated_square(self):
        bridge = bv.breather_bridge(Modulus.from_k(0.3))
        assert abs(bridge.k1_prime - complex(0.82, -0.6 * math.sqrt(0.91))) < 1e-12
        assert bv.printed_identification_residual(bridge) == pytest.approx(math.sqrt(0.598), abs=1e-9)

    def test_strip_rate_is_checked_on_its_own(self):
        bridge = bv.breather_bridge(Modulus.from_k(0.6))
        skewed = bridge.model_copy(update={"a_strip": bridge.a_strip * 1.01})
        assert [name for name, _ in _failed(bv.breather_bridge_checks(skewed))] == ["breather.rate_strip"]

    def test_theta_params(self):
        params = bv.breather_theta_params(bv.breather_bridge(breather_modulus(1.0)))
        assert params.kind == SolutionKind.THETA_REP_BREATHER
        assert params.B.real == pytest.approx(-0.5)
        assert params.l_re == 0.0

    @pytest.mark.parametrize("H", [0.2, 1.0, 1.8])
    def test_equivalence(self, H):
        assert bv.verify_equivalence_breather(H, GRID) <= settings.VERIFY_TOL_EQUIVALENCE

    def test_theta_form_keeps_breather_amplitude(self):
        params = bv.breather_theta_params(bv.breather_bridge(breather_modulus(1.0)))
        amplitude = 2 * math.asin(math.sqrt(0.5))
        for t in (0.0, 0.9, 2.4):
            assert abs(theta_rep(t, params)) <= amplitude + 1e-9

    def test_equivalence_needs_breather_energy(self):
        with pytest.raises(DomainError):
            bv.verify_equivalence_breather(2.0, GRID)


class TestKinkBridge:
    def test_lattice_modulus(self):
        bridge = bv.kink_bridge(Modulus.from_k(0.6))
        assert abs(bridge.k_prime - (-1 / 9)) < 1e-14
        assert abs(bridge.k1 - 1.25) < 1e-14
        assert abs(bridge.sqrt_k_prime - (-1j / 3)) < 1e-14

    @pytest.mark.parametrize("k_k", [0.3, 0.6, 0.9])
    def test_relations_hold(self, k_k):
        bridge = bv.kink_bridge(Modulus.from_k(k_k))
        assert _failed(bv.kink_bridge_checks(bridge)) == []

    def test_relation_three_uses_negative_sign(self):
        _, sigma = bv.kink_relation_three(bv.kink_bridge(Modulus.from_k(0.6)))
        assert sigma == -1

    @pytest.mark.parametrize("k_k", [0.6, 0.9])
    def test_coefficient_relations(self, k_k):
        first, second = bv.coefficient_relations(k_k)
        assert first < settings.VERIFY_TOL_IDENTITY
        assert second < settings.VERIFY_TOL_IDENTITY

    def test_separatrix_boundary(self):
        with pytest.raises(Degenerate, match="separatrix boundary"):
            bv.kink_bridge(Modulus.from_k(1.0))

    def test_theta_params(self):
        params = bv.kink_theta_params(bv.kink_bridge(kink_modulus(4.0)))
        assert params.kind == SolutionKind.THETA_REP_KINK
        assert params.l_re == 0.25

    @pytest.mark.parametrize("H", [2.5, 4.0, 10.0])
    def test_equivalence(self, H):
        checks = bv.kink_equivalence_checks(H, GRID)
        assert _failed(checks) == []
        assert bv.verify_equivalence_kink(H, GRID) <= settings.VERIFY_TOL_EQUIVALENCE

    def test_equivalence_needs_kink_energy(self):
        with pytest.raises(DomainError):
            bv.kink_equivalence_checks(1.0, GRID)


class TestPeriods:
    @pytest.mark.parametrize("eta", [0.5, 1.0, 2.0])
    def test_kink_closed_form_matches_quadrature(self, eta):
        assert _failed(bv.period_checks(KinkSpectrum(eta=eta))) == []

    @pytest.mark.parametrize("phi", [1.1 * math.pi, 1.5 * math.pi, 1.9 * math.pi])
    def test_breather_closed_form_matches_quadrature(self, phi):
        assert _failed(bv.period_checks(BreatherSpectrum(phi=phi))) == []

    def test_breather_oracle_sign(self):
        s = BreatherSpectrum(phi=1.9 * math.pi)
        closed = bv.period_integral_breather(s).real
        assert closed < 0
        assert bv.period_integral_breather_oracle(s) == pytest.approx(closed, rel=1e-6)

    def test_small_gap_limit(self):
        value = bv.period_integral_kink(KinkSpectrum(eta=1e-3)).real
        assert value == pytest.approx(-8 * math.pi, rel=2e-3)

    def test_breather_needs_open_interval(self):
        with pytest.raises(DomainError):
            bv.period_integral_breather(BreatherSpectrum(phi=math.pi))

    def test_second_period_is_tau_times_first(self):
        s = KinkSpectrum(eta=1.0)
        tau = bv.period_ratio_from_spectrum(s)
        assert tau.imag > 0
        assert bv.period_integral_b(s) == pytest.approx(tau * bv.period_integral_a(s))

    def test_breather_period_ratio_real_part(self):
        tau = bv.period_ratio_from_spectrum(BreatherSpectrum(phi=1.5 * math.pi))
        assert tau.real == pytest.approx(0.5)
        assert tau.imag == pytest.approx(0.5)


class TestChain:
    def test_breather_chain(self):
        chain = bv.kink_breather_chain(phi=1.5 * math.pi)
        assert abs(chain.s_1_prime - 1j) < 1e-12
        assert _failed(bv.chain_checks(chain)) == []

    @pytest.mark.parametrize("eta", [0.5, 1.0])
    def test_kink_chain(self, eta):
        chain = bv.kink_breather_chain(eta=eta)
        assert chain.k_k == pytest.approx(1 / math.cosh(0.5 * eta))
        assert _failed(bv.chain_checks(chain)) == []

    @pytest.mark.parametrize("phi", [1.2 * math.pi, 1.8 * math.pi])
    def test_breather_chain_lattices(self, phi):
        chain = bv.kink_breather_chain(phi=phi)
        names = {c.name for c in bv.chain_checks(chain)}
        assert {"chain.tau_1", "chain.tau_2", "chain.s1_prime_lattice", "chain.tau_b"} <= names
        assert _failed(bv.chain_checks(chain)) == []

    def test_shifted_half_lattice_is_caught(self):
        chain = bv.kink_breather_chain(phi=1.5 * math.pi)
        shifted = chain.model_copy(update={"tau_1": chain.tau_1 + 0.01j})
        failed = [name for name, _ in _failed(bv.chain_checks(shifted))]
        assert "chain.tau_1" in failed
        assert "chain.s1_prime_lattice" in failed

    def test_breather_lattice_is_caught(self):
        chain = bv.kink_breather_chain(phi=1.3 * math.pi)
        shifted = chain.model_copy(update={"tau_b": chain.tau_b + 0.01j})
        assert "chain.tau_b" in [name for name, _ in _failed(bv.chain_checks(shifted))]

    def test_kink_lattices_follow_the_spectrum(self):
        eta = 0.8
        chain = bv.kink_breather_chain(eta=eta)
        tau_spectrum = bv.period_ratio_from_spectrum(KinkSpectrum(eta=eta))
        assert abs(chain.tau_k - tau_spectrum) < 1e-10
        doubled = chain.model_copy(update={"tau_3": chain.tau_3 + 0.01j})
        assert "chain.tau_3" in [name for name, _ in _failed(bv.chain_checks(doubled))]

    def test_needs_exactly_one_parameter(self):
        with pytest.raises(DomainError):
            bv.kink_breather_chain()
        with pytest.raises(DomainError):
            bv.kink_breather_chain(phi=1.5 * math.pi, eta=1.0)

    def test_breather_modulus_on_chain(self):
        chain = bv.kink_breather_chain(phi=1.2 * math.pi)
        H = 1 - math.cos(1.2 * math.pi)
        assert np.isclose(chain.s_b_prime.real, breather_modulus(H).k.real)
