"""Tests for complete elliptic integrals, lattice conversions and phase unwrapping."""

import cmath
import math

import mpmath
import numpy as np
import pytest
from scipy import special

from sge_elliptic.exceptions import ModulusSingular, PhaseJump
from sge_elliptic.models import Modulus, PeriodRatio
from sge_elliptic.services.elliptic_core import (
    complete_K,
    complete_K_prime,
    complete_K_quad,
    modulus_from_tau,
    nome_from_modulus,
    nome_from_tau,
    quarter_periods,
    tau_from_modulus,
    tau_from_nome,
    unwrap_phase,
)


@pytest.mark.parametrize("k", [0.0, 0.1, 0.6, 0.9, 0.999])
def test_K_matches_mpmath(k):
    expected = float(mpmath.ellipk(k * k))
    assert complete_K(Modulus.from_k(k)) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("k", [0.2, 0.6, 0.95])
def test_quadrature_agrees_with_agm(k):
    m = Modulus.from_k(k)
    assert complete_K_quad(m) == pytest.approx(complete_K(m), rel=1e-11)


def test_K_complex_parameter_matches_mpmath():
    param = 0.3 + 0.4j
    m = Modulus.from_k(cmath.sqrt(param))
    expected = complex(mpmath.ellipk(param))
    assert abs(complete_K(m) - expected) < 1e-10


def test_K_singular_at_unit_modulus():
    with pytest.raises(ModulusSingular):
        complete_K(Modulus.from_k(1.0))
    with pytest.raises(ModulusSingular):
        complete_K_prime(Modulus.from_k(0.0))


def test_K_reciprocal_modulus_upper_side():
    k = 0.6
    m = Modulus.from_k(k)
    expected = k * (complete_K(m) + 1j * complete_K_prime(m))
    assert abs(complete_K(Modulus.from_k(1 / k)) - expected) < 1e-9


def test_square_lattice():
    tau = tau_from_modulus(Modulus.from_k(math.sqrt(0.5))).tau
    assert abs(tau - 1j) < 1e-13
    assert nome_from_tau(PeriodRatio(tau=1j)).q == pytest.approx(math.exp(-math.pi))


def test_quarter_periods_tau():
    qp = quarter_periods(Modulus.from_k(0.6))
    assert qp.K.real == pytest.approx(float(mpmath.ellipk(0.36)), rel=1e-13)
    assert qp.tau == pytest.approx(tau_from_modulus(Modulus.from_k(0.6)).tau)


@pytest.mark.parametrize("k", [0.3, 0.6, 0.9])
def test_modulus_round_trips_through_tau(k):
    m = modulus_from_tau(tau_from_modulus(Modulus.from_k(k)))
    assert abs(m.k - k) < 1e-12
    assert abs(m.k_prime - math.sqrt(1 - k * k)) < 1e-12


def test_nome_inverse():
    tau = 0.3 + 0.9j
    back = tau_from_nome(nome_from_tau(PeriodRatio(tau=tau))).tau
    assert abs(back - tau) < 1e-14
    assert abs(nome_from_modulus(Modulus.from_k(0.6)).q) < 1


def test_unwrap_phase_follows_rotation():
    angles = np.arange(0.0, 12.0, 0.1)
    unwrapped = unwrap_phase(np.exp(1j * angles))
    np.testing.assert_allclose(unwrapped, angles, atol=1e-12)


def test_unwrap_phase_starts_on_principal_branch():
    unwrapped = unwrap_phase([cmath.exp(3.0j), cmath.exp(3.2j)])
    assert unwrapped[0] == pytest.approx(3.0)
    assert unwrapped[1] == pytest.approx(3.2)


def test_unwrap_phase_empty():
    assert unwrap_phase([]).size == 0


def test_unwrap_phase_rejects_zero():
    with pytest.raises(PhaseJump):
        unwrap_phase([1.0, 0.0, 1.0])


def test_unwrap_phase_rejects_half_turn():
    with pytest.raises(PhaseJump):
        unwrap_phase([1.0, -1.0])


@pytest.mark.parametrize("k", [0.3, 0.6, 0.9])
def test_K_matches_scipy_and_gauss_legendre(k):
    value = complete_K(Modulus.from_k(k))
    assert value == pytest.approx(float(special.ellipk(k * k)), rel=1e-13)
    nodes, weights = np.polynomial.legendre.leggauss(64)
    theta = 0.25 * math.pi * (nodes + 1)
    gauss = 0.25 * math.pi * np.sum(weights / np.sqrt(1 - k * k * np.sin(theta) ** 2))
    assert value == pytest.approx(gauss, rel=1e-12)
