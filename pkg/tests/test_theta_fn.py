"""Tests for the theta series and product forms."""

import cmath
import math

import mpmath
import pytest

from sge_elliptic.exceptions import DomainError, NonConvergence
from sge_elliptic.models import ThetaArgs
from sge_elliptic.services.theta_fn import (
    theta,
    theta1,
    theta2,
    theta2_product,
    theta3,
    theta4,
    theta_constants,
    theta_ratio_product,
)

POINTS = [
    (0.2, 1.0j),
    (0.13 + 0.21j, 0.3 + 0.8j),
    (-0.4 + 0.05j, -0.5 + 1.2j),
    (0.7 - 0.3j, 0.25 + 0.6j),
]


def _mpmath_theta(index: int, l: complex, B: complex) -> complex:
    q = mpmath.exp(1j * mpmath.pi * mpmath.mpc(B))
    return complex(mpmath.jtheta(index, mpmath.pi * mpmath.mpc(l), q))


@pytest.mark.parametrize("index", [1, 2, 3, 4])
@pytest.mark.parametrize("l,B", POINTS)
def test_theta_matches_mpmath(index, l, B):
    expected = _mpmath_theta(index, l, B)
    assert abs(theta(index, l, B) - expected) <= 1e-12 * max(1.0, abs(expected))


def test_named_wrappers():
    args = ThetaArgs(l=0.1 + 0.05j, B=0.2 + 0.9j)
    assert theta1(args) == theta(1, args.l, args.B)
    assert theta2(args) == theta(2, args.l, args.B)
    assert theta3(args) == theta(3, args.l, args.B)
    assert theta4(args) == theta(4, args.l, args.B)


def test_theta_args_require_upper_half_plane():
    with pytest.raises(DomainError):
        ThetaArgs(l=0.1, B=-1j)


def test_quasi_periodicity():
    l, B = 0.17 + 0.1j, 0.1 + 0.7j
    assert abs(theta(3, l + 1, B) - theta(3, l, B)) < 1e-13
    assert abs(theta(4, l, B) - theta(3, l + 0.5, B)) < 1e-13
    shifted = theta(3, l + B, B)
    expected = cmath.exp(-1j * math.pi * B - 2j * math.pi * l) * theta(3, l, B)
    assert abs(shifted - expected) < 1e-12 * abs(expected)


def test_jacobi_identity_for_nulls():
    t2, t3, t4 = theta_constants(0.2 + 0.9j)
    assert abs(t3**4 - t2**4 - t4**4) < 1e-12


def test_theta1_is_odd():
    l, B = 0.21 + 0.13j, 1.1j
    assert abs(theta(1, -l, B) + theta(1, l, B)) < 1e-14
    assert abs(theta(1, 0.0, B)) < 1e-15


def test_theta2_product_matches_series():
    l, B = 0.3 + 0.1j, 0.2 + 1.0j
    assert abs(theta2_product(l, B, 30) - theta(2, l, B)) < 1e-12


def test_ratio_product_matches_series():
    l, B = -0.25 + 0.4j, 0.5 + 1.1j
    ratio = theta(4, l, B) / theta(3, l, B)
    assert abs(theta_ratio_product(l, B, 40) - ratio) < 1e-12 * max(1.0, abs(ratio))


def test_product_needs_a_factor():
    with pytest.raises(DomainError):
        theta_ratio_product(0.1, 1j, 0)
    with pytest.raises(DomainError):
        theta2_product(0.1, 1j, 0)


def test_nome_too_large():
    with pytest.raises(NonConvergence):
        theta(3, 0.1, 0.001j)
    with pytest.raises(NonConvergence):
        theta(3, 0.1, 0.5)
