"""Complete elliptic integrals, lattice conversions and phase unwrapping."""

import cmath
import math
from typing import Sequence

import numpy as np
from loguru import logger
from scipy import integrate

from sge_elliptic.config import settings
from sge_elliptic.exceptions import ModulusSingular, NonConvergence, PhaseJump
from sge_elliptic.models import Modulus, Nome, PeriodRatio, QuarterPeriods
from sge_elliptic.services.theta_fn import theta_constants

logger = logger.bind(name=__name__)

AGM_MAX_ITERATIONS = 64


def _agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive reals."""
    for _ in range(AGM_MAX_ITERATIONS):
        if abs(a - b) <= 1e-15 * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise NonConvergence(f"AGM did not settle after {AGM_MAX_ITERATIONS} steps")


def adaptive_quad(func, lower: float, upper: float, **kwargs) -> float:
    """scipy quad with the configured tolerances; a loose error estimate raises."""
    value, abserr = integrate.quad(
        func,
        lower,
        upper,
        epsabs=settings.QUAD_EPSABS,
        epsrel=settings.QUAD_EPSREL,
        limit=settings.QUAD_LIMIT,
        **kwargs,
    )
    if abserr > settings.QUAD_ACCEPT_ERR * max(1.0, abs(value)):
        raise NonConvergence(
            f"Quadrature error estimate {abserr:.3e} on [{lower}, {upper}] exceeds tolerance"
        )
    return value


def _x_over_sin(x: float) -> float:
    return 1.0 if x == 0 else x / math.sin(x)


def _quad_K_real_above_one(m: float) -> complex:
    """K for real m > 1 on the m + i0 side of the cut.

    1 − m sin²θ = m sin(θ0 − θ) sin(θ0 + θ) with sin θ0 = 1/√m, so both
    pieces carry an inverse square-root singularity at θ0 that QAWS absorbs.
    """
    theta0 = math.asin(1.0 / math.sqrt(m))

    def inner(theta: float) -> float:
        d = theta0 - theta
        return math.sqrt(_x_over_sin(d) / (m * math.sin(theta0 + theta)))

    def outer(theta: float) -> float:
        d = theta - theta0
        return math.sqrt(_x_over_sin(d) / (m * math.sin(theta0 + theta)))

    real = adaptive_quad(inner, 0.0, theta0, weight="alg", wvar=(0.0, -0.5))
    imag = adaptive_quad(outer, theta0, 0.5 * math.pi, weight="alg", wvar=(-0.5, 0.0))
    return complex(real, imag)


def complete_K_quad(m: Modulus) -> complex:
    """K(k) = ∫₀^{π/2} dθ/√(1 − k² sin²θ) by adaptive quadrature.

    Non-real k² uses the principal root along the whole path, which never
    meets the cut. Real k² > 1 is taken on the m + i0 side.
    """
    if m.k in (1, -1):
        raise ModulusSingular("K(k) diverges at k = ±1")
    param = m.m
    if param.imag == 0 and param.real > 1:
        return _quad_K_real_above_one(param.real)

    def integrand(theta: float) -> complex:
        return 1 / cmath.sqrt(1 - param * math.sin(theta) ** 2)

    real = adaptive_quad(lambda x: integrand(x).real, 0.0, 0.5 * math.pi)
    imag = adaptive_quad(lambda x: integrand(x).imag, 0.0, 0.5 * math.pi)
    return complex(real, imag)


def complete_K(m: Modulus) -> complex:
    """Complete elliptic integral of the first kind K(k).

    Real k² < 1 goes through the AGM, everything else through quadrature.
    """
    if m.k in (1, -1):
        raise ModulusSingular("K(k) diverges at k = ±1")
    param = m.m
    if param.imag == 0 and param.real < 1:
        return complex(0.5 * math.pi / _agm(1.0, math.sqrt(1.0 - param.real)))
    value = complete_K_quad(m)
    logger.debug("K by quadrature", k=str(m.k), K=str(value))
    return value


def complete_K_prime(m: Modulus) -> complex:
    """K′(k) = K(k′)."""
    if m.k_prime in (1, -1):
        raise ModulusSingular("K′(k) diverges at k′ = ±1")
    return complete_K(m.complement)


def quarter_periods(m: Modulus) -> QuarterPeriods:
    """Both quarter periods of m."""
    return QuarterPeriods(K=complete_K(m), K_prime=complete_K_prime(m))


def tau_from_modulus(m: Modulus) -> PeriodRatio:
    """τ = iK′/K."""
    K = complete_K(m)
    if K == 0:
        raise ModulusSingular(f"K vanishes at k = {m.k}")
    return PeriodRatio(tau=1j * complete_K_prime(m) / K)


def nome_from_tau(t: PeriodRatio) -> Nome:
    """q = exp(iπτ)."""
    return Nome(q=cmath.exp(1j * math.pi * t.tau))


def tau_from_nome(n: Nome) -> PeriodRatio:
    """Principal-branch inverse τ = ln q/(iπ)."""
    return PeriodRatio(tau=cmath.log(n.q) / (1j * math.pi))


def nome_from_modulus(m: Modulus) -> Nome:
    return nome_from_tau(tau_from_modulus(m))


def modulus_from_tau(t: PeriodRatio) -> Modulus:
    """k = θ2(0)²/θ3(0)² and k′ = θ4(0)²/θ3(0)²."""
    t2, t3, t4 = theta_constants(t.tau)
    return Modulus.from_pair((t2 / t3) ** 2, (t4 / t3) ** 2)


def unwrap_phase(samples: Sequence[complex]) -> np.ndarray:
    """Continuous argument of a complex sequence.

    Element 0 is the principal argument of the first sample; every later
    value adds the principal angle between neighbours.
    """
    s = np.asarray(samples, dtype=complex)
    if s.size == 0:
        return np.empty(0)
    zeros = np.flatnonzero(s == 0)
    if zeros.size:
        raise PhaseJump(f"Sample {zeros[0]} is zero, its argument is undefined")

    steps = np.angle(s[1:] * np.conj(s[:-1]))
    jumps = np.flatnonzero(np.abs(steps) >= math.pi - settings.PHASE_MARGIN)
    if jumps.size:
        i = int(jumps[0])
        raise PhaseJump(
            f"Samples {i} and {i + 1} turn by {steps[i]:.6f} rad; refine the grid"
        )
    return np.angle(s[0]) + np.concatenate(([0.0], np.cumsum(steps)))
