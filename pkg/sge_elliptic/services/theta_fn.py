"""Jacobi theta functions of complex argument and complex parameter.

The argument l has period 1 and the parameter B plays the role of τ, so the
nome is q = exp(iπB)::

    θ3(l; B) = Σ exp(iπB n² + 2πi n l)
    θ4(l; B) = Σ (−1)ⁿ exp(iπB n² + 2πi n l)
    θ2(l; B) = Σ exp(iπB (n+½)² + 2πi (n+½) l)
    θ1(l; B) = −i Σ (−1)ⁿ exp(iπB (n+½)² + 2πi (n+½) l)
"""

import cmath
import math
from typing import Tuple

from loguru import logger

from sge_elliptic.config import settings
from sge_elliptic.exceptions import DomainError, NonConvergence
from sge_elliptic.models import ThetaArgs

logger = logger.bind(name=__name__)

# (half-integer offset, alternating sign, overall factor) per theta index
THETA_KERNELS = {
    1: (0.5, True, -1j),
    2: (0.5, False, 1.0),
    3: (0.0, False, 1.0),
    4: (0.0, True, 1.0),
}


def _check_nome(B: complex) -> float:
    if not B.imag > 0:
        raise NonConvergence(f"Theta parameter needs Im B > 0, got {B}")
    q_abs = math.exp(-math.pi * B.imag)
    if q_abs >= settings.THETA_MAX_NOME:
        raise NonConvergence(
            f"|q| = {q_abs:.6f} is too close to 1 for the theta series (B = {B})"
        )
    return q_abs


def theta(index: int, l: complex, B: complex) -> complex:
    """θ_index(l; B) by symmetric truncation of the defining series.

    Summation stops once the newest pair of terms falls below THETA_REL_TOL
    times the accumulated magnitude and the Gaussian peak has been passed.
    """
    offset, alternate, factor = THETA_KERNELS[index]
    l, B = complex(l), complex(B)
    _check_nome(B)

    # Terms grow until |n| passes the peak of exp(−πn²Im B − 2πn Im l)
    n_peak = abs(l.imag) / B.imag + 1.0
    total = 0j
    accumulated = 0.0
    for j in range(settings.THETA_MAX_TERMS):
        if offset == 0.0:
            indices = (0,) if j == 0 else (j, -j)
        else:
            indices = (j, -1 - j)
        newest = 0.0
        for n in indices:
            x = n + offset
            term = cmath.exp(1j * math.pi * B * x * x + 2j * math.pi * x * l)
            if alternate and n % 2:
                term = -term
            total += term
            size = abs(term)
            accumulated += size
            newest = max(newest, size)
        if j > n_peak and newest <= settings.THETA_REL_TOL * accumulated:
            return factor * total

    logger.warning(
        "Theta series hit the term cap",
        index=index,
        l=str(l),
        B=str(B),
        terms=settings.THETA_MAX_TERMS,
    )
    raise NonConvergence(
        f"θ{index} needed more than {settings.THETA_MAX_TERMS} terms at l={l}, B={B}"
    )


def theta1(args: ThetaArgs) -> complex:
    """θ1(l; B), odd in l."""
    return theta(1, args.l, args.B)


def theta2(args: ThetaArgs) -> complex:
    """θ2(l; B)."""
    return theta(2, args.l, args.B)


def theta3(args: ThetaArgs) -> complex:
    """θ3(l; B), the scalar Riemann theta."""
    return theta(3, args.l, args.B)


def theta4(args: ThetaArgs) -> complex:
    """θ4(l; B) = θ3(l + ½; B)."""
    return theta(4, args.l, args.B)


def theta_constants(B: complex) -> Tuple[complex, complex, complex]:
    """Theta null values (θ2(0), θ3(0), θ4(0))."""
    return theta(2, 0.0, B), theta(3, 0.0, B), theta(4, 0.0, B)


def _theta2_bare_product(l: complex, B: complex, n_terms: int) -> complex:
    """e^{πil} ∏_{n≥0}(1 + e^{2πi(nB − l)}) ∏_{n≥1}(1 + e^{2πi(nB + l)})."""
    value = cmath.exp(1j * math.pi * l) * (1 + cmath.exp(-2j * math.pi * l))
    for n in range(1, n_terms + 1):
        value *= 1 + cmath.exp(2j * math.pi * (n * B - l))
        value *= 1 + cmath.exp(2j * math.pi * (n * B + l))
    return value


def theta2_product(l: complex, B: complex, n_terms: int) -> complex:
    """θ2(l; B) from the truncated infinite product.

    The nome-dependent constant in front of the product is fixed by matching
    the series at l = 0.
    """
    if n_terms < 1:
        raise DomainError(f"n_terms must be at least 1, got {n_terms}")
    l, B = complex(l), complex(B)
    _check_nome(B)

    reference = _theta2_bare_product(0.0, B, n_terms)
    if reference == 0:
        raise NonConvergence(f"θ2 product vanishes at l = 0 for B = {B}")
    constant = theta(2, 0.0, B) / reference
    return constant * _theta2_bare_product(l, B, n_terms)


def theta_ratio_product(l: complex, B: complex, n_terms: int) -> complex:
    """θ4(l; B)/θ3(l; B) as ∏ f(e^{2πi(jB−l)}) f(e^{2πi(jB+l)}), j = ½, 3/2, ….

    Here f(X) = (1 − X)/(1 + X).
    """
    if n_terms < 1:
        raise DomainError(f"n_terms must be at least 1, got {n_terms}")
    l, B = complex(l), complex(B)
    _check_nome(B)

    value = 1 + 0j
    for n in range(n_terms):
        j = n + 0.5
        for x in (
            cmath.exp(2j * math.pi * (j * B - l)),
            cmath.exp(2j * math.pi * (j * B + l)),
        ):
            if x == -1:
                raise NonConvergence(f"θ3 vanishes at l = {l}, B = {B}")
            value *= (1 - x) / (1 + x)
    return value
