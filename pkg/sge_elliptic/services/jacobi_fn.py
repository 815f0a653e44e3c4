"""Jacobi elliptic functions for complex argument and complex modulus.

The reference path builds every function from theta quotients at
v = u/(2K). Any period ratio τ with k² = θ2(0;τ)⁴/θ3(0;τ)⁴ describes the same
function, so callers that reach k > 1 or complex k through a modular map can
hand that τ in directly. The Fourier and csc series are kept as independent
evaluators for cross-checks.
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

import numpy as np
from loguru import logger

from sge_elliptic.config import settings
from sge_elliptic.exceptions import (
    BranchInconsistent,
    DomainError,
    NonConvergence,
    PoleProximity,
    StripViolation,
)
from sge_elliptic.models import JefPoint, Modulus, Nome, QuarterPeriods
from sge_elliptic.services.elliptic_core import tau_from_modulus, tau_from_nome
from sge_elliptic.services.theta_fn import theta, theta_constants

logger = logger.bind(name=__name__)

# Pole offset a + b·τ in v = u/(2K) as (a, b), the numerator and denominator
# theta indices, and the theta-null prefactor indices (num0, den0)
THETA_QUOTIENTS = {
    "sn": ((0.0, 0.5), 1, 4, (3, 2)),
    "cn": ((0.0, 0.5), 2, 4, (4, 2)),
    "dn": ((0.0, 0.5), 3, 4, (4, 3)),
    "nd": ((0.5, 0.5), 4, 3, (3, 4)),
    "sc": ((0.5, 0.0), 1, 2, (3, 4)),
    "nc": ((0.5, 0.0), 4, 2, (2, 4)),
    "cs": ((0.0, 0.0), 2, 1, (4, 3)),
}

LATTICE_MISMATCH_TOL = 1e-9


@dataclass(frozen=True)
class _Lattice:
    tau: complex
    K: complex
    k: complex
    k_prime: complex
    nulls: dict


@lru_cache(maxsize=512)
def _lattice(k: complex, k_prime: complex, tau: Optional[complex]) -> _Lattice:
    if tau is None:
        tau = tau_from_modulus(Modulus.from_pair(k, k_prime)).tau
    t2, t3, t4 = theta_constants(tau)
    k_theta = (t2 / t3) ** 2
    # The lattice must reproduce k², the sign of k is immaterial
    if abs(k_theta**2 - k * k) > LATTICE_MISMATCH_TOL * max(1.0, abs(k) ** 2):
        raise BranchInconsistent(
            f"τ = {tau} carries k² = {k_theta ** 2}, expected {k * k}; "
            "pass a period ratio from the transforms module"
        )
    return _Lattice(
        tau=tau,
        K=0.5 * math.pi * t3 * t3,
        k=k_theta,
        k_prime=(t4 / t3) ** 2,
        nulls={2: t2, 3: t3, 4: t4},
    )


def lattice_quarter_periods(m: Modulus, tau: Optional[complex] = None) -> QuarterPeriods:
    """K = (π/2)θ3(0)² and K′ = −iτK for the lattice used by the theta path."""
    lat = _lattice(m.k, m.k_prime, tau)
    return QuarterPeriods(K=lat.K, K_prime=-1j * lat.tau * lat.K)


def _lattice_distance(v: complex, offset: complex, tau: complex) -> float:
    """Distance from v to offset + Z + τZ."""
    w = v - offset
    n = round(w.imag / tau.imag)
    w -= n * tau
    w -= round(w.real)
    return min(
        abs(w - a - b * tau) for a in (-1, 0, 1) for b in (-1, 0, 1)
    )


def _reduce(v: complex, tau: complex) -> complex:
    """Shift v by the common period lattice 2Z + 2τZ of all quotients."""
    n = round(v.imag / (2 * tau.imag))
    v -= 2 * n * tau
    return v - 2 * round(v.real / 2)


def _degenerate(name: str, u: complex, k: complex) -> complex:
    """Closed forms at k = 0 and k = ±1."""
    if k == 0:
        s, c = cmath.sin(u), cmath.cos(u)
        values = {"sn": (s, 1), "cn": (c, 1), "dn": (1, 1), "nd": (1, 1),
                  "sc": (s, c), "nc": (1, c), "cs": (c, s)}
    else:
        th, ch = cmath.tanh(u), cmath.cosh(u)
        values = {"sn": (th * ch, ch), "cn": (1, ch), "dn": (1, ch), "nd": (ch, 1),
                  "sc": (th * ch, 1), "nc": (ch, 1), "cs": (1, th * ch)}
    numerator, denominator = values[name]
    if abs(denominator) < settings.POLE_RADIUS:
        raise PoleProximity(f"{name}({u}; k={k}) is at a pole")
    return complex(numerator / denominator)


def _quotient(name: str, p: JefPoint, tau: Optional[complex]) -> complex:
    k = p.m.k
    if k == 0 or k in (1, -1):
        return _degenerate(name, p.u, k)

    lat = _lattice(p.m.k, p.m.k_prime, tau)
    (a, b), top, bottom, (num0, den0) = THETA_QUOTIENTS[name]
    v = _reduce(p.u / (2 * lat.K), lat.tau)

    pole_offset = a + b * lat.tau
    distance = abs(2 * lat.K) * _lattice_distance(v, pole_offset, lat.tau)
    if distance < settings.POLE_RADIUS:
        raise PoleProximity(
            f"{name} evaluated {distance:.2e} from a pole at u={p.u}, k={k}"
        )

    ratio = theta(top, v, lat.tau) / theta(bottom, v, lat.tau)
    return lat.nulls[num0] / lat.nulls[den0] * ratio


def sn(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """sn(u; k)."""
    return _quotient("sn", p, tau)


def cn(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """cn(u; k)."""
    return _quotient("cn", p, tau)


def dn(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """dn(u; k)."""
    return _quotient("dn", p, tau)


def nd(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """nd = 1/dn."""
    return _quotient("nd", p, tau)


def sc(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """sc = sn/cn."""
    return _quotient("sc", p, tau)


def nc(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """nc = 1/cn."""
    return _quotient("nc", p, tau)


def cs(p: JefPoint, tau: Optional[complex] = None) -> complex:
    """cs = cn/sn."""
    return _quotient("cs", p, tau)


def _series_lattice(p: JefPoint, nome: Nome) -> _Lattice:
    tau = tau_from_nome(nome).tau
    lat = _lattice(p.m.k, p.m.k_prime, tau)
    if abs((p.u / lat.K).imag) >= lat.tau.imag:
        raise StripViolation(
            f"|Im u/K| = {abs((p.u / lat.K).imag):.6f} is outside the strip Im τ = {lat.tau.imag:.6f}"
        )
    return lat


def _sum_until_small(term, start: int) -> complex:
    """Σ_{n ≥ start} term(n) until the newest term is negligible."""
    total = 0j
    accumulated = 0.0
    for n in range(start, start + settings.FOURIER_MAX_TERMS):
        value = term(n)
        total += value
        accumulated += abs(value)
        if n > start + 2 and abs(value) <= 1e-17 * max(accumulated, 1e-300):
            return total
    raise NonConvergence(
        f"Fourier series did not settle within {settings.FOURIER_MAX_TERMS} terms"
    )


def sn_fourier(p: JefPoint, nome: Nome) -> complex:
    """sn = (2π/kK) Σ q^{n+½} sin((2n+1)ζ)/(1 − q^{2n+1}), ζ = πu/(2K)."""
    lat = _series_lattice(p, nome)
    zeta = math.pi * p.u / (2 * lat.K)

    def term(n: int) -> complex:
        qh = cmath.exp(1j * math.pi * lat.tau * (n + 0.5))
        return qh * cmath.sin((2 * n + 1) * zeta) / (1 - qh * qh)

    return 2 * math.pi / (lat.k * lat.K) * _sum_until_small(term, 0)


def cn_fourier(p: JefPoint, nome: Nome) -> complex:
    """cn = (2π/kK) Σ q^{n+½} cos((2n+1)ζ)/(1 + q^{2n+1})."""
    lat = _series_lattice(p, nome)
    zeta = math.pi * p.u / (2 * lat.K)

    def term(n: int) -> complex:
        qh = cmath.exp(1j * math.pi * lat.tau * (n + 0.5))
        return qh * cmath.cos((2 * n + 1) * zeta) / (1 + qh * qh)

    return 2 * math.pi / (lat.k * lat.K) * _sum_until_small(term, 0)


def dn_fourier(p: JefPoint, nome: Nome) -> complex:
    """dn = π/(2K) + (2π/K) Σ_{n≥1} qⁿ cos(2nζ)/(1 + q^{2n})."""
    lat = _series_lattice(p, nome)
    zeta = math.pi * p.u / (2 * lat.K)

    def term(n: int) -> complex:
        qn = cmath.exp(1j * math.pi * lat.tau * n)
        return qn * cmath.cos(2 * n * zeta) / (1 + qn * qn)

    return math.pi / (2 * lat.K) + 2 * math.pi / lat.K * _sum_until_small(term, 1)


def nd_fourier_terms(
    p: JefPoint, nome: Nome, n_terms: int, scaled: bool = False
) -> List[complex]:
    """Leading terms of the nd Fourier series, constant term first.

    nd = π/(2Kk′) + (2π/(Kk′)) Σ_{n≥1} (−1)ⁿ qⁿ cos(2nζ)/(1 + q^{2n}).
    With scaled=True every term is multiplied by √k′ = θ4(0)/θ3(0). For
    q = i·q̃ and imaginary ζ the scaled terms are real for even n and
    imaginary for odd n.
    """
    lat = _series_lattice(p, nome)
    zeta = math.pi * p.u / (2 * lat.K)
    factor = lat.nulls[4] / lat.nulls[3] if scaled else 1.0
    base = math.pi / (lat.K * lat.k_prime)

    terms = [factor * base / 2]
    for n in range(1, n_terms + 1):
        qn = cmath.exp(1j * math.pi * lat.tau * n)
        terms.append(factor * 2 * base * (-1) ** n * qn * cmath.cos(2 * n * zeta) / (1 + qn * qn))
    return terms


def nd_fourier(p: JefPoint, nome: Nome) -> complex:
    """nd by its Fourier series."""
    lat = _series_lattice(p, nome)
    zeta = math.pi * p.u / (2 * lat.K)
    base = math.pi / (lat.K * lat.k_prime)

    def term(n: int) -> complex:
        qn = cmath.exp(1j * math.pi * lat.tau * n)
        return (-1) ** n * qn * cmath.cos(2 * n * zeta) / (1 + qn * qn)

    return base / 2 + 2 * base * _sum_until_small(term, 1)


def csc_lattice_sum(
    u: complex, K: complex, K_prime: complex, n_terms: int, alternate: bool
) -> complex:
    """Σ_{m=−N..N} (±1)^m csc(π(u − (2m−1)iK′)/(2K))."""
    m = np.arange(-n_terms, n_terms + 1)
    z = np.pi * (u - (2 * m - 1) * 1j * K_prime) / (2 * K)
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        values = 1.0 / np.sin(z)
    # csc decays like 2e^{−|Im z|}; overflowed entries are zero
    values = np.where(np.abs(z.imag) > 700, 0.0, values)
    if not np.all(np.isfinite(values)):
        raise PoleProximity(f"csc series evaluated on a pole at u={u}")
    if alternate:
        values = values * np.where(m % 2 == 0, 1.0, -1.0)
    return complex(values.sum())


def _csc_lattice(p: JefPoint, n_terms: int, tau: Optional[complex]) -> _Lattice:
    if n_terms < 1:
        raise DomainError(f"n_terms must be at least 1, got {n_terms}")
    lat = _lattice(p.m.k, p.m.k_prime, tau)
    if abs((p.u / lat.K).imag) >= lat.tau.imag:
        raise StripViolation(f"u = {p.u} lies outside the csc strip")
    return lat


def sn_csc(p: JefPoint, n_terms: int, tau: Optional[complex] = None) -> complex:
    """sn = (π/(2kK)) Σ csc(π(u − (2m−1)iK′)/(2K))."""
    lat = _csc_lattice(p, n_terms, tau)
    K_prime = -1j * lat.tau * lat.K
    total = csc_lattice_sum(p.u, lat.K, K_prime, n_terms, alternate=False)
    return math.pi / (2 * lat.k * lat.K) * total


def cn_csc(p: JefPoint, n_terms: int, tau: Optional[complex] = None) -> complex:
    """cn = (iπ/(2kK)) Σ (−1)^m csc(π(u − (2m−1)iK′)/(2K))."""
    lat = _csc_lattice(p, n_terms, tau)
    K_prime = -1j * lat.tau * lat.K
    total = csc_lattice_sum(p.u, lat.K, K_prime, n_terms, alternate=True)
    return 1j * math.pi / (2 * lat.k * lat.K) * total
