"""Modular, Landen and reciprocal transformations with residual checks."""

import cmath
from typing import Callable, Dict, Tuple

from loguru import logger

from sge_elliptic.exceptions import BadCase, Degenerate
from sge_elliptic.models import JefPoint, ModularCase, Modulus, PeriodRatio, Sl2zElement
from sge_elliptic.services import jacobi_fn
from sge_elliptic.services.elliptic_core import (
    complete_K,
    complete_K_prime,
    modulus_from_tau,
    tau_from_modulus,
)

logger = logger.bind(name=__name__)

# The six classes of modular transformation. The printed τ maps of cases 2,
# 3 and 4 leave the upper half-plane; the stored matrices act on it and agree
# with the printed maps up to τ ↦ −τ.
MODULAR_CASES: Dict[int, ModularCase] = {
    1: ModularCase(case_id=1, tau_map="τ", matrix=Sl2zElement(a=1, b=0, c=0, d=1),
                   modulus_map="(k, k′)"),
    2: ModularCase(case_id=2, tau_map="1 − τ", matrix=Sl2zElement(a=1, b=-1, c=0, d=1),
                   modulus_map="(ik/k′, 1/k′)"),
    3: ModularCase(case_id=3, tau_map="−τ/(1 − τ)", matrix=Sl2zElement(a=1, b=0, c=-1, d=1),
                   modulus_map="(1/k, ik′/k)"),
    4: ModularCase(case_id=4, tau_map="1/τ", matrix=Sl2zElement(a=0, b=-1, c=1, d=0),
                   modulus_map="(k′, k)"),
    5: ModularCase(case_id=5, tau_map="1/(1 − τ)", matrix=Sl2zElement(a=0, b=1, c=-1, d=1),
                   modulus_map="(1/k′, ik/k′)"),
    6: ModularCase(case_id=6, tau_map="−(1 − τ)/τ", matrix=Sl2zElement(a=1, b=-1, c=1, d=0),
                   modulus_map="(ik′/k, 1/k)"),
}

MODULUS_MAPS: Dict[int, Callable[[complex, complex], Tuple[complex, complex]]] = {
    1: lambda k, kp: (k, kp),
    2: lambda k, kp: (1j * k / kp, 1 / kp),
    3: lambda k, kp: (1 / k, 1j * kp / k),
    4: lambda k, kp: (kp, k),
    5: lambda k, kp: (1 / kp, 1j * k / kp),
    6: lambda k, kp: (1j * kp / k, 1 / k),
}

PRINTED_TAU_MAPS: Dict[int, Callable[[complex], complex]] = {
    1: lambda t: t,
    2: lambda t: 1 - t,
    3: lambda t: -t / (1 - t),
    4: lambda t: 1 / t,
    5: lambda t: 1 / (1 - t),
    6: lambda t: -(1 - t) / t,
}


def modular_case(case_id: int) -> ModularCase:
    """Look up one row of the case table."""
    if case_id not in MODULAR_CASES:
        raise BadCase(f"Modular case must be 1..6, got {case_id}")
    return MODULAR_CASES[case_id]


def printed_tau_map(case_id: int, tau: complex) -> complex:
    """The τ map exactly as tabulated, before returning to Im τ̃ > 0."""
    modular_case(case_id)
    return PRINTED_TAU_MAPS[case_id](complex(tau))


def case2_tau_maps(tau: PeriodRatio) -> Dict[str, complex]:
    """Both readings of case 2: the tabulated 1 − τ and the kink-chain τ − 1.

    They differ by τ ↦ −τ, so both give nome ±q with the same modulus.
    """
    return {"one_minus_tau": 1 - tau.tau, "tau_minus_one": tau.tau - 1}


def apply_modular_case(
    case_id: int, tau: PeriodRatio, m: Modulus
) -> Tuple[PeriodRatio, Modulus]:
    """Map (τ, k, k′) to (τ̃, k̃, k̃′) for one of the six cases."""
    case = modular_case(case_id)
    k_new, kp_new = MODULUS_MAPS[case_id](m.k, m.k_prime)
    if not (cmath.isfinite(k_new) and cmath.isfinite(kp_new)):
        raise Degenerate(f"Case {case_id} is singular at k = {m.k}, k′ = {m.k_prime}")
    tau_new = case.matrix.apply(tau.tau)
    logger.debug("Applied modular case", case_id=case_id, tau=str(tau.tau), tau_new=str(tau_new))
    return PeriodRatio(tau=tau_new), Modulus.from_pair(k_new, kp_new)


def compose_cases(first: int, then: int) -> Sl2zElement:
    """Matrix of applying case `first` and then case `then`."""
    return modular_case(then).matrix.compose(modular_case(first).matrix)


def case_consistency(case_id: int, tau: PeriodRatio, m: Modulus) -> float:
    """Largest mismatch between (k̃², k̃′²) and the theta-null ratios at τ̃."""
    tau_new, m_new = apply_modular_case(case_id, tau, m)
    m_theta = modulus_from_tau(tau_new)
    return max(abs(m_theta.m - m_new.m), abs(m_theta.k_prime**2 - m_new.k_prime**2))


def landen_descend(m: Modulus) -> Modulus:
    """k₁ = (1 − k′)/(1 + k′), k₁′ = 2√k′/(1 + k′); doubles τ."""
    if m.k_prime == -1:
        raise Degenerate("Landen descent is undefined at k′ = −1")
    kp = m.k_prime
    return Modulus.from_pair((1 - kp) / (1 + kp), 2 * cmath.sqrt(kp) / (1 + kp))


def landen_ascend(m1: Modulus) -> Modulus:
    """Inverse of landen_descend: k′ = (1 − k₁)/(1 + k₁)."""
    if m1.k == -1:
        raise Degenerate("Landen ascent is undefined at k₁ = −1")
    k1 = m1.k
    return Modulus.from_pair(2 * cmath.sqrt(k1) / (1 + k1), (1 - k1) / (1 + k1))


def landen_gauss_identity(u: complex, m: Modulus) -> float:
    """|nd(u;k) − [dn(u₁;k₁) − k₁cn(u₁;k₁)]/(1 − k₁)| with u₁ = 2u/(1 + k₁)."""
    m1 = landen_descend(m)
    k1 = m1.k
    u1 = 2 * u / (1 + k1)
    lhs = jacobi_fn.nd(JefPoint(u=u, m=m))
    p1 = JefPoint(u=u1, m=m1)
    rhs = (jacobi_fn.dn(p1) - k1 * jacobi_fn.cn(p1)) / (1 - k1)
    return abs(lhs - rhs)


def reciprocal_tau(m: Modulus) -> Tuple[Modulus, complex]:
    """Reciprocal modulus (1/k, ik′/k) with its period ratio from case 3."""
    tau, m_rec = apply_modular_case(3, tau_from_modulus(m), m)
    return m_rec, tau.tau


def reciprocal_modulus_identities(t: complex, m_b: Modulus) -> Tuple[float, float]:
    """Residuals of sn(t/k_k; k_k) = k_b sn(t; k_b) and cn(t/k_k; k_k) = dn(t; k_b).

    k_k = 1/k_b is reached through case 3 on τ_b.
    """
    m_k, tau_k = reciprocal_tau(m_b)
    u = t * m_b.k
    p_k = JefPoint(u=u, m=m_k)
    p_b = JefPoint(u=t, m=m_b)
    res_sn = abs(jacobi_fn.sn(p_k, tau=tau_k) - m_b.k * jacobi_fn.sn(p_b))
    res_cn = abs(jacobi_fn.cn(p_k, tau=tau_k) - jacobi_fn.dn(p_b))
    return res_sn, res_cn


def reciprocal_K_identity(m: Modulus) -> float:
    """|K(1/k) − k[K(k) + iK′(k)]|."""
    k = m.k
    lhs = complete_K(Modulus.from_k(1 / k))
    rhs = k * (complete_K(m) + 1j * complete_K_prime(m))
    return abs(lhs - rhs)


def half_period_shift_identities(u: complex, m: Modulus) -> Tuple[float, float]:
    """Residuals of cn(u + K + iK′) = −(ik′/k)nc(u) and dn(u + K + iK′) = ik′sc(u)."""
    qp = jacobi_fn.lattice_quarter_periods(m)
    shifted = JefPoint(u=u + qp.K + 1j * qp.K_prime, m=m)
    p = JefPoint(u=u, m=m)
    k, kp = m.k, m.k_prime
    res_cn = abs(jacobi_fn.cn(shifted) + 1j * kp / k * jacobi_fn.nc(p))
    res_dn = abs(jacobi_fn.dn(shifted) - 1j * kp * jacobi_fn.sc(p))
    return res_cn, res_dn


def imaginary_shift_identities(v: complex, m: Modulus) -> Tuple[float, float]:
    """Residuals of sn(iv; k) = i·sc(v; k′) and 1/dn(v + iK′; k) = i·sc(v; k)."""
    qp = jacobi_fn.lattice_quarter_periods(m)
    res_jacobi = abs(
        jacobi_fn.sn(JefPoint(u=1j * v, m=m)) - 1j * jacobi_fn.sc(JefPoint(u=v, m=m.complement))
    )
    res_shift = abs(
        jacobi_fn.nd(JefPoint(u=v + 1j * qp.K_prime, m=m)) - 1j * jacobi_fn.sc(JefPoint(u=v, m=m))
    )
    return res_jacobi, res_shift


def reciprocal_jef_map(u1: complex, m_k: Modulus) -> Tuple[float, float]:
    """Residuals of dn(u₁; k₁) = cn(k₁u₁; k′_k) and cn(u₁; k₁) = dn(k₁u₁; k′_k).

    k₁ = 1/k′_k exceeds one and is evaluated on the case-3 image of the
    lattice of k′_k.
    """
    m_comp = m_k.complement
    m1, tau1 = reciprocal_tau(m_comp)
    k1 = m1.k
    p1 = JefPoint(u=u1, m=m1)
    p_comp = JefPoint(u=k1 * u1, m=m_comp)
    res_dn = abs(jacobi_fn.dn(p1, tau=tau1) - jacobi_fn.cn(p_comp))
    res_cn = abs(jacobi_fn.cn(p1, tau=tau1) - jacobi_fn.dn(p_comp))
    return res_dn, res_cn
