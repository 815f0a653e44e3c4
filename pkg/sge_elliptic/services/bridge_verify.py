"""Parameter bridges between direct and theta-form solutions, period integrals and chains.

The direct breather and kink live on real moduli k_b, k_k < 1. Their theta
forms live on lattices reached by modular and Landen maps, where k′ can be
negative or complex. Every bridge relation is reported as a residual so the
CLI can print it next to its tolerance.
"""

import cmath
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from sge_elliptic.config import settings
from sge_elliptic.exceptions import BranchInconsistent, Degenerate, DomainError
from sge_elliptic.models import (
    BreatherBridge,
    BreatherSpectrum,
    CheckResult,
    JefPoint,
    KinkBridge,
    KinkSpectrum,
    ModularChain,
    Modulus,
    Nome,
    PeriodRatio,
    SolutionKind,
    SolutionParams,
)
from sge_elliptic.services import jacobi_fn
from sge_elliptic.services.elliptic_core import (
    adaptive_quad,
    complete_K,
    complete_K_prime,
    modulus_from_tau,
    tau_from_modulus,
    tau_from_nome,
)
from sge_elliptic.services.sge_solutions import (
    breather_argument,
    breather_modulus,
    kink_argument,
    kink_modulus,
    theta_rep_argument,
)
from sge_elliptic.services.theta_fn import theta

logger = logger.bind(name=__name__)

# Best sign of relation (3) must beat this before the kink bridge is accepted
BRANCH_ACCEPT_TOL = 1e-6


def _relative(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def _distance_to_even(z: complex) -> float:
    """Distance from z to 2Z."""
    return abs(z - 2 * round(z.real / 2))


# Breather


def breather_bridge(k_b: Modulus, branch: int = 1) -> BreatherBridge:
    """Match the direct breather on k_b to its theta lattice τ₁ = (1 + τ_b)/2.

    q_b = q̃², t0 = K_b and K_b = √k′₁·K₁ on the √k′₁ branch picked by
    `branch`; the other branch is tried before giving up.
    """
    if branch not in (1, -1):
        raise DomainError(f"branch must be ±1, got {branch}")
    if not (k_b.k.imag == 0 and 0 < k_b.k.real < 1):
        raise DomainError(f"Breather modulus must be real in (0, 1), got {k_b.k}")

    K_b = complete_K(k_b).real
    K_b_prime = complete_K_prime(k_b).real
    tau_b = 1j * K_b_prime / K_b
    tau_1 = 0.5 * (1 + tau_b)

    m1 = modulus_from_tau(PeriodRatio(tau=tau_1))
    K1 = jacobi_fn.lattice_quarter_periods(m1, tau=tau_1).K

    root = cmath.sqrt(m1.k_prime)
    for sign in (branch, -branch):
        sqrt_k1_prime = sign * root
        if _relative(sqrt_k1_prime * K1, K_b) <= settings.VERIFY_TOL_IDENTITY:
            break
    else:
        raise BranchInconsistent(
            f"Neither branch of √k′₁ gives K_b = √k′₁·K₁ at k_b = {k_b.k.real}"
        )
    if sign != branch:
        logger.debug("Breather bridge switched √k′₁ branch", requested=branch, used=sign)

    bridge = BreatherBridge(
        k_b=k_b.k.real,
        k_b_prime=k_b.k_prime.real,
        K_b=K_b,
        K_b_prime=K_b_prime,
        tau_b=tau_b,
        q_b=cmath.exp(1j * math.pi * tau_b),
        tau_1=tau_1,
        q_tilde=-1j * cmath.exp(1j * math.pi * tau_1),
        k1=m1.k,
        k1_prime=m1.k_prime,
        K1=K1,
        sqrt_k1_prime=sqrt_k1_prime,
        branch=sign,
        a=1 / (4j * K_b),
        a_strip=1 / (4 * K1 * sqrt_k1_prime),
        t0=K_b,
    )
    logger.debug("Built breather bridge", k_b=bridge.k_b, tau_1=str(tau_1), branch=sign)
    return bridge


def breather_theta_params(bridge: BreatherBridge) -> SolutionParams:
    """Theta-side breather on B = τ₁ − 1 with l = t/(4K_b).

    This lattice carries √k′ = k′_b + ik_b, the conjugate of the √k′₁ on τ₁,
    and its ratio reproduces the direct breather shifted by t0 = K_b.
    """
    B = bridge.tau_1 - 1
    return SolutionParams(
        kind=SolutionKind.THETA_REP_BREATHER,
        modulus=modulus_from_tau(PeriodRatio(tau=B)),
        t0=bridge.t0,
        l_re=0.0,
        a=bridge.a,
        B=B,
    )


def landen_signature(bridge: BreatherBridge) -> float:
    """|τ_b − 2τ̃| with τ̃ read back from q̃ on the principal branch."""
    tau_tilde = tau_from_nome(Nome(q=bridge.q_tilde)).tau
    return abs(bridge.tau_b - 2 * tau_tilde)


def printed_identification_residual(bridge: BreatherBridge) -> float:
    """|k_b − k′₁| on τ₁.

    This does not vanish: k′₁ = (k′_b − ik_b)². The moduli that do match are
    checked in breather_bridge_checks.
    """
    return abs(bridge.k_b - bridge.k1_prime)


def breather_bridge_checks(bridge: BreatherBridge) -> List[CheckResult]:
    """Nome, shift and quarter-period relations, both rate normalisations and the lattice moduli.

    On τ̃ = τ_b/2 the Landen complement 2√k̃′/(1 + k̃′) gives k′_b; on
    B = τ₁ − 1 the same expression gives 1/k′_b.
    """
    tol = settings.VERIFY_TOL_IDENTITY
    B = bridge.tau_1 - 1
    shift_theta = theta(4, 0.0, B) / theta(3, 0.0, B)
    shift_direct = breather_argument(0.0, 2 * bridge.k_b**2, t0=bridge.t0)
    tilde = modulus_from_tau(tau_from_nome(Nome(q=bridge.q_tilde)))
    theta_side = modulus_from_tau(PeriodRatio(tau=B))
    return [
        CheckResult(name="breather.nome", residual=abs(bridge.q_b - bridge.q_tilde**2), tolerance=tol),
        CheckResult(name="breather.shift", residual=abs(shift_theta - shift_direct), tolerance=tol),
        CheckResult(
            name="breather.quarter_period",
            residual=_relative(bridge.sqrt_k1_prime * bridge.K1, bridge.K_b),
            tolerance=tol,
        ),
        CheckResult(
            name="breather.rate",
            residual=abs(4j * bridge.a * bridge.sqrt_k1_prime * bridge.K1 - 1),
            tolerance=tol,
        ),
        # the strip rate is the selected rate turned by i
        CheckResult(
            name="breather.rate_strip",
            residual=_relative(bridge.a_strip, 1j * bridge.a),
            tolerance=tol,
        ),
        CheckResult(name="breather.landen_signature", residual=landen_signature(bridge), tolerance=1e-10),
        CheckResult(
            name="breather.k1_prime",
            residual=abs(bridge.k1_prime - (bridge.k_b_prime - 1j * bridge.k_b) ** 2),
            tolerance=tol,
        ),
        CheckResult(
            name="breather.landen_complement",
            residual=abs(2 * cmath.sqrt(tilde.k_prime) / (1 + tilde.k_prime) - bridge.k_b_prime),
            tolerance=tol,
        ),
        CheckResult(
            name="breather.theta_modulus",
            residual=_relative(
                2 * cmath.sqrt(theta_side.k_prime) / (1 + theta_side.k_prime), 1 / bridge.k_b_prime
            ),
            tolerance=tol,
        ),
    ]


def verify_equivalence_breather(H: float, t_grid: Sequence[float]) -> float:
    """max |w_direct(t − K_b) − θ4(l; B)/θ3(l; B)| over the grid, 0 < H < 2."""
    if not 0 < H < 2:
        raise DomainError(f"Breather equivalence needs 0 < H < 2, got H = {H}")
    bridge = breather_bridge(breather_modulus(H))
    params = breather_theta_params(bridge)
    worst = 0.0
    for t in np.asarray(t_grid, dtype=float):
        direct = breather_argument(float(t), H, t0=bridge.t0)
        worst = max(worst, abs(direct - theta_rep_argument(float(t), params)))
    logger.info("Breather equivalence", H=H, residual=worst)
    return worst


# Kink


def kink_bridge(k_k: Modulus) -> KinkBridge:
    """Match the direct kink on k_k to the lattice τ with −1/τ = 2(τ_k − 1).

    That lattice carries k′ = (k′_k − 1)/(k′_k + 1) < 0. √k′ is stored on the
    branch fixed by i(k′_k/k_k)(1 − k₁) = √k′ with k₁ = 1/k′_k; the rate
    a = 1/(4i√k′K) uses the principal root.
    """
    if not (k_k.k.imag == 0 and 0 < k_k.k.real <= 1):
        raise DomainError(f"Kink modulus must be real in (0, 1], got {k_k.k}")
    kk = k_k.k.real
    kkp = math.sqrt(max(0.0, 1 - kk * kk))
    if kkp == 0:
        raise Degenerate("separatrix boundary, k′ = −1: the kink bridge does not exist at k_k = 1")

    K_k = complete_K(k_k).real
    K_k_prime = complete_K_prime(k_k).real
    tau_k = 1j * K_k_prime / K_k
    tau = -1 / (2 * (tau_k - 1))

    ell = (1 - kkp) / (1 + kkp)
    m = Modulus.from_pair(2 * math.sqrt(kkp) / (1 + kkp), complex(-ell, 0.0))
    qp = jacobi_fn.lattice_quarter_periods(m, tau=tau)

    k1 = 1 / kkp
    sqrt_k_prime = 1j * (kkp / kk) * (1 - k1)
    principal = cmath.sqrt(m.k_prime)

    bridge = KinkBridge(
        k_k=kk,
        k_k_prime=kkp,
        K_k=K_k,
        K_k_prime=K_k_prime,
        tau_k=tau_k,
        k=m.k,
        k_prime=m.k_prime,
        K=qp.K,
        K_prime=qp.K_prime,
        tau=tau,
        sqrt_k_prime=sqrt_k_prime,
        a=1 / (4j * principal * qp.K),
        k1=k1,
    )
    logger.debug("Built kink bridge", k_k=kk, k_prime=str(m.k_prime), tau=str(tau))
    return bridge


def kink_theta_params(bridge: KinkBridge) -> SolutionParams:
    """Theta-side kink: l = ¼ + i·a·t on the bridge lattice."""
    return SolutionParams(
        kind=SolutionKind.THETA_REP_KINK,
        modulus=Modulus.from_pair(bridge.k, bridge.k_prime),
        l_re=0.25,
        a=bridge.a,
        B=bridge.tau,
        sqrt_k_prime=bridge.sqrt_k_prime,
    )


def _kink_argument_coefficient(bridge: KinkBridge) -> complex:
    """−i(1 + k₁)/(2k₁k_k), the coefficient of t inside nd."""
    return -1j * (1 + bridge.k1) / (2 * bridge.k1 * bridge.k_k)


def kink_relation_three(bridge: KinkBridge) -> Tuple[float, int]:
    """Best residual of −i(1 + k₁)/(2k₁k_k) = σ/(2√k′) and the sign σ that achieves it."""
    c = _kink_argument_coefficient(bridge)
    residuals = {
        sigma: _relative(c, sigma / (2 * bridge.sqrt_k_prime)) for sigma in (1, -1)
    }
    sigma = min(residuals, key=residuals.get)
    if residuals[sigma] > BRANCH_ACCEPT_TOL:
        raise BranchInconsistent(
            f"Neither sign satisfies the t-coefficient relation at k_k = {bridge.k_k}"
        )
    return residuals[sigma], sigma


def coefficient_relations(k_k: Union[Modulus, float]) -> Tuple[float, float]:
    """Residuals of 2√k′K′ = ik_kK_k and of a = −K′/(2K_kk_kK) against 1/(4i√k′K).

    Both use the principal √k′.
    """
    if not isinstance(k_k, Modulus):
        k_k = Modulus.from_k(k_k)
    bridge = kink_bridge(k_k)
    principal = cmath.sqrt(bridge.k_prime)
    first = _relative(2 * principal * bridge.K_prime, 1j * bridge.k_k * bridge.K_k)
    a_from_periods = -bridge.K_prime / (2 * bridge.K_k * bridge.k_k * bridge.K)
    second = _relative(a_from_periods, bridge.a)
    return first, second


def kink_bridge_checks(bridge: KinkBridge) -> List[CheckResult]:
    """Modulus map, period ratio, quarter period and the three coefficient relations."""
    tol = settings.VERIFY_TOL_IDENTITY
    kkp = bridge.k_k_prime

    lattice_modulus = modulus_from_tau(PeriodRatio(tau=bridge.tau))
    principal_tau = tau_from_modulus(Modulus.from_pair(bridge.k, bridge.k_prime)).tau
    K_of_k_prime = complete_K(Modulus.from_k(bridge.k_prime)).real
    K1 = complete_K(Modulus.from_k(bridge.k1))
    relation_three, sigma = kink_relation_three(bridge)
    first, second = coefficient_relations(Modulus.from_k(bridge.k_k))
    logger.debug("Kink relation (3) sign", sigma=sigma)

    return [
        CheckResult(
            name="kink.modulus_map",
            residual=abs(lattice_modulus.k_prime - (kkp - 1) / (kkp + 1)),
            tolerance=tol,
        ),
        CheckResult(
            name="kink.period_ratio",
            residual=_distance_to_even(-1 / principal_tau - 2 * (bridge.tau_k - 1)),
            tolerance=tol,
        ),
        CheckResult(
            name="kink.quarter_period",
            residual=_relative(K_of_k_prime, 0.5 * (1 + kkp) * bridge.K_k),
            tolerance=tol,
        ),
        CheckResult(
            name="kink.lattice_K_prime",
            residual=_relative(bridge.K_prime, K_of_k_prime),
            tolerance=tol,
        ),
        CheckResult(
            name="kink.relation_1",
            residual=_relative(bridge.sqrt_k_prime, theta(4, 0.0, bridge.tau) / theta(3, 0.0, bridge.tau)),
            tolerance=tol,
        ),
        CheckResult(
            name="kink.relation_2",
            residual=_relative(0.5 * (1 + bridge.k1) * K1, 0.5 * bridge.K),
            tolerance=tol,
        ),
        CheckResult(name="kink.relation_3", residual=relation_three, tolerance=tol),
        CheckResult(name="kink.coefficient_1", residual=first, tolerance=tol),
        CheckResult(name="kink.coefficient_2", residual=second, tolerance=tol),
    ]


def kink_nd_argument(t: float, bridge: KinkBridge) -> complex:
    """√k′·nd(σt/(2√k′) + K/2; k) on the bridge lattice, σ from relation (3)."""
    _, sigma = kink_relation_three(bridge)
    u = sigma * t / (2 * bridge.sqrt_k_prime) + 0.5 * bridge.K
    m = Modulus.from_pair(bridge.k, bridge.k_prime)
    return bridge.sqrt_k_prime * jacobi_fn.nd(JefPoint(u=u, m=m), tau=bridge.tau)


def kink_equivalence_checks(H: float, t_grid: Sequence[float]) -> List[CheckResult]:
    """Coefficient relations and the end-to-end cn − i·sn against √k′·nd and θ4/θ3."""
    if not H > 2:
        raise DomainError(f"Kink equivalence needs H > 2, got H = {H}")
    bridge = kink_bridge(kink_modulus(H))
    params = kink_theta_params(bridge)
    nd_worst = theta_worst = 0.0
    for t in np.asarray(t_grid, dtype=float):
        direct = kink_argument(float(t), H)
        nd_worst = max(nd_worst, abs(direct - kink_nd_argument(float(t), bridge)))
        theta_worst = max(theta_worst, abs(direct - theta_rep_argument(float(t), params)))
    tol = settings.VERIFY_TOL_EQUIVALENCE
    checks = [c for c in kink_bridge_checks(bridge) if c.name.startswith("kink.relation")]
    checks += [
        CheckResult(name="kink.equivalence_nd", residual=nd_worst, tolerance=tol),
        CheckResult(name="kink.equivalence_theta", residual=theta_worst, tolerance=tol),
    ]
    return checks


def verify_equivalence_kink(H: float, t_grid: Sequence[float]) -> float:
    """Largest residual of kink_equivalence_checks; raises if a relation fails."""
    checks = kink_equivalence_checks(H, t_grid)
    failed = [c.name for c in checks if c.name.startswith("kink.relation") and not c.passed]
    if failed:
        raise BranchInconsistent(f"Kink coefficient relations failed at H = {H}: {failed}")
    worst = max(c.residual for c in checks if c.name.startswith("kink.equivalence"))
    logger.info("Kink equivalence", H=H, residual=worst)
    return worst


# Period integrals


def _kink_lambda(s: KinkSpectrum) -> float:
    return (s.E2 - s.E1) / (-s.E1)


def period_integral_kink(s: KinkSpectrum) -> complex:
    """I(a) = (−4/√(−E1))·K(√λ_k), λ_k = (E2 − E1)/(−E1)."""
    lam = _kink_lambda(s)
    return complex(-4 / math.sqrt(-s.E1) * complete_K(Modulus.from_k(math.sqrt(lam))).real)


def period_integral_kink_oracle(s: KinkSpectrum) -> float:
    """−4∫₀¹ dt/√((1 − t²)(−E1 − Δt²)) with E = E1 + Δt², Δ = E2 − E1.

    The endpoint singularity at t = 1 is the QAWS weight.
    """
    delta = s.E2 - s.E1

    def integrand(t: float) -> float:
        return 1 / math.sqrt((1 + t) * (-s.E1 - delta * t * t))

    return -4 * adaptive_quad(integrand, 0.0, 1.0, weight="alg", wvar=(0.0, -0.5))


def _breather_h(s: BreatherSpectrum) -> Tuple[complex, complex, complex]:
    """k₃ = i·cot(φ/2), h = 1/k′₃ and h′ = cos(φ/2)."""
    half = 0.5 * s.phi
    k3 = 1j * math.cos(half) / math.sin(half)
    return k3, 1 / cmath.sqrt(1 - k3 * k3), complex(math.cos(half))


def period_integral_breather(s: BreatherSpectrum) -> complex:
    """I(a) = (−4/√|E1|)·K(cos(φ/2))."""
    if not math.pi < s.phi < 2 * math.pi:
        raise DomainError(f"Breather period integral needs φ in (π, 2π), got {s.phi}")
    _, _, h_prime = _breather_h(s)
    return complex(-4 / math.sqrt(abs(s.E1)) * complete_K(Modulus.from_k(h_prime.real)).real)


def period_integral_breather_oracle(s: BreatherSpectrum) -> float:
    """4·Re∫ dE/√(E(E − E1)(E − E2)) on the straight segment from 0 to E1.

    With E = x·E1 the integrand is −i/(√(x(1 − x))·√(xE1 − E2)); xE1 − E2
    stays in the upper half-plane, so the principal root is continuous and
    both endpoint singularities go into the QAWS weight.
    """
    E1, E2 = s.E1, s.E2

    def integrand(x: float) -> float:
        return (-1j / cmath.sqrt(x * E1 - E2)).real

    return 4 * adaptive_quad(integrand, 0.0, 1.0, weight="alg", wvar=(-0.5, -0.5))


def period_ratio_from_spectrum(s: Union[BreatherSpectrum, KinkSpectrum]) -> complex:
    """τ_k = iK′(k_k)/K(k_k) for kinks, τ₁ = ½ + iK(s′_b)/(2K(s_b)) for breathers."""
    if isinstance(s, KinkSpectrum):
        m = Modulus.from_k(math.sqrt(_kink_lambda(s)))
        return 1j * complete_K_prime(m).real / complete_K(m).real
    half = 0.5 * s.phi
    K_sb = complete_K(Modulus.from_k(math.cos(half))).real
    K_sbp = complete_K(Modulus.from_k(math.sin(half))).real
    return 0.5 + 1j * K_sbp / (2 * K_sb)


def period_integral_a(s: Union[BreatherSpectrum, KinkSpectrum]) -> complex:
    if isinstance(s, KinkSpectrum):
        return period_integral_kink(s)
    return period_integral_breather(s)


def period_integral_b(s: Union[BreatherSpectrum, KinkSpectrum]) -> complex:
    """I(b) = τ·I(a)."""
    return period_ratio_from_spectrum(s) * period_integral_a(s)


def period_checks(s: Union[BreatherSpectrum, KinkSpectrum]) -> List[CheckResult]:
    """Closed forms against quadrature, plus the intermediate moduli."""
    if isinstance(s, KinkSpectrum):
        closed = period_integral_kink(s).real
        oracle = period_integral_kink_oracle(s)
        lam = _kink_lambda(s)
        tag = f"periods.kink[eta={s.eta:g}]"
        return [
            CheckResult(name=f"{tag}.quadrature", residual=abs(closed - oracle) / abs(closed), tolerance=1e-7),
            CheckResult(
                name=f"{tag}.k_prime",
                residual=abs(math.sqrt(1 - lam) - math.exp(-s.eta)),
                tolerance=1e-14,
            ),
        ]

    closed = period_integral_breather(s).real
    oracle = period_integral_breather_oracle(s)
    k3, h, h_prime = _breather_h(s)
    root_lambda = cmath.exp(1j * s.phi)
    K_prime_h = complete_K_prime(Modulus.from_k(h)).real
    K_h_prime = complete_K(Modulus.from_k(h_prime)).real
    tag = f"periods.breather[phi={s.phi:.6g}]"
    return [
        CheckResult(
            name=f"{tag}.quadrature",
            residual=abs(closed - oracle) / abs(closed),
            tolerance=1e-6,
        ),
        CheckResult(
            name=f"{tag}.k3",
            residual=abs(k3 - (1 + root_lambda) / (1 - root_lambda)),
            tolerance=1e-12,
        ),
        CheckResult(name=f"{tag}.h", residual=abs(h - math.sin(0.5 * s.phi)), tolerance=1e-12),
        CheckResult(name=f"{tag}.K_prime_h", residual=_relative(K_prime_h, K_h_prime), tolerance=1e-9),
    ]


# Kink↔breather chain


def kink_breather_chain(phi: Optional[float] = None, eta: Optional[float] = None) -> ModularChain:
    """Build τ_b → τ₂ → τ₁ and the moduli s₂, s′₁, k₃ from φ, or from η via φ = π + iη."""
    if (phi is None) == (eta is None):
        raise DomainError("Pass exactly one of phi (breather) or eta (kink)")
    if eta is not None:
        if not eta > 0:
            raise DomainError(f"Kink gap η must be positive, got {eta}")
        angle = complex(math.pi, eta)
    else:
        if not math.pi < phi < 2 * math.pi:
            raise DomainError(f"Breather angle φ must lie in (π, 2π), got {phi}")
        angle = complex(phi)

    # cos and sin of φ/2 taken on their exact real or imaginary axis
    if eta is not None:
        s_b, s_b_prime = complex(0.0, -math.sinh(0.5 * eta)), complex(math.cosh(0.5 * eta))
    else:
        s_b, s_b_prime = complex(math.cos(0.5 * phi)), complex(math.sin(0.5 * phi))
    tau_b = 1j * complete_K(Modulus.from_k(s_b_prime)) / complete_K(Modulus.from_k(s_b))
    s_2 = 1j * s_b / s_b_prime
    root_lambda = cmath.exp(1j * angle)

    chain = ModularChain(
        phi=angle,
        tau_b=tau_b,
        tau_1=0.5 * (1 + tau_b),
        tau_2=1 + tau_b,
        tau_3=tau_b + 1,
        tau_k=0.5 * (tau_b + 1),
        s_b=s_b,
        s_b_prime=s_b_prime,
        s_2=s_2,
        s_2_prime=1 / s_b_prime,
        s_1_prime=(1 - s_2) / (1 + s_2),
        k3=(1 + root_lambda) / (1 - root_lambda),
        h=s_b_prime,
        h_prime=s_b,
        lambda_b=root_lambda**2,
        lambda_k=1 - math.exp(-2 * eta) if eta is not None else None,
        k_k=1 / math.cosh(0.5 * eta) if eta is not None else None,
    )
    logger.debug("Built kink-breather chain", phi=str(angle), tau_b=str(tau_b))
    return chain


def chain_checks(chain: ModularChain) -> List[CheckResult]:
    """s′₁ = −e^{iφ}, k₃ = i·cot(φ/2), the chain lattices against their moduli and, on the kink side, both k_k routes.

    Lattice moduli come from theta constants at the chain's τ values. s₂ is
    fixed by its lattice only up to sign, which trades s′₁ for 1/s′₁, so s′₁
    is compared through s′₁ + 1/s′₁.
    """
    tol = 1e-10
    lattice_1 = modulus_from_tau(PeriodRatio(tau=chain.tau_1))
    lattice_2 = modulus_from_tau(PeriodRatio(tau=chain.tau_2))
    checks = [
        CheckResult(
            name="chain.s1_prime",
            residual=abs(chain.s_1_prime + cmath.exp(1j * chain.phi)),
            tolerance=tol,
        ),
        CheckResult(
            name="chain.k3",
            residual=abs(chain.k3 - 1j * cmath.cos(0.5 * chain.phi) / cmath.sin(0.5 * chain.phi)),
            tolerance=1e-12,
        ),
        CheckResult(
            name="chain.h_squared",
            residual=_relative(chain.h**2, 1 / (1 - chain.k3**2)),
            tolerance=1e-12,
        ),
        CheckResult(
            name="chain.tau_2",
            residual=abs(lattice_2.m - chain.s_2**2),
            tolerance=tol,
        ),
        CheckResult(
            name="chain.tau_1",
            residual=abs(lattice_2.k - (1 - lattice_1.k_prime) / (1 + lattice_1.k_prime)),
            tolerance=tol,
        ),
        CheckResult(
            name="chain.s1_prime_lattice",
            residual=abs(
                chain.s_1_prime + 1 / chain.s_1_prime - lattice_1.k_prime - 1 / lattice_1.k_prime
            ),
            tolerance=tol,
        ),
    ]
    if chain.k_k is None:
        H = 1 - math.cos(chain.phi.real)
        checks += [
            CheckResult(
                name="chain.breather_modulus",
                residual=abs(breather_modulus(H).k - chain.s_b_prime),
                tolerance=tol,
            ),
            # the direct breather lattice is the S-dual of τ_b
            CheckResult(
                name="chain.tau_b",
                residual=_relative(chain.tau_b, -1 / tau_from_modulus(breather_modulus(H)).tau),
                tolerance=tol,
            ),
        ]
        return checks

    eta = chain.phi.imag
    H = 1 + math.cosh(eta)
    tau_spectrum = period_ratio_from_spectrum(KinkSpectrum(eta=eta))
    checks += [
        CheckResult(
            name="chain.s1_prime_kink",
            residual=abs(chain.s_1_prime - math.exp(-eta)),
            tolerance=tol,
        ),
        CheckResult(
            name="chain.kink_modulus",
            residual=abs(kink_modulus(H).k - chain.k_k),
            tolerance=1e-14,
        ),
        CheckResult(
            name="chain.reciprocal_modulus",
            residual=abs(1 / chain.s_b_prime - chain.k_k),
            tolerance=1e-14,
        ),
        CheckResult(
            name="chain.tau_k",
            residual=_relative(chain.tau_k, tau_spectrum),
            tolerance=tol,
        ),
        CheckResult(
            name="chain.tau_3",
            residual=_relative(chain.tau_3, 2 * tau_spectrum),
            tolerance=tol,
        ),
    ]
    return checks
