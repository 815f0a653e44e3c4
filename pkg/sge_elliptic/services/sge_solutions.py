"""N=1 sine-Gordon solutions: pendulum breathers and kinks, separatrix, theta form, trains.

Every solution is q = 2i·ln w for an argument w. Single points return the
principal branch of that logarithm; the grid evaluators unwrap the phase of
w so that q is continuous in t.
"""

import cmath
import math
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from scipy import optimize

from sge_elliptic.config import settings
from sge_elliptic.exceptions import (
    BranchInconsistent,
    BranchJump,
    DomainError,
    EnergyRange,
    PhaseJump,
    SuperluminalVelocity,
)
from sge_elliptic.models import (
    BreatherSpectrum,
    FieldSample,
    GridSpec,
    JefPoint,
    KinkSpectrum,
    Modulus,
    SolutionKind,
    SolutionParams,
    TrainKind,
    TrainParams,
)
from sge_elliptic.profiling import profile_time
from sge_elliptic.services import jacobi_fn
from sge_elliptic.services.elliptic_core import unwrap_phase
from sge_elliptic.services.theta_fn import theta, theta_ratio_product

logger = logger.bind(name=__name__)

SEPARATRIX_ENERGY = 2.0

Evaluator = Callable[[float], float]


def q_from_argument(w: complex) -> complex:
    """Principal branch of q = 2i·ln w."""
    if w == 0:
        raise BranchJump("q = 2i·ln w is singular at w = 0")
    return 2j * cmath.log(w)


def breather_modulus(H: float) -> Modulus:
    """k_b = √(H/2) for 0 < H ≤ 2."""
    if not H > 0:
        raise EnergyRange(f"Energy must be positive, got H = {H}")
    if H > SEPARATRIX_ENERGY:
        raise EnergyRange(f"breather requires H ≤ 2, got H = {H}")
    return Modulus.from_k(math.sqrt(H / 2))


def kink_modulus(H: float) -> Modulus:
    """k_k = √(2/H) for H ≥ 2."""
    if not H >= SEPARATRIX_ENERGY:
        raise EnergyRange(f"kink requires H ≥ 2, got H = {H}")
    return Modulus.from_k(math.sqrt(2 / H))


def breather_argument(t: float, H: float, t0: float = 0.0) -> complex:
    """w = dn(t − t0; k_b) − i·k_b·sn(t − t0; k_b)."""
    m = breather_modulus(H)
    p = JefPoint(u=t - t0, m=m)
    return jacobi_fn.dn(p) - 1j * m.k * jacobi_fn.sn(p)


def breather_direct_forms(t: float, H: float, t0: float = 0.0) -> Tuple[float, complex]:
    """Arcsine form 2·asin[k_b·sn(t − t0)] and log form 2i·ln w of the breather."""
    m = breather_modulus(H)
    s = jacobi_fn.sn(JefPoint(u=t - t0, m=m)).real
    arcsine = 2 * math.asin(max(-1.0, min(1.0, m.k.real * s)))
    return arcsine, q_from_argument(breather_argument(t, H, t0))


def breather_direct(t: float, H: float, t0: float = 0.0) -> float:
    """Pendulum breather q(t), 0 < H ≤ 2, period 4K(k_b)."""
    return breather_direct_forms(t, H, t0)[0]


def kink_argument(t: float, H: float, t0: float = 0.0) -> complex:
    """w = cn(u; k_k) − i·sn(u; k_k) with u = (t − t0)/k_k."""
    m = kink_modulus(H)
    p = JefPoint(u=(t - t0) / m.k.real, m=m)
    return jacobi_fn.cn(p) - 1j * jacobi_fn.sn(p)


def kink_direct_forms(t: float, H: float, t0: float = 0.0) -> Tuple[float, complex]:
    """Arcsine form 2·asin[sn(u; k_k)] and log form 2i·ln w of the kink.

    The arcsine form follows the rotation only while cn(u) ≥ 0.
    """
    m = kink_modulus(H)
    s = jacobi_fn.sn(JefPoint(u=(t - t0) / m.k.real, m=m)).real
    arcsine = 2 * math.asin(max(-1.0, min(1.0, s)))
    return arcsine, q_from_argument(kink_argument(t, H, t0))


def kink_direct(t: float, H: float, t0: float = 0.0) -> float:
    """Rotating-pendulum kink q(t), H ≥ 2, principal branch of the log form."""
    return kink_direct_forms(t, H, t0)[1].real


def _grid_sample(t: np.ndarray, w: np.ndarray) -> FieldSample:
    try:
        phase = unwrap_phase(w)
    except PhaseJump as e:
        raise BranchJump(e.message) from e
    # q = 2i·ln w = −2·arg w for |w| = 1
    return FieldSample(t=t, q=-2.0 * phase, w=w)


@profile_time
def breather_direct_grid(grid: GridSpec, H: float, t0: float = 0.0) -> FieldSample:
    """Breather on a grid with branch-continuous q."""
    t = grid.points()
    w = np.array([breather_argument(float(x), H, t0) for x in t])
    return _grid_sample(t, w)


@profile_time
def kink_direct_grid(grid: GridSpec, H: float, t0: float = 0.0) -> FieldSample:
    """Kink on a grid; q advances by 2π every 2k_k·K(k_k)."""
    t = grid.points()
    w = np.array([kink_argument(float(x), H, t0) for x in t])
    return _grid_sample(t, w)


def separatrix_phase(x: float, t: float, x0: float, v: float) -> float:
    """φ = (x − x0 − vt)/√(1 − v²)."""
    if abs(v) >= 1:
        raise SuperluminalVelocity(f"Separatrix velocity must satisfy |v| < 1, got {v}")
    return (x - x0 - v * t) / math.sqrt(1 - v * v)


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 (kink) or −1 (antikink), got {sign}")


def _kink_angle(s: float) -> float:
    """4·atan(e^s), through e^{−|s|} so that large |s| saturates."""
    if s > 0:
        return 2 * math.pi - 4 * math.atan(math.exp(-s))
    return 4 * math.atan(math.exp(s))


def separatrix(x: float, t: float, x0: float = 0.0, v: float = 0.0, sign: int = 1) -> float:
    """Traveling kink (sign +1) or antikink (sign −1): 4·atan(e^{±φ})."""
    _check_sign(sign)
    return _kink_angle(sign * separatrix_phase(x, t, x0, v))


def separatrix_argument(x: float, t: float, x0: float = 0.0, v: float = 0.0, sign: int = 1) -> complex:
    """w = (1 − i·e^{±φ})/(1 + i·e^{±φ}), so that 2i·ln w = 4·atan(e^{±φ})."""
    _check_sign(sign)
    s = sign * separatrix_phase(x, t, x0, v)
    if s > 0:
        r = math.exp(-s)
        return (r - 1j) / (r + 1j)
    y = math.exp(s)
    return (1 - 1j * y) / (1 + 1j * y)


def separatrix_log(x: float, t: float, x0: float = 0.0, v: float = 0.0, sign: int = 1) -> float:
    """Log form of the separatrix."""
    return q_from_argument(separatrix_argument(x, t, x0, v, sign)).real


@profile_time
def separatrix_grid(
    grid: GridSpec, x: float = 0.0, x0: float = 0.0, v: float = 0.0, sign: int = 1
) -> FieldSample:
    """Separatrix at fixed x over a t grid; q stays in [0, 2π]."""
    t = grid.points()
    q = np.array([separatrix(x, float(s), x0, v, sign) for s in t])
    w = np.array([separatrix_argument(x, float(s), x0, v, sign) for s in t])
    return FieldSample(t=t, q=q, w=w)


def separatrix_profile(t: float, t0: float = 0.0) -> float:
    """H = 2 pendulum limit 2·asin[tanh(t − t0)] shared by breather and kink."""
    return 2 * math.asin(math.tanh(t - t0))


def theta_rep_argument(t: float, params: SolutionParams) -> complex:
    """θ4(l; B)/θ3(l; B) on the line l = Re(l) + i·a·t, checked against √k′·nd(2Kl; k)."""
    if params.kind not in (SolutionKind.THETA_REP_BREATHER, SolutionKind.THETA_REP_KINK):
        raise DomainError(f"theta_rep needs a theta kind, got {params.kind}")
    B = params.B
    l = params.l_re + 1j * params.a * t
    ratio = theta(4, l, B) / theta(3, l, B)

    qp = jacobi_fn.lattice_quarter_periods(params.modulus, tau=B)
    root = params.sqrt_k_prime
    if root is None:
        root = theta(4, 0.0, B) / theta(3, 0.0, B)
    via_nd = root * jacobi_fn.nd(JefPoint(u=2 * qp.K * l, m=params.modulus), tau=B)

    mismatch = abs(ratio - via_nd)
    if mismatch > settings.VERIFY_TOL_IDENTITY * max(1.0, abs(ratio)):
        raise BranchInconsistent(
            f"θ4/θ3 = {ratio} but √k′·nd = {via_nd} at t = {t}; check the √k′ branch"
        )
    return ratio


def theta_rep(t: float, params: SolutionParams) -> float:
    """Theta-representation q(t) on the principal branch."""
    return q_from_argument(theta_rep_argument(t, params)).real


@profile_time
def theta_rep_grid(grid: GridSpec, params: SolutionParams) -> FieldSample:
    """Theta-representation solution with branch-continuous q."""
    t = grid.points()
    w = np.array([theta_rep_argument(float(x), params) for x in t])
    return _grid_sample(t, w)


def energy_from_spectrum(s: Union[BreatherSpectrum, KinkSpectrum]) -> float:
    """H = 1 − 8(E1 + E2): 1 − cos φ for breathers, 1 + cosh η for kinks."""
    return float((1 - 8 * (s.E1 + s.E2)).real)


def spectrum_from_energy(H: float) -> Union[BreatherSpectrum, KinkSpectrum]:
    """Inverse energy map; H = 2 belongs to the breather side with φ = π."""
    if not H > 0:
        raise EnergyRange(f"Energy must be positive, got H = {H}")
    if H <= SEPARATRIX_ENERGY:
        # arccos lands in [0, π]; reflect into [π, 2π]
        return BreatherSpectrum(phi=2 * math.pi - math.acos(max(-1.0, 1 - H)))
    return KinkSpectrum(eta=math.acosh(H - 1))


def _fold_to(value: float, centre: float) -> float:
    """Shift value by a multiple of 2π onto the branch of centre."""
    return value - 2 * math.pi * round((value - centre) / (2 * math.pi))


def sge_residual(evaluator: Evaluator, t_grid: Sequence[float], h: float = 1e-4) -> float:
    """max |(q(t+h) − 2q(t) + q(t−h))/h² + sin q(t)| over the interior of t_grid.

    Neighbours are taken on the centre's branch, so principal-branch
    evaluators can be passed directly.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.size < 5:
        raise DomainError("sge_residual needs at least three interior points")
    worst = 0.0
    for t in t_grid[1:-1]:
        centre = evaluator(float(t))
        plus = _fold_to(evaluator(float(t) + h), centre)
        minus = _fold_to(evaluator(float(t) - h), centre)
        worst = max(worst, abs((plus - 2 * centre + minus) / (h * h) + math.sin(centre)))
    return worst


def energy_conservation(
    evaluator: Evaluator, t_grid: Sequence[float], H: float, h: float = 1e-4
) -> float:
    """max |½q_t² − cos q − (H − 1)| with q_t by central differences."""
    worst = 0.0
    for t in np.asarray(t_grid, dtype=float):
        centre = evaluator(float(t))
        plus = _fold_to(evaluator(float(t) + h), centre)
        minus = _fold_to(evaluator(float(t) - h), centre)
        q_t = (plus - minus) / (2 * h)
        worst = max(worst, abs(0.5 * q_t * q_t - math.cos(centre) - (H - 1)))
    return worst


def train_period(B: complex, kappa: float) -> float:
    """Spatial period L = 2π·Im B/κ."""
    return 2 * math.pi * complex(B).imag / kappa


def _kink_phase(x: float, t: float, params: TrainParams, shift: float) -> float:
    """α = κ(x − x0 − shift) + w·t."""
    return params.kappa * (x - params.x0 - shift) + params.w * t


def _sgn(n: int) -> int:
    """+1 for n > 0 and −1 for n ≤ 0."""
    return 1 if n > 0 else -1


def kink_train(x: float, t: float, params: TrainParams) -> float:
    """Σ_{|n| ≤ n_max} {q_K(x − x0 − nL) + π(sgn(n) − 1)}."""
    if params.kind != TrainKind.KINK:
        raise DomainError("kink_train needs a kink train (Re B = 0)")
    total = 0.0
    for n in range(-params.n_max, params.n_max + 1):
        total += _kink_angle(_kink_phase(x, t, params, n * params.L)) + math.pi * (_sgn(n) - 1)
    return total


def breather_train(x: float, t: float, params: TrainParams) -> float:
    """Σ_{|n| ≤ n_max} {q_K(x − x0 − 2nL) + q_AK(x − x0 − (2n − 1)L) + 2π(sgn(n) − 1)}.

    q_AK = 4·atan(e^{−α}). Far pairs add +2π for n > 0 and −2π for n ≤ 0,
    so the truncated sum sits 2π below the pairing q_K + q_AK − 2π.
    """
    if params.kind != TrainKind.BREATHER:
        raise DomainError("breather_train needs a breather train (Re B = ½)")
    total = 0.0
    for n in range(-params.n_max, params.n_max + 1):
        kink = _kink_angle(_kink_phase(x, t, params, 2 * n * params.L))
        antikink = 2 * math.pi - _kink_angle(_kink_phase(x, t, params, (2 * n - 1) * params.L))
        total += kink + antikink + 2 * math.pi * (_sgn(n) - 1)
    return total


def _train_line(x: float, t: float, params: TrainParams, B: complex) -> complex:
    """l = −¼ − B/2 + iα₀/2π.

    On this line θ4/θ3 factors into g(α_n) for n ≥ 1 and −g(α_n) for n ≤ 0,
    g(α) = (1 − ie^α)/(1 + ie^α) and α_n = α₀ + 2πinB.
    """
    alpha0 = _kink_phase(x, t, params, 0.0)
    return -0.25 - 0.5 * B + 1j * alpha0 / (2 * math.pi)


def train_theta_argument(
    x: float, t: float, params: TrainParams, n_terms: int = 0, B: Optional[complex] = None
) -> complex:
    """θ4(l; B)/θ3(l; B) on the train line; n_terms > 0 uses the truncated product."""
    B = params.B if B is None else complex(B)
    l = _train_line(x, t, params, B)
    if n_terms > 0:
        return theta_ratio_product(l, B, n_terms)
    return theta(4, l, B) / theta(3, l, B)


def kink_train_theta(x: float, t: float, params: TrainParams, n_terms: int = 0) -> float:
    """Theta side of the kink train on the principal branch."""
    if params.kind != TrainKind.KINK:
        raise DomainError("kink_train_theta needs a kink train")
    return q_from_argument(train_theta_argument(x, t, params, n_terms)).real


def breather_train_theta(x: float, t: float, params: TrainParams, n_terms: int = 0) -> float:
    """Theta side of the breather train on the principal branch."""
    if params.kind != TrainKind.BREATHER:
        raise DomainError("breather_train_theta needs a breather train")
    return q_from_argument(train_theta_argument(x, t, params, n_terms)).real


# Offset of the theta-side q against the truncated sum, modulo 4π
TRAIN_THETA_OFFSET = {TrainKind.KINK: 0.0, TrainKind.BREATHER: 2 * math.pi}


def _train_sum(x: float, t: float, params: TrainParams) -> float:
    if params.kind == TrainKind.KINK:
        return kink_train(x, t, params)
    return breather_train(x, t, params)


def train_sum_argument(x: float, t: float, params: TrainParams) -> complex:
    """exp(−i(q + offset)/2) for the truncated sum q; equals θ4/θ3 on the train line."""
    q = _train_sum(x, t, params) + TRAIN_THETA_OFFSET[params.kind]
    return cmath.exp(-0.5j * q)


def train_residual(
    params: TrainParams, samples: Sequence[Tuple[float, float]], B: Optional[complex] = None
) -> float:
    """max |θ4/θ3 − exp(−i(q + offset)/2)| over (x, t) samples, q from the truncated sum.

    Comparing arguments of the logarithm removes the 4π ambiguity of q.
    """
    worst = 0.0
    for x, t in samples:
        theta_side = train_theta_argument(x, t, params, B=B)
        worst = max(worst, abs(theta_side - train_sum_argument(x, t, params)))
    return worst


def train_offset_residual(params: TrainParams, samples: Sequence[Tuple[float, float]]) -> float:
    """max distance of q_theta − q_sum − offset to 4πZ, q_theta on the principal branch."""
    theta_q = kink_train_theta if params.kind == TrainKind.KINK else breather_train_theta
    worst = 0.0
    for x, t in samples:
        d = theta_q(x, t, params) - _train_sum(x, t, params) - TRAIN_THETA_OFFSET[params.kind]
        worst = max(worst, abs(d - 4 * math.pi * round(d / (4 * math.pi))))
    return worst


def fit_train_period(
    params: TrainParams, samples: Sequence[Tuple[float, float]]
) -> Tuple[float, float]:
    """Fit the sum-side period L against the theta side at fixed B.

    Returns (L_fit, residual). L_fit should reproduce 2π·Im B/κ.
    """
    if not samples:
        raise DomainError("fit_train_period needs at least one (x, t) sample")
    B = params.B

    def objective(L: float) -> float:
        trial = params.model_copy(update={"L": L})
        return sum(
            abs(train_theta_argument(x, t, params, B=B) - train_sum_argument(x, t, trial)) ** 2
            for x, t in samples
        )

    result = optimize.minimize_scalar(
        objective,
        bounds=(0.8 * params.L, 1.25 * params.L),
        method="bounded",
        options={"xatol": 1e-10},
    )
    L_fit = float(result.x)
    residual = train_residual(params.model_copy(update={"L": L_fit}), samples, B=B)
    logger.info(
        "Fitted train period",
        kind=str(params.kind),
        L_defined=train_period(B, params.kappa),
        L_fit=L_fit,
        residual=residual,
    )
    return L_fit, residual
