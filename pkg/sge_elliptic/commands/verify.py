"""`verify`: residual suites over transforms, bridges, periods, trains and the SGE itself."""

import math
from typing import Callable, Dict, List

import numpy as np
from loguru import logger

from sge_elliptic.config import settings
from sge_elliptic.exceptions import SgeEllipticException
from sge_elliptic.models import (
    BreatherSpectrum,
    CheckResult,
    GridSpec,
    KinkSpectrum,
    Modulus,
    PeriodRatio,
    RunConfig,
    TrainKind,
    TrainParams,
    VerifySuite,
)
from sge_elliptic.profiling import profile_performance
from sge_elliptic.services import bridge_verify, sge_solutions, transforms
from sge_elliptic.services.elliptic_core import modulus_from_tau
from sge_elliptic.utils import emit, render_checks, spinner

logger = logger.bind(name=__name__)

DEFAULT_GRID = GridSpec(t_min=-3.0, t_max=3.0, step=0.1)
RESIDUAL_GRID = GridSpec(t_min=-5.0, t_max=5.0, step=0.25)
BREATHER_ENERGIES = (0.2, 1.0, 1.8)
KINK_ENERGIES = (2.5, 4.0, 10.0)
KINK_GAPS = (0.5, 1.0, 2.0)
BREATHER_ANGLES = (1.1 * math.pi, 1.5 * math.pi, 1.9 * math.pi)


def _rng() -> np.random.Generator:
    return np.random.default_rng(settings.VERIFY_SEED)


def _guarded(name: str, tolerance: float, build: Callable[[], List[CheckResult]]) -> List[CheckResult]:
    """Run one group of checks; a domain error becomes a single FAIL line."""
    try:
        return build()
    except SgeEllipticException as e:
        logger.warning("Check raised", check=name, error_code=e.error_code, error=e.message)
        return [CheckResult(name=f"{name}.{e.error_code.lower()}", residual=math.inf, tolerance=tolerance)]


def _tagged(checks: List[CheckResult], tag: str) -> List[CheckResult]:
    return [c.model_copy(update={"name": f"{c.name}[{tag}]"}) for c in checks]


def _energies(config: RunConfig, defaults: tuple) -> tuple:
    return (config.H,) if config.H is not None else defaults


def suite_landen(config: RunConfig) -> List[CheckResult]:
    """Gauss–Landen nd identity at seeded complex u, |Re u| ≤ 2, |Im u| ≤ 0.5."""
    tol = settings.VERIFY_TOL_IDENTITY
    rng = _rng()

    def build() -> List[CheckResult]:
        worst = 0.0
        for _ in range(settings.VERIFY_IDENTITY_SAMPLES):
            k = config.k if config.k is not None else rng.uniform(0.05, 0.95)
            u = complex(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5))
            worst = max(worst, transforms.landen_gauss_identity(u, Modulus.from_k(k)))
        return [CheckResult(name="landen.gauss_nd", residual=worst, tolerance=tol)]

    return _guarded("landen", tol, build)


def suite_modular_cases(config: RunConfig) -> List[CheckResult]:
    """Complementarity, theta-null consistency and the two compositions for all six cases."""
    tol = settings.VERIFY_TOL_IDENTITY
    rng = _rng()
    taus = [
        complex(rng.uniform(-0.5, 0.5), rng.uniform(0.6, 1.5)) for _ in range(settings.VERIFY_SAMPLES)
    ]

    def build() -> List[CheckResult]:
        checks = []
        for case_id in sorted(transforms.MODULAR_CASES):
            complement = consistency = 0.0
            for tau in taus:
                period = PeriodRatio(tau=tau)
                m = modulus_from_tau(period)
                _, m_new = transforms.apply_modular_case(case_id, period, m)
                complement = max(complement, abs(m_new.k**2 + m_new.k_prime**2 - 1))
                consistency = max(consistency, transforms.case_consistency(case_id, period, m))
            checks.append(CheckResult(name=f"modular.case{case_id}.complement", residual=complement, tolerance=1e-12))
            checks.append(CheckResult(name=f"modular.case{case_id}.theta_nulls", residual=consistency, tolerance=tol))

        for first, target in ((2, 5), (3, 6)):
            composed = transforms.compose_cases(first, 4)
            direct = transforms.modular_case(target).matrix
            worst = max(abs(composed.apply(t) - direct.apply(t)) for t in taus)
            checks.append(
                CheckResult(name=f"modular.case{target}_is_case4_after_case{first}", residual=worst, tolerance=1e-12)
            )
        return checks

    return _guarded("modular", tol, build)


def suite_reciprocal(config: RunConfig) -> List[CheckResult]:
    """sn/cn reciprocal-modulus identities and K(1/k) = k(K + iK′)."""
    tol = settings.VERIFY_TOL_IDENTITY
    rng = _rng()

    def build() -> List[CheckResult]:
        sn_worst = cn_worst = k_worst = 0.0
        for _ in range(settings.VERIFY_IDENTITY_SAMPLES):
            k_b = config.k if config.k is not None else rng.uniform(0.05, 0.95)
            t = rng.uniform(-4, 4)
            m_b = Modulus.from_k(k_b)
            res_sn, res_cn = transforms.reciprocal_modulus_identities(t, m_b)
            sn_worst, cn_worst = max(sn_worst, res_sn), max(cn_worst, res_cn)
            k_worst = max(k_worst, transforms.reciprocal_K_identity(m_b))
        return [
            CheckResult(name="reciprocal.sn", residual=sn_worst, tolerance=tol),
            CheckResult(name="reciprocal.cn", residual=cn_worst, tolerance=tol),
            CheckResult(name="reciprocal.K", residual=k_worst, tolerance=tol),
        ]

    return _guarded("reciprocal", tol, build)


def suite_bridge_breather(config: RunConfig) -> List[CheckResult]:
    """Breather bridge relations over k_b and end-to-end equivalence over H."""
    grid = config.grid or DEFAULT_GRID
    moduli = [config.k] if config.k is not None else np.linspace(0.05, 0.95, settings.VERIFY_SAMPLES)
    checks = []
    for k_b in moduli:
        tag = f"k_b={k_b:.4g}"
        checks += _guarded(
            f"breather[{tag}]",
            settings.VERIFY_TOL_IDENTITY,
            lambda k_b=k_b, tag=tag: _tagged(
                bridge_verify.breather_bridge_checks(bridge_verify.breather_bridge(Modulus.from_k(k_b))), tag
            ),
        )
    tol = settings.VERIFY_TOL_EQUIVALENCE
    for H in _energies(config, BREATHER_ENERGIES):
        checks += _guarded(
            f"breather.equivalence[H={H:g}]",
            tol,
            lambda H=H: [
                CheckResult(
                    name=f"breather.equivalence[H={H:g}]",
                    residual=bridge_verify.verify_equivalence_breather(H, grid.points()),
                    tolerance=tol,
                )
            ],
        )
    return checks


def suite_bridge_kink(config: RunConfig) -> List[CheckResult]:
    """Kink bridge relations over k_k, coefficient relations and equivalence over H."""
    grid = config.grid or DEFAULT_GRID
    tol = settings.VERIFY_TOL_IDENTITY
    moduli = [config.k] if config.k is not None else np.linspace(0.1, 0.99, settings.VERIFY_SAMPLES)
    checks = []
    for k_k in moduli:
        tag = f"k_k={k_k:.4g}"
        checks += _guarded(
            f"kink[{tag}]",
            tol,
            lambda k_k=k_k, tag=tag: _tagged(
                bridge_verify.kink_bridge_checks(bridge_verify.kink_bridge(Modulus.from_k(k_k))), tag
            ),
        )
    for H in _energies(config, KINK_ENERGIES):
        checks += _guarded(
            f"kink.equivalence[H={H:g}]",
            settings.VERIFY_TOL_EQUIVALENCE,
            lambda H=H: _tagged(bridge_verify.kink_equivalence_checks(H, grid.points()), f"H={H:g}"),
        )
    return checks


def suite_periods(config: RunConfig) -> List[CheckResult]:
    """Closed-form period integrals against quadrature, and the kink↔breather chain."""
    checks = []
    for eta in KINK_GAPS:
        checks += _guarded("periods.kink", 1e-7, lambda eta=eta: bridge_verify.period_checks(KinkSpectrum(eta=eta)))
    for phi in BREATHER_ANGLES:
        checks += _guarded(
            "periods.breather", 1e-6, lambda phi=phi: bridge_verify.period_checks(BreatherSpectrum(phi=phi))
        )
    checks += _guarded(
        "chain.breather",
        1e-10,
        lambda: _tagged(bridge_verify.chain_checks(bridge_verify.kink_breather_chain(phi=1.5 * math.pi)), "phi=1.5pi"),
    )
    checks += _guarded(
        "chain.kink",
        1e-10,
        lambda: _tagged(bridge_verify.chain_checks(bridge_verify.kink_breather_chain(eta=1.0)), "eta=1"),
    )
    return checks


def _train_samples(L: float) -> List[tuple]:
    rng = _rng()
    return [(rng.uniform(-0.5 * L, 0.5 * L), rng.uniform(-2, 2)) for _ in range(10)]


def suite_trains(config: RunConfig) -> List[CheckResult]:
    """Theta product against truncated sums, the 2π kink shift and zero breather winding."""
    tol = settings.VERIFY_TOL_TRAIN
    v = config.v if config.v is not None else 0.3

    def build() -> List[CheckResult]:
        kink = TrainParams(kind=TrainKind.KINK, v=v, L=6.0, n_max=20)
        breather = TrainParams(kind=TrainKind.BREATHER, v=v, L=6.0, n_max=20)
        samples = _train_samples(kink.L)
        shift = max(
            abs(sge_solutions.kink_train(x + kink.L, t, kink) - sge_solutions.kink_train(x, t, kink) - 2 * math.pi)
            for x, t in samples
        )
        winding = max(
            abs(
                sge_solutions.breather_train(x + 2 * breather.L, t, breather)
                - sge_solutions.breather_train(x, t, breather)
            )
            for x, t in samples
        )
        L_fit, _ = sge_solutions.fit_train_period(kink, samples)
        return [
            CheckResult(name="trains.kink.theta", residual=sge_solutions.train_residual(kink, samples), tolerance=tol),
            CheckResult(
                name="trains.breather.theta", residual=sge_solutions.train_residual(breather, samples), tolerance=tol
            ),
            CheckResult(
                name="trains.kink.offset", residual=sge_solutions.train_offset_residual(kink, samples), tolerance=tol
            ),
            CheckResult(
                name="trains.breather.offset",
                residual=sge_solutions.train_offset_residual(breather, samples),
                tolerance=tol,
            ),
            CheckResult(name="trains.kink.shift", residual=shift, tolerance=tol),
            CheckResult(name="trains.breather.winding", residual=winding, tolerance=tol),
            CheckResult(name="trains.kink.fit_period", residual=abs(L_fit - kink.L) / kink.L, tolerance=tol),
        ]

    return _guarded("trains", tol, build)


def suite_residual(config: RunConfig) -> List[CheckResult]:
    """Pendulum residual q_tt + sin q of the direct solutions, h = 1e-4."""
    t_grid = (config.grid or RESIDUAL_GRID).points()
    tol = 1e-6
    checks = []
    for H in _energies(config, BREATHER_ENERGIES + KINK_ENERGIES):
        evaluator = (
            (lambda t, H=H: sge_solutions.breather_direct(t, H))
            if H <= 2
            else (lambda t, H=H: sge_solutions.kink_direct(t, H))
        )
        checks += _guarded(
            f"residual[H={H:g}]",
            tol,
            lambda H=H, evaluator=evaluator: [
                CheckResult(
                    name=f"residual.sge[H={H:g}]",
                    residual=sge_solutions.sge_residual(evaluator, t_grid, h=1e-4),
                    tolerance=tol,
                ),
                CheckResult(
                    name=f"residual.energy[H={H:g}]",
                    residual=sge_solutions.energy_conservation(evaluator, t_grid, H, h=1e-4),
                    tolerance=tol,
                ),
            ],
        )
    return checks


SUITES: Dict[VerifySuite, Callable[[RunConfig], List[CheckResult]]] = {
    VerifySuite.LANDEN: suite_landen,
    VerifySuite.MODULAR_CASES: suite_modular_cases,
    VerifySuite.RECIPROCAL: suite_reciprocal,
    VerifySuite.BRIDGE_BREATHER: suite_bridge_breather,
    VerifySuite.BRIDGE_KINK: suite_bridge_kink,
    VerifySuite.PERIODS: suite_periods,
    VerifySuite.TRAINS: suite_trains,
    VerifySuite.RESIDUAL: suite_residual,
}


def run_suite(config: RunConfig) -> List[CheckResult]:
    """Checks of one suite, or of every suite in table order for `all`."""
    suite = config.suite or VerifySuite.ALL
    selected = list(SUITES) if suite == VerifySuite.ALL else [suite]
    checks = []
    for name in selected:
        with profile_performance(f"verify_{name}"), spinner(f"Verifying {name}"):
            checks += SUITES[name](config)
    if config.tol is not None:
        checks = [c.model_copy(update={"tolerance": config.tol}) for c in checks]
    return checks


def cmd_verify(config: RunConfig) -> int:
    """Print one line per check; exit status 1 if any check fails."""
    checks = run_suite(config)
    emit(render_checks(checks), config.out)
    failed = [c.name for c in checks if not c.passed]
    logger.info("Verification finished", suite=str(config.suite), checks=len(checks), failed=len(failed))
    return 1 if failed else 0
