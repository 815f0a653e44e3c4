"""`spectrum`: branch points, modulus, period integrals and τ for one energy."""

import math

from loguru import logger

from sge_elliptic.exceptions import DomainError
from sge_elliptic.models import BreatherSpectrum, KinkSpectrum, Modulus, RunConfig
from sge_elliptic.services import bridge_verify
from sge_elliptic.services.elliptic_core import complete_K
from sge_elliptic.services.sge_solutions import energy_from_spectrum, spectrum_from_energy
from sge_elliptic.utils import emit, render_table

logger = logger.bind(name=__name__)


def _spectrum(config: RunConfig):
    given = [v is not None for v in (config.H, config.phi, config.eta)]
    if sum(given) != 1:
        raise DomainError("spectrum needs exactly one of --H, --phi or --eta")
    if config.phi is not None:
        return BreatherSpectrum(phi=config.phi)
    if config.eta is not None:
        return KinkSpectrum(eta=config.eta)
    return spectrum_from_energy(config.H)


def cmd_spectrum(config: RunConfig) -> int:
    """Print regime, H, E1, E2, the direct modulus with its K, I(a), I(b) and τ."""
    s = _spectrum(config)
    H = energy_from_spectrum(s)
    if isinstance(s, KinkSpectrum):
        regime, k = "kink", math.sqrt(2 / H)
    else:
        regime, k = "breather", math.sqrt(H / 2)

    rows = [
        ("regime", regime),
        ("H", H),
        ("E1", s.E1),
        ("E2", s.E2),
        ("k", k),
        ("K", complete_K(Modulus.from_k(k))),
        ("I_a", bridge_verify.period_integral_a(s)),
        ("I_b", bridge_verify.period_integral_b(s)),
        ("tau", bridge_verify.period_ratio_from_spectrum(s)),
    ]
    emit(render_table(rows), config.out)
    logger.info("Spectrum computed", regime=regime, H=H)
    return 0
