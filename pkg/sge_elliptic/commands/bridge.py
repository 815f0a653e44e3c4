"""`bridge`: print the direct↔theta parameter bridge for one energy."""

from loguru import logger

from sge_elliptic.exceptions import DomainError
from sge_elliptic.models import RunConfig
from sge_elliptic.services import bridge_verify
from sge_elliptic.services.sge_solutions import SEPARATRIX_ENERGY, breather_modulus, kink_modulus
from sge_elliptic.utils import emit, render_checks, render_table

logger = logger.bind(name=__name__)


def cmd_bridge(config: RunConfig) -> int:
    """Breather bridge for H < 2, kink bridge for H > 2; H = 2 has none."""
    if config.H is None:
        raise DomainError("bridge needs --H")
    H = config.H
    if H < SEPARATRIX_ENERGY:
        bridge = bridge_verify.breather_bridge(breather_modulus(H))
        checks = bridge_verify.breather_bridge_checks(bridge)
        regime = "breather"
        # k_b and k′₁ differ; the lattice identifications are in the checks
        extra = [("k_b_minus_k1_prime", bridge_verify.printed_identification_residual(bridge))]
    else:
        bridge = bridge_verify.kink_bridge(kink_modulus(H))
        checks = bridge_verify.kink_bridge_checks(bridge)
        regime = "kink"
        extra = []

    rows = [("regime", regime), ("H", H)] + list(bridge.model_dump().items()) + extra
    emit(render_table(rows) + render_checks(checks), config.out)
    logger.info("Bridge computed", regime=regime, H=H)
    return 0 if all(c.passed for c in checks) else 1
