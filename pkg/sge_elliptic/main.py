"""Command-line entry point for sge-elliptic."""

import argparse
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from sge_elliptic import __version__
from sge_elliptic.commands.bridge import cmd_bridge
from sge_elliptic.commands.evaluate import cmd_eval
from sge_elliptic.commands.spectrum import cmd_spectrum
from sge_elliptic.commands.verify import cmd_verify
from sge_elliptic.config import settings
from sge_elliptic.exceptions import SgeEllipticException
from sge_elliptic.logging_config import setup_logging
from sge_elliptic.models import CommandName, GridSpec, OutputFormat, RunConfig, SolutionKind, VerifySuite

logger = logger.bind(name=__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

# Short names accepted by --kind next to the enum values
KIND_ALIASES = {
    "breather": SolutionKind.BREATHER_DIRECT,
    "kink": SolutionKind.KINK_DIRECT,
    "separatrix": SolutionKind.SEPARATRIX,
    "theta-breather": SolutionKind.THETA_REP_BREATHER,
    "theta-kink": SolutionKind.THETA_REP_KINK,
    **{kind.value: kind for kind in SolutionKind},
}

COMMANDS = {
    CommandName.EVAL: cmd_eval,
    CommandName.VERIFY: cmd_verify,
    CommandName.BRIDGE: cmd_bridge,
    CommandName.SPECTRUM: cmd_spectrum,
}


def _sign(text: str) -> int:
    value = int(text)
    if value not in (1, -1):
        raise argparse.ArgumentTypeError("--sign must be 1 or -1")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Parser for `sge-elliptic <eval|verify|bridge|spectrum> [flags]`."""
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Elliptic-function solutions of the N=1 sine-Gordon equation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=[c.value for c in CommandName])
    parser.add_argument("--kind", choices=sorted(KIND_ALIASES), help="solution kind for eval")
    parser.add_argument("--H", type=float, help="pendulum energy H")
    parser.add_argument("--phi", type=float, help="breather spectral angle in [π, 2π]")
    parser.add_argument("--eta", type=float, help="kink spectral gap η > 0")
    parser.add_argument("--v", type=float, help="separatrix or train velocity, |v| < 1")
    parser.add_argument("--x", type=float, default=0.0, help="position for separatrix evaluation")
    parser.add_argument("--x0", type=float, default=0.0, help="separatrix offset")
    parser.add_argument("--sign", type=_sign, default=1, help="+1 kink, -1 antikink")
    parser.add_argument("--k", type=float, help="modulus for verify suites")
    parser.add_argument("--t", dest="grid", help="time grid min:max:step")
    parser.add_argument("--tol", type=float, help="override every check tolerance")
    parser.add_argument("--suite", choices=[s.value for s in VerifySuite], default=VerifySuite.ALL.value)
    parser.add_argument("--out", help="write output to this file instead of stdout")
    parser.add_argument(
        "--format", dest="output_format", choices=[f.value for f in OutputFormat], default=None
    )
    parser.add_argument("--log-level", help="override LOG_LEVEL")
    return parser


def _attach_grid(argv: List[str]) -> List[str]:
    """Rewrite `--t -5:5:0.1` as `--t=-5:5:0.1`; argparse reads a leading '-' as a flag."""
    joined = []
    tokens = iter(argv)
    for token in tokens:
        if token == "--t":
            value = next(tokens, None)
            joined.append(token if value is None else f"--t={value}")
        else:
            joined.append(token)
    return joined


def parse_config(args: argparse.Namespace) -> RunConfig:
    """Turn parsed flags into a validated RunConfig."""
    command = CommandName(args.command)
    output_format = args.output_format or (
        OutputFormat.CSV.value if command == CommandName.EVAL else OutputFormat.REPORT.value
    )
    return RunConfig(
        command=command,
        kind=KIND_ALIASES[args.kind] if args.kind else None,
        H=args.H,
        phi=args.phi,
        eta=args.eta,
        v=args.v,
        x=args.x,
        x0=args.x0,
        sign=args.sign,
        k=args.k,
        grid=GridSpec.parse(args.grid) if args.grid else None,
        tol=args.tol,
        suite=VerifySuite(args.suite),
        out=args.out,
        output_format=OutputFormat(output_format),
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status."""
    parser = build_parser()
    args = parser.parse_args(_attach_grid(sys.argv[1:] if argv is None else list(argv)))
    setup_logging(args.log_level)

    try:
        config = parse_config(args)
        logger.debug("Running command", command=str(config.command))
        return COMMANDS[config.command](config)
    except SgeEllipticException as e:
        logger.debug("Command failed", error_code=e.error_code, error=e.message)
        print(f"error [{e.error_code}]: {e.message}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"error [VALIDATION_ERROR]: {e}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    """Console-script wrapper."""
    sys.exit(main())


if __name__ == "__main__":
    run()
