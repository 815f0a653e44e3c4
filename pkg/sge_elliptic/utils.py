"""Utility functions for CLI output: spinner, number formatting and writers."""

import csv
import io
import sys
from contextlib import contextmanager, nullcontext
from pathlib import Path
from typing import Iterable, List, Optional

from halo import Halo
from loguru import logger

from sge_elliptic.config import settings
from sge_elliptic.models import CheckResult, FieldSample

logger = logger.bind(name=__name__)

CSV_HEADER = ("t", "q", "re_w", "im_w")


@contextmanager
def spinner(text: str):
    """Halo spinner on stderr, only when stderr is a terminal."""
    show = settings.SHOW_SPINNER and sys.stderr.isatty()
    context = Halo(text=text, spinner="dots", stream=sys.stderr) if show else nullcontext()
    with context:
        yield


def _no_negative_zero(x: float) -> float:
    return x + 0.0


def format_csv_number(x: float) -> str:
    return f"{_no_negative_zero(x):.{settings.CSV_DIGITS}g}"


def format_value(x) -> str:
    """Report formatting: REPORT_DIGITS significant digits, a+bj for complex values."""
    digits = settings.REPORT_DIGITS
    if isinstance(x, complex):
        if x.imag == 0:
            return f"{_no_negative_zero(x.real):.{digits}g}"
        sign = "+" if x.imag >= 0 else "-"
        return f"{_no_negative_zero(x.real):.{digits}g}{sign}{abs(x.imag):.{digits}g}j"
    if isinstance(x, float):
        return f"{_no_negative_zero(x):.{digits}g}"
    return str(x)


def render_csv(sample: FieldSample) -> str:
    """CSV with header t,q,re_w,im_w and LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in sample.rows():
        writer.writerow([format_csv_number(v) for v in row])
    return buffer.getvalue()


def render_checks(checks: Iterable[CheckResult]) -> str:
    """One line per check: name, residual, tolerance, PASS/FAIL."""
    checks = list(checks)
    width = max((len(c.name) for c in checks), default=0)
    lines = [
        f"{c.name:<{width}}  {c.residual:.3e}  {c.tolerance:.1e}  {c.status}" for c in checks
    ]
    return "\n".join(lines) + "\n" if lines else ""


def render_table(rows: List[tuple]) -> str:
    """`name = value` lines."""
    width = max((len(name) for name, _ in rows), default=0)
    return "".join(f"{name:<{width}} = {format_value(value)}\n" for name, value in rows)


def emit(text: str, out: Optional[str] = None) -> None:
    """Write to the --out file, or to stdout."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info("Wrote output", path=str(path), size=len(text))
        return
    sys.stdout.write(text)
    sys.stdout.flush()
