"""
Choice of multiplication table.

The Cayley-Dickson table is the default. It is accepted when every listed
eigenpair of the built-in examples satisfies ``A v = v lambda`` under it;
otherwise the 2**7 orientations of its Fano lines are scanned.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .catalog import example1, example2, example3
from .eigen import residual_norm
from .errors import OctoEigenError
from .octonion import DEFAULT_TABLE, MultiplicationTable

logger = logging.getLogger(__name__)

# (p, q, theta) settings at which the listed eigenpairs are checked.
_EXAMPLE1_POINTS = ((0.0, 1.0, 0.0), (1.0, 2.0, math.pi / 5.0), (2.0, 3.0, 0.7))
_EXAMPLE23_POINTS = ((0.0, 1.0), (1.0, 2.0))


class NoConsistentTable(OctoEigenError):
    """No orientation of the Fano lines satisfies every listed eigenpair."""

    def __init__(self, tried: int):
        self.tried = tried
        super().__init__(f"none of {tried} orientation assignments satisfies the example eigen-equations")


@dataclass(frozen=True)
class CalibrationResult:
    table: MultiplicationTable
    passing: Tuple[MultiplicationTable, ...]
    default_passed: bool
    exhaustive: bool

    @property
    def convention(self) -> str:
        return self.table.describe()


def example_residuals(table: Optional[MultiplicationTable] = None) -> List[Tuple[str, float]]:
    """Relative residual of every listed eigenpair under ``table``."""
    cases = [example1(p, q, theta, table) for p, q, theta in _EXAMPLE1_POINTS]
    cases += [example2(p, q, table) for p, q in _EXAMPLE23_POINTS]
    cases += [example3(p, q, table) for p, q in _EXAMPLE23_POINTS]
    out = []
    for case in cases:
        scale = case.matrix.scale()
        for pair in case.pairs:
            unit = pair.unit
            out.append((f"{case.name}{case.params}:{pair.name}", residual_norm(case.matrix, unit, pair.lam, table) / scale))
    return out


def table_passes(table: MultiplicationTable, tol: float = 1e-9) -> bool:
    return all(value <= tol for _, value in example_residuals(table))


def calibrate_table(exhaustive: bool = False, tol: float = 1e-9) -> CalibrationResult:
    """
    Return the default table if it passes, else the first passing orientation.

    With ``exhaustive`` every orientation is scanned and all passing tables
    are reported, whatever the default's outcome.
    """
    default_passed = table_passes(DEFAULT_TABLE, tol)
    logger.debug("default table %s", "passes" if default_passed else "fails")
    if default_passed and not exhaustive:
        return CalibrationResult(DEFAULT_TABLE, (DEFAULT_TABLE,), True, False)

    passing = []
    tried = 0
    for candidate in DEFAULT_TABLE.orientations():
        tried += 1
        if not candidate.is_alternative():
            continue
        if table_passes(candidate, tol):
            passing.append(candidate)
    logger.debug("%d of %d orientations pass", len(passing), tried)
    if not passing:
        raise NoConsistentTable(tried)
    chosen = DEFAULT_TABLE if default_passed else passing[0]
    if len(passing) > 1:
        logger.info("%d orientation assignments pass every example", len(passing))
    return CalibrationResult(chosen, tuple(passing), default_passed, exhaustive)
