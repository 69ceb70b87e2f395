"""
Curve Tables
A grid of x values with named result columns, evaluated straight from the
library functions and written as CSV.

Usage:
    from curves import make_grid, evaluate_curve

    table = evaluate_curve('hazard', params, make_grid(1e-3, 8.0, 400, 'log'))
    table.to_csv(sys.stdout)
"""

import csv
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, TextIO

import numpy as np

import bmw6
from bmw6 import Bmw6Params
from errors import DomainError, HazardOverflowError
from formatting import format_value

logger = logging.getLogger(__name__)

SPACINGS = ('linear', 'log')

FUNCTIONS: Dict[str, Callable[[float, Bmw6Params], float]] = {
    'pdf': bmw6.pdf,
    'cdf': bmw6.cdf,
    'survival': bmw6.survival,
    'hazard': bmw6.hazard,
    'quantile': bmw6.quantile,
}

# x = 0 divides by zero in these
_POSITIVE_ONLY = ('pdf', 'hazard')


@dataclass
class CurveTable:
    """x grid plus columns of equal length; None marks a blank cell"""
    x: List[float]
    columns: Dict[str, List[Optional[float]]] = field(default_factory=dict)

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.x, self.x[1:])):
            raise DomainError("curve grid must be strictly increasing")
        for name, values in self.columns.items():
            self._check_column(name, values)

    def _check_column(self, name: str, values: Sequence[Optional[float]]):
        if len(values) != len(self.x):
            raise DomainError(
                f"column {name!r} has {len(values)} values for {len(self.x)} grid points"
            )

    def add_column(self, name: str, values: List[Optional[float]]):
        self._check_column(name, values)
        self.columns[name] = values

    def blank_count(self, name: str) -> int:
        return sum(1 for v in self.columns[name] if v is None)

    def to_csv(self, stream: TextIO):
        """Header `x,<columns...>`, one row per grid point, LF line endings."""
        writer = csv.writer(stream, lineterminator='\n')
        names = list(self.columns)
        writer.writerow(['x'] + names)
        for i, x in enumerate(self.x):
            writer.writerow([format_value(x)] + [format_value(self.columns[n][i]) for n in names])


def make_grid(xmin: float, xmax: float, n: int, spacing: str = 'linear') -> List[float]:
    """
    n points from xmin to xmax inclusive.

    Raises:
        DomainError: If n < 2, xmin >= xmax, or a log grid has xmin <= 0
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise DomainError(f"grid needs at least 2 points, got {n!r}")
    if not (math.isfinite(xmin) and math.isfinite(xmax)) or not xmin < xmax:
        raise DomainError(f"grid needs finite xmin < xmax, got xmin={xmin!r}, xmax={xmax!r}")
    if spacing == 'linear':
        grid = np.linspace(xmin, xmax, n)
    elif spacing == 'log':
        if xmin <= 0:
            raise DomainError(f"log spacing needs xmin > 0, got {xmin!r}")
        grid = np.geomspace(xmin, xmax, n)
    else:
        raise DomainError(f"spacing must be one of {SPACINGS}, got {spacing!r}")
    return [float(x) for x in grid]


def evaluate_column(func: str, p: Bmw6Params, grid: Sequence[float],
                    blank_overflow: bool = False) -> List[Optional[float]]:
    """
    Library function `func` at every grid point.

    With blank_overflow, a hazard whose survival underflowed becomes None
    instead of raising.
    """
    if func not in FUNCTIONS:
        raise DomainError(f"unknown function {func!r}; expected one of {', '.join(FUNCTIONS)}")
    if func in _POSITIVE_ONLY and grid and grid[0] <= 0:
        raise DomainError(f"{func} is only defined for x > 0; grid starts at {grid[0]!r}")

    fn = FUNCTIONS[func]
    values: List[Optional[float]] = []
    for x in grid:
        try:
            values.append(fn(x, p))
        except HazardOverflowError:
            if not blank_overflow:
                raise
            values.append(None)

    blanks = values.count(None)
    if blanks:
        logger.warning("%s: %d of %d cells left blank (survival underflow) for %s",
                       func, blanks, len(values), p)
    return values


def evaluate_curve(funcs, p: Bmw6Params, grid: Sequence[float], blank_overflow: bool = False) -> CurveTable:
    """CurveTable with one column per name in funcs (a name or a list of names)"""
    if isinstance(funcs, str):
        funcs = [funcs]
    table = CurveTable(list(grid))
    for func in funcs:
        table.add_column(func, evaluate_column(func, p, table.x, blank_overflow))
    return table
