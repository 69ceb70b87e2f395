"""
Shape Classification
Classify a density or hazard curve (constant, increasing, decreasing,
bathtub, unimodal) from a dense scan, by counting sign changes of its first
differences.
"""

import logging
from enum import Enum
from typing import Sequence

import numpy as np

from bmw6 import Bmw6Params, pdf, survival, hazard
from errors import DomainError

logger = logging.getLogger(__name__)

DEFAULT_SCAN_POINTS = 10_000
FLAT_REL_TOL = 1e-9
SURVIVAL_FLOOR = 1e-10


class ShapeClass(Enum):
    CONSTANT = 'constant'
    INCREASING = 'increasing'
    DECREASING = 'decreasing'
    BATHTUB = 'bathtub'
    UNIMODAL = 'unimodal'
    OTHER = 'other'


_RUN_PATTERNS = {
    (1,): ShapeClass.INCREASING,
    (-1,): ShapeClass.DECREASING,
    (-1, 1): ShapeClass.BATHTUB,
    (1, -1): ShapeClass.UNIMODAL,
}


def classify_values(values: Sequence[float], rel_tol: float = FLAT_REL_TOL) -> ShapeClass:
    """
    Shape of a sampled curve.

    Steps smaller than rel_tol * max|value| count as flat and are dropped
    before the remaining signs are collapsed into runs.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size < 2:
        raise DomainError(f"need at least two values to classify a shape, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise DomainError("shape classification needs finite values")

    steps = np.diff(arr)
    scale = np.max(np.abs(arr))
    steps[np.abs(steps) <= rel_tol * scale] = 0.0
    signs = np.sign(steps[steps != 0.0]).astype(int)
    if signs.size == 0:
        return ShapeClass.CONSTANT

    runs = [int(signs[0])]
    for s in signs[1:]:
        if s != runs[-1]:
            runs.append(int(s))
    return _RUN_PATTERNS.get(tuple(runs), ShapeClass.OTHER)


def _scan_grid(xmin: float, xmax: float, n: int) -> np.ndarray:
    if not 0 < xmin < xmax:
        raise DomainError(f"scan needs 0 < xmin < xmax, got xmin={xmin!r}, xmax={xmax!r}")
    if n < 3:
        raise DomainError(f"scan needs at least 3 points, got {n!r}")
    return np.geomspace(xmin, xmax, n)


def density_shape(p: Bmw6Params, xmin: float, xmax: float, n: int = DEFAULT_SCAN_POINTS) -> ShapeClass:
    """Shape of pdf over a log-spaced scan of [xmin, xmax]"""
    values = [pdf(float(x), p) for x in _scan_grid(xmin, xmax, n)]
    return classify_values(values)


def hazard_shape(p: Bmw6Params, xmin: float, xmax: float, n: int = DEFAULT_SCAN_POINTS) -> ShapeClass:
    """
    Shape of the hazard over a log-spaced scan of [xmin, xmax].

    The scan stops where survival drops below 1e-10; beyond that the hazard
    is dominated by rounding in the tail.
    """
    values = []
    for x in _scan_grid(xmin, xmax, n):
        x = float(x)
        if survival(x, p) < SURVIVAL_FLOOR:
            logger.debug("hazard scan for (%s) stopped at x=%g", p, x)
            break
        values.append(hazard(x, p))
    if len(values) < 2:
        raise DomainError(f"survival is below {SURVIVAL_FLOOR:g} across the scan; no hazard shape")
    return classify_values(values)
