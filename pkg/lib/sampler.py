"""
Sampling
Inverse-transform draws from the six-parameter family. When tau < 0 part of
the probability mass sits at infinity; those draws come back as CURED
outcomes rather than as a sentinel number.

Uniforms come from numpy's counter-based Philox generator keyed by
(seed, stream), one generator output per draw.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from bmw6 import Bmw6Params, cdf, quantile, total_mass
from errors import DomainError, QuantileOverflowError
from jeong4 import inner_quantile, inner_total_mass
from specialfn import inv_reg_inc_beta

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64


class OutcomeKind(Enum):
    FINITE = 'finite'
    CURED = 'cured'


@dataclass(frozen=True)
class DrawOutcome:
    """A finite lifetime, or a cured draw that never fails (x is None)"""
    kind: OutcomeKind
    x: Optional[float] = None

    def __post_init__(self):
        if self.kind is OutcomeKind.FINITE:
            if self.x is None or not math.isfinite(self.x) or self.x < 0:
                raise DomainError(f"finite outcome needs a finite x >= 0, got {self.x!r}")
        elif self.x is not None:
            raise DomainError("cured outcome carries no value")

    @classmethod
    def finite(cls, x: float) -> 'DrawOutcome':
        return cls(OutcomeKind.FINITE, float(x))

    @classmethod
    def cured(cls) -> 'DrawOutcome':
        return cls(OutcomeKind.CURED)

    @property
    def is_cured(self) -> bool:
        return self.kind is OutcomeKind.CURED


@dataclass(frozen=True)
class SeedSpec:
    """
    Reproducibility key. The same (seed, stream) always yields the same
    uniform sequence; distinct streams are independent.
    """
    seed: int
    stream: int = 0

    def __post_init__(self):
        for name, value in (('seed', self.seed), ('stream', self.stream)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if not 0 <= self.seed < MAX_SEED:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")
        if self.stream < 0:
            raise DomainError(f"stream must be >= 0, got {self.stream!r}")

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(int(self.seed), spawn_key=(int(self.stream),))
        return np.random.Generator(np.random.Philox(sequence))

    def uniforms(self, n: int) -> np.ndarray:
        """n draws on [0, 1), exactly one generator output each"""
        return self.generator().random(n)


def _check_n(n: int):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n!r}")


def draws_from_uniforms(p: Bmw6Params, uniforms: Iterable[float]) -> List[DrawOutcome]:
    """Map each u to CURED when u >= total_mass(p), else to quantile(u)."""
    mass = total_mass(p)
    outcomes = []
    for u in uniforms:
        u = float(u)
        if u >= mass:
            outcomes.append(DrawOutcome.cured())
        else:
            outcomes.append(DrawOutcome.finite(quantile(u, p)))
    return outcomes


def sample(p: Bmw6Params, n: int, seed: SeedSpec) -> List[DrawOutcome]:
    """
    n inverse-transform draws.

    Raises:
        DomainError: If n < 1
        ConvergenceError: Propagated from the quantile chain
        QuantileOverflowError: If a draw lies beyond the largest double
    """
    _check_n(n)
    outcomes = draws_from_uniforms(p, seed.uniforms(n))
    logger.debug("sample: %d draws, seed=%d stream=%d", n, seed.seed, seed.stream)
    return outcomes


def sample_beta_compose(p: Bmw6Params, n: int, seed: SeedSpec) -> List[DrawOutcome]:
    """
    n draws by composition: V ~ Beta(a, b) by inversion, then X = G^-1(V).

    V at or above the inner total mass is a cured draw.
    """
    _check_n(n)
    inner_mass = inner_total_mass(p.inner)
    outcomes = []
    for u in seed.uniforms(n):
        v = inv_reg_inc_beta(float(u), p.shape)
        if p.inner.tau < 0 and v >= inner_mass:
            outcomes.append(DrawOutcome.cured())
            continue
        # proper distribution: v rounding up to 1 is still a finite draw
        v = min(v, math.nextafter(1.0, 0.0))
        if v == 0.0:
            outcomes.append(DrawOutcome.finite(0.0))
        else:
            x = inner_quantile(v, p.inner)
            if math.isinf(x):
                raise QuantileOverflowError(float(u), p)
            outcomes.append(DrawOutcome.finite(x))
    logger.debug("sample_beta_compose: %d draws, seed=%d stream=%d", n, seed.seed, seed.stream)
    return outcomes


def split_outcomes(outcomes: Iterable[DrawOutcome]) -> Tuple[List[float], int]:
    """(finite values in draw order, number of cured draws)"""
    values = []
    cured = 0
    for outcome in outcomes:
        if outcome.is_cured:
            cured += 1
        else:
            values.append(outcome.x)
    return values, cured


def ks_statistic(samples: Sequence[float], p: Bmw6Params) -> float:
    """
    Kolmogorov-Smirnov distance sup |F_n - F| between the empirical cdf of
    samples and the model cdf. For tau < 0 the model is the conditional
    distribution cdf(x) / total_mass(p) of the finite draws.

    Raises:
        DomainError: If samples is empty or holds a non-finite or negative value
    """
    xs = np.sort(np.asarray(samples, dtype=float))
    n = xs.size
    if n == 0:
        raise DomainError("ks_statistic needs at least one sample")
    if not np.all(np.isfinite(xs)) or xs[0] < 0:
        raise DomainError("samples must be finite and >= 0")

    mass = total_mass(p)
    model = np.array([cdf(x, p) for x in xs]) / mass
    upper = np.arange(1, n + 1) / n - model
    lower = model - np.arange(0, n) / n
    return float(max(upper.max(), lower.max(), 0.0))
