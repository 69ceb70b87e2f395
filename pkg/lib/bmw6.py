"""
Beta Modified Weibull
The six-parameter family F(x) = I_{G(x)}(a, b) obtained by feeding the
four-parameter modified Weibull cdf G through the Beta(a, b) cdf.

Every function evaluates G through its exponent Phi, so both ln G and
ln(1 - G) = -Phi are available at full precision and the incomplete beta
function sees neither tail rounded away.

Usage:
    from bmw6 import Bmw6Params, cdf, pdf, quantile

    p = Bmw6Params.from_values(a=1.5, b=0.8, lam=1.2, beta=0.8, gamma=1.2, tau=2)
    cdf(1.0, p)
    quantile(0.9, p)
"""

import logging
import math
import numbers
import sys
from dataclasses import dataclass
from typing import Dict, Mapping

from errors import (
    ConvergenceError,
    DomainError,
    HazardOverflowError,
    MassExceededError,
    QuantileOverflowError,
)
from jeong4 import (
    InnerParams,
    inner_log_hazard,
    inner_isf,
    inner_quantile,
    inner_total_mass,
    phi_exponent,
)
from numerics import brent_root
from specialfn import BetaShape, incomplete_beta_from_logs, inv_reg_inc_beta, log1mexp, log_beta

logger = logging.getLogger(__name__)

# JSON / CLI key order: (a, b, lambda, beta, gamma, tau)
PARAM_KEYS = ('a', 'b', 'lambda', 'beta', 'gamma', 'tau')

FALLBACK_ROOT_TOL = 1e-13
_MAX_BRACKET_DOUBLINGS = 1100
_LOG_MAX_DOUBLE = math.log(sys.float_info.max)


@dataclass(frozen=True)
class Bmw6Params:
    """Beta shape (a, b) plus the inner parameters (gamma, beta, lambda, tau)"""
    shape: BetaShape
    inner: InnerParams

    @classmethod
    def from_values(cls, a: float, b: float, lam: float, beta: float, gamma: float, tau: float) -> 'Bmw6Params':
        """Build from the six values in (a, b, lambda, beta, gamma, tau) order."""
        return cls(BetaShape(a, b), InnerParams(gamma=gamma, beta=beta, lam=lam, tau=tau))

    @classmethod
    def from_mapping(cls, values: Mapping[str, float]) -> 'Bmw6Params':
        """
        Build from a mapping with keys a, b, lambda, beta, gamma, tau.

        Raises:
            DomainError: If a key is missing, non-numeric or out of range
        """
        missing = [key for key in PARAM_KEYS if key not in values]
        if missing:
            raise DomainError(f"parameter set is missing {', '.join(missing)}")
        for key in PARAM_KEYS:
            value = values[key]
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise DomainError(f"parameter {key} must be a number, got {value!r}")
        return cls.from_values(*(float(values[key]) for key in PARAM_KEYS))

    def as_dict(self) -> Dict[str, float]:
        return {
            'a': self.shape.a,
            'b': self.shape.b,
            'lambda': self.inner.lam,
            'beta': self.inner.beta,
            'gamma': self.inner.gamma,
            'tau': self.inner.tau,
        }

    def __str__(self) -> str:
        return ', '.join(f"{key}={value:g}" for key, value in self.as_dict().items())


def origin_exponent(p: Bmw6Params) -> float:
    """a*gamma - 1: the density behaves like x^(a*gamma - 1) as x -> 0+."""
    return p.shape.a * p.inner.gamma - 1.0


def _tails(x: float, p: Bmw6Params):
    phi = phi_exponent(x, p.inner)
    if phi == 0.0:
        return 0.0, 1.0
    if math.isinf(phi):
        return 1.0, 0.0
    log_g = log1mexp(phi)
    return incomplete_beta_from_logs(log_g, -phi, p.shape)


def cdf(x: float, p: Bmw6Params) -> float:
    """
    F(x) = I_{G(x)}(a, b).

    Raises:
        DomainError: If x < 0
        ConvergenceError: From the incomplete beta continued fraction
    """
    return _tails(x, p)[0]


def survival(x: float, p: Bmw6Params) -> float:
    """1 - F(x) = I_{1-G(x)}(b, a), evaluated from ln(1 - G) = -Phi directly"""
    return _tails(x, p)[1]


def log_pdf(x: float, p: Bmw6Params) -> float:
    """
    ln f(x) with f = G^(a-1) (1-G)^(b-1) g / B(a, b) and g = h (1 - G), i.e.

        (a - 1) ln G - b Phi + ln h - ln B(a, b)

    Returns -inf where the density is zero (G = 0 with a > 1, or Phi
    beyond double range) and +inf where it diverges (G = 0 with a < 1).

    Raises:
        DomainError: If x <= 0
    """
    log_h = inner_log_hazard(x, p.inner)
    phi = phi_exponent(x, p.inner)
    a, b = p.shape.a, p.shape.b

    if math.isinf(phi):
        return -math.inf

    total = log_h - b * phi
    if a != 1.0:
        if phi == 0.0:
            return -math.inf if a > 1.0 else math.inf
        total += (a - 1.0) * log1mexp(phi)
    if not (a == 1.0 and b == 1.0):
        total -= log_beta(p.shape)
    return total


def pdf(x: float, p: Bmw6Params) -> float:
    """Density f(x) = exp(log_pdf(x)), x > 0; inf where that overflows"""
    log_f = log_pdf(x, p)
    if log_f > _LOG_MAX_DOUBLE:
        return math.inf
    return math.exp(log_f)


def hazard(x: float, p: Bmw6Params) -> float:
    """
    h(x) = f(x) / (1 - F(x)).

    Raises:
        DomainError: If x <= 0
        HazardOverflowError: If the survival function underflows to 0 at x
    """
    density = pdf(x, p)
    surv = survival(x, p)
    if surv == 0.0:
        raise HazardOverflowError(
            f"survival underflows to 0 at x={x!r} ({p}); hazard is not representable"
        )
    return density / surv


def total_mass(p: Bmw6Params) -> float:
    """F(infinity): 1 when tau >= 0, else I_y(a, b) at y = 1 - exp(-lambda/|tau|)"""
    if p.inner.tau >= 0:
        return 1.0
    cap = p.inner.lam / -p.inner.tau
    lower, _ = incomplete_beta_from_logs(math.log(inner_total_mass(p.inner)), -cap, p.shape)
    return lower


def _root_quantile(q: float, p: Bmw6Params) -> float:
    """Solve cdf(x) = q by bracketing from x = beta outwards."""
    hi = p.inner.beta
    for _ in range(_MAX_BRACKET_DOUBLINGS):
        if cdf(hi, p) >= q:
            break
        hi *= 2.0
    else:
        raise ConvergenceError(f"could not bracket quantile {q!r} for {p}")
    return brent_root(lambda x: cdf(x, p) - q, 0.0, hi, tol=FALLBACK_ROOT_TOL)


def _quantile_upper(q: float, p: Bmw6Params) -> float:
    """Upper-half inversion through 1 - v, which keeps q near 1 resolvable."""
    w = inv_reg_inc_beta(1.0 - q, p.shape.swapped())
    if p.inner.tau < 0:
        floor = math.exp(p.inner.lam / p.inner.tau)
        if w <= floor:
            w = math.nextafter(floor, 1.0)
    if w >= 1.0:
        return 0.0
    if w == 0.0:
        w = math.nextafter(0.0, 1.0)
    return inner_isf(w, p.inner)


def _quantile_lower(q: float, p: Bmw6Params) -> float:
    v = inv_reg_inc_beta(q, p.shape)
    inner_mass = inner_total_mass(p.inner)
    # q < mass keeps v below the inner mass mathematically; clamp rounding
    if v >= inner_mass:
        v = math.nextafter(inner_mass, 0.0)
    if v >= 1.0:
        v = math.nextafter(1.0, 0.0)
    if v == 0.0:
        return 0.0
    return inner_quantile(v, p.inner)


def quantile(q: float, p: Bmw6Params) -> float:
    """
    Inverse of cdf: inner_quantile(inv_reg_inc_beta(q)).

    Above q = 0.5 the chain runs on the upper tail instead, inverting
    I_{1-v}(b, a) = 1 - q and mapping 1 - v through the inner survival
    function. quantile(0) is 0. If the inversion chain fails to converge
    the root is found with Brent's method on cdf(x) - q instead.

    Raises:
        DomainError: If q is outside [0, 1)
        MassExceededError: If q >= total_mass(p) (tau < 0 only)
        QuantileOverflowError: If the quantile is beyond the largest double
    """
    if not isinstance(q, numbers.Real) or not 0.0 <= q < 1.0:
        raise DomainError(f"probability must lie in [0, 1), got {q!r}")
    mass = total_mass(p)
    if q >= mass:
        raise MassExceededError(q, mass)
    if q == 0.0:
        return 0.0

    try:
        if q > 0.5:
            x = _quantile_upper(q, p)
        else:
            x = _quantile_lower(q, p)
    except ConvergenceError as exc:
        logger.warning("quantile(%r) fell back to root finding: %s", q, exc)
        x = _root_quantile(q, p)
    if math.isinf(x):
        raise QuantileOverflowError(q, p)
    return x
