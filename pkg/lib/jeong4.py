"""
Four-Parameter Modified Weibull
The inner distribution G with survival

    S(x) = exp(-Phi(x)),  Phi(x) = [lambda^(1-tau) ((x/beta)^gamma + lambda)^tau - lambda] / tau

evaluated in the stable form Phi = lambda * expm1(tau * log1p(z / lambda)) / tau,
z = (x/beta)^gamma. tau = 0 is the analytic limit lambda * log1p(z / lambda).
For tau < 0, Phi is bounded by lambda / |tau| and the distribution is
defective: a fraction exp(-lambda / |tau|) never fails.
"""

import math
import numbers
from dataclasses import dataclass

from errors import DomainError, MassExceededError

# Above this, expm1 overflows a double
_MAX_EXP_ARG = 709.0


@dataclass(frozen=True)
class InnerParams:
    """(gamma, beta, lambda, tau) of the inner distribution"""
    gamma: float
    beta: float
    lam: float
    tau: float

    def __post_init__(self):
        for name in ('gamma', 'beta', 'lam'):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not math.isfinite(value) or value <= 0:
                label = 'lambda' if name == 'lam' else name
                raise DomainError(f"{label} must be a finite positive number, got {value!r}")
        if not isinstance(self.tau, numbers.Real) or not math.isfinite(self.tau):
            raise DomainError(f"tau must be finite, got {self.tau!r}")


def _check_x(x: float, strict: bool):
    if not isinstance(x, numbers.Real) or math.isnan(x):
        raise DomainError(f"x must be a real number, got {x!r}")
    if strict and not 0 < x < math.inf:
        raise DomainError(f"x must be finite and > 0 here (the formula divides by x), got {x!r}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x!r}")


def _log1p_exp(t: float) -> float:
    """ln(1 + e^t) without overflow."""
    if t > 35.0:
        return t + math.log1p(math.exp(-t))
    return math.log1p(math.exp(t))


def _log_expm1(t: float) -> float:
    """ln(e^t - 1) for t > 0 without overflow."""
    if t > 35.0:
        return t + math.log1p(-math.exp(-t))
    return math.log(math.expm1(t))


def _log_ratio_terms(x: float, p: InnerParams):
    """(ln(x/beta), L) with L = ln(1 + z/lambda)."""
    log_xb = math.log(x) - math.log(p.beta)
    log_u = p.gamma * log_xb - math.log(p.lam)
    return log_xb, _log1p_exp(log_u)


def _phi_from_log1p(big_l: float, p: InnerParams) -> float:
    if p.tau == 0.0:
        return p.lam * big_l
    t = p.tau * big_l
    if t > _MAX_EXP_ARG:
        return math.inf
    return p.lam * math.expm1(t) / p.tau


def phi_exponent(x: float, p: InnerParams) -> float:
    """
    The exponent Phi(x) >= 0 of the inner survival function.

    Phi(0) = 0 and Phi is nondecreasing; it may be +inf when the true value
    overflows a double.
    """
    _check_x(x, strict=False)
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf if p.tau >= 0 else p.lam / -p.tau
    _, big_l = _log_ratio_terms(x, p)
    return max(_phi_from_log1p(big_l, p), 0.0)


def inner_survival(x: float, p: InnerParams) -> float:
    """S(x) = exp(-Phi(x)); equals 1 at x = 0"""
    return math.exp(-phi_exponent(x, p))


def inner_cdf(x: float, p: InnerParams) -> float:
    """G(x) = 1 - exp(-Phi(x)), via -expm1 so small values keep their digits"""
    return -math.expm1(-phi_exponent(x, p))


def inner_log_hazard(x: float, p: InnerParams) -> float:
    """
    ln h(x) = ln(gamma/beta) + (gamma - 1) ln(x/beta) + (tau - 1) ln(1 + z/lambda)

    which is the log of gamma (x/beta)^gamma lambda^(1-tau) / (x [(x/beta)^gamma + lambda]^(1-tau)).
    """
    _check_x(x, strict=True)
    log_xb, big_l = _log_ratio_terms(x, p)
    log_h = math.log(p.gamma / p.beta)
    if p.gamma != 1.0:
        log_h += (p.gamma - 1.0) * log_xb
    if p.tau != 1.0:
        log_h += (p.tau - 1.0) * big_l
    return log_h


def inner_hazard(x: float, p: InnerParams) -> float:
    """Hazard h(x) of the inner distribution, x > 0"""
    return math.exp(inner_log_hazard(x, p))


def inner_log_pdf(x: float, p: InnerParams) -> float:
    """ln g(x) = ln h(x) - Phi(x)"""
    return inner_log_hazard(x, p) - phi_exponent(x, p)


def inner_pdf(x: float, p: InnerParams) -> float:
    """
    Density g(x) = (gamma/beta)(x/beta)^(gamma-1) lambda^(1-tau) [(x/beta)^gamma + lambda]^(tau-1) exp(-Phi(x))

    Only defined for x > 0; the limit at 0 diverges when gamma < 1.
    """
    return math.exp(inner_log_pdf(x, p))


def inner_total_mass(p: InnerParams) -> float:
    """G(infinity): 1 for tau >= 0, 1 - exp(-lambda/|tau|) for tau < 0"""
    if p.tau >= 0:
        return 1.0
    return -math.expm1(-p.lam / -p.tau)


def _quantile_from_exponent(s: float, p: InnerParams) -> float:
    """x with Phi(x) = s, for 0 <= s (< lambda/|tau| when tau < 0)"""
    if s == 0.0:
        return 0.0
    if p.tau == 0.0:
        t = s / p.lam
    else:
        # the mass check keeps 1 + tau s / lambda > 0 up to rounding
        arg = max(p.tau * s / p.lam, math.nextafter(-1.0, 0.0))
        t = math.log1p(arg) / p.tau
    if t <= 0.0:
        # s below the resolution of lambda
        return 0.0
    log_x = math.log(p.beta) + (math.log(p.lam) + _log_expm1(t)) / p.gamma
    # past the largest double; the rounded result is inf
    if log_x > _MAX_EXP_ARG:
        return math.inf
    return math.exp(log_x)


def inner_quantile(y: float, p: InnerParams) -> float:
    """
    Closed-form inverse of the inner cdf.

    x = beta [lambda ((1 + tau s/lambda)^(1/tau) - 1)]^(1/gamma), s = -ln(1 - y),
    with x = beta [lambda (e^(s/lambda) - 1)]^(1/gamma) at tau = 0.

    Raises:
        DomainError: If y is outside [0, 1)
        MassExceededError: If y >= inner_total_mass(p)
    """
    if not isinstance(y, numbers.Real) or not 0.0 <= y < 1.0:
        raise DomainError(f"probability must lie in [0, 1), got {y!r}")
    mass = inner_total_mass(p)
    if y >= mass:
        raise MassExceededError(y, mass)
    return _quantile_from_exponent(-math.log1p(-y), p)


def inner_isf(w: float, p: InnerParams) -> float:
    """
    Inverse of the inner survival function: x with exp(-Phi(x)) = w.

    Takes the upper tail probability directly, so w far below machine
    epsilon still maps to a distinct x.

    Raises:
        DomainError: If w is outside (0, 1]
        MassExceededError: If 1 - w >= inner_total_mass(p)
    """
    if not isinstance(w, numbers.Real) or not 0.0 < w <= 1.0:
        raise DomainError(f"survival probability must lie in (0, 1], got {w!r}")
    if p.tau < 0 and w <= math.exp(-p.lam / -p.tau):
        raise MassExceededError(1.0 - w, inner_total_mass(p))
    return _quantile_from_exponent(-math.log(w), p)
