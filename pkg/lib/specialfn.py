"""
Special Functions
Log-gamma, log-beta, the regularized incomplete beta function I_y(a, b) and
its inverse, written from scratch in log space.

Usage:
    from specialfn import BetaShape, reg_inc_beta, inv_reg_inc_beta

    shape = BetaShape(2.5, 1.7)
    p = reg_inc_beta(0.3, shape)
    y = inv_reg_inc_beta(p, shape)
"""

import logging
import math
import numbers
import sys
from dataclasses import dataclass
from typing import Optional, Tuple

from errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon
TINY = 1e-300

HALF_LOG_2PI = 0.918938533204672741780329736406
LN2 = math.log(2.0)

# Stirling series coefficients B_2k / (2k (2k - 1)), k = 1..8
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
)
_STIRLING_MIN_Z = 15.0

CF_RELATIVE_TOL = 1e-15
CF_MAX_ITER = 300

INVERSE_MAX_ITER = 300
INVERSE_P_TOL = 1e-12


@dataclass(frozen=True)
class BetaShape:
    """Shape parameters (a, b) of a Beta distribution, both > 0"""
    a: float
    b: float

    def __post_init__(self):
        for name in ('a', 'b'):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not math.isfinite(value) or value <= 0:
                raise DomainError(f"beta shape parameter {name} must be a finite positive number, got {value!r}")

    def swapped(self) -> 'BetaShape':
        return BetaShape(self.b, self.a)


# ============================================================
# GAMMA / BETA
# ============================================================

def log_gamma(z: float) -> float:
    """
    Natural logarithm of the gamma function for real z > 0.

    The argument is shifted up to z >= 15 with the recurrence
    Gamma(z + 1) = z Gamma(z) and the Stirling series is summed there;
    relative error stays below 1e-13 away from the zeros at z = 1 and z = 2,
    which are returned exactly.

    Raises:
        DomainError: If z <= 0 or z is not finite
    """
    if not isinstance(z, numbers.Real) or not math.isfinite(z) or z <= 0:
        raise DomainError(f"log_gamma needs a finite z > 0, got {z!r}")
    if z == 1.0 or z == 2.0:
        return 0.0

    z = float(z)
    shift = 0.0
    if z < _STIRLING_MIN_Z:
        product = 1.0
        while z < _STIRLING_MIN_Z:
            product *= z
            z += 1.0
        shift = math.log(product)

    inv = 1.0 / z
    inv2 = inv * inv
    series = 0.0
    power = inv
    for coeff in _STIRLING:
        series += coeff * power
        power *= inv2

    return (z - 0.5) * math.log(z) - z + HALF_LOG_2PI + series - shift


def log1mexp(t: float) -> float:
    """
    ln(1 - e^-t) for t > 0.

    expm1 is accurate for small t, log1p for large t; switching at ln 2
    keeps full relative precision on both sides.
    """
    if not t > 0:
        raise DomainError(f"log1mexp needs t > 0, got {t!r}")
    if t < LN2:
        return math.log(-math.expm1(-t))
    return math.log1p(-math.exp(-t))


def log_beta(shape: BetaShape) -> float:
    """ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b)"""
    # B(1, b) = 1/b
    if shape.a == 1.0:
        return -math.log(shape.b)
    if shape.b == 1.0:
        return -math.log(shape.a)
    return log_gamma(shape.a) + log_gamma(shape.b) - log_gamma(shape.a + shape.b)


# ============================================================
# INCOMPLETE BETA
# ============================================================

def _beta_continued_fraction(a: float, b: float, y: float) -> float:
    """Continued fraction for I_y(a, b), modified Lentz evaluation."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0

    c = 1.0
    d = 1.0 - qab * y / qap
    if abs(d) < TINY:
        d = TINY
    d = 1.0 / d
    h = d

    for m in range(1, CF_MAX_ITER + 1):
        m2 = 2 * m

        # even step
        aa = m * (b - m) * y / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        h *= d * c

        # odd step
        aa = -(a + m) * (qab + m) * y / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta

        if abs(delta - 1.0) < CF_RELATIVE_TOL:
            logger.debug("incomplete beta fraction converged in %d terms (a=%g, b=%g, y=%g)", m, a, b, y)
            return h

    raise ConvergenceError(
        f"incomplete beta continued fraction did not converge in {CF_MAX_ITER} "
        f"iterations (a={a!r}, b={b!r}, y={y!r})"
    )


def incomplete_beta_from_logs(log_y: float, log_yc: float, shape: BetaShape,
                              log_beta_ab: Optional[float] = None) -> Tuple[float, float]:
    """
    Evaluate (I_y(a, b), 1 - I_y(a, b)) given ln y and ln(1 - y).

    Callers that know y and 1 - y to full precision (the composition with the
    inner cdf knows ln(1 - G) = -Phi exactly) pass both logs so neither tail
    loses digits.

    Returns:
        (lower, upper) with lower + upper = 1
    """
    if log_y == -math.inf:
        return 0.0, 1.0
    if log_yc == -math.inf:
        return 1.0, 0.0

    a, b = shape.a, shape.b

    # Closed forms: I_y(1, b) = 1 - (1 - y)^b and I_y(a, 1) = y^a
    if a == 1.0:
        return -math.expm1(b * log_yc), math.exp(b * log_yc)
    if b == 1.0:
        return math.exp(a * log_y), -math.expm1(a * log_y)

    if log_beta_ab is None:
        log_beta_ab = log_beta(shape)

    y = math.exp(log_y)
    yc = math.exp(log_yc)
    log_front = a * log_y + b * log_yc - log_beta_ab

    if y > (a + 1.0) / (a + b + 2.0):
        upper = math.exp(log_front) * _beta_continued_fraction(b, a, yc) / b
        upper = min(max(upper, 0.0), 1.0)
        return 1.0 - upper, upper

    lower = math.exp(log_front) * _beta_continued_fraction(a, b, y) / a
    lower = min(max(lower, 0.0), 1.0)
    return lower, 1.0 - lower


def _check_unit(name: str, value: float):
    if not isinstance(value, numbers.Real) or not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")


def reg_inc_beta(y: float, shape: BetaShape) -> float:
    """
    Regularized incomplete beta function I_y(a, b) = B_y(a, b) / B(a, b).

    Args:
        y: Upper integration limit in [0, 1]
        shape: Beta shape (a, b)

    Returns:
        I_y(a, b); exactly 0 at y = 0 and exactly 1 at y = 1

    Raises:
        DomainError: If y is outside [0, 1]
        ConvergenceError: If the continued fraction exceeds its iteration cap
    """
    _check_unit('y', y)
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 1.0
    lower, _ = incomplete_beta_from_logs(math.log(y), math.log1p(-y), shape)
    return lower


def beta_pdf(y: float, shape: BetaShape) -> float:
    """Density of Beta(a, b) at y, with the endpoint limits at y = 0 and y = 1."""
    _check_unit('y', y)
    a, b = shape.a, shape.b
    if y == 0.0:
        if a < 1.0:
            return math.inf
        return math.exp(-log_beta(shape)) if a == 1.0 else 0.0
    if y == 1.0:
        if b < 1.0:
            return math.inf
        return math.exp(-log_beta(shape)) if b == 1.0 else 0.0
    return math.exp((a - 1.0) * math.log(y) + (b - 1.0) * math.log1p(-y) - log_beta(shape))


# ============================================================
# INVERSE
# ============================================================

def _initial_guess(p: float, a: float, b: float) -> float:
    """Starting point for the inversion (normal approximation or tail power law)."""
    if a >= 1.0 and b >= 1.0:
        pp = p if p < 0.5 else 1.0 - p
        t = math.sqrt(-2.0 * math.log(pp))
        x = (2.30753 + t * 0.27061) / (1.0 + t * (0.99229 + t * 0.04481)) - t
        if p < 0.5:
            x = -x
        al = (x * x - 3.0) / 6.0
        h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0))
        w = (x * math.sqrt(al + h) / h
             - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h)))
        exponent = 2.0 * w
        guess = a / (a + b * math.exp(exponent)) if exponent < 700.0 else 0.0
    else:
        lna = math.log(a / (a + b))
        lnb = math.log(b / (a + b))
        t = math.exp(a * lna) / a
        u = math.exp(b * lnb) / b
        w = t + u
        if p < t / w:
            guess = (a * w * p) ** (1.0 / a)
        else:
            guess = 1.0 - (b * w * (1.0 - p)) ** (1.0 / b)

    if not 0.0 < guess < 1.0 or math.isnan(guess):
        guess = min(max(guess, TINY), 1.0 - EPS) if math.isfinite(guess) else 0.5
    return guess


def inv_reg_inc_beta(p: float, shape: BetaShape) -> float:
    """
    Inverse of the regularized incomplete beta function in its first argument.

    Safeguarded Newton iteration inside a shrinking bracket that starts as
    [0, 1]; a bisection step replaces any Newton step that leaves the bracket
    or fails to halve the previous step. Above p = 0.5 the iteration runs on
    I_{1-y}(b, a) = 1 - p instead, so the tolerance tracks the smaller tail.

    Args:
        p: Probability in [0, 1]
        shape: Beta shape (a, b)

    Returns:
        y with |I_y(a, b) - p| <= 1e-12; p = 0 maps to 0 and p = 1 maps to 1

    Raises:
        DomainError: If p is outside [0, 1]
        ConvergenceError: If the iteration cap is reached
    """
    _check_unit('p', p)
    if p == 0.0:
        return 0.0
    if p == 1.0:
        return 1.0

    a, b = shape.a, shape.b
    if a == 1.0 and b == 1.0:
        return float(p)
    if b == 1.0:
        return math.exp(math.log(p) / a)
    if a == 1.0:
        return -math.expm1(math.log1p(-p) / b)
    if p > 0.5:
        # I_y(a, b) = p  <=>  I_{1-y}(b, a) = 1 - p, and 1 - p is exact here
        return 1.0 - _newton_inverse(1.0 - p, shape.swapped())
    return _newton_inverse(p, shape)


def _newton_inverse(p: float, shape: BetaShape) -> float:
    """y in (0, 1) with I_y(a, b) = p for 0 < p <= 0.5"""
    a, b = shape.a, shape.b
    lnb = log_beta(shape)
    tol = max(INVERSE_P_TOL * min(p, 1.0 - p), 4.0 * EPS * p)

    lo, hi = 0.0, 1.0
    y = _initial_guess(p, a, b)
    step_old = hi - lo
    step = step_old

    for iteration in range(1, INVERSE_MAX_ITER + 1):
        log_y = math.log(y)
        log_yc = math.log1p(-y)
        lower, _ = incomplete_beta_from_logs(log_y, log_yc, shape, lnb)
        diff = lower - p
        if abs(diff) <= tol:
            logger.debug("incomplete beta inverse converged in %d steps (p=%g)", iteration, p)
            return y

        if diff < 0.0:
            lo = y
        else:
            hi = y
        if hi - lo <= 4.0 * EPS * hi:
            return y

        density = beta_pdf(y, shape)
        newton_ok = False
        if density > 0.0 and math.isfinite(density):
            candidate = y - diff / density
            if lo < candidate < hi and abs(2.0 * diff) <= abs(step_old * density):
                newton_ok = True

        step_old = step
        if newton_ok:
            y_new = candidate
        elif lo > 0.0 and hi / lo > 16.0:
            y_new = math.sqrt(lo * hi)
        else:
            y_new = 0.5 * (lo + hi)

        step = y_new - y
        if abs(step) <= 2.0 * EPS * y_new:
            return y_new
        y = y_new

    raise ConvergenceError(
        f"incomplete beta inverse did not converge in {INVERSE_MAX_ITER} steps "
        f"(p={p!r}, a={a!r}, b={b!r})"
    )
