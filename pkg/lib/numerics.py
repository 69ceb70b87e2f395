"""
Numerical Kernels
Adaptive Gauss-Kronrod quadrature, Richardson central differences and Brent
root bracketing. Used as independent oracles by the test suite and as the
fallback path of the quantile chain.
"""

import heapq
import logging
import math
import sys
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon

MAX_DEPTH = 60
MAX_INTERVALS = 20000

# 15-point Kronrod nodes on [-1, 1] (positive half; index 0 is the centre)
# and the weights of the embedded 7-point Gauss rule at the odd positions.
_XGK = np.array([
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144845693013,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
_WGK = np.array([
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
_WG = np.array([
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
])


@dataclass(frozen=True)
class QuadResult:
    """Integral estimate with its error estimate and integrand call count"""
    value: float
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self):
        if not self.abs_error_estimate >= 0:
            raise DomainError(f"error estimate must be >= 0, got {self.abs_error_estimate!r}")
        if self.evaluations < 1:
            raise DomainError(f"evaluations must be >= 1, got {self.evaluations!r}")


def _kronrod15(g: Callable[[float], float], lo: float, hi: float):
    """One G7/K15 panel. Nodes are interior, so g is never called at lo or hi."""
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)

    offsets = half * _XGK[1:]
    left = np.array([g(centre - d) for d in offsets])
    right = np.array([g(centre + d) for d in offsets])
    mid = g(centre)

    pairs = left + right
    kronrod = _WGK[0] * mid + np.dot(_WGK[1:], pairs)
    gauss = _WG[0] * mid + np.dot(_WG[1:], pairs[1::2])

    resabs = _WGK[0] * abs(mid) + np.dot(_WGK[1:], np.abs(left) + np.abs(right))
    mean = 0.5 * kronrod
    resasc = _WGK[0] * abs(mid - mean) + np.dot(_WGK[1:], np.abs(left - mean) + np.abs(right - mean))

    value = kronrod * half
    err = abs((kronrod - gauss) * half)
    resabs *= abs(half)
    resasc *= abs(half)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > sys.float_info.min / (50.0 * EPS):
        err = max(50.0 * EPS * resabs, err)
    return float(value), float(err), float(resabs)


def _transformed(f: Callable[[float], float], lo: float, hi: float,
                 endpoint_exponent: Optional[float]):
    """
    Return (g, t_lo, t_hi) with the integral of g over [t_lo, t_hi] equal to
    the integral of f over [lo, hi].

    An infinite hi is mapped with x = lo + u / (1 - u). A power-law endpoint
    singularity (x - lo)^alpha with -1 < alpha < 0 is graded away with
    u = t^k, k = 1 / (1 + alpha), which makes the transformed integrand
    bounded at t = 0.
    """
    infinite = math.isinf(hi)
    k = 1.0
    if endpoint_exponent is not None and -1.0 < endpoint_exponent < 0.0:
        k = 1.0 / (1.0 + endpoint_exponent)
    width = 1.0 if infinite else hi - lo

    if not infinite and k == 1.0:
        return f, lo, hi

    def g(t):
        u = t ** k if k != 1.0 else t
        du = k * t ** (k - 1.0) if k != 1.0 else 1.0
        if infinite:
            if u >= 1.0:
                return 0.0
            return f(lo + u / (1.0 - u)) * du / ((1.0 - u) * (1.0 - u))
        return f(lo + width * u) * width * du

    return g, 0.0, 1.0


def adaptive_quad(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10,
                  endpoint_exponent: Optional[float] = None) -> QuadResult:
    """
    Globally adaptive Gauss-Kronrod (7/15) quadrature.

    The panel with the largest error estimate is bisected until the summed
    estimate drops below tol (or to the rounding floor of the rule). The
    rule is open, so integrable singularities at either endpoint are never
    evaluated.

    Args:
        f: Integrand, finite on the open interval
        lo: Finite lower limit
        hi: Upper limit, may be math.inf
        tol: Absolute error target
        endpoint_exponent: alpha of a (x - lo)^alpha singularity at lo, if known

    Returns:
        QuadResult

    Raises:
        DomainError: If the limits are not ordered or lo is infinite
        ConvergenceError: If a panel would be split beyond depth 60
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    if not math.isfinite(lo) or math.isnan(hi) or not lo < hi:
        raise DomainError(f"need a finite lo < hi, got lo={lo!r}, hi={hi!r}")

    calls = 0

    def counted(g):
        def wrapper(t):
            nonlocal calls
            calls += 1
            return g(t)
        return wrapper

    g, t_lo, t_hi = _transformed(f, lo, hi, endpoint_exponent)
    g = counted(g)

    value, err, resabs = _kronrod15(g, t_lo, t_hi)
    # max-heap on error: (-err, tiebreak, a, b, value, depth, resabs)
    heap = [(-err, 0, t_lo, t_hi, value, 0, resabs)]
    total, total_err, total_abs = value, err, resabs
    counter = 1

    while total_err > max(tol, 100.0 * EPS * total_abs):
        neg_err, _, a, b, v, depth, r = heapq.heappop(heap)
        if depth >= MAX_DEPTH or counter >= MAX_INTERVALS:
            raise ConvergenceError(
                f"quadrature did not reach tol={tol:g} (estimate {total!r}, "
                f"error {total_err:.3g}, depth {depth}, {counter} panels)"
            )
        m = 0.5 * (a + b)
        v1, e1, r1 = _kronrod15(g, a, m)
        v2, e2, r2 = _kronrod15(g, m, b)
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        total_abs += r1 + r2 - r
        heapq.heappush(heap, (-e1, counter, a, m, v1, depth + 1, r1))
        heapq.heappush(heap, (-e2, counter + 1, m, b, v2, depth + 1, r2))
        counter += 2

    # re-sum to shed the drift of the running updates
    total = math.fsum(item[4] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    logger.debug("quadrature: %d panels, %d calls, err %.3g", len(heap), calls, total_err)
    return QuadResult(value=total, abs_error_estimate=total_err, evaluations=calls)


def central_diff(f: Callable[[float], float], x: float, h: float) -> float:
    """
    First derivative from the four-point central difference

        (8 [f(x+h) - f(x-h)] - [f(x+2h) - f(x-2h)]) / (12 h),

    the Richardson combination of the h and 2h central differences; O(h^4).
    """
    if not h > 0:
        raise DomainError(f"step must be positive, got {h!r}")
    d1 = (f(x + h) - f(x - h)) / (2.0 * h)
    d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h)
    return (4.0 * d1 - d2) / 3.0


def brent_root(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12,
               max_iter: int = 200) -> float:
    """
    Root of f inside [lo, hi] by Brent's method.

    Stops when |f(x)| <= tol or the bracket has shrunk to tol (plus a few ulps
    of x).

    Raises:
        DomainError: If f(lo) and f(hi) have the same strict sign
        ConvergenceError: If max_iter is reached
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise DomainError(
            f"root is not bracketed: f({a!r})={fa!r}, f({b!r})={fb!r}"
        )

    c, fc = a, fa
    d = e = b - a
    for iteration in range(1, max_iter + 1):
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb

        tol1 = 2.0 * EPS * abs(b) + 0.5 * tol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or abs(fb) <= tol:
            logger.debug("brent: converged in %d steps at %r", iteration, b)
            return b

        if abs(e) >= tol1 and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = xm
        else:
            d = e = xm

        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)

    raise ConvergenceError(f"brent_root did not converge in {max_iter} steps (last x={b!r}, f={fb!r})")
