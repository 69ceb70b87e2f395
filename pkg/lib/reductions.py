"""
Sub-distribution Catalogue
Named families obtained by pinning some of the six parameters, each with an
independent closed-form cdf and density, plus classification of a parameter
set and a sup-norm equivalence check against the general code path.

lambda cancels whenever tau = 1, so rows that fix tau = 1 do not pin lambda.
"""

import math
import numbers
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Tuple, Union

import bmw6
from bmw6 import Bmw6Params
from errors import DomainError, PreconditionError, UnsupportedFamilyError
from jeong4 import inner_cdf, inner_pdf
from specialfn import incomplete_beta_from_logs, log1mexp, log_beta

DEFAULT_CLASSIFY_TOL = 1e-12
EQUIVALENCE_TOL = 1e-12


class FamilyTag(Enum):
    BMW6 = 'BMW6'
    BETA_WEIBULL = 'BetaWeibull'
    BETA_MODIFIED_RAYLEIGH = 'BetaModifiedRayleigh'
    BETA_RAYLEIGH = 'BetaRayleigh'
    BETA_EXPONENTIAL = 'BetaExponential'
    EXPONENTIATED_WEIBULL = 'ExponentiatedWeibull'
    EXPONENTIATED_EXPONENTIAL = 'ExponentiatedExponential'
    WEIBULL4 = 'Weibull4'
    GENERALIZED_WEIBULL_TAU0 = 'GeneralizedWeibullTau0'
    MODIFIED_RAYLEIGH = 'ModifiedRayleigh'
    CLASSICAL_WEIBULL = 'ClassicalWeibull'
    RAYLEIGH = 'Rayleigh'
    EXPONENTIAL = 'Exponential'


@dataclass(frozen=True)
class NamedFamily:
    """One catalogue row: which parameters are pinned and to what"""
    tag: FamilyTag
    label: str
    abbrev: str
    fixed: Tuple[Tuple[str, float], ...]

    @property
    def free_params(self) -> List[str]:
        pinned = {key for key, _ in self.fixed}
        if ('tau', 1.0) in self.fixed:
            pinned.add('lambda')
        return [key for key in bmw6.PARAM_KEYS if key not in pinned]

    def matches(self, p: Bmw6Params, tol: float) -> bool:
        values = p.as_dict()
        return all(abs(values[key] - target) <= tol for key, target in self.fixed)

    def pattern(self) -> str:
        """Fixed-parameter pattern, e.g. 'a=1, b=1, gamma=2, tau=1'"""
        if not self.fixed:
            return '(none)'
        return ', '.join(f"{key}={value:g}" for key, value in self.fixed)

    def __str__(self) -> str:
        return self.tag.value


# Most general first; classify prefers more pinned parameters, then this order
_CATALOG = (
    NamedFamily(FamilyTag.BMW6, 'Six-parameter beta modified Weibull', 'BMW6', ()),
    NamedFamily(FamilyTag.BETA_WEIBULL, 'Beta Weibull', 'BW', (('tau', 1.0),)),
    NamedFamily(FamilyTag.BETA_MODIFIED_RAYLEIGH, 'Beta modified Rayleigh', 'BMR',
                (('b', 1.0), ('gamma', 2.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.BETA_RAYLEIGH, 'Beta Rayleigh', 'BR',
                (('b', 1.0), ('beta', 1.0), ('gamma', 2.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.BETA_EXPONENTIAL, 'Beta exponential', 'BE',
                (('gamma', 1.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.EXPONENTIATED_WEIBULL, 'Exponentiated Weibull', 'EW',
                (('b', 1.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.EXPONENTIATED_EXPONENTIAL, 'Exponentiated exponential', 'EE',
                (('b', 1.0), ('gamma', 1.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.WEIBULL4, 'Four-parameter Weibull', 'W4',
                (('a', 1.0), ('b', 1.0))),
    NamedFamily(FamilyTag.GENERALIZED_WEIBULL_TAU0, 'Three-parameter Weibull (tau -> 0)', 'W3',
                (('a', 1.0), ('b', 1.0), ('tau', 0.0))),
    NamedFamily(FamilyTag.MODIFIED_RAYLEIGH, 'Modified Rayleigh', 'MR',
                (('a', 1.0), ('b', 1.0), ('gamma', 2.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.CLASSICAL_WEIBULL, 'Classical Weibull', 'W',
                (('a', 1.0), ('b', 1.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.RAYLEIGH, 'Rayleigh', 'R',
                (('a', 1.0), ('b', 1.0), ('beta', 1.0), ('gamma', 2.0), ('tau', 1.0))),
    NamedFamily(FamilyTag.EXPONENTIAL, 'Exponential', 'E',
                (('a', 1.0), ('b', 1.0), ('gamma', 1.0), ('tau', 1.0))),
)

_BY_TAG: Dict[FamilyTag, NamedFamily] = {row.tag: row for row in _CATALOG}

FamilyRef = Union[NamedFamily, FamilyTag, str]


def catalog() -> List[NamedFamily]:
    """All rows, most general first."""
    return list(_CATALOG)


def family(ref: FamilyRef) -> NamedFamily:
    """
    Look up a row by NamedFamily, FamilyTag or tag name ('Rayleigh').

    Raises:
        DomainError: If the name is not in the catalogue
    """
    if isinstance(ref, NamedFamily):
        return ref
    if isinstance(ref, FamilyTag):
        return _BY_TAG[ref]
    try:
        return _BY_TAG[FamilyTag(ref)]
    except ValueError:
        known = ', '.join(tag.value for tag in FamilyTag)
        raise DomainError(f"unknown family {ref!r} (known: {known})") from None


def classify(p: Bmw6Params, tol: float = DEFAULT_CLASSIFY_TOL) -> NamedFamily:
    """
    Most specific catalogue row whose pinned parameters all match p within tol.

    Falls back to BMW6, which pins nothing. Between rows pinning the same
    number of parameters the earlier catalogue row wins.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    best = _CATALOG[0]
    for row in _CATALOG[1:]:
        if row.matches(p, tol) and len(row.fixed) > len(best.fixed):
            best = row
    return best


# ============================================================
# CLOSED FORMS
# ============================================================

def _check_x(x: float, positive: bool):
    if isinstance(x, bool) or not isinstance(x, numbers.Real) or math.isnan(x) or x < 0:
        raise DomainError(f"x must be >= 0, got {x!r}")
    if positive and x == 0:
        raise DomainError(f"density needs x > 0, got {x!r}")


def _weibull_z(x: float, p: Bmw6Params, gamma: float) -> float:
    return (x / p.inner.beta) ** gamma


def _beta_of_weibull_cdf(z: float, p: Bmw6Params) -> float:
    if z == 0.0:
        return 0.0
    if math.isinf(z):
        return 1.0
    lower, _ = incomplete_beta_from_logs(log1mexp(z), -z, p.shape)
    return lower


def _beta_of_weibull_pdf(x: float, z: float, p: Bmw6Params, gamma: float) -> float:
    """(gamma / (beta B)) (x/beta)^(gamma-1) (1 - e^-z)^(a-1) e^(-b z)"""
    a, b, scale = p.shape.a, p.shape.b, p.inner.beta
    if z == 0.0:
        return math.inf if a * gamma < 1.0 else 0.0
    log_f = math.log(gamma / scale) + (gamma - 1.0) * math.log(x / scale) - b * z
    if a != 1.0:
        log_f += (a - 1.0) * log1mexp(z)
    if not (a == 1.0 and b == 1.0):
        log_f -= log_beta(p.shape)
    return math.exp(log_f)


def _exponentiated_cdf(z: float, a: float) -> float:
    return (-math.expm1(-z)) ** a


def _exponentiated_pdf(x: float, z: float, a: float, gamma: float, scale: float) -> float:
    """a (gamma/beta) (x/beta)^(gamma-1) e^-z (1 - e^-z)^(a-1)"""
    core = (gamma / scale) * (x / scale) ** (gamma - 1.0) * math.exp(-z)
    if a == 1.0:
        return core
    return a * core * (-math.expm1(-z)) ** (a - 1.0)


def reference_cdf(ref: FamilyRef, p: Bmw6Params, x: float) -> float:
    """
    Closed-form cdf of a named sub-family, written without the general
    composition.

    Raises:
        UnsupportedFamilyError: For BMW6, which has no simpler form
        DomainError: If x < 0
    """
    row = family(ref)
    _check_x(x, positive=False)
    tag = row.tag
    a, scale, gamma, lam = p.shape.a, p.inner.beta, p.inner.gamma, p.inner.lam

    if tag is FamilyTag.BMW6:
        raise UnsupportedFamilyError("BMW6 has no independent closed form; use bmw6.cdf")
    if tag is FamilyTag.WEIBULL4:
        return inner_cdf(x, p.inner)
    if tag is FamilyTag.GENERALIZED_WEIBULL_TAU0:
        # 1 - (1 + z/lambda)^(-lambda)
        return -math.expm1(-lam * math.log1p(_weibull_z(x, p, gamma) / lam))
    if tag is FamilyTag.BETA_WEIBULL:
        return _beta_of_weibull_cdf(_weibull_z(x, p, gamma), p)
    if tag is FamilyTag.BETA_EXPONENTIAL:
        return _beta_of_weibull_cdf(x / scale, p)
    if tag is FamilyTag.EXPONENTIATED_WEIBULL:
        return _exponentiated_cdf(_weibull_z(x, p, gamma), a)
    if tag in (FamilyTag.BETA_MODIFIED_RAYLEIGH, FamilyTag.BETA_RAYLEIGH):
        return _exponentiated_cdf((x / scale) ** 2, a)
    if tag is FamilyTag.EXPONENTIATED_EXPONENTIAL:
        return _exponentiated_cdf(x / scale, a)
    if tag is FamilyTag.CLASSICAL_WEIBULL:
        return -math.expm1(-_weibull_z(x, p, gamma))
    if tag in (FamilyTag.MODIFIED_RAYLEIGH, FamilyTag.RAYLEIGH):
        return -math.expm1(-(x / scale) ** 2)
    if tag is FamilyTag.EXPONENTIAL:
        return -math.expm1(-x / scale)
    raise UnsupportedFamilyError(f"no closed form registered for {tag.value}")


def reference_pdf(ref: FamilyRef, p: Bmw6Params, x: float) -> float:
    """
    Closed-form density of a named sub-family, x > 0.

    Raises:
        UnsupportedFamilyError: For BMW6
        DomainError: If x <= 0
    """
    row = family(ref)
    _check_x(x, positive=True)
    tag = row.tag
    a, scale, gamma, lam = p.shape.a, p.inner.beta, p.inner.gamma, p.inner.lam

    if tag is FamilyTag.BMW6:
        raise UnsupportedFamilyError("BMW6 has no independent closed form; use bmw6.pdf")
    if tag is FamilyTag.WEIBULL4:
        return inner_pdf(x, p.inner)
    if tag is FamilyTag.GENERALIZED_WEIBULL_TAU0:
        # gamma (z/x) (1 + z/lambda)^(-lambda-1)
        z = _weibull_z(x, p, gamma)
        return gamma * (z / x) * math.exp((-lam - 1.0) * math.log1p(z / lam))
    if tag is FamilyTag.BETA_WEIBULL:
        return _beta_of_weibull_pdf(x, _weibull_z(x, p, gamma), p, gamma)
    if tag is FamilyTag.BETA_EXPONENTIAL:
        return _beta_of_weibull_pdf(x, x / scale, p, 1.0)
    if tag is FamilyTag.EXPONENTIATED_WEIBULL:
        return _exponentiated_pdf(x, _weibull_z(x, p, gamma), a, gamma, scale)
    if tag in (FamilyTag.BETA_MODIFIED_RAYLEIGH, FamilyTag.BETA_RAYLEIGH):
        return _exponentiated_pdf(x, (x / scale) ** 2, a, 2.0, scale)
    if tag is FamilyTag.EXPONENTIATED_EXPONENTIAL:
        return _exponentiated_pdf(x, x / scale, a, 1.0, scale)
    if tag is FamilyTag.CLASSICAL_WEIBULL:
        return _exponentiated_pdf(x, _weibull_z(x, p, gamma), 1.0, gamma, scale)
    if tag in (FamilyTag.MODIFIED_RAYLEIGH, FamilyTag.RAYLEIGH):
        return _exponentiated_pdf(x, (x / scale) ** 2, 1.0, 2.0, scale)
    if tag is FamilyTag.EXPONENTIAL:
        return math.exp(-x / scale) / scale
    raise UnsupportedFamilyError(f"no closed form registered for {tag.value}")


# ============================================================
# EQUIVALENCE
# ============================================================

@dataclass(frozen=True)
class EquivalenceReport:
    """Sup-norm distance between the general and closed-form paths on a grid"""
    family: NamedFamily
    params: Bmw6Params
    points: int
    max_cdf_diff: float
    max_pdf_diff: float

    @property
    def passed(self) -> bool:
        return self.max_cdf_diff <= EQUIVALENCE_TOL and self.max_pdf_diff <= EQUIVALENCE_TOL

    def format_text(self) -> str:
        verdict = 'PASS' if self.passed else 'FAIL'
        return '\n'.join([
            f"{'family':<14}{self.family.tag.value}",
            f"{'pattern':<14}{self.family.pattern()}",
            f"{'grid points':<14}{self.points}",
            f"{'max |dF|':<14}{self.max_cdf_diff:.3e}",
            f"{'max |df|':<14}{self.max_pdf_diff:.3e}",
            f"{'result':<14}{verdict} (tol {EQUIVALENCE_TOL:g})",
        ])

    def csv_rows(self) -> List[List[str]]:
        header = ['family', 'points', 'max_cdf_diff', 'max_pdf_diff', 'passed']
        row = [self.family.tag.value, str(self.points), repr(self.max_cdf_diff),
               repr(self.max_pdf_diff), 'true' if self.passed else 'false']
        return [header, row]


def equivalence_report(p: Bmw6Params, ref: FamilyRef, grid: Iterable[float]) -> EquivalenceReport:
    """
    Compare bmw6.cdf / bmw6.pdf with the closed forms of `ref` over grid.

    Raises:
        PreconditionError: If classify(p) is not the requested family
        UnsupportedFamilyError: If the family is BMW6
        DomainError: If the grid is empty or holds a point <= 0
    """
    row = family(ref)
    matched = classify(p)
    if matched.tag is not row.tag:
        raise PreconditionError(
            f"parameters ({p}) classify as {matched.tag.value}, not {row.tag.value}"
        )
    if row.tag is FamilyTag.BMW6:
        raise UnsupportedFamilyError("BMW6 has no independent closed form to compare against")

    points = [float(x) for x in grid]
    if not points:
        raise DomainError("equivalence grid is empty")

    max_cdf = 0.0
    max_pdf = 0.0
    for x in points:
        _check_x(x, positive=True)
        max_cdf = max(max_cdf, abs(bmw6.cdf(x, p) - reference_cdf(row, p, x)))
        max_pdf = max(max_pdf, abs(bmw6.pdf(x, p) - reference_pdf(row, p, x)))

    return EquivalenceReport(family=row, params=p, points=len(points),
                             max_cdf_diff=max_cdf, max_pdf_diff=max_pdf)
