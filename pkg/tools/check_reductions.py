#!/usr/bin/env python3
"""
Reduction check
Runs the equivalence report for one representative parameter set per
catalogue row and exits non-zero if any row fails.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'lib'))

from bmw6 import Bmw6Params
from curves import make_grid
from reductions import FamilyTag, classify, equivalence_report

GRID_POINTS = 200

# (a, b, lambda, beta, gamma, tau) that land on each row
REPRESENTATIVES = {
    FamilyTag.BETA_WEIBULL: (0.8, 0.8, 0.8, 0.8, 1.5, 1),
    FamilyTag.BETA_MODIFIED_RAYLEIGH: (1.7, 1, 3.0, 1.4, 2, 1),
    FamilyTag.BETA_RAYLEIGH: (0.6, 1, 1, 1, 2, 1),
    FamilyTag.BETA_EXPONENTIAL: (0.7, 0.7, 0.7, 1.3, 1, 1),
    FamilyTag.EXPONENTIATED_WEIBULL: (1.5, 1, 1.9, 0.6, 1.4, 1),
    FamilyTag.EXPONENTIATED_EXPONENTIAL: (0.4, 1, 3.5, 3, 1, 1),
    FamilyTag.WEIBULL4: (1, 1, 0.8, 0.8, 1.5, 2),
    FamilyTag.GENERALIZED_WEIBULL_TAU0: (1, 1, 2, 1.2, 1.3, 0),
    FamilyTag.MODIFIED_RAYLEIGH: (1, 1, 1, 2.5, 2, 1),
    FamilyTag.CLASSICAL_WEIBULL: (1, 1, 0.5, 0.2, 0.6, 1),
    FamilyTag.RAYLEIGH: (1, 1, 1, 1, 2, 1),
    FamilyTag.EXPONENTIAL: (1, 1, 0.5, 1.5, 1, 1),
}


def check_reductions() -> bool:
    print("Checking sub-family reductions...")
    all_passed = True

    for tag, values in REPRESENTATIVES.items():
        p = Bmw6Params.from_values(*values)
        matched = classify(p)
        if matched.tag is not tag:
            print(f"  {tag.value:<26} MISCLASSIFIED as {matched.tag.value}")
            all_passed = False
            continue

        scale = p.inner.beta
        grid = make_grid(1e-3 * scale, 10.0 * scale, GRID_POINTS, 'log')
        report = equivalence_report(p, matched, grid)
        verdict = 'ok' if report.passed else 'FAIL'
        print(f"  {tag.value:<26} dF={report.max_cdf_diff:.2e}  df={report.max_pdf_diff:.2e}  {verdict}")
        all_passed = all_passed and report.passed

    print("\nAll rows pass." if all_passed else "\nSome rows FAILED.")
    return all_passed


if __name__ == "__main__":
    sys.exit(0 if check_reductions() else 1)
