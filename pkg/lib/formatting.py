"""
Number formatting for CSV and sample output.

Every value the command line emits goes through here, so the text always
parses back to the same double:

  - values use 17 significant digits (.17g)
  - a missing value (hazard where survival underflowed) is an empty cell
  - a cured draw is the literal token `cured`
"""

import math
from typing import Optional

SIGNIFICANT_DIGITS = 17
CURED_TOKEN = 'cured'


def format_value(value: Optional[float]) -> str:
    """Render one CSV cell.

    Args:
        value: The library result, or None for a blank cell.

    Returns:
        '' for None, otherwise the value with 17 significant digits
        ('inf' / '-inf' pass through for log-densities).
    """
    if value is None:
        return ''
    if math.isnan(value):
        raise ValueError("NaN reached the output layer; the library never returns NaN")
    return format(float(value), f'.{SIGNIFICANT_DIGITS}g')


def format_draw(x: Optional[float]) -> str:
    """One sample line: the value, or `cured` when x is None."""
    return CURED_TOKEN if x is None else format_value(x)
