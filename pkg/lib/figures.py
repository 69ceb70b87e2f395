"""
Figure Sets
The eleven built-in parameter sets behind the density and hazard figures,
and the CSV export of their curves.

Values are listed in (a, b, lambda, beta, gamma, tau) order.
"""

import logging
import os
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from bmw6 import Bmw6Params
from curves import CurveTable, evaluate_curve, make_grid
from errors import DomainError

logger = logging.getLogger(__name__)

FIGURE_XMIN = 1e-3
FIGURE_XMAX = 8.0
FIGURE_POINTS = 400
FIGURE_COLUMNS = ('pdf', 'hazard')


class FigurePanel(Enum):
    FIG_A = 'FigA'
    FIG_B = 'FigB'


@dataclass(frozen=True)
class FigureSet:
    label: str
    panel: FigurePanel
    params: Bmw6Params
    description: str = ''

    @property
    def file_name(self) -> str:
        return f"{self.panel.value}_{self.label}.csv"


def _fs(label: str, panel: FigurePanel, values: Tuple[float, ...], description: str) -> FigureSet:
    return FigureSet(label, panel, Bmw6Params.from_values(*values), description)


FIGURE_SETS: Tuple[FigureSet, ...] = (
    _fs('BW', FigurePanel.FIG_A, (0.8, 0.8, 0.8, 0.8, 1.5, 1), 'beta Weibull'),
    _fs('BE', FigurePanel.FIG_A, (0.7, 0.7, 0.7, 1.3, 1, 1), 'beta exponential'),
    _fs('N1', FigurePanel.FIG_A, (1.5, 0.8, 1.2, 0.8, 1.2, 2), 'new family, tau = 2'),
    _fs('N2', FigurePanel.FIG_A, (1.5, 3.5, 0.5, 1.5, 4, 4), 'new family, tau = 4'),
    _fs('N3', FigurePanel.FIG_A, (0.5, 0.5, 0.5, 0.5, 0.5, 0.5), 'new family, all 0.5'),
    _fs('GMW', FigurePanel.FIG_B, (0.2, 1, 0.001, 2.4, 3.5, 3.5), 'generalized modified Weibull'),
    _fs('WE', FigurePanel.FIG_B, (1.5, 1, 1.9, 0.6, 1.4, 1), 'Weibull exponentiated'),
    _fs('GR', FigurePanel.FIG_B, (0.25, 1, 0.001, 1, 2, 1), 'generalized Rayleigh'),
    _fs('W', FigurePanel.FIG_B, (1, 1, 0.5, 0.2, 0.6, 1), 'Weibull'),
    _fs('EE', FigurePanel.FIG_B, (0.4, 1, 3.5, 3, 1, 1), 'exponentiated exponential'),
    _fs('E', FigurePanel.FIG_B, (1, 1, 0.5, 1.5, 1, 1), 'exponential'),
)


def figure_sets(panel: str = 'all') -> List[FigureSet]:
    """Sets of one panel ('FigA', 'FigB') or of both ('all')."""
    if panel == 'all':
        return list(FIGURE_SETS)
    try:
        wanted = FigurePanel(panel)
    except ValueError:
        raise DomainError(f"panel must be FigA, FigB or all, got {panel!r}") from None
    return [fs for fs in FIGURE_SETS if fs.panel is wanted]


def find_figure_set(label: str) -> FigureSet:
    for fs in FIGURE_SETS:
        if fs.label == label:
            return fs
    raise DomainError(f"no figure set labelled {label!r}")


def figure_grid() -> List[float]:
    return make_grid(FIGURE_XMIN, FIGURE_XMAX, FIGURE_POINTS, 'log')


def render_figure(fs: FigureSet) -> CurveTable:
    """pdf and hazard on the figure grid; hazard cells past survival underflow are blank"""
    return evaluate_curve(list(FIGURE_COLUMNS), fs.params, figure_grid(), blank_overflow=True)


def write_figure(fs: FigureSet, out_dir: str) -> Tuple[str, CurveTable]:
    """
    Render one set and write `<panel>_<label>.csv` into out_dir.

    Raises:
        OSError: If the directory cannot be created or the file written
    """
    os.makedirs(out_dir, exist_ok=True)
    table = render_figure(fs)
    path = os.path.join(out_dir, fs.file_name)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        table.to_csv(f)
    logger.info("wrote %s (%d rows)", path, len(table.x))
    return path, table
