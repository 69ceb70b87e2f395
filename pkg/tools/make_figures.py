#!/usr/bin/env python3
"""
Figure regeneration script
Writes every figure-set CSV and prints the density/hazard shape of each set.
Run this after changing anything in lib/ that feeds the figures.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'lib'))

import settings
from figures import FIGURE_SETS, FIGURE_XMAX, FIGURE_XMIN, write_figure
from shapes import density_shape, hazard_shape


def make_figures(out_dir: str):
    """Write all figure CSVs into out_dir and report shapes"""
    print(f"Writing figure sets to {out_dir}/ ...")

    for fs in FIGURE_SETS:
        path, table = write_figure(fs, out_dir)
        blanks = table.blank_count('hazard')
        density = density_shape(fs.params, FIGURE_XMIN, FIGURE_XMAX)
        haz = hazard_shape(fs.params, FIGURE_XMIN, FIGURE_XMAX)
        line = f"  {os.path.basename(path):<14} density={density.value:<11} hazard={haz.value}"
        if blanks:
            line += f"  ({blanks} blank hazard cells)"
        print(line)

    print(f"\n{len(FIGURE_SETS)} files written to: {out_dir}")


if __name__ == "__main__":
    make_figures(sys.argv[1] if len(sys.argv) > 1 else settings.get_output_dir())
