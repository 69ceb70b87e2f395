#!/usr/bin/env python3
"""
BMW6 - Beta Modified Weibull command line
Evaluate the distribution, write the figure-set curves, classify reductions
and draw samples.

Usage:
  python scripts/bmw6.py eval cdf --a 1 --b 1 --lambda 1 --beta 1 --gamma 1 --tau 1 --xmin 0 --xmax 5 -n 6
  python scripts/bmw6.py eval hazard --params-file config/examples/figure_sets.json --set E --xmin 0.01 --xmax 8
  python scripts/bmw6.py figure all --out figures
  python scripts/bmw6.py reduce --a 1 --b 1 --lambda 1 --beta 1 --gamma 2 --tau 1
  python scripts/bmw6.py sample --a 1 --b 1 --lambda 1 --beta 1 --gamma 1 --tau -1 -n 100000 --seed 7
  python scripts/bmw6.py catalog
  python scripts/bmw6.py shapes
"""

import sys
import os

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'lib'))

from cli import main

if __name__ == '__main__':
    sys.exit(main())
