import os
import sys

import numpy as np
import pytest

ROOT = os.path.join(os.path.dirname(__file__), '..')
sys.path.insert(0, os.path.join(ROOT, 'lib'))

from bmw6 import Bmw6Params  # noqa: E402
from figures import FIGURE_SETS  # noqa: E402

FIGURE_SETS_JSON = os.path.join(ROOT, 'config', 'examples', 'figure_sets.json')
CURE_RATE_JSON = os.path.join(ROOT, 'config', 'examples', 'cure_rate_example.json')


def params(a, b, lam, beta, gamma, tau) -> Bmw6Params:
    """(a, b, lambda, beta, gamma, tau) in listing order"""
    return Bmw6Params.from_values(a, b, lam, beta, gamma, tau)


def random_params(rng: np.random.Generator, tau_range=(0.05, 4.0)) -> Bmw6Params:
    a, b, lam, beta, gamma = rng.uniform(0.3, 4.0, size=5)
    tau = rng.uniform(*tau_range)
    return params(a, b, lam, beta, gamma, tau)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=FIGURE_SETS, ids=lambda fs: fs.label)
def figure_set(request):
    return request.param


@pytest.fixture
def figure_sets_json():
    return FIGURE_SETS_JSON


@pytest.fixture
def cure_rate_json():
    return CURE_RATE_JSON
