import math

import pytest

from conftest import params
from errors import DomainError
from figures import FIGURE_SETS, FIGURE_XMAX, FIGURE_XMIN, find_figure_set
from shapes import ShapeClass, classify_values, density_shape, hazard_shape

# (density, hazard) on the default 10^4-point scan of [FIGURE_XMIN, FIGURE_XMAX]
PINNED_SHAPES = {
    'BW': (ShapeClass.UNIMODAL, ShapeClass.INCREASING),
    'BE': (ShapeClass.DECREASING, ShapeClass.DECREASING),
    'N1': (ShapeClass.UNIMODAL, ShapeClass.INCREASING),
    'N2': (ShapeClass.UNIMODAL, ShapeClass.INCREASING),
    'N3': (ShapeClass.DECREASING, ShapeClass.DECREASING),
    # x^(a gamma - 1) falls first, then (1 + z/lambda)^(tau-1) takes over
    'GMW': (ShapeClass.OTHER, ShapeClass.BATHTUB),
    'WE': (ShapeClass.UNIMODAL, ShapeClass.INCREASING),
    'GR': (ShapeClass.DECREASING, ShapeClass.BATHTUB),
    'W': (ShapeClass.DECREASING, ShapeClass.DECREASING),
    'EE': (ShapeClass.DECREASING, ShapeClass.DECREASING),
    'E': (ShapeClass.DECREASING, ShapeClass.CONSTANT),
}


@pytest.mark.parametrize("values, expected", [
    ([1.0, 2.0, 3.0], ShapeClass.INCREASING),
    ([3.0, 2.0, 1.0], ShapeClass.DECREASING),
    ([3.0, 1.0, 2.0], ShapeClass.BATHTUB),
    ([1.0, 3.0, 2.0], ShapeClass.UNIMODAL),
    ([2.0, 2.0, 2.0], ShapeClass.CONSTANT),
    ([1.0, 2.0, 1.0, 2.0], ShapeClass.OTHER),
    ([1.0, 1.0, 2.0, 2.0, 3.0], ShapeClass.INCREASING),
])
def test_classify_values(values, expected):
    assert classify_values(values) is expected


def test_classify_values_ignores_rounding_noise():
    values = [2.0 / 3.0 * (1.0 + 1e-15 * ((-1) ** i)) for i in range(50)]
    assert classify_values(values) is ShapeClass.CONSTANT


@pytest.mark.parametrize("values", [[1.0], [1.0, math.nan], [1.0, math.inf]])
def test_classify_values_rejects(values):
    with pytest.raises(DomainError):
        classify_values(values)


def test_weibull_hazard_decreasing():
    p = find_figure_set('W').params
    assert hazard_shape(p, FIGURE_XMIN, FIGURE_XMAX) is ShapeClass.DECREASING


def test_exponential_hazard_constant():
    p = find_figure_set('E').params
    assert hazard_shape(p, FIGURE_XMIN, FIGURE_XMAX) is ShapeClass.CONSTANT
    assert density_shape(p, FIGURE_XMIN, FIGURE_XMAX) is ShapeClass.DECREASING


def test_n2_density_unimodal():
    p = find_figure_set('N2').params
    assert density_shape(p, FIGURE_XMIN, FIGURE_XMAX) is ShapeClass.UNIMODAL


def test_rayleigh_hazard_increasing():
    assert hazard_shape(params(1, 1, 1, 1, 2, 1), FIGURE_XMIN, FIGURE_XMAX) is ShapeClass.INCREASING


def test_figure_set_shapes(figure_set):
    p = figure_set.params
    density = density_shape(p, FIGURE_XMIN, FIGURE_XMAX)
    hazard = hazard_shape(p, FIGURE_XMIN, FIGURE_XMAX)
    assert (density, hazard) == PINNED_SHAPES[figure_set.label]


def test_every_figure_set_is_pinned():
    assert set(PINNED_SHAPES) == {fs.label for fs in FIGURE_SETS}


def test_scan_arguments():
    p = find_figure_set('E').params
    with pytest.raises(DomainError):
        density_shape(p, 0.0, 8.0)
    with pytest.raises(DomainError):
        density_shape(p, 1.0, 8.0, n=2)


def test_hazard_scan_needs_surviving_mass():
    # survival is already below the floor at the first scan point
    p = find_figure_set('N2').params
    with pytest.raises(DomainError):
        hazard_shape(p, 20.0, 40.0, n=100)
