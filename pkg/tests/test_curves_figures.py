import csv
import io
import logging
import math

import pytest

from bmw6 import cdf, hazard, pdf
from conftest import params
from curves import CurveTable, evaluate_column, evaluate_curve, make_grid
from errors import DomainError, HazardOverflowError
from figures import (
    FIGURE_POINTS,
    FIGURE_SETS,
    FigurePanel,
    figure_grid,
    figure_sets,
    find_figure_set,
    render_figure,
    write_figure,
)
from formatting import CURED_TOKEN, format_draw, format_value


def _read_csv(path):
    with open(path, newline='', encoding='utf-8') as f:
        return list(csv.reader(f))


# ============================================================
# FORMATTING
# ============================================================

def test_format_value():
    assert format_value(None) == ''
    assert format_value(0.1) == '0.10000000000000001'
    assert float(format_value(1.0 / 3.0)) == 1.0 / 3.0
    assert format_value(math.inf) == 'inf'
    assert format_value(2.0) == '2'
    with pytest.raises(ValueError):
        format_value(math.nan)


def test_format_draw():
    assert format_draw(None) == CURED_TOKEN
    assert format_draw(1.5) == '1.5'


# ============================================================
# GRIDS AND TABLES
# ============================================================

def test_make_grid():
    assert make_grid(0.0, 5.0, 6) == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]
    log_grid = make_grid(1e-3, 10.0, 5, 'log')
    assert log_grid[0] == pytest.approx(1e-3)
    assert log_grid[-1] == pytest.approx(10.0)
    assert log_grid[2] == pytest.approx(0.1)


@pytest.mark.parametrize("xmin, xmax, n, spacing", [
    (0.0, 1.0, 1, 'linear'),
    (1.0, 1.0, 5, 'linear'),
    (0.0, math.inf, 5, 'linear'),
    (0.0, 1.0, 5, 'log'),
    (0.1, 1.0, 5, 'cubic'),
])
def test_make_grid_rejects(xmin, xmax, n, spacing):
    with pytest.raises(DomainError):
        make_grid(xmin, xmax, n, spacing)


def test_curve_table_validation():
    with pytest.raises(DomainError):
        CurveTable([1.0, 1.0])
    table = CurveTable([1.0, 2.0])
    with pytest.raises(DomainError):
        table.add_column('pdf', [0.5])


def test_curve_table_csv():
    table = CurveTable([1.0, 2.0], {'pdf': [0.25, None], 'cdf': [0.5, 1.0]})
    out = io.StringIO()
    table.to_csv(out)
    assert out.getvalue() == 'x,pdf,cdf\n1,0.25,0.5\n2,,1\n'
    assert table.blank_count('pdf') == 1


def test_exponential_cdf_column():
    p = params(1, 1, 1, 1, 1, 1)
    table = evaluate_curve('cdf', p, make_grid(0.0, 5.0, 6))
    for x, value in zip(table.x, table.columns['cdf']):
        assert value == pytest.approx(-math.expm1(-x), rel=1e-15)


def test_evaluate_column_rejects():
    p = find_figure_set('N1').params
    with pytest.raises(DomainError):
        evaluate_column('mean', p, [1.0])
    with pytest.raises(DomainError):
        evaluate_column('pdf', p, [0.0, 1.0])
    with pytest.raises(DomainError):
        evaluate_column('hazard', p, [0.0, 1.0])
    assert evaluate_column('cdf', p, [0.0, 1.0])[0] == 0.0


def test_hazard_overflow_blanks(caplog):
    p = find_figure_set('N2').params
    grid = [1.0, 50.0]
    with pytest.raises(HazardOverflowError):
        evaluate_column('hazard', p, grid)
    with caplog.at_level(logging.WARNING, logger='curves'):
        values = evaluate_column('hazard', p, grid, blank_overflow=True)
    assert values[0] == hazard(1.0, p)
    assert values[1] is None
    assert 'blank' in caplog.text


# ============================================================
# FIGURE SETS
# ============================================================

def test_figure_sets_catalogue():
    assert len(FIGURE_SETS) == 11
    assert [fs.label for fs in figure_sets('FigA')] == ['BW', 'BE', 'N1', 'N2', 'N3']
    assert [fs.label for fs in figure_sets('FigB')] == ['GMW', 'WE', 'GR', 'W', 'EE', 'E']
    assert len(figure_sets('all')) == 11
    assert find_figure_set('N2').params == params(1.5, 3.5, 0.5, 1.5, 4, 4)
    assert find_figure_set('GMW').panel is FigurePanel.FIG_B
    assert find_figure_set('BW').file_name == 'FigA_BW.csv'
    with pytest.raises(DomainError):
        figure_sets('FigC')
    with pytest.raises(DomainError):
        find_figure_set('N4')


def test_figure_grid():
    grid = figure_grid()
    assert len(grid) == FIGURE_POINTS
    assert grid[0] == pytest.approx(1e-3)
    assert grid[-1] == pytest.approx(8.0)


def test_write_figure_matches_library(tmp_path):
    fs = find_figure_set('N1')
    path, table = write_figure(fs, str(tmp_path))
    rows = _read_csv(path)
    assert rows[0] == ['x', 'pdf', 'hazard']
    assert len(rows) == FIGURE_POINTS + 1
    for row in rows[1:]:
        x = float(row[0])
        assert float(row[1]) == pdf(x, fs.params)
        assert float(row[2]) == hazard(x, fs.params)


def test_figures_are_deterministic(tmp_path):
    first, second = tmp_path / 'one', tmp_path / 'two'
    for fs in FIGURE_SETS:
        path_a, _ = write_figure(fs, str(first))
        path_b, _ = write_figure(fs, str(second))
        with open(path_a, 'rb') as fa, open(path_b, 'rb') as fb:
            assert fa.read() == fb.read()
    assert len(list(first.iterdir())) == 11


def test_exponential_figure_hazard_constant():
    table = render_figure(find_figure_set('E'))
    assert table.blank_count('hazard') == 0
    for value in table.columns['hazard']:
        assert abs(value - 1.0 / 1.5) <= 1e-12


def test_weibull_figure_hazard_strictly_decreasing():
    values = render_figure(find_figure_set('W')).columns['hazard']
    finite = [v for v in values if v is not None]
    assert len(finite) > 100
    assert all(v1 > v2 for v1, v2 in zip(finite, finite[1:]))


@pytest.mark.parametrize("label", ['N2', 'GMW'])
def test_steep_sets_leave_blank_hazard_cells(label):
    table = render_figure(find_figure_set(label))
    blanks = table.blank_count('hazard')
    assert 0 < blanks < FIGURE_POINTS
    # blanks only at the right end, where survival has underflowed
    hazards = table.columns['hazard']
    assert all(v is None for v in hazards[FIGURE_POINTS - blanks:])


def test_figure_cdf_independent_check():
    fs = find_figure_set('E')
    table = evaluate_curve(['cdf'], fs.params, figure_grid())
    for x, value in zip(table.x, table.columns['cdf']):
        assert value == cdf(x, fs.params)
        assert value == pytest.approx(-math.expm1(-x / 1.5), rel=1e-13)
