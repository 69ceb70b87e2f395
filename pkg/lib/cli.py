"""
Command-line front end
Subcommands: eval, figure, reduce, sample, catalog, shapes.

Data (CSV, samples, reports) goes to stdout or to files; status lines and
errors go to stderr. Exit codes: 0 success, 2 usage or domain error,
3 evaluation error, 4 I/O error.
"""

import argparse
import csv
import logging
import sys
from typing import List, Optional

import settings
from bmw6 import PARAM_KEYS, Bmw6Params
from config_loader import ConfigLoader
from curves import FUNCTIONS, SPACINGS, evaluate_curve, make_grid
from errors import Bmw6Error, ConvergenceError, HazardOverflowError, QuantileOverflowError
from figures import FIGURE_SETS, figure_sets, write_figure
from formatting import format_draw
from reductions import DEFAULT_CLASSIFY_TOL, FamilyTag, catalog, classify, equivalence_report
from sampler import SeedSpec, sample, sample_beta_compose, split_outcomes
from shapes import DEFAULT_SCAN_POINTS, density_shape, hazard_shape

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_EVALUATION = 3
EXIT_IO = 4

REDUCE_GRID_POINTS = 200
# flag dest -> JSON key
_PARAM_FLAGS = {'a': 'a', 'b': 'b', 'lam': 'lambda', 'beta': 'beta', 'gamma': 'gamma', 'tau': 'tau'}


# ============================================================
# PARAMETERS
# ============================================================

def _add_param_args(parser: argparse.ArgumentParser):
    group = parser.add_argument_group('parameters (a, b, lambda, beta, gamma, tau)')
    group.add_argument('--a', type=float, default=None, help='Beta shape a > 0')
    group.add_argument('--b', type=float, default=None, help='Beta shape b > 0')
    group.add_argument('--lambda', dest='lam', type=float, default=None, help='lambda > 0')
    group.add_argument('--beta', type=float, default=None, help='Scale beta > 0')
    group.add_argument('--gamma', type=float, default=None, help='Shape gamma > 0')
    group.add_argument('--tau', type=float, default=None, help='tau, any finite value')
    group.add_argument('--params-file', type=str, default=None,
                       help='JSON file of named parameter sets')
    group.add_argument('--set', dest='set_name', type=str, default=None,
                       help='Name of the set to use from --params-file')


def _has_explicit_params(args: argparse.Namespace) -> bool:
    return args.params_file is not None or any(getattr(args, dest) is not None for dest in _PARAM_FLAGS)


def resolve_params(args: argparse.Namespace) -> Bmw6Params:
    """
    Parameters from --params-file/--set, overridden by explicit flags.

    Raises:
        ValueError: If --set is missing or unknown, or a parameter is not given
        FileNotFoundError: If the params file doesn't exist
        DomainError: If a value is out of range
    """
    values = {}
    if args.params_file:
        if not args.set_name:
            raise ValueError("--params-file needs --set <name>")
        config = ConfigLoader.load(args.params_file)
        values.update(ConfigLoader.get_param_set(config, args.set_name).as_dict())
    elif args.set_name:
        raise ValueError("--set needs --params-file <path>")

    for dest, key in _PARAM_FLAGS.items():
        flag_value = getattr(args, dest)
        if flag_value is not None:
            values[key] = flag_value

    missing = [key for key in PARAM_KEYS if key not in values]
    if missing:
        raise ValueError(f"missing parameters: {', '.join('--' + key for key in missing)}")
    return Bmw6Params.from_mapping(values)


# ============================================================
# COMMANDS
# ============================================================

def cmd_eval(args: argparse.Namespace) -> int:
    """CSV `x,<func>` of one library function over a grid."""
    p = resolve_params(args)
    grid = make_grid(args.xmin, args.xmax, args.n, args.spacing)
    table = evaluate_curve(args.func, p, grid)
    table.to_csv(sys.stdout)
    return EXIT_OK


def cmd_figure(args: argparse.Namespace) -> int:
    """One CSV per figure set in the output directory."""
    out_dir = args.out or settings.get_output_dir()
    sets = figure_sets(args.panel)
    print(f"Writing {len(sets)} figure set(s) to {out_dir}/", file=sys.stderr)
    for fs in sets:
        path, table = write_figure(fs, out_dir)
        blanks = table.blank_count('hazard')
        note = f"  ({blanks} blank hazard cells)" if blanks else ''
        print(f"  {path}{note}", file=sys.stderr)
    print(f"Done: {len(sets)} file(s)", file=sys.stderr)
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    """Classify a parameter set and, for a named sub-family, check it against the closed form."""
    p = resolve_params(args)
    matched = classify(p, args.tol)

    report = None
    if matched.tag is not FamilyTag.BMW6:
        scale = p.inner.beta
        grid = make_grid(1e-3 * scale, 10.0 * scale, REDUCE_GRID_POINTS, 'log')
        report = equivalence_report(p, matched, grid)

    if args.format == 'csv':
        writer = csv.writer(sys.stdout, lineterminator='\n')
        if report is None:
            writer.writerows([['family', 'points', 'max_cdf_diff', 'max_pdf_diff', 'passed'],
                              [matched.tag.value, '', '', '', '']])
        else:
            writer.writerows(report.csv_rows())
        return EXIT_OK

    print(matched.tag.value)
    if report is not None:
        print(report.format_text())
    return EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    """One draw per line (value or `cured`), then `# finite=<k> cured=<m>`."""
    p = resolve_params(args)
    seed = SeedSpec(args.seed if args.seed is not None else settings.get_seed(), args.stream)
    draw = sample_beta_compose if args.method == 'compose' else sample
    outcomes = draw(p, args.n, seed)
    finite, cured = split_outcomes(outcomes)

    lines = [format_draw(o.x) for o in outcomes]
    lines.append(f"# finite={len(finite)} cured={cured}")
    sys.stdout.write('\n'.join(lines) + '\n')
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    """The sub-family catalogue as a fixed-column table."""
    print(f"{'family':<26}{'abbr':<6}{'pinned':<46}free")
    for row in catalog():
        print(f"{row.tag.value:<26}{row.abbrev:<6}{row.pattern():<46}{', '.join(row.free_params)}")
    return EXIT_OK


def cmd_shapes(args: argparse.Namespace) -> int:
    """Density and hazard shape class for each figure set, or for one explicit set."""
    if _has_explicit_params(args):
        targets = [('custom', resolve_params(args))]
    else:
        targets = [(fs.label, fs.params) for fs in FIGURE_SETS]

    print(f"{'set':<8}{'density':<12}hazard")
    for label, p in targets:
        density = density_shape(p, args.xmin, args.xmax, args.n)
        haz = hazard_shape(p, args.xmin, args.xmax, args.n)
        print(f"{label:<8}{density.value:<12}{haz.value}")
    return EXIT_OK


# ============================================================
# PARSER / ENTRY POINT
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bmw6',
        description='Beta modified Weibull distribution: evaluation, figures, reductions, sampling',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='Examples:\n'
               '  python scripts/bmw6.py eval cdf --a 1 --b 1 --lambda 1 --beta 1 --gamma 1 --tau 1 '
               '--xmin 0 --xmax 5 -n 6\n'
               '  python scripts/bmw6.py figure all --out figures\n'
               '  python scripts/bmw6.py reduce --a 1 --b 1 --lambda 1 --beta 1 --gamma 2 --tau 1\n'
               '  python scripts/bmw6.py sample --params-file config/examples/figure_sets.json '
               '--set N1 -n 10 --seed 7\n'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    pe = sub.add_parser('eval', help='Evaluate one function over a grid (CSV)')
    pe.add_argument('func', choices=list(FUNCTIONS), help='Function to evaluate')
    _add_param_args(pe)
    pe.add_argument('--xmin', type=float, required=True, help='First grid point (q for quantile)')
    pe.add_argument('--xmax', type=float, required=True, help='Last grid point')
    pe.add_argument('-n', type=int, default=100, help='Number of grid points (default: 100)')
    pe.add_argument('--spacing', choices=SPACINGS, default='linear',
                    help='Grid spacing (default: linear)')
    pe.set_defaults(func_cmd=cmd_eval)

    pf = sub.add_parser('figure', help='Write the figure-set curves as CSV files')
    pf.add_argument('panel', nargs='?', choices=['FigA', 'FigB', 'all'], default='all',
                    help='Which panel to write (default: all)')
    pf.add_argument('--out', type=str, default=None,
                    help='Output directory (default: BMW6_OUTPUT_DIR or figures)')
    pf.set_defaults(func_cmd=cmd_figure)

    pr = sub.add_parser('reduce', help='Classify parameters against the sub-family catalogue')
    _add_param_args(pr)
    pr.add_argument('--format', choices=['text', 'csv'], default='text', help='Report format (default: text)')
    pr.add_argument('--tol', type=float, default=DEFAULT_CLASSIFY_TOL,
                    help=f'Matching tolerance (default: {DEFAULT_CLASSIFY_TOL:g})')
    pr.set_defaults(func_cmd=cmd_reduce)

    ps = sub.add_parser('sample', help='Draw random variates, one per line')
    _add_param_args(ps)
    ps.add_argument('-n', type=int, default=1000, help='Number of draws (default: 1000)')
    ps.add_argument('--seed', type=int, default=None, help='Seed (default: BMW6_SEED or 20240601)')
    ps.add_argument('--stream', type=int, default=0, help='Stream identifier (default: 0)')
    ps.add_argument('--method', choices=['inverse', 'compose'], default='inverse',
                    help='inverse transform or beta composition (default: inverse)')
    ps.set_defaults(func_cmd=cmd_sample)

    pc = sub.add_parser('catalog', help='List the sub-family catalogue')
    pc.set_defaults(func_cmd=cmd_catalog)

    pz = sub.add_parser('shapes', help='Classify density and hazard shapes')
    _add_param_args(pz)
    pz.add_argument('--xmin', type=float, default=1e-3, help='Scan start (default: 1e-3)')
    pz.add_argument('--xmax', type=float, default=8.0, help='Scan end (default: 8)')
    pz.add_argument('-n', type=int, default=DEFAULT_SCAN_POINTS,
                    help=f'Scan points (default: {DEFAULT_SCAN_POINTS})')
    pz.set_defaults(func_cmd=cmd_shapes)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        logging.basicConfig(level=settings.get_log_level(), stream=sys.stderr,
                            format='%(levelname)s %(name)s: %(message)s')
        return args.func_cmd(args)
    except (ConvergenceError, HazardOverflowError, QuantileOverflowError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_EVALUATION
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_IO
    except (Bmw6Error, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
