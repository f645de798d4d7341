"""CayleyQMC command-line interface.

Subcommands write data (CSV or JSON) to standard output and log to standard
error. Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
3 the requested volume is infeasible for the engine.

Example:

    cayleyqmc solve-boundary --beta 1 --alpha auto --levels 4
    cayleyqmc orbit --beta 1 --x0 1 --y0 0.5
    cayleyqmc verify --suite compat --beta 1
    cayleyqmc expect observable.json --n 2 --engine both
    cayleyqmc free-energy --beta-min 0.1 --beta-max 3 --beta-steps 30 --n 20
"""
import argparse
import concurrent.futures
import logging
import sys

from dataclasses import dataclass

import numpy as np

from cayleyqmc.settings import CAYLEYQMC_FUNCTIONAL_TOL
from cayleyqmc.settings import CAYLEYQMC_OPERATOR_TOL
from cayleyqmc.settings import CAYLEYQMC_ORBIT_MAX_STEPS

from cayleyqmc.data import utils as data_utils

from cayleyqmc.src import utils

from cayleyqmc.src.boundary import BoundaryPoint
from cayleyqmc.src.boundary import alpha_fixed
from cayleyqmc.src.boundary import orbit
from cayleyqmc.src.boundary import solution_family
from cayleyqmc.src.cli.suites import SUITES
from cayleyqmc.src.cli.suites import run_suite
from cayleyqmc.src.definitions import Engine
from cayleyqmc.src.errors import DomainError
from cayleyqmc.src.errors import FeasibilityError
from cayleyqmc.src.errors import ObservableParseError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.errors import SupportError
from cayleyqmc.src.errors import UsageError
from cayleyqmc.src.state import FiniteVolumeState
from cayleyqmc.src.state import eq1_residual
from cayleyqmc.src.state import eq2_residuals
from cayleyqmc.src.state import free_energy
from cayleyqmc.src.state import free_energy_limit
from cayleyqmc.src.tree.diagram import ball_diagram
from cayleyqmc.src.tree.diagram import render_ball_diagram

logger = utils.create_logger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3

USAGE_ERRORS = (UsageError, ParameterError, DomainError, ObservableParseError)
FEASIBILITY_ERRORS = (FeasibilityError, SupportError)

ALPHA_AUTO = 'auto'
ENGINE_BOTH = 'both'
DEFAULT_SAMPLES = 100


@dataclass(frozen=True)
class RunConfig:
    """Parameters shared by every subcommand."""
    betas: tuple = (1.0,)
    alpha: float = None
    n: int = 2
    engine: str = Engine.AUTO.value
    tol: float = CAYLEYQMC_FUNCTIONAL_TOL
    operator_tol: float = CAYLEYQMC_OPERATOR_TOL
    seed: int = 0
    samples: int = DEFAULT_SAMPLES
    workers: int = 1
    out: str = None

    def __post_init__(self):
        if not self.betas:
            raise UsageError('The beta grid is empty')
        for beta in self.betas:
            if not np.isfinite(beta) or beta <= 0:
                raise UsageError(f'beta must be positive, got {beta}')
        if self.alpha is not None and not self.alpha > 0:
            raise UsageError(f'alpha must be positive, got {self.alpha}')
        if self.n < 0:
            raise UsageError(f'n must be >= 0, got {self.n}')
        if not (self.tol > 0 and self.operator_tol > 0):
            raise UsageError('Tolerances must be positive')
        if self.samples < 1 or self.workers < 1:
            raise UsageError('samples and workers must be >= 1')

    @classmethod
    def from_args(cls, args):
        if args.beta_steps is not None:
            if args.beta_min is None or args.beta_max is None:
                raise UsageError(
                    '--beta-steps needs --beta-min and --beta-max')
            if args.beta_steps < 1:
                raise UsageError('--beta-steps must be >= 1')
            betas = tuple(float(b) for b in np.linspace(
                args.beta_min, args.beta_max, args.beta_steps))
        else:
            betas = tuple(args.beta or (1.0,))
        return cls(
            betas=betas,
            alpha=args.alpha,
            n=args.n,
            engine=args.engine,
            tol=args.tol,
            operator_tol=args.operator_tol,
            seed=args.seed,
            samples=getattr(args, 'samples', DEFAULT_SAMPLES),
            workers=getattr(args, 'workers', 1),
            out=args.out)

    @property
    def beta(self):
        """The single inverse temperature of a non-scan subcommand."""
        if len(self.betas) != 1:
            raise UsageError('This subcommand takes a single --beta')
        return self.betas[0]

    def alpha_for(self, beta):
        """Resolve ``--alpha auto`` to 1 / cosh^4 beta."""
        return alpha_fixed(beta) if self.alpha is None else self.alpha


def _alpha(text):
    if text == ALPHA_AUTO:
        return None
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'expected a number or {ALPHA_AUTO!r}, got {text!r}')


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true',
                        help='Log at DEBUG level.')
    common.add_argument('--beta', type=float, action='append',
                        help='Inverse temperature (repeatable).')
    common.add_argument('--beta-min', type=float)
    common.add_argument('--beta-max', type=float)
    common.add_argument('--beta-steps', type=int)
    common.add_argument('--alpha', type=_alpha, default=None,
                        help=f'Family member alpha > 0 or {ALPHA_AUTO!r} '
                             '(default).')
    common.add_argument('--n', type=int, default=2, help='Volume level.')
    common.add_argument('--engine', default=Engine.AUTO.value,
                        choices=[e.value for e in Engine] + [ENGINE_BOTH])
    common.add_argument('--tol', type=float, default=CAYLEYQMC_FUNCTIONAL_TOL,
                        help='Functional residual tolerance.')
    common.add_argument('--operator-tol', type=float,
                        default=CAYLEYQMC_OPERATOR_TOL,
                        help='Operator-norm residual tolerance.')
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('--out', choices=['csv', 'json'])
    return common


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='cayleyqmc',
        description='Forward quantum Markov chain of the XY-model on the '
                    'Cayley tree of order two.')
    commands = parser.add_subparsers(dest='command', required=True)

    solve = commands.add_parser('solve-boundary', parents=[common],
                                help='Emit the alpha-family boundary data.')
    solve.add_argument('--levels', type=int, default=4)
    solve.set_defaults(func=cmd_solve_boundary)

    trajectory = commands.add_parser('orbit', parents=[common],
                                     help='Iterate the pull-up map.')
    trajectory.add_argument('--x0', type=float, required=True)
    trajectory.add_argument('--y0', type=float, required=True)
    trajectory.add_argument('--max-steps', type=int,
                            default=CAYLEYQMC_ORBIT_MAX_STEPS)
    trajectory.set_defaults(func=cmd_orbit)

    verify = commands.add_parser('verify', parents=[common],
                                 help='Run an invariant suite.')
    verify.add_argument('--suite', required=True, choices=sorted(SUITES))
    verify.add_argument('--samples', type=int, default=DEFAULT_SAMPLES,
                        help='Random samples per randomized check.')
    verify.set_defaults(func=cmd_verify)

    expect = commands.add_parser('expect', parents=[common],
                                 help='Evaluate an observable file.')
    expect.add_argument('observable_file')
    expect.add_argument('--allow-matrix-free', action='store_true',
                        help='Permit the slow matrix-free dense trace.')
    expect.set_defaults(func=cmd_expect)

    energy = commands.add_parser('free-energy', parents=[common],
                                 help='Tabulate F_n and its limit.')
    energy.add_argument('--workers', type=int, default=1)
    energy.set_defaults(func=cmd_free_energy)

    diagram = commands.add_parser('tree-diagram', parents=[common],
                                  help='Draw the ball Lambda_n.')
    diagram.add_argument('--k', type=int, default=2)
    diagram.add_argument('--render', action='store_true',
                         help='Render files instead of printing DOT.')
    diagram.add_argument('--directory')
    diagram.set_defaults(func=cmd_tree_diagram)
    return parser


def cmd_solve_boundary(config, args, stdout):
    beta = config.beta
    alpha = config.alpha_for(beta)
    if args.levels < 0:
        raise UsageError(f'--levels must be >= 0, got {args.levels}')
    bc = solution_family(alpha, beta, args.levels)
    eq1 = eq1_residual(bc)
    eq2 = eq2_residuals(bc)
    data_utils.write_json({
        'alpha': alpha,
        'beta': beta,
        'w0': bc.w0,
        'h_levels': list(bc.h_levels),
        'eq1_residual': eq1,
        'eq2_residual_per_level': eq2,
    }, stdout)
    passed = all(r <= config.operator_tol for r in [eq1] + eq2)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_orbit(config, args, stdout):
    p0 = BoundaryPoint(args.x0, args.y0)
    if args.max_steps < 1:
        raise UsageError('--max-steps must be >= 1')
    result = orbit(p0, config.beta, args.max_steps)
    if config.out == 'json':
        data_utils.write_json({
            'beta': result.beta,
            'points': [[p.x, p.y] for p in result.points],
            'termination': result.label,
        }, stdout)
    else:
        data_utils.write_orbit_csv(result, stdout)
    return EXIT_OK


def cmd_verify(config, args, stdout):
    checks = run_suite(args.suite, config)
    passed = all(check.passed for check in checks)
    data_utils.write_json({
        'suite': args.suite,
        'betas': list(config.betas),
        'seed': config.seed,
        'checks': [check.to_dict() for check in checks],
        'passed': passed,
    }, stdout)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_expect(config, args, stdout):
    obs = data_utils.read_observable_file(args.observable_file)
    beta = config.beta
    alpha = config.alpha_for(beta)
    bc = solution_family(alpha, beta, config.n + 1)
    engines = [Engine.DENSE, Engine.TRANSFER] \
        if config.engine == ENGINE_BOTH else [Engine(config.engine)]
    values = {}
    for engine in engines:
        state = FiniteVolumeState(config.n, beta, bc, engine=engine,
                                  allow_matrix_free=args.allow_matrix_free,
                                  tol=config.tol)
        values[state.engine.value] = state.expectation(obs)
    record = {
        'n': config.n,
        'beta': beta,
        'alpha': alpha,
        'engine': ENGINE_BOTH if len(values) > 1 else next(iter(values)),
        'value': list(values.values())[-1],
        'residuals': {'eq1': eq1_residual(bc),
                      'eq2': eq2_residuals(bc, beta, range(config.n + 1))},
    }
    if len(values) > 1:
        record['values'] = values
        record['gap'] = abs(values[Engine.DENSE.value] -
                            values[Engine.TRANSFER.value])
    data_utils.write_json(record, stdout)
    if 'gap' in record and record['gap'] > config.tol:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def free_energy_row(beta, n, alpha):
    """Return (beta, F_n, F, |F_n - F|); ``alpha=None`` means 1 / cosh^4."""
    alpha = alpha_fixed(beta) if alpha is None else alpha
    finite = free_energy(n, beta, alpha)
    limit = free_energy_limit(beta)
    return beta, finite, limit, abs(finite - limit)


def cmd_free_energy(config, args, stdout):
    n = config.n
    tasks = (config.betas, [n] * len(config.betas),
             [config.alpha] * len(config.betas))
    if config.workers > 1:
        with concurrent.futures.ProcessPoolExecutor(
                max_workers=config.workers) as executor:
            # map keeps grid order regardless of completion order
            rows = list(executor.map(free_energy_row, *tasks))
    else:
        rows = list(map(free_energy_row, *tasks))
    if config.out == 'json':
        data_utils.write_json(
            [dict(zip(data_utils.FREE_ENERGY_COLUMNS, row)) for row in rows],
            stdout)
    else:
        data_utils.write_csv(data_utils.FREE_ENERGY_COLUMNS, rows, stdout)
    return EXIT_OK


def cmd_tree_diagram(config, args, stdout):
    if args.render:
        for path in render_ball_diagram(config.n, args.k, args.directory):
            stdout.write(f'{path}\n')
    else:
        stdout.write(ball_diagram(config.n, args.k).source)
    return EXIT_OK


def main(argv=None, stdout=None):
    """Run the command line ``argv`` and return the exit code.

    :rtype: ``int``
    """
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if args.verbose:
        utils.set_log_level(logging.DEBUG)
    try:
        config = RunConfig.from_args(args)
        return args.func(config, args, stdout)
    except USAGE_ERRORS as e:
        logger.error(str(e))
        return EXIT_USAGE
    except FEASIBILITY_ERRORS as e:
        logger.error(str(e))
        return EXIT_INFEASIBLE
