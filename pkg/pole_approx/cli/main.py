# Copyright 2026 The Pole Approx Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
r"""Command-line surface of pole_approx.

  pole-approx solve --k 1 --m 2 --a 0.5 [--format json]
  pole-approx solve --unweighted --p 1 --n 12 --a 0.4
  pole-approx sweep --k 1 --a 0.5 --m-from 5 --m-to 40 [--out table.csv]
  pole-approx asympt --formula eq01 --k 1 --a 0.5
  pole-approx verify --suite diagonal [--jobs 4]

The payload goes to stdout (or --out); progress is logged to stderr. Exit
codes: 0 success, 1 failed check, 2 usage error, 3 numerical failure. The
environment variable APPROX_PREC_BITS sets the working precision when
--prec-bits is not given.
"""

import argparse
import concurrent.futures
import functools
import itertools
import os
import sys
import time
from typing import Callable, Dict, List, Optional, Tuple

from absl import app
from absl import logging
from absl.flags import argparse_flags

from pole_approx import errors
from pole_approx import version
from pole_approx.asymptotics import formulas
from pole_approx.cli import envelope
from pole_approx.kernel import precision
from pole_approx.solver import problem
from pole_approx.solver import rational
from pole_approx.solver import remez
from pole_approx.verification import checks
from pole_approx.verification import tables

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

PREC_BITS_ENV = 'APPROX_PREC_BITS'

SUITES = ('equioscillation', 'symmetry', 'diagonal', 'area', 'curve',
          'oracle', 'convergence', 'app1', 'identities', 'model')

_USAGE_ERROR_CODES = (errors.INVALID_ARGUMENT, errors.OUT_OF_RANGE)
# Precision of the sweeps behind the convergence suites.
_CONVERGENCE_BITS = 256
_DEFAULT_GRID_SIZE = 4000

Check = Callable[[], checks.CheckReport]


def _number(text: str):
  """An int when the text is integral, a float otherwise."""
  try:
    return int(text)
  except ValueError:
    return float(text)


def _common_flags() -> argparse.ArgumentParser:
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument(
      '--format', choices=('text', 'json', 'csv'), default=None,
      help='Output format; csv is only available for sweep (its default).')
  common.add_argument(
      '--jobs', type=int, default=None,
      help='Worker threads for sweeps and suites; defaults to the cores.')
  common.add_argument('--out', default=None,
                      help='Write the payload to this file, not stdout.')
  common.add_argument(
      '--prec-bits', type=int, default=None,
      help='Mantissa bits; overrides {} and the kernel rule.'.format(
          PREC_BITS_ENV))
  common.add_argument(
      '--tol', type=float, default=None,
      help='Levelness tolerance for solve, check tolerance for verify.')
  return common


def make_parser() -> argparse_flags.ArgumentParser:
  """The subcommand parser; absl flags such as --verbosity are inherited."""
  common = _common_flags()
  parser = argparse_flags.ArgumentParser(
      prog='pole-approx',
      allow_abbrev=False,
      description='Minimax errors of odd rational approximations of sgn(x).')
  subparsers = parser.add_subparsers(dest='command', required=True)

  solve = subparsers.add_parser(
      'solve', parents=[common], allow_abbrev=False,
      help='Solve one instance.')
  solve.add_argument('--k', type=int, help='Pole order index at 0.')
  solve.add_argument('--m', type=int, help='Pole order index at infinity.')
  solve.add_argument('--a', type=float, required=True,
                     help='Inner end of [a, 1].')
  solve.add_argument('--unweighted', action='store_true',
                     help='Approximate |x|^p by even polynomials instead.')
  solve.add_argument('--p', type=float, help='Exponent with --unweighted.')
  solve.add_argument('--n', type=int, help='Even degree with --unweighted.')
  solve.add_argument('--max-iterations', type=int, default=60)
  solve.add_argument('--allow-degenerate', action='store_true',
                     help='Admit a <= 0.01 or a >= 0.99.')
  solve.set_defaults(handler=_cmd_solve)

  sweep = subparsers.add_parser(
      'sweep', parents=[common], allow_abbrev=False,
      help='Convergence table over m.')
  sweep.add_argument('--sweep', choices=('eq01', 'eq62', 'app1'),
                     default='eq01',
                     help='eq01: L^k_m(a); eq62: L^m_m(a); app1: E_2l(p, a) '
                     'with l running from --m-from to --m-to.')
  sweep.add_argument('--k', type=int)
  sweep.add_argument('--p', type=float)
  sweep.add_argument('--a', type=float, required=True)
  sweep.add_argument('--m-from', type=int, required=True)
  sweep.add_argument('--m-to', type=int, required=True)
  sweep.add_argument('--step', type=int, default=1)
  sweep.set_defaults(handler=_cmd_sweep)

  asympt = subparsers.add_parser(
      'asympt', parents=[common], allow_abbrev=False,
      help='Evaluate a closed-form formula.')
  asympt.add_argument(
      '--formula', required=True,
      help='One of: {}.'.format(', '.join(f.value for f in formulas.FormulaId)))
  asympt.add_argument('--k', type=_number)
  asympt.add_argument('--m', type=_number)
  asympt.add_argument('--q', type=_number)
  asympt.add_argument('--a', type=float)
  asympt.add_argument('--p', type=float)
  asympt.add_argument('--n', type=int)
  asympt.add_argument('--L', help='An error value, as a decimal string.')
  asympt.add_argument('--z', type=complex, help='A complex point, e.g. 2j.')
  asympt.set_defaults(handler=_cmd_asympt)

  verify = subparsers.add_parser(
      'verify', parents=[common], allow_abbrev=False,
      help='Run a verification suite.')
  verify.add_argument('--suite', choices=SUITES + ('all',), required=True)
  verify.add_argument('--k', type=int)
  verify.add_argument('--m', type=int)
  verify.add_argument('--a', type=float)
  verify.add_argument('--grid-size', type=int, default=_DEFAULT_GRID_SIZE)
  verify.set_defaults(handler=_cmd_verify)
  return parser


def _require(args: argparse.Namespace, *names: str) -> None:
  missing = ['--' + name.replace('_', '-') for name in names
             if getattr(args, name, None) is None]
  if missing:
    raise errors.InvalidArgumentError('{} needs {}'.format(
        args.command, ', '.join(missing)))


def _prec_bits(args: argparse.Namespace) -> Optional[int]:
  """--prec-bits, else APPROX_PREC_BITS, else None for the kernel rule."""
  bits = args.prec_bits
  if bits is None:
    text = os.environ.get(PREC_BITS_ENV, '').strip()
    if not text:
      return None
    try:
      bits = int(text)
    except ValueError:
      raise errors.InvalidArgumentError('{}={!r} is not an integer'.format(
          PREC_BITS_ENV, text))
  if bits < precision.MIN_MANTISSA_BITS:
    raise errors.InvalidArgumentError('precision must be at least {} bits, '
                                      'got {}'.format(
                                          precision.MIN_MANTISSA_BITS, bits))
  return bits


def _jobs(args: argparse.Namespace) -> int:
  jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
  if jobs < 1:
    raise errors.InvalidArgumentError(
        '--jobs must be positive, got {}'.format(jobs))
  return jobs


def _output_format(args: argparse.Namespace) -> str:
  fmt = args.format or ('csv' if args.command == 'sweep' else 'text')
  if fmt == 'csv' and args.command != 'sweep':
    raise errors.InvalidArgumentError(
        'csv output is only available for sweep, not ' + args.command)
  return fmt


def _cmd_solve(args: argparse.Namespace) -> Tuple[Dict, object]:
  options = dict(
      mantissa_bits=_prec_bits(args),
      max_iterations=args.max_iterations,
      allow_degenerate=args.allow_degenerate)
  if args.tol is not None:
    options['level_tol'] = args.tol
  if args.unweighted:
    _require(args, 'p', 'n')
    spec = problem.ProblemSpec.unweighted(args.p, args.n, args.a, **options)
    params = dict(kind=spec.kind.value, p=spec.p, n=spec.n)
  else:
    _require(args, 'k', 'm')
    spec = problem.ProblemSpec.weighted(args.k, args.m, args.a, **options)
    params = dict(kind=spec.kind.value, k=spec.k, m=spec.m)
  params.update(
      a=spec.a,
      prec_bits=spec.effective_mantissa_bits,
      tol=spec.level_tol,
      max_iterations=spec.max_iterations,
      allow_degenerate=spec.allow_degenerate)
  sol = remez.remez_solve(spec)
  laurent = None
  if spec.kind == problem.Kind.WEIGHTED_SGN:
    laurent = rational.expand_rational(sol)
  return params, envelope.SolveResult(
      solution=sol, B=formulas.b_from_error(sol.L), laurent=laurent)


def _cmd_sweep(args: argparse.Namespace) -> Tuple[Dict, object]:
  bits = _prec_bits(args)
  jobs = _jobs(args)
  if args.sweep == 'eq01':
    _require(args, 'k')
    table = tables.convergence_table(args.k, args.a, args.m_from, args.m_to,
                                     args.step, bits, jobs)
  elif args.sweep == 'eq62':
    table = tables.diagonal_convergence_table(args.a, args.m_from, args.m_to,
                                              args.step, bits, jobs)
  else:
    _require(args, 'p')
    table = tables.app1_convergence_table(args.p, args.a, args.m_from,
                                          args.m_to, args.step, bits, jobs)
  params = dict(sweep=args.sweep, jobs=jobs)
  params.update(table.params)
  return params, table


def _cmd_asympt(args: argparse.Namespace) -> Tuple[Dict, object]:
  try:
    formula_id = formulas.FormulaId(args.formula)
  except ValueError:
    raise errors.InvalidArgumentError(
        'unknown formula {!r}; expected one of {}'.format(
            args.formula, ', '.join(f.value for f in formulas.FormulaId)))
  names = formulas.formula_inputs(formula_id)
  _require(args, *names)
  inputs = {name: getattr(args, name) for name in names}
  if 'L' in inputs:
    inputs['L'] = precision.mp(inputs['L'], _prec_bits(args) or 64)
  report = formulas.evaluate(formula_id, **inputs)
  params = dict(formula=formula_id.value)
  params.update(inputs)
  return params, report


def _weighted_spec(k, m, a, bits, **options) -> problem.ProblemSpec:
  spec = problem.ProblemSpec.weighted(k, m, a, **options)
  if bits:
    spec = spec.with_options(
        mantissa_bits=max(bits, spec.minimum_mantissa_bits))
  return spec


def _sqrt_spec(n, a, bits) -> problem.ProblemSpec:
  spec = problem.ProblemSpec.unweighted(1, n, a)
  if bits:
    spec = spec.with_options(
        mantissa_bits=max(bits, spec.minimum_mantissa_bits))
  return spec


def _instances(args, defaults, names=('k', 'm', 'a')):
  """The flagged instance if every name is given, else the defaults."""
  given = [getattr(args, name) for name in names]
  if all(value is not None for value in given):
    return [tuple(given)]
  if any(value is not None for value in given):
    _require(args, *names)
  return list(defaults)


def _solve_then(check, spec: problem.ProblemSpec) -> checks.CheckReport:
  return check(remez.remez_solve(spec))


def _suite_checks(suite: str, args: argparse.Namespace,
                  bits: Optional[int], jobs: int) -> List[Check]:
  """Zero-argument checks of one suite; instances are validated here."""
  tol = args.tol
  if suite == 'equioscillation':
    instances = _instances(
        args, [(0, 1, 1.0 / 3.0), (1, 1, 0.25), (1, 2, 0.5), (2, 3, 0.3)])
    options = {} if tol is None else dict(level_tol=tol)
    return [
        functools.partial(_solve_then, checks.check_equioscillation,
                          _weighted_spec(k, m, a, bits, **options))
        for k, m, a in instances
    ]
  if suite == 'symmetry':
    instances = _instances(
        args, [(k, m, a) for (k, m), a in itertools.product(
            ((1, 2), (2, 3)), (0.3, 0.6))])
    return [
        functools.partial(checks.check_symmetry, k, m, a,
                          1e-9 if tol is None else tol, bits)
        for k, m, a in instances
    ]
  if suite == 'diagonal':
    instances = _instances(
        args, itertools.product((1, 2, 3), (0.25, 0.5)), names=('m', 'a'))
    return [
        functools.partial(checks.check_diagonal, m, a,
                          1e-9 if tol is None else tol, bits)
        for m, a in instances
    ]
  if suite in ('area', 'curve'):
    m, a = _instances(args, [(6, 0.4)], names=('m', 'a'))[0]
    spec = _sqrt_spec(2 * m, a, bits)
    if suite == 'area':
      return [functools.partial(_solve_then, checks.check_area_identity, spec)]
    return [functools.partial(_solve_then, checks.check_curve_equation, spec)]
  if suite == 'oracle':
    instances = _instances(
        args, [(k, m, 0.5) for k, m in itertools.product(range(3),
                                                         range(1, 7))])
    return [
        functools.partial(checks.check_oracle,
                          _weighted_spec(k, m, a, bits), args.grid_size,
                          1e-5 if tol is None else tol)
        for k, m, a in instances
    ]
  if suite == 'convergence':
    k = 1 if args.k is None else args.k
    a = 0.5 if args.a is None else args.a
    sweep_bits = max(bits or 0, _CONVERGENCE_BITS)
    return [lambda: checks.check_convergence(
        tables.convergence_table(k, a, 5, 40, mantissa_bits=sweep_bits,
                                 jobs=jobs),
        final_tol=tol)]
  if suite == 'app1':
    a = 0.5 if args.a is None else args.a
    return [lambda: checks.check_convergence(
        tables.app1_convergence_table(1, a, 5, 40, mantissa_bits=bits,
                                      jobs=jobs),
        final_tol=0.1 if tol is None else tol, check_b=False)]
  if suite == 'identities':
    return [checks.check_formula_consistency]
  if suite == 'model':
    return [checks.check_solvable_model]
  raise errors.InvalidArgumentError('unknown suite {!r}'.format(suite))


def _cmd_verify(args: argparse.Namespace) -> Tuple[Dict, object]:
  bits = _prec_bits(args)
  jobs = _jobs(args)
  suites = SUITES if args.suite == 'all' else (args.suite,)
  jobs_list = []
  for suite in suites:
    jobs_list.extend(_suite_checks(suite, args, bits, jobs))
  logging.log(logging.INFO, 'Running %d checks of suite %s on %d threads',
              len(jobs_list), args.suite, jobs)
  with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
    reports = tuple(pool.map(lambda check: check(), jobs_list))
  params = dict(
      suite=args.suite, k=args.k, m=args.m, a=args.a, prec_bits=bits,
      tol=args.tol, grid_size=args.grid_size, jobs=jobs)
  return params, envelope.SuiteResult(
      suite=args.suite,
      passed=all(report.passed for report in reports),
      reports=reports)


def _exit_code(payload) -> int:
  if isinstance(payload, envelope.SuiteResult) and not payload.passed:
    return EXIT_CHECK_FAILED
  if isinstance(payload, tables.ConvergenceTable) and not payload.complete:
    return EXIT_NUMERICAL
  return EXIT_OK


def _emit(args: argparse.Namespace, fmt: str,
          output: envelope.OutputEnvelope, out) -> None:
  if fmt == 'json':
    text = envelope.render_json(output)
  elif fmt == 'csv':
    text = envelope.render_csv(output.payload)
  else:
    text = envelope.render_text(output)
  if args.out:
    with open(args.out, 'w') as f:
      f.write(text)
    logging.log(logging.INFO, 'Wrote %s output to %s', fmt, args.out)
  else:
    out.write(text)


def execute(args: argparse.Namespace, out=None) -> int:
  """Runs a parsed command and returns the process exit code."""
  out = out or sys.stdout
  start = time.monotonic()
  try:
    fmt = _output_format(args)
    params, payload = args.handler(args)
  except errors.StatusError as e:
    code = (EXIT_USAGE if e.error_code in _USAGE_ERROR_CODES else
            EXIT_NUMERICAL)
    logging.log(logging.ERROR, '%s failed (%s): %s', args.command,
                type(e).__name__, e.message)
    return code
  output = envelope.OutputEnvelope(
      tool_version=version.__version__,
      command=args.command,
      params=params,
      payload=payload,
      elapsed_ms=int(round((time.monotonic() - start) * 1000)))
  _emit(args, fmt, output, out)
  logging.log(logging.INFO, '%s finished in %d ms', args.command,
              output.elapsed_ms)
  return _exit_code(payload)


def run(argv: List[str], out=None) -> int:
  """Parses `argv` (without the program name) and executes it."""
  try:
    args = make_parser().parse_args(argv)
  except SystemExit as e:
    return EXIT_USAGE if e.code else EXIT_OK
  return execute(args, out)


def parse_flags(argv: List[str]) -> argparse.Namespace:
  return make_parser().parse_args(argv[1:])


def main(args: argparse.Namespace) -> int:
  return execute(args)


def run_main():
  app.run(main, flags_parser=parse_flags)


if __name__ == '__main__':
  run_main()
