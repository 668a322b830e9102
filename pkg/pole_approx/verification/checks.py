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
"""Executable checks of the structural properties of solved instances.

Every check returns a `CheckReport` and never raises for a failed property;
only malformed inputs raise.
"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

from absl import logging
import attr
import numpy as np

from pole_approx import errors
from pole_approx.asymptotics import formulas
from pole_approx.asymptotics import model
from pole_approx.kernel import chebyshev
from pole_approx.kernel import precision
from pole_approx.kernel import search
from pole_approx.solver import grid_oracle as grid_oracle_lib
from pole_approx.solver import problem
from pole_approx.solver import remez
from pole_approx.verification import tables

# Dense scan points per alternation point in check_equioscillation.
_SCAN_POINTS_PER_REFERENCE_POINT = 16
# Defaults of check_curve_equation.
_CURVE_CONSISTENCY_TOL = 1e-10
_CURVE_ASYMPTOTE_TOL = 0.05
_CURVE_V_THRESHOLD = 20.0


def default_y_grid() -> np.ndarray:
  """64 log-spaced points from 1e-3 to 1e6."""
  return np.logspace(-3, 6, 64)


@attr.s(auto_attribs=True, frozen=True)
class CheckReport(object):
  """Outcome of one check.

  Attributes:
    check_id: name of the check and its instance, e.g. 'symmetry(k=1,m=2)'.
    passed: True iff every measured discrepancy is within its limit.
    measured: name -> value; discrepancies and the values they come from.
    tolerance: the headline limit of the check.
    details: the per-discrepancy limits and anything worth reading.
  """

  check_id: str
  passed: bool
  measured: Dict[str, float]
  tolerance: float
  details: str = ''


class _Judge(object):
  """Collects measured values and the discrepancies that decide a check."""

  def __init__(self, check_id: str, tolerance: float):
    self._check_id = check_id
    self._tolerance = tolerance
    self._measured = {}
    self._limits = []
    self._notes = []
    self._failed = []

  def record(self, name: str, value) -> None:
    self._measured[name] = float(value)

  def require(self, name: str, discrepancy, limit: Optional[float] = None):
    """Records `discrepancy`, which must not exceed `limit`."""
    limit = self._tolerance if limit is None else limit
    discrepancy = float(discrepancy)
    self._measured[name] = discrepancy
    if limit != self._tolerance:
      self._limits.append('{} <= {:g}'.format(name, limit))
    if not discrepancy <= limit:
      self._failed.append(name)

  def note(self, text: str) -> None:
    self._notes.append(text)

  def report(self) -> CheckReport:
    details = list(self._notes)
    if self._limits:
      details.append('limits: ' + ', '.join(self._limits))
    if self._failed:
      details.append('failed: ' + ', '.join(self._failed))
    report = CheckReport(
        check_id=self._check_id,
        passed=not self._failed,
        measured=dict(self._measured),
        tolerance=self._tolerance,
        details='; '.join(details))
    logging.log(logging.INFO if report.passed else logging.WARNING,
                'Check %s %s', report.check_id,
                'passed' if report.passed else 'FAILED: ' + report.details)
    return report


def _relative(x, y) -> float:
  return abs(float(x) - float(y)) / abs(float(y))


def _scan_points(sol: remez.EquiSolution) -> List:
  ctx = precision.working_context(sol.mantissa_bits)
  count = _SCAN_POINTS_PER_REFERENCE_POINT * len(sol.alternation)
  points = chebyshev.lobatto_points(ctx, sol.q.lo.value, sol.q.hi.value, count)
  # Midpoints of the alternation gaps catch a residual bump between them.
  ts = [p.t.value for p in sol.alternation]
  return points + [(left + right) / 2 for left, right in zip(ts, ts[1:])]


def check_equioscillation(
    sol: remez.EquiSolution,
    spec: Optional[problem.ProblemSpec] = None) -> CheckReport:
  """Certifies the alternation structure of a solution.

  Verifies N+2 points, strictly alternating signs, levelness within
  level_tol, that the points start at a^2 and end at 1, and that no point
  of a dense scan exceeds (1 + level_tol) L. Residuals are recomputed from
  `sol.q`, so a tampered polynomial fails.
  """
  spec = spec or sol.spec
  judge = _Judge(
      'equioscillation({}, a={}, N={})'.format(spec.kind.value, spec.a,
                                               spec.degree), spec.level_tol)
  L = sol.L
  residuals = [sol.residual(p.t) for p in sol.alternation]
  magnitudes = [abs(r) for r in residuals]
  judge.record('L', L)
  judge.record('points', len(sol.alternation))
  judge.require('count_mismatch', abs(len(sol.alternation) -
                                      (spec.degree + 2)), 0)
  sign_breaks = sum(1 for left, right in zip(residuals, residuals[1:])
                    if not (left > 0) ^ (right > 0))
  judge.require('sign_breaks', sign_breaks, 0)
  levelness = (max(magnitudes) - min(magnitudes)) / max(magnitudes)
  judge.require('levelness', levelness)
  judge.require('missing_endpoints',
                (sol.alternation[0].t != sol.q.lo) +
                (sol.alternation[-1].t != sol.q.hi), 0)
  scan = max(abs(sol.residual(t)) for t in _scan_points(sol))
  judge.require('excess', max(scan / L - 1, 0))
  judge.note('alternation x = [{}]'.format(', '.join(
      '{:.12g}'.format(float(p.x)) for p in sol.alternation)))
  return judge.report()


def _solve_weighted(k, m, a, mantissa_bits=None, allow_degenerate=False):
  spec = problem.ProblemSpec.weighted(k, m, a,
                                      allow_degenerate=allow_degenerate)
  if mantissa_bits:
    spec = spec.with_options(
        mantissa_bits=max(mantissa_bits, spec.minimum_mantissa_bits))
  return remez.remez_solve(spec)


def check_symmetry(k: int,
                   m: int,
                   a: float,
                   tol: float = 1e-9,
                   mantissa_bits: Optional[int] = None) -> CheckReport:
  """L^k_m(a) = L^m_k(a); needs m >= 1 and k >= 1 for both sides."""
  judge = _Judge('symmetry(k={}, m={}, a={})'.format(k, m, a), tol)
  left = _solve_weighted(k, m, a, mantissa_bits)
  right = left if k == m else _solve_weighted(m, k, a, mantissa_bits)
  if k == m:
    judge.note('k = m: both sides are the same instance')
  judge.record('L_km', left.L)
  judge.record('L_mk', right.L)
  judge.require('relative_difference', _relative(left.L, right.L))
  return judge.report()


def check_diagonal(m: int,
                   a: float,
                   tol: float = 1e-9,
                   mantissa_bits: Optional[int] = None) -> CheckReport:
  """L^m_m(a) = L^0_m(2 sqrt(a) / (1 + a))."""
  judge = _Judge('diagonal(m={}, a={})'.format(m, a), tol)
  mapped = formulas.diag_map(a)
  bits = max(mantissa_bits or 0, precision.default_mantissa_bits(m, mapped))
  diagonal = _solve_weighted(m, m, a, bits)
  polynomial = _solve_weighted(0, m, mapped, bits, allow_degenerate=True)
  judge.record('mapped_a', mapped)
  judge.record('L_mm', diagonal.L)
  judge.record('L_0m_mapped', polynomial.L)
  judge.require('relative_difference', _relative(diagonal.L, polynomial.L))
  return judge.report()


def _require_sqrt_problem(sol: remez.EquiSolution, spec: problem.ProblemSpec):
  if spec.kind != problem.Kind.UNWEIGHTED_ABS_P or spec.p != 1:
    raise errors.FailedPreconditionError(
        'this check needs an unweighted p=1 solution, got {} p={}'.format(
            spec.kind.value, spec.p))
  if sol.spec != spec:
    raise errors.InvalidArgumentError('solution does not belong to spec')


def check_area_identity(
    sol: remez.EquiSolution,
    spec: Optional[problem.ProblemSpec] = None,
    quad: search.Quadrature = search.Quadrature()) -> CheckReport:
  """Each alternation gap carries integral |P'(x) - 1| dx = 2L.

  P(x) = Q(x^2) approximates |x|. The limit per gap is the quadrature
  tolerance plus 10 * levelness * gap width.
  """
  spec = spec or sol.spec
  _require_sqrt_problem(sol, spec)
  bits = sol.mantissa_bits
  ctx = precision.working_context(bits)
  dq = sol.q.derivative()
  dq_coeffs = dq.raw_coeffs(ctx)

  def integrand(x):
    t = x * x
    return abs(2 * x * chebyshev.clenshaw(ctx, dq_coeffs, dq.to_unit(ctx, t)) -
               1)

  two_l = 2 * ctx.mpf(sol.L.value)
  levelness = float(sol.levelness)
  judge = _Judge('area(a={}, n={})'.format(spec.a, spec.n), quad.abs_tol)
  xs = [p.x for p in sol.alternation]
  total = ctx.zero
  worst = 0.0
  total_limit = 0.0
  for i, (left, right) in enumerate(zip(xs, xs[1:])):
    integral = search.integrate(integrand, left, right, quad, bits)
    total += integral.value.value
    gap = abs(integral.value.value - two_l)
    limit = quad.abs_tol + 10 * levelness * float(right - left)
    worst = max(worst, float(gap) / limit)
    total_limit += limit
    judge.record('gap_{}'.format(i), integral.value)
    if integral.exhausted:
      judge.note('quadrature budget exhausted on gap {}'.format(i))
      judge.require('quadrature_exhausted_{}'.format(i), 1, 0)
  judge.record('two_L', two_l)
  judge.record('total', total)
  judge.require('worst_gap_over_limit', worst, 1.0)
  judge.require('total_mismatch', abs(total - two_l * (len(xs) - 1)),
                total_limit)
  return judge.report()


def _q_at(ctx, q: chebyshev.ChebPoly, coeffs, t):
  return chebyshev.clenshaw(ctx, coeffs, q.to_unit(ctx, t))


def _curve_extra_bits(ctx, p, y) -> int:
  """Guard bits for acos at P(iy): log2(|P| / y), in steps of 64."""
  lost = max(0, int(ctx.mag(p / y))) if p else 0
  return 64 * (lost // 64 + 1)


def check_curve_equation(
    sol: remez.EquiSolution,
    spec: Optional[problem.ProblemSpec] = None,
    y_grid: Optional[Sequence[float]] = None,
    curve_asym_tol: float = _CURVE_ASYMPTOTE_TOL,
    consistency_tol: float = _CURVE_CONSISTENCY_TOL,
    v_threshold: float = _CURVE_V_THRESHOLD) -> CheckReport:
  """Checks the parametric curve traced by P on the imaginary axis.

  For every y, w = u + iv = arccos((P(iy) - iy) / L) is tracked
  continuously from u = 0 at y = 0+, keeping v >= 0. The check requires
  cos u cosh v = P(iy)/L and L sin u sinh v = y (branch self-consistency),
  v > 0 and strictly increasing, P(iy) strictly decreasing, P(0) > L, and
  |u - pi| <= curve_asym_tol wherever v >= v_threshold.

  Raises:
    errors.InvalidArgumentError: y_grid not positive and increasing.
  """
  spec = spec or sol.spec
  _require_sqrt_problem(sol, spec)
  ys = list(default_y_grid() if y_grid is None else y_grid)
  if not ys or ys[0] <= 0 or any(b <= a for a, b in zip(ys, ys[1:])):
    raise errors.InvalidArgumentError(
        'y_grid must be positive and strictly increasing')
  bits = sol.mantissa_bits
  ctx = precision.working_context(bits)
  coeffs = sol.q.raw_coeffs(ctx)
  L = ctx.mpf(sol.L.value)
  judge = _Judge('curve(a={}, n={})'.format(spec.a, spec.n), consistency_tol)

  p0 = _q_at(ctx, sol.q, coeffs, ctx.zero)
  judge.record('P0', p0)
  judge.require('P0_not_above_L', max(L - p0, 0) / L, 0)

  u_prev = ctx.zero
  consistency = 0
  values: List[Tuple[object, object, object]] = []
  for y in ys:
    y = ctx.mpf(float(y))
    p = _q_at(ctx, sol.q, coeffs, -y * y)
    # u sits within about y/|P| of a multiple of pi; carry that many extra
    # bits so sin(u) keeps its digits.
    hi = precision.working_context(bits + _curve_extra_bits(ctx, p, y))
    p_hi, y_hi, l_hi = hi.mpf(p), hi.mpf(y), hi.mpf(L)
    zeta = hi.mpc(p_hi / l_hi, -y_hi / l_hi)
    w = hi.acos(zeta)
    u, v = w.real, w.imag
    if v < 0:
      u, v = -u, -v
    u_last = hi.mpf(u_prev)
    candidates = sorted((u + 2 * hi.pi * j for j in range(-2, 3)),
                        key=lambda c: abs(c - u_last))
    if abs(abs(candidates[0] - u_last) - abs(candidates[1] - u_last)) < 1e-6:
      judge.note('ambiguous branch at y={:g}: candidates u={:.9g}, {:.9g}'
                 .format(float(y), float(candidates[0]), float(candidates[1])))
    u = candidates[0]
    real_gap = abs(hi.cos(u) * hi.cosh(v) - p_hi / l_hi) / abs(zeta)
    imag_gap = abs(l_hi * hi.sin(u) * hi.sinh(v) - y_hi) / y_hi
    consistency = max(consistency, ctx.mpf(real_gap), ctx.mpf(imag_gap))
    u_prev = ctx.mpf(u)
    values.append((u_prev, ctx.mpf(v), p))
  # Property (i) first: a failure here means the branch, not the curve.
  judge.require('branch_consistency', consistency)

  us = [u for u, _, _ in values]
  vs = [v for _, v, _ in values]
  ps = [p for _, _, p in values]
  judge.record('v_min', min(vs))
  judge.require('v_not_positive', sum(1 for v in vs if v <= 0), 0)
  judge.require('v_not_increasing',
                sum(1 for a, b in zip(vs, vs[1:]) if b <= a), 0)
  judge.require('P_not_decreasing',
                sum(1 for a, b in zip(ps, ps[1:]) if b >= a), 0)
  asymptotic = [abs(u - ctx.pi) for u, v in zip(us, vs) if v >= v_threshold]
  judge.record('asymptote_points', len(asymptotic))
  if asymptotic:
    judge.require('asymptote_gap', max(asymptotic), curve_asym_tol)
  else:
    judge.note('no grid point reaches v >= {:g}'.format(v_threshold))
    judge.require('asymptote_unreached', 1, 0)
  judge.record('u_last', us[-1])
  judge.record('v_last', vs[-1])
  return judge.report()


def check_oracle(spec: problem.ProblemSpec,
                 grid_size: int = 4000,
                 tol: float = 1e-5) -> CheckReport:
  """|grid_oracle(spec, grid_size) - remez L| <= tol."""
  judge = _Judge(
      'oracle({}, a={}, N={}, grid={})'.format(spec.kind.value, spec.a,
                                              spec.degree, grid_size), tol)
  sol = remez.remez_solve(spec)
  estimate = grid_oracle_lib.grid_oracle(spec, grid_size)
  judge.record('L_remez', sol.L)
  judge.record('L_oracle', estimate.L)
  judge.record('relative_difference', _relative(estimate.L, sol.L))
  judge.require('absolute_difference', abs(estimate.L - sol.L))
  if estimate.fell_back:
    judge.note('oracle finished by single-point exchange')
  return judge.report()


def check_formula_consistency(limit_tol: float = 1e-10,
                              estar_tol: float = 1e-12) -> CheckReport:
  """Algebraic agreement of the limit constants, with no solver involved.

  2 exp(-b_asymptote) must reproduce the normalized limit of L^k_m(a), and
  the even-polynomial constant must match it after rescaling.
  """
  judge = _Judge('formula-consistency', limit_tol)
  worst = 0.0
  for k in (0, 1, 2):
    for a in (0.3, 0.5, 0.7):
      for m in (20, 40):
        lhs = 2 * math.exp(-formulas.b_asymptote(k, m, a))
        rhs = (formulas.limit_rhs_eq01(k, a) * ((1 - a) / (1 + a))**(m - 0.5) *
               (2 * m - 1)**(-k - 0.5))
        worst = max(worst, _relative(lhs, rhs))
  judge.require('b_asymptote_vs_limit', worst)
  worst = 0.0
  for k in (1, 2, 3):
    for a in (0.3, 0.5, 0.7):
      lhs = formulas.estar_limit_const(2 * k - 1, a)
      rhs = formulas.limit_rhs_eq01(k, a) * ((1 + a) / (1 - a))**(k + 0.5)
      worst = max(worst, _relative(lhs, rhs))
  judge.require('estar_vs_limit', worst, estar_tol)
  return judge.report()


def _re_phi_derivative(k, m, a, x, h=1e-4) -> float:
  re_phi = lambda z: model.model_phi(complex(z, 0), k, m, a).real
  return (-re_phi(x + 2 * h) + 8 * re_phi(x + h) - 8 * re_phi(x - h) +
          re_phi(x - 2 * h)) / (12 * h)


def check_solvable_model(tol: float = 1e-12) -> CheckReport:
  """Closed forms of the two-slit model.

  q = 1 gives B = 2m log((1+sqrt a)/(1-sqrt a)) to `tol`; k = m gives
  c = sqrt(a) to 1e-14; c is a critical point of Re phi to 1e-10; and
  model_B - model_B_asymptote decreases over m = 10, 20, 40, 80.
  """
  judge = _Judge('solvable-model', tol)
  worst = 0.0
  for m in (1, 2, 5, 10):
    for a in (0.25, 0.5, 0.81):
      root = math.sqrt(a)
      expected = 2 * m * math.log((1 + root) / (1 - root))
      worst = max(worst, _relative(model.model_B_q(1, m, a), expected))
  judge.require('q1_closed_form', worst)
  judge.require(
      'diagonal_c',
      max(abs(model.model_critical_point(m, m, a) - math.sqrt(a))
          for m in (1, 3, 10) for a in (0.25, 0.49, 0.7)), 1e-14)
  judge.require(
      'critical_derivative',
      max(abs(_re_phi_derivative(k, m, a, model.model_critical_point(k, m, a)))
          for k, m, a in ((1, 2, 0.3), (2, 5, 0.5), (1, 1, 0.25))), 1e-10)
  gaps = [
      abs(model.model_B(2, m, 0.5) - model.model_B_asymptote(2, m, 0.5))
      for m in (10, 20, 40, 80)
  ]
  judge.record('asymptote_gap_m80', gaps[-1])
  judge.require('asymptote_gap_increases',
                sum(1 for x, y in zip(gaps, gaps[1:]) if y >= x), 0)
  return judge.report()


def check_convergence(table: tables.ConvergenceTable,
                      tail: int = 10,
                      final_tol: Optional[float] = None,
                      check_b: bool = True) -> CheckReport:
  """Tail behaviour of a sweep.

  |ratio - 1| must decrease strictly over the last `tail` rows; with
  `check_b`, |B_diff| must do the same. The last gaps are always recorded
  and, when `final_tol` is given, must not exceed it. The limits come
  without error terms, so no absolute bound is imposed by default.
  """
  judge = _Judge('convergence({}, {})'.format(
      table.sweep, ', '.join('{}={}'.format(k, v)
                             for k, v in sorted(table.params.items())
                             if v is not None)),
                 0.0 if final_tol is None else final_tol)
  if not table.complete:
    judge.note(table.failure)
    judge.require('incomplete', 1, 0)
  if len(table.rows) < 2:
    judge.require('too_few_rows', 1, 0)
    return judge.report()
  columns = [('ratio', [abs(r - 1) for r in table.column('ratio')])]
  if check_b:
    columns.append(('B_diff', [abs(d) for d in table.column('B_diff')]))
  for name, gaps in columns:
    last = gaps[-tail:]
    judge.require('{}_tail_increases'.format(name),
                  sum(1 for x, y in zip(last, last[1:]) if y >= x), 0)
    if final_tol is None:
      judge.record('{}_final'.format(name), gaps[-1])
    else:
      judge.require('{}_final'.format(name), gaps[-1])
    judge.record('{}_first'.format(name), gaps[0])
  judge.record('m_last', table.rows[-1].m)
  return judge.report()
