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
"""Tests for pole_approx.verification.checks."""

import itertools

from absl.testing import absltest
from absl.testing import parameterized
import attr

from pole_approx import errors
from pole_approx.kernel import chebyshev
from pole_approx.kernel import precision
from pole_approx.solver import problem
from pole_approx.solver import remez
from pole_approx.verification import checks
from pole_approx.verification import tables


def _solve_weighted(k, m, a):
  return remez.remez_solve(problem.ProblemSpec.weighted(k, m, a))


def _solve_sqrt(n, a):
  return remez.remez_solve(problem.ProblemSpec.unweighted(1, n, a))


def _create_table(ratios, b_diffs=None, failure=None):
  b_diffs = b_diffs or [0.5 * (r - 1) for r in ratios]
  rows = [
      tables.ConvergenceRow(
          m=m, L=precision.MPValue(0.1**m, 64), normalized=r, predicted=1.0,
          ratio=r, B=1.0, B_predicted=1.0 - d, B_diff=d)
      for m, (r, d) in enumerate(zip(ratios, b_diffs), start=1)
  ]
  return tables.ConvergenceTable(
      sweep='eq01', params={'k': 1}, rows=tuple(rows), failure=failure)


class EquioscillationTest(parameterized.TestCase):

  def test_k0_m1(self):
    report = checks.check_equioscillation(_solve_weighted(0, 1, 1.0 / 3.0))
    self.assertTrue(report.passed, report.details)
    self.assertEqual(report.measured['points'], 2)

  def test_unweighted_sqrt(self):
    report = checks.check_equioscillation(_solve_sqrt(2, 0.5))
    self.assertTrue(report.passed, report.details)
    self.assertEqual(report.measured['points'], 3)
    self.assertIn('0.75', report.details)

  def test_perturbed_polynomial_fails(self):
    sol = _solve_weighted(1, 2, 0.5)
    coeffs = list(sol.q.coeffs)
    coeffs[0] = coeffs[0] + 10 * sol.L
    tampered = attr.evolve(
        sol, q=chebyshev.ChebPoly(lo=sol.q.lo, hi=sol.q.hi, coeffs=coeffs))
    report = checks.check_equioscillation(tampered)
    self.assertFalse(report.passed)
    self.assertGreater(report.measured['excess'], 1)


class SymmetryDiagonalTest(parameterized.TestCase):

  @parameterized.parameters(
      itertools.product(((1, 2), (2, 3)), (0.3, 0.6)))
  def test_symmetry(self, km, a):
    report = checks.check_symmetry(km[0], km[1], a, tol=1e-9)
    self.assertTrue(report.passed, report.details)

  def test_symmetry_on_diagonal_is_trivial(self):
    report = checks.check_symmetry(1, 1, 0.5)
    self.assertTrue(report.passed)
    self.assertEqual(report.measured['relative_difference'], 0)

  def test_diagonal_closed_form(self):
    report = checks.check_diagonal(1, 0.25)
    self.assertTrue(report.passed, report.details)
    self.assertAlmostEqual(report.measured['L_mm'], 1 / 9, delta=1e-12)
    self.assertAlmostEqual(report.measured['mapped_a'], 0.8, places=15)

  @parameterized.parameters(itertools.product((2, 3, 4), (0.25, 0.5)))
  def test_diagonal(self, m, a):
    report = checks.check_diagonal(m, a, tol=1e-9)
    self.assertTrue(report.passed, report.details)


class AreaIdentityTest(parameterized.TestCase):

  def test_linear_case(self):
    report = checks.check_area_identity(_solve_sqrt(2, 0.5))
    self.assertTrue(report.passed, report.details)
    for gap in ('gap_0', 'gap_1'):
      self.assertAlmostEqual(report.measured[gap], 2 * 0.25 / 12, places=10)

  def test_degree_twelve(self):
    sol = _solve_sqrt(12, 0.4)
    report = checks.check_area_identity(sol)
    self.assertTrue(report.passed, report.details)
    two_l = 2 * float(sol.L)
    for i in range(7):
      self.assertAlmostEqual(
          report.measured['gap_{}'.format(i)], two_l, delta=1e-8)

  def test_wrong_error_fails(self):
    sol = _solve_sqrt(4, 0.5)
    report = checks.check_area_identity(attr.evolve(sol, L=sol.L * 1.01))
    self.assertFalse(report.passed)

  def test_needs_sqrt_problem(self):
    with self.assertRaises(errors.FailedPreconditionError):
      checks.check_area_identity(_solve_weighted(1, 1, 0.5))


class CurveEquationTest(parameterized.TestCase):

  def test_linear_case(self):
    report = checks.check_curve_equation(_solve_sqrt(2, 0.5))
    self.assertTrue(report.passed, report.details)
    self.assertAlmostEqual(report.measured['P0'], 1 / 3 + 1 / 48, places=12)
    self.assertGreater(report.measured['asymptote_points'], 0)

  def test_degree_twelve(self):
    report = checks.check_curve_equation(_solve_sqrt(12, 0.4))
    self.assertTrue(report.passed, report.details)
    self.assertLessEqual(report.measured['branch_consistency'], 1e-10)
    self.assertEqual(report.measured['v_not_increasing'], 0)
    self.assertEqual(report.measured['P_not_decreasing'], 0)
    self.assertLessEqual(report.measured['asymptote_gap'], 0.05)

  @parameterized.parameters(8, 16)
  def test_large_y_keeps_branch_digits(self, n):
    report = checks.check_curve_equation(_solve_sqrt(n, 0.4))
    self.assertTrue(report.passed, report.details)
    self.assertLessEqual(report.measured['branch_consistency'], 1e-10)
    self.assertLess(report.measured['v_last'], 1e3)
    self.assertGreater(report.measured['u_last'], 3.0)

  def test_small_y_limit(self):
    report = checks.check_curve_equation(
        _solve_sqrt(2, 0.5), y_grid=[1e-8, 1e-7, 1e-6])
    self.assertLessEqual(report.measured['branch_consistency'], 1e-10)
    self.assertLess(report.measured['u_last'], 1e-3)

  @parameterized.parameters([[]], [[0.0, 1.0]], [[1.0, 0.5]])
  def test_bad_grid(self, y_grid):
    with self.assertRaises(errors.InvalidArgumentError):
      checks.check_curve_equation(_solve_sqrt(2, 0.5), y_grid=y_grid)


class OracleTest(parameterized.TestCase):

  @parameterized.parameters((1, 1, 0.25), (0, 1, 1.0 / 3.0))
  def test_closed_forms(self, k, m, a):
    report = checks.check_oracle(
        problem.ProblemSpec.weighted(k, m, a), 4000, 1e-5)
    self.assertTrue(report.passed, report.details)

  @parameterized.parameters(itertools.product(range(3), range(1, 7)))
  def test_small_instances(self, k, m):
    report = checks.check_oracle(
        problem.ProblemSpec.weighted(k, m, 0.5), 4000, 1e-5)
    self.assertTrue(report.passed, report.details)


class ClosedFormChecksTest(absltest.TestCase):

  def test_formula_consistency(self):
    report = checks.check_formula_consistency()
    self.assertTrue(report.passed, report.details)

  def test_solvable_model(self):
    report = checks.check_solvable_model()
    self.assertTrue(report.passed, report.details)


class ConvergenceCheckTest(absltest.TestCase):

  def test_converging_table(self):
    report = checks.check_convergence(
        _create_table([1.5, 1.2, 1.1, 1.04, 1.02]), tail=3, final_tol=0.05)
    self.assertTrue(report.passed, report.details)

  def test_tail_must_decrease(self):
    report = checks.check_convergence(
        _create_table([1.5, 1.01, 1.02, 1.01]), tail=3, final_tol=0.05)
    self.assertFalse(report.passed)
    self.assertEqual(report.measured['ratio_tail_increases'], 1)

  def test_final_tolerance(self):
    report = checks.check_convergence(
        _create_table([1.5, 1.3, 1.2]), tail=3, final_tol=0.05)
    self.assertFalse(report.passed)

  def test_final_gap_is_recorded_without_tolerance(self):
    report = checks.check_convergence(_create_table([1.5, 1.3, 1.2]), tail=3)
    self.assertTrue(report.passed, report.details)
    self.assertAlmostEqual(report.measured['ratio_final'], 0.2, places=12)
    self.assertAlmostEqual(report.measured['ratio_first'], 0.5, places=12)

  def test_partial_table_fails(self):
    report = checks.check_convergence(
        _create_table([1.5, 1.04, 1.02], failure='solve at m=4 failed'),
        tail=3)
    self.assertFalse(report.passed)
    self.assertIn('m=4', report.details)


if __name__ == '__main__':
  absltest.main()
