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
"""Tests for pole_approx.solver.rational."""

from absl.testing import absltest
from absl.testing import parameterized

from pole_approx import errors
from pole_approx.kernel import precision
from pole_approx.solver import problem
from pole_approx.solver import rational
from pole_approx.solver import remez


def _expand(k, m, a):
  spec = problem.ProblemSpec.weighted(k, m, a)
  sol = remez.remez_solve(spec)
  return sol, rational.expand_rational(sol, spec)


class ExpandRationalTest(parameterized.TestCase):

  def test_k0_m1(self):
    _, expansion = _expand(0, 1, 1.0 / 3.0)
    self.assertEqual(list(expansion.laurent_coeffs), [1])
    self.assertAlmostEqual(
        float(expansion.laurent_coeffs[1]), 1.5, delta=1e-12)

  def test_k1_m1_has_both_powers(self):
    _, expansion = _expand(1, 1, 0.25)
    self.assertEqual(list(expansion.laurent_coeffs), [-1, 1])
    for coeff in expansion.laurent_coeffs.values():
      self.assertNotEqual(coeff, 0)

  @parameterized.parameters((1, 1, 0.25), (2, 3, 0.5), (0, 4, 0.3))
  def test_residual_at_alternation(self, k, m, a):
    sol, expansion = _expand(k, m, a)
    self.assertEqual(
        list(expansion.laurent_coeffs), list(range(1 - 2 * k, 2 * m, 2)))
    self.assertTrue(expansion.is_odd())
    for point in sol.alternation:
      error = 1 - expansion.evaluate(point.x)
      self.assertAlmostEqual(
          float(error / point.residual), 1.0, delta=1e-9)

  def test_odd_symmetry(self):
    _, expansion = _expand(2, 2, 0.5)
    for x in ('0.3', '0.7', '1.9'):
      value = precision.mp(x, 128)
      self.assertAlmostEqual(
          float(expansion.evaluate(value) + expansion.evaluate(-value)),
          0.0,
          places=20)

  def test_unweighted_is_rejected(self):
    spec = problem.ProblemSpec.unweighted(1, 2, 0.5)
    with self.assertRaises(errors.FailedPreconditionError):
      rational.expand_rational(remez.remez_solve(spec), spec)


if __name__ == '__main__':
  absltest.main()
