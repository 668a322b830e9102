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
"""Tests for pole_approx.asymptotics.model."""

import math

from absl.testing import absltest
from absl.testing import parameterized

from pole_approx import errors
from pole_approx.asymptotics import model


def _re_phi(x, k, m, a):
  return model.model_phi(complex(x, 0), k, m, a).real


class CriticalPointTest(parameterized.TestCase):

  @parameterized.parameters(1, 3, 40)
  def test_diagonal_is_sqrt_a(self, m):
    self.assertAlmostEqual(model.model_critical_point(m, m, 0.49), 0.7,
                           delta=1e-14)

  def test_value(self):
    self.assertAlmostEqual(model.model_critical_point(1, 2, 0.5),
                           math.sqrt(0.4), places=14)
    self.assertAlmostEqual(model.model_critical_point(1, 2, 0.5), 0.632456,
                           places=6)

  def test_k0_collapses_to_a(self):
    with self.assertLogs(level='WARNING') as logs:
      c = model.model_critical_point(0, 3, 0.4)
    self.assertAlmostEqual(c, 0.4, places=15)
    self.assertIn('no critical point', logs.output[0])

  @parameterized.parameters((1, 2, 0.3), (2, 5, 0.5), (3, 1, 0.8))
  def test_between_a_and_one(self, k, m, a):
    c = model.model_critical_point(k, m, a)
    self.assertLess(a, c)
    self.assertLess(c, 1)

  @parameterized.parameters((1, 2, 0.3), (2, 5, 0.5), (1, 1, 0.25))
  def test_is_critical_point_of_re_phi(self, k, m, a):
    c = model.model_critical_point(k, m, a)
    h = 1e-4
    derivative = (-_re_phi(c + 2 * h, k, m, a) + 8 * _re_phi(c + h, k, m, a)
                  - 8 * _re_phi(c - h, k, m, a) +
                  _re_phi(c - 2 * h, k, m, a)) / (12 * h)
    self.assertLess(abs(derivative), 1e-10)
    self.assertAlmostEqual(_re_phi(c, k, m, a), model.model_B(k, m, a),
                           places=12)
    for offset in (-0.01, 0.01):
      self.assertLess(_re_phi(c, k, m, a), _re_phi(c + offset, k, m, a))

  def test_ratio_point_does_not_depend_on_m(self):
    self.assertAlmostEqual(
        model.model_c_q(2, 0.3), model.model_critical_point(14, 7, 0.3),
        places=15)

  @parameterized.parameters((-1, 1, 0.5), (1, 0, 0.5), (1, 1, 1.0))
  def test_domain(self, k, m, a):
    with self.assertRaises(errors.InvalidArgumentError):
      model.model_critical_point(k, m, a)


class ModelBTest(parameterized.TestCase):

  def test_k1_m1(self):
    self.assertAlmostEqual(model.model_B(1, 1, 0.25), 2 * math.log(3),
                           places=14)

  def test_k0_is_out_of_range(self):
    with self.assertRaises(errors.OutOfRangeError):
      model.model_B(0, 2, 0.5)

  @parameterized.parameters((1, 0.25), (4, 0.5), (10, 0.81))
  def test_q1_closed_form(self, m, a):
    root = math.sqrt(a)
    expected = 2 * m * math.log((1 + root) / (1 - root))
    self.assertLessEqual(abs(model.model_B_q(1, m, a) - expected),
                         1e-12 * expected)

  def test_q1_value(self):
    self.assertAlmostEqual(model.model_B_q(1, 2, 0.25), 4 * math.log(3),
                           places=12)
    self.assertAlmostEqual(model.model_B_q(1, 2, 0.25), 4.394449, places=6)

  @parameterized.parameters((2, 3, 0.5), (3, 2, 0.3))
  def test_ratio_mode_matches_direct(self, q, m, a):
    self.assertAlmostEqual(
        model.model_B_q(q, m, a), model.model_B(q * m, m, a), places=11)

  def test_increasing_in_a(self):
    values = [model.model_B(2, 3, a / 10) for a in range(1, 10)]
    for smaller, larger in zip(values, values[1:]):
      self.assertLess(smaller, larger)
    self.assertLess(model.model_B(2, 3, 1e-8), 0.01)
    self.assertGreater(model.model_B(2, 3, 1 - 1e-9), 50)


class AsymptoteTest(parameterized.TestCase):

  def test_difference_decreases(self):
    gaps = [
        abs(model.model_B(2, m, 0.5) - model.model_B_asymptote(2, m, 0.5))
        for m in (10, 20, 40, 80)
    ]
    for before, after in zip(gaps, gaps[1:]):
      self.assertLess(after, before)

  def test_cauchy_decrease(self):
    gap = lambda m: abs(model.model_B(1, m, 0.5) -
                        model.model_B_asymptote(1, m, 0.5))
    self.assertLessEqual(gap(100), gap(50))

  def test_leading_term_dominates(self):
    m = 10**6
    self.assertAlmostEqual(
        model.model_B_asymptote(1, m, 0.5) / (m * math.log(3)), 1.0,
        delta=1e-4)

  def test_needs_k1(self):
    with self.assertRaises(errors.InvalidArgumentError):
      model.model_B_asymptote(0, 10, 0.5)


class PhiTest(parameterized.TestCase):

  def test_origin(self):
    self.assertEqual(model.model_phi(0j, 2, 3, 0.5), 0j)

  @parameterized.parameters(0.55, 0.7, 0.95)
  def test_on_the_slit_interval(self, x):
    k, m, a = 2, 3, 0.5
    value = model.model_phi(complex(x, 0), k, m, a)
    self.assertAlmostEqual(value.imag, k * math.pi, places=12)
    self.assertAlmostEqual(
        value.real,
        k * math.log((x + a) / (x - a)) + m * math.log((1 + x) / (1 - x)),
        places=12)

  @parameterized.parameters(0.3j, 0.6 + 0.1j, -2 + 5j, 3 + 1e-3j)
  def test_imaginary_part_range(self, z):
    k, m = 2, 3
    value = model.model_phi(z, k, m, 0.5)
    self.assertGreaterEqual(value.imag, 0)
    self.assertLessEqual(value.imag, (k + m) * math.pi)

  @parameterized.parameters(0.5, -0.5, 1.0, -1.0, 0.2 - 0.1j)
  def test_rejected_points(self, z):
    with self.assertRaises(errors.OutOfRangeError):
      model.model_phi(z, 2, 3, 0.5)


class ModelParamsTest(absltest.TestCase):

  def test_create(self):
    params = model.ModelParams.create(1, 1, 0.25)
    self.assertAlmostEqual(params.c, 0.5, places=15)
    self.assertAlmostEqual(params.B, 2 * math.log(3), places=14)

  def test_from_ratio(self):
    params = model.ModelParams.from_ratio(1, 2, 0.25)
    self.assertEqual((params.k, params.q), (2, 1))
    self.assertAlmostEqual(params.B, 4 * math.log(3), places=12)


if __name__ == '__main__':
  absltest.main()
