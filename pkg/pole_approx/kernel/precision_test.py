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
"""Tests for pole_approx.kernel.precision."""

import threading

from absl.testing import absltest
from absl.testing import parameterized

from pole_approx import errors
from pole_approx.kernel import precision


class PrecisionTest(parameterized.TestCase):

  def test_dyadic_value_is_exact(self):
    half = precision.mp('0.5', 128)
    self.assertEqual(half, 0.5)
    self.assertEqual(half.mantissa_bits, 128)

  def test_double_rounding_matches_ieee(self):
    self.assertEqual(float(precision.mp('0.1', 53)), 0.1)

  @parameterized.parameters('1/3', 'abc', '', '0.1.2', None)
  def test_malformed_string(self, value):
    with self.assertRaises(errors.InvalidArgumentError):
      precision.mp(value, 64)

  @parameterized.parameters(0, -5, 23)
  def test_precision_too_small(self, bits):
    with self.assertRaises(errors.InvalidArgumentError):
      precision.mp('0.5', bits)

  def test_mixing_uses_larger_precision(self):
    x = precision.mp('0.1', 64)
    y = precision.mp('0.2', 200)
    self.assertEqual((x + y).mantissa_bits, 200)
    self.assertEqual((y * x).mantissa_bits, 200)
    self.assertEqual((x * 3).mantissa_bits, 64)
    self.assertEqual((1 - x).mantissa_bits, 64)

  def test_rounding_error_bound(self):
    bits = 100
    third = precision.MPValue(1, bits) / 3
    ctx = precision.working_context(400)
    exact = ctx.mpf(1) / 3
    rel = abs(ctx.mpf(third.value) - exact) / exact
    self.assertLessEqual(rel, ctx.mpf(2)**(1 - bits))

  def test_immutable(self):
    x = precision.mp('1.5', 64)
    with self.assertRaises(AttributeError):
      x.foo = 1

  def test_sqrt_and_comparisons(self):
    x = precision.mp('2.25', 80)
    self.assertEqual(x.sqrt(), 1.5)
    self.assertLess(precision.mp('1', 80), x)
    self.assertGreaterEqual(x, 2.25)

  def test_contexts_are_independent(self):
    low = precision.working_context(30)
    high = precision.working_context(300)
    self.assertEqual(low.prec, 30)
    self.assertEqual(high.prec, 300)
    self.assertIs(low, precision.working_context(30))

  def test_threads_get_their_own_context(self):
    seen = []
    worker = threading.Thread(
        target=lambda: seen.append(precision.working_context(30)))
    worker.start()
    worker.join()
    self.assertEqual(seen[0].prec, 30)
    self.assertIsNot(seen[0], precision.working_context(30))

  @parameterized.parameters((1, 0.5, 98), (40, 0.5, 160), (10, 0.25, 104))
  def test_default_mantissa_bits(self, m, a, expected):
    self.assertEqual(precision.default_mantissa_bits(m, a), expected)

  def test_decimal_rendering(self):
    self.assertEqual(precision.mp('0.5', 53).to_decimal(5), '0.50000')


if __name__ == '__main__':
  absltest.main()
