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
"""Gamma function at half-integers (multiprecision) and at reals (double)."""

import math

import numpy as np

from pole_approx import errors
from pole_approx.kernel import precision

# Lanczos approximation with g = 7 and nine terms.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])


def gamma_half_integer(k: int, mantissa_bits: int = 128) -> precision.MPValue:
  """Returns Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!).

  Args:
    k: non-negative integer.
    mantissa_bits: working precision of the result.

  Raises:
    errors.InvalidArgumentError: for negative or non-integer k.
  """
  if not isinstance(k, (int, np.integer)) or k < 0:
    raise errors.InvalidArgumentError(
        'gamma_half_integer needs an integer k >= 0, got {!r}'.format(k))
  ctx = precision.working_context(mantissa_bits)
  k = int(k)
  value = (ctx.mpf(math.factorial(2 * k)) * ctx.sqrt(ctx.pi) /
           (ctx.mpf(4)**k * math.factorial(k)))
  return precision.MPValue(value, mantissa_bits)


def gamma_real(x: float) -> float:
  """Double-precision Gamma(x) from the Lanczos approximation.

  Arguments below 1/2 go through the reflection formula
  Gamma(x) Gamma(1 - x) = pi / sin(pi x).

  Args:
    x: real argument, not a non-positive integer.

  Returns:
    Gamma(x) with relative error around 1e-13 for |x| <= 30.

  Raises:
    errors.OutOfRangeError: at the poles of Gamma.
  """
  x = float(x)
  if x <= 0 and x == math.floor(x):
    raise errors.OutOfRangeError('Gamma has a pole at {}'.format(x))
  if x < 0.5:
    # x - n is exact, so sin keeps its digits next to the poles.
    n = round(x)
    sin_pi_x = math.sin(math.pi * (x - n)) * (-1.0 if n % 2 else 1.0)
    return math.pi / (sin_pi_x * gamma_real(1.0 - x))
  z = x - 1.0
  terms = _LANCZOS_COEFFS[1:] / (z + np.arange(1, len(_LANCZOS_COEFFS)))
  series = float(_LANCZOS_COEFFS[0] + np.sum(terms))
  t = z + _LANCZOS_G + 0.5
  return math.sqrt(2.0 * math.pi) * t**(z + 0.5) * math.exp(-t) * series
