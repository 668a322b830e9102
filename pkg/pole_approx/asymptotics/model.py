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
"""The explicitly solvable two-slit model.

The model replaces the extremal conformal map by

  phi(z) = k log((a + z) / (a - z)) + m log((1 + z) / (1 - z)),

whose real part on (a, 1) has a single critical point c; B is the critical
value. Everything here is closed form.
"""

import math

from absl import logging
import attr

from pole_approx import errors
from pole_approx.kernel import precision

# Working precision of the complex evaluation of phi.
_PHI_BITS = 113


def _check_inputs(k, m, a):
  if k < 0 or m < 1 or k + m < 1:
    raise errors.InvalidArgumentError(
        'model needs k >= 0 and m >= 1, got k={} m={}'.format(k, m))
  if not 0.0 < a < 1.0:
    raise errors.InvalidArgumentError(
        'model needs a in (0, 1), got {}'.format(a))


def model_critical_point(k: float, m: float, a: float) -> float:
  """c = sqrt((m a^2 + k a) / (m + k a)); k = 0 collapses to c = a."""
  _check_inputs(k, m, a)
  if k == 0:
    logging.log(logging.WARNING,
                'k = 0 has no critical point inside (a, 1); returning c = a')
  return math.sqrt((m * a * a + k * a) / (m + k * a))


def model_c_q(q: float, a: float) -> float:
  """The critical point for k = q m, which does not depend on m."""
  if q <= 0:
    raise errors.InvalidArgumentError('q must be positive, got {}'.format(q))
  return model_critical_point(q, 1, a)


def _critical_value(k, m, a, c) -> float:
  if c <= a:
    raise errors.OutOfRangeError(
        'critical point c={} does not exceed a={}; the model needs k >= 1'
        .format(c, a))
  return k * math.log((c + a) / (c - a)) + m * math.log((1 + c) / (1 - c))


def model_B(k: float, m: float, a: float) -> float:
  """B = k log((c+a)/(c-a)) + m log((1+c)/(1-c)).

  Raises:
    errors.OutOfRangeError: when c <= a, i.e. k = 0.
  """
  return _critical_value(k, m, a, model_critical_point(k, m, a))


def model_B_q(q: float, m: float, a: float) -> float:
  """B for the fixed ratio k = q m; linear in m because c does not move."""
  c = model_c_q(q, a)
  return m * _critical_value(q, 1, a, c)


def model_B_asymptote(k: float, m: float, a: float) -> float:
  """Large-m expansion of `model_B` through the constant term in m."""
  _check_inputs(k, m, a)
  if k < 1:
    raise errors.InvalidArgumentError(
        'the expansion needs k >= 1, got {}'.format(k))
  return (m * math.log((1 + a) / (1 - a)) + k * math.log(2 * m) +
          k * math.log(2 * a / (1 - a * a)) + k - k * math.log(k))


def model_phi(z: complex, k: float, m: float, a: float) -> complex:
  """phi(z) with principal logarithms on the closed upper half-plane.

  Both Moebius factors map the upper half-plane into itself, so Im phi lies
  in [0, (k + m) pi].

  Raises:
    errors.OutOfRangeError: z below the real axis or at one of +-a, +-1.
  """
  _check_inputs(k, m, a)
  z = complex(z)
  if z.imag < 0:
    raise errors.OutOfRangeError(
        'phi is defined on the closed upper half-plane, got z={}'.format(z))
  if z.imag == 0 and abs(z.real) in (a, 1.0):
    raise errors.OutOfRangeError('z={} is a branch point of phi'.format(z))
  ctx = precision.working_context(_PHI_BITS)
  w = precision.mp_complex(z.real, z.imag, _PHI_BITS)
  value = (k * ctx.log((a + w) / (a - w)) + m * ctx.log((1 + w) / (1 - w)))
  return complex(value)


@attr.s(auto_attribs=True, frozen=True)
class ModelParams(object):
  """Inputs and derived quantities of one model instance.

  Attributes:
    k: pole order index at the origin; q * m in ratio mode.
    m: pole order index at infinity.
    a: inner end of [a, 1].
    c: critical point of Re phi on (a, 1).
    B: critical value.
    q: the ratio k / m when built by `from_ratio`.
  """

  k: float
  m: float
  a: float
  c: float
  B: float
  q: float = 0.0

  @classmethod
  def create(cls, k: float, m: float, a: float) -> 'ModelParams':
    return cls(k=k, m=m, a=a, c=model_critical_point(k, m, a),
               B=model_B(k, m, a))

  @classmethod
  def from_ratio(cls, q: float, m: float, a: float) -> 'ModelParams':
    return cls(k=q * m, m=m, a=a, c=model_c_q(q, a), B=model_B_q(q, m, a),
               q=q)
