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
"""Chebyshev-basis polynomials on an explicit interval.

The numpy.polynomial.chebyshev routines operate on object arrays, so the
same Clenshaw recurrence, Vandermonde construction and derivative code runs
on mpmath numbers at any precision.
"""

from typing import List, Sequence, Tuple

from absl import logging
import attr
import numpy as np
from numpy.polynomial import chebyshev as np_cheb
from numpy.polynomial import polynomial as np_poly

from pole_approx import errors
from pole_approx.kernel import precision


def _check_interval(instance, attribute, value):
  del attribute
  if not instance.lo < value:
    raise errors.InvalidArgumentError(
        'ChebPoly interval needs lo < hi, got [{}, {}]'.format(
            instance.lo, value))


def _check_coeffs(instance, attribute, value):
  del instance, attribute
  if not value:
    raise errors.InvalidArgumentError('ChebPoly needs at least one coefficient')


@attr.s(auto_attribs=True, frozen=True)
class ChebPoly(object):
  """A polynomial sum_j c_j T_j(u) with u the affine image of t in [lo, hi].

  Attributes:
    lo: left end of the interval.
    hi: right end of the interval, strictly greater than `lo`.
    coeffs: Chebyshev coefficients c_0..c_d; the degree is len(coeffs) - 1
      when the leading coefficient is nonzero.
  """

  lo: precision.MPValue
  hi: precision.MPValue = attr.ib(validator=_check_interval)
  coeffs: Tuple[precision.MPValue, ...] = attr.ib(
      converter=tuple, validator=_check_coeffs)

  @classmethod
  def from_raw(cls, lo, hi, coeffs, mantissa_bits: int) -> 'ChebPoly':
    """Wraps raw mpmath numbers as a ChebPoly of the given width."""
    return cls(
        lo=precision.as_mpvalue(lo, mantissa_bits),
        hi=precision.as_mpvalue(hi, mantissa_bits),
        coeffs=[precision.as_mpvalue(c, mantissa_bits) for c in coeffs])

  @property
  def mantissa_bits(self) -> int:
    return max([self.lo.mantissa_bits, self.hi.mantissa_bits] +
               [c.mantissa_bits for c in self.coeffs])

  @property
  def degree(self) -> int:
    nonzero = [j for j, c in enumerate(self.coeffs) if c != 0]
    return nonzero[-1] if nonzero else 0

  def raw_coeffs(self, ctx) -> np.ndarray:
    """Coefficients as an object array of `ctx` numbers."""
    return np.array([ctx.mpf(c.value) for c in self.coeffs], dtype=object)

  def contains(self, t: precision.Number) -> bool:
    value = precision.raw(t)
    return self.lo.value <= value <= self.hi.value

  def to_unit(self, ctx, t):
    """Maps t in [lo, hi] to u in [-1, 1]."""
    lo, hi = ctx.mpf(self.lo.value), ctx.mpf(self.hi.value)
    return (2 * ctx.mpf(t) - lo - hi) / (hi - lo)

  def derivative(self) -> 'ChebPoly':
    """Returns dQ/dt as a ChebPoly on the same interval."""
    ctx = precision.working_context(self.mantissa_bits)
    if len(self.coeffs) == 1:
      return ChebPoly.from_raw(self.lo.value, self.hi.value, [ctx.zero],
                               self.mantissa_bits)
    scale = 2 / (ctx.mpf(self.hi.value) - ctx.mpf(self.lo.value))
    der = np_cheb.chebder(self.raw_coeffs(ctx), scl=scale)
    return ChebPoly.from_raw(self.lo.value, self.hi.value, list(der),
                             self.mantissa_bits)

  def to_monomial(self) -> List[precision.MPValue]:
    """Returns power-basis coefficients p_0..p_d with Q(t) = sum_j p_j t^j."""
    bits = self.mantissa_bits
    ctx = precision.working_context(bits)
    lo, hi = ctx.mpf(self.lo.value), ctx.mpf(self.hi.value)
    in_u = np_cheb.cheb2poly(self.raw_coeffs(ctx))
    # u = alpha * t + beta, composed by Horner's rule.
    affine = np.array([-(hi + lo) / (hi - lo), 2 / (hi - lo)], dtype=object)
    result = np.array([in_u[-1]], dtype=object)
    for c in in_u[-2::-1]:
      result = np_poly.polyadd(np_poly.polymul(result, affine),
                               np.array([c], dtype=object))
    padded = list(result) + [ctx.zero] * (len(self.coeffs) - len(result))
    return [precision.as_mpvalue(c, bits) for c in padded]


def clenshaw(ctx, coeffs: np.ndarray, u):
  """Evaluates sum_j coeffs[j] T_j(u) by the Clenshaw recurrence."""
  return np_cheb.chebval(ctx.mpf(u), coeffs)


def cheb_eval(q: ChebPoly, t: precision.Number) -> precision.MPValue:
  """Evaluates Q(t); points outside [lo, hi] are allowed but logged."""
  bits = q.mantissa_bits
  if isinstance(t, precision.MPValue):
    bits = max(bits, t.mantissa_bits)
  ctx = precision.working_context(bits)
  if not q.contains(t):
    logging.log_first_n(logging.WARNING,
                        'Extrapolating ChebPoly on [%s, %s] at t=%s', 5,
                        float(q.lo), float(q.hi), float(precision.raw(t)))
  value = clenshaw(ctx, q.raw_coeffs(ctx), q.to_unit(ctx, precision.raw(t)))
  return precision.MPValue(value, bits)


def vandermonde(ctx, us: Sequence, degree: int) -> np.ndarray:
  """Matrix of T_j(u_i), shape (len(us), degree + 1), as an object array."""
  return np_cheb.chebvander(
      np.array([ctx.mpf(u) for u in us], dtype=object), degree)


def lobatto_points(ctx, lo, hi, count: int) -> List:
  """`count` Chebyshev extreme points of [lo, hi], ascending, ends included."""
  if count < 2:
    raise errors.InvalidArgumentError(
        'need at least two Chebyshev points, got {}'.format(count))
  lo, hi = ctx.mpf(lo), ctx.mpf(hi)
  points = []
  for u in np_cheb.chebpts2(count):
    u = ctx.mpf(float(u))
    points.append(((1 - u) * lo + (1 + u) * hi) / 2)
  points[0], points[-1] = lo, hi
  return points
