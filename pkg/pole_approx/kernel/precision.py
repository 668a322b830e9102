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
"""Multiprecision values with an explicit mantissa width.

Every thread gets its own `mpmath.MPContext` per precision. Some mpmath
routines (`lu_solve` among them) raise the precision of their context while
they run, so a context is never shared between threads and never touches the
global `mpmath.mp` state.

  x = precision.mp('0.1', 128)
  y = x * 3 + precision.mp('0.5', 256)   # computed at 256 bits
  float(y)
"""

import math
import re
import threading
from typing import Union

import mpmath

from pole_approx import errors

# Smallest mantissa accepted by `mp`; single precision.
MIN_MANTISSA_BITS = 24
# Extra bits on top of the decay of L^k_m(a).
GUARD_BITS = 96

_CONTEXTS = threading.local()

_DECIMAL_RE = re.compile(r'^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$')

Number = Union[int, float, 'MPValue']


def working_context(mantissa_bits: int) -> mpmath.MPContext:
  """Returns this thread's mpmath context for `mantissa_bits` bits."""
  if mantissa_bits < 2:
    raise errors.InvalidArgumentError(
        'mantissa_bits must be at least 2, got {}'.format(mantissa_bits))
  contexts = getattr(_CONTEXTS, 'by_bits', None)
  if contexts is None:
    contexts = _CONTEXTS.by_bits = {}
  ctx = contexts.get(mantissa_bits)
  if ctx is None:
    ctx = mpmath.MPContext()
    ctx.prec = mantissa_bits
    contexts[mantissa_bits] = ctx
  return ctx


def default_mantissa_bits(m: int, a: float) -> int:
  """Precision rule: ceil(m * log2((1+a)/(1-a))) + GUARD_BITS."""
  return int(math.ceil(m * math.log2((1.0 + a) / (1.0 - a)))) + GUARD_BITS


def significant_digits(mantissa_bits: int) -> int:
  """Decimal digits that identify a value of the given width, at least 17."""
  return max(17, int(mantissa_bits * math.log10(2.0)) + 2)


class MPValue(object):
  """A binary floating-point real that carries its mantissa width.

  Arithmetic between two MPValues happens at the larger of the two widths.
  Plain ints and floats adopt the width of the MPValue they meet. Instances
  are immutable.
  """

  __slots__ = ('_value', '_bits')

  def __init__(self, value, mantissa_bits: int):
    ctx = working_context(mantissa_bits)
    object.__setattr__(self, '_bits', int(mantissa_bits))
    object.__setattr__(self, '_value', ctx.mpf(value))

  def __setattr__(self, name, value):
    raise AttributeError('MPValue is immutable')

  @property
  def value(self):
    """The underlying mpmath number, rounded to `mantissa_bits`."""
    return self._value

  @property
  def mantissa_bits(self) -> int:
    return self._bits

  @property
  def context(self) -> mpmath.MPContext:
    return working_context(self._bits)

  def _operands(self, other):
    if isinstance(other, MPValue):
      bits = max(self._bits, other._bits)
      return bits, other._value
    if isinstance(other, (int, float)) or hasattr(other, '_mpf_'):
      return self._bits, other
    return None, None

  def _apply(self, other, op, reflected=False):
    bits, rhs = self._operands(other)
    if bits is None:
      return NotImplemented
    ctx = working_context(bits)
    lhs, rhs = ctx.mpf(self._value), ctx.mpf(rhs)
    if reflected:
      lhs, rhs = rhs, lhs
    return MPValue(op(lhs, rhs), bits)

  def __add__(self, other):
    return self._apply(other, lambda x, y: x + y)

  def __radd__(self, other):
    return self._apply(other, lambda x, y: x + y, reflected=True)

  def __sub__(self, other):
    return self._apply(other, lambda x, y: x - y)

  def __rsub__(self, other):
    return self._apply(other, lambda x, y: x - y, reflected=True)

  def __mul__(self, other):
    return self._apply(other, lambda x, y: x * y)

  def __rmul__(self, other):
    return self._apply(other, lambda x, y: x * y, reflected=True)

  def __truediv__(self, other):
    return self._apply(other, lambda x, y: x / y)

  def __rtruediv__(self, other):
    return self._apply(other, lambda x, y: x / y, reflected=True)

  def __pow__(self, other):
    return self._apply(other, lambda x, y: x**y)

  def __neg__(self):
    return MPValue(-self._value, self._bits)

  def __abs__(self):
    return MPValue(abs(self._value), self._bits)

  def _compare(self, other, op):
    _, rhs = self._operands(other)
    if rhs is None:
      return NotImplemented
    return op(self._value, rhs)

  def __eq__(self, other):
    return self._compare(other, lambda x, y: x == y)

  def __ne__(self, other):
    result = self.__eq__(other)
    return result if result is NotImplemented else not result

  def __lt__(self, other):
    return self._compare(other, lambda x, y: x < y)

  def __le__(self, other):
    return self._compare(other, lambda x, y: x <= y)

  def __gt__(self, other):
    return self._compare(other, lambda x, y: x > y)

  def __ge__(self, other):
    return self._compare(other, lambda x, y: x >= y)

  def __hash__(self):
    return hash(self._value)

  def __float__(self):
    return float(self._value)

  def sqrt(self) -> 'MPValue':
    return MPValue(self.context.sqrt(self._value), self._bits)

  def log(self) -> 'MPValue':
    return MPValue(self.context.log(self._value), self._bits)

  def with_bits(self, mantissa_bits: int) -> 'MPValue':
    """Returns this value rounded (or widened) to another mantissa width."""
    return MPValue(self._value, mantissa_bits)

  def to_decimal(self, digits: int = 0) -> str:
    """Decimal rendering with `digits` significant digits (default: all)."""
    digits = digits or significant_digits(self._bits)
    return mpmath.nstr(self._value, digits, strip_zeros=False)

  def __str__(self):
    return self.to_decimal()

  def __repr__(self):
    return 'MPValue({!r}, mantissa_bits={})'.format(self.to_decimal(),
                                                   self._bits)


def mp(value: str, mantissa_bits: int) -> MPValue:
  """Parses a decimal string into the nearest value of the given width.

  Args:
    value: a decimal literal such as '0.5', '-1.25e-3'. Fractions like '1/3'
      are rejected.
    mantissa_bits: mantissa width, at least MIN_MANTISSA_BITS.

  Returns:
    the correctly rounded MPValue.

  Raises:
    errors.InvalidArgumentError: malformed string or precision.
  """
  if not isinstance(mantissa_bits, int) or mantissa_bits < MIN_MANTISSA_BITS:
    raise errors.InvalidArgumentError(
        'mantissa_bits must be an integer >= {}, got {!r}'.format(
            MIN_MANTISSA_BITS, mantissa_bits))
  if not isinstance(value, str) or not _DECIMAL_RE.match(value.strip()):
    raise errors.InvalidArgumentError(
        'expected a decimal string, got {!r}'.format(value))
  return MPValue(working_context(mantissa_bits).mpf(value.strip()),
                 mantissa_bits)


def as_mpvalue(value: Number, mantissa_bits: int) -> MPValue:
  """Converts an int, float, mpmath number or MPValue to `mantissa_bits`."""
  if isinstance(value, MPValue):
    return value.with_bits(mantissa_bits)
  return MPValue(value, mantissa_bits)


def raw(value: Number):
  """Returns the mpmath (or plain Python) number behind `value`."""
  if isinstance(value, MPValue):
    return value.value
  return value


def mp_complex(real: Number, imag: Number, mantissa_bits: int):
  """Builds an mpmath complex number from two real parts."""
  ctx = working_context(mantissa_bits)
  return ctx.mpc(ctx.mpf(raw(real)), ctx.mpf(raw(imag)))
