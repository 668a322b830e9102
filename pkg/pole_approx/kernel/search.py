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
"""Local extremum search and adaptive quadrature over mpmath numbers.

Both routines take a plain callable. When a context is given, the callable
receives and returns numbers of that context; otherwise Python floats.
"""

import math
from typing import Callable, Optional, Tuple

from absl import logging
import attr

from pole_approx import errors
from pole_approx.kernel import precision

_MAX_EXTREMUM_ITERATIONS = 500


@attr.s(auto_attribs=True, frozen=True)
class Extremum(object):
  """Result of `find_extremum`.

  Attributes:
    t: abscissa of the located extremum.
    value: f(t).
    converged: False when the iteration budget ran out.
    candidates: when not converged, the two best (t, f(t)) pairs seen.
  """

  t: object
  value: object
  converged: bool = True
  candidates: Tuple[Tuple[object, object], ...] = ()


def find_extremum(f: Callable,
                  bracket: Tuple[object, object, object],
                  tol,
                  maximize: bool = True,
                  ctx=None,
                  max_iterations: int = _MAX_EXTREMUM_ITERATIONS) -> Extremum:
  """Locates a maximum (or minimum) of f inside a three-point bracket.

  Golden-section search whose bracket is refined by parabolic steps through
  the three best points whenever such a step stays inside the bracket.

  Args:
    f: scalar function.
    bracket: (t_left, t_mid, t_right) with f(t_mid) strictly above (for a
      maximum) both f(t_left) and f(t_right).
    tol: absolute tolerance on t.
    maximize: search for a maximum when True, a minimum otherwise.
    ctx: mpmath context for the arithmetic; None computes in floats.
    max_iterations: iteration budget.

  Returns:
    an `Extremum`.

  Raises:
    errors.InvalidArgumentError: if the bracket does not enclose an extremum.
  """
  if ctx is None:
    conv, sqrt = float, math.sqrt
  else:
    conv, sqrt = ctx.mpf, ctx.sqrt
  sign = -1 if maximize else 1

  def g(t):
    return sign * conv(f(t))

  left, mid, right = (conv(precision.raw(t)) for t in bracket)
  if left > right:
    left, right = right, left
  g_mid = g(mid)
  if not (left < mid < right and g_mid < g(left) and g_mid < g(right)):
    raise errors.InvalidArgumentError(
        'bracket ({}, {}, {}) does not enclose an {}'.format(
            left, mid, right, 'maximum' if maximize else 'minimum'))

  tol = conv(precision.raw(tol))
  cgold = (3 - sqrt(conv(5))) / 2
  a, b = left, right
  x = w = v = mid
  gx = gw = gv = g_mid
  d = e = conv(0)
  for _ in range(max_iterations):
    xm = (a + b) / 2
    tol2 = 2 * tol
    if abs(x - xm) <= tol2 - (b - a) / 2:
      return Extremum(t=x, value=sign * gx)
    golden = True
    if abs(e) > tol:
      r = (x - w) * (gx - gv)
      q = (x - v) * (gx - gw)
      p = (x - v) * q - (x - w) * r
      q = 2 * (q - r)
      if q > 0:
        p = -p
      q = abs(q)
      e_prev, e = e, d
      if abs(p) < abs(q * e_prev / 2) and q * (a - x) < p < q * (b - x):
        d = p / q
        u = x + d
        if u - a < tol2 or b - u < tol2:
          d = tol if xm >= x else -tol
        golden = False
    if golden:
      e = (a - x) if x >= xm else (b - x)
      d = cgold * e
    if abs(d) >= tol:
      u = x + d
    else:
      u = x + (tol if d >= 0 else -tol)
    gu = g(u)
    if gu <= gx:
      if u >= x:
        a = x
      else:
        b = x
      v, w, x = w, x, u
      gv, gw, gx = gw, gx, gu
    else:
      if u < x:
        a = u
      else:
        b = u
      if gu <= gw or w == x:
        v, w = w, u
        gv, gw = gw, gu
      elif gu <= gv or v == x or v == w:
        v, gv = u, gu
  logging.log(logging.WARNING,
              'Extremum search did not converge in %d iterations on [%s, %s]',
              max_iterations, float(a), float(b))
  return Extremum(
      t=x,
      value=sign * gx,
      converged=False,
      candidates=((x, sign * gx), (w, sign * gw)))


@attr.s(auto_attribs=True, frozen=True)
class Quadrature(object):
  """Options for `integrate`.

  Attributes:
    abs_tol: absolute error target for the whole integral.
    max_subdivisions: budget of interval bisections.
  """

  abs_tol: float = 1e-12
  max_subdivisions: int = 20000


@attr.s(auto_attribs=True, frozen=True)
class Integral(object):
  """Result of `integrate`.

  Attributes:
    value: the integral estimate.
    error_estimate: accumulated Richardson error estimate.
    subdivisions: number of bisections performed.
    exhausted: True when the subdivision budget ran out; `value` is then the
      partial result over the accepted panels plus the coarse estimate over
      the rest.
  """

  value: precision.MPValue
  error_estimate: float
  subdivisions: int
  exhausted: bool = False


# Panels the interval is cut into before adaptivity starts.
_INITIAL_PANELS = 4


def integrate(f: Callable,
              lo: precision.Number,
              hi: precision.Number,
              quad: Quadrature = Quadrature(),
              mantissa_bits: Optional[int] = None) -> Integral:
  """Adaptive Simpson integration of f over [lo, hi].

  Args:
    f: integrand; receives and returns numbers of the working context.
    lo: lower limit.
    hi: upper limit.
    quad: tolerance and budget.
    mantissa_bits: working precision; defaults to the widest MPValue limit or
      53 bits for float limits.

  Returns:
    an `Integral` whose error estimate is below `quad.abs_tol` unless the
    budget was exhausted.
  """
  if mantissa_bits is None:
    widths = [x.mantissa_bits for x in (lo, hi)
              if isinstance(x, precision.MPValue)]
    mantissa_bits = max(widths) if widths else 53
  ctx = precision.working_context(mantissa_bits)

  def fn(t):
    return ctx.mpf(f(t))

  lo, hi = ctx.mpf(precision.raw(lo)), ctx.mpf(precision.raw(hi))
  abs_tol = ctx.mpf(precision.raw(quad.abs_tol))

  stack = []
  width = (hi - lo) / _INITIAL_PANELS
  for i in reversed(range(_INITIAL_PANELS)):
    a = lo + i * width
    b = hi if i == _INITIAL_PANELS - 1 else lo + (i + 1) * width
    fa, fb, fm = fn(a), fn(b), fn((a + b) / 2)
    whole = (b - a) / 6 * (fa + 4 * fm + fb)
    stack.append((a, b, fa, fm, fb, whole, abs_tol / _INITIAL_PANELS))

  total = ctx.zero
  error = ctx.zero
  subdivisions = 0
  exhausted = False
  while stack:
    a, b, fa, fm, fb, whole, tol = stack.pop()
    m = (a + b) / 2
    flm, frm = fn((a + m) / 2), fn((m + b) / 2)
    left = (m - a) / 6 * (fa + 4 * flm + fm)
    right = (b - m) / 6 * (fm + 4 * frm + fb)
    delta = left + right - whole
    subdivisions += 1
    if abs(delta) <= 15 * tol or exhausted:
      total += left + right + delta / 15
      error += abs(delta) / 15
      continue
    if subdivisions >= quad.max_subdivisions:
      exhausted = True
      logging.log(logging.WARNING,
                  'Quadrature budget of %d subdivisions exhausted on [%s, %s]',
                  quad.max_subdivisions, float(lo), float(hi))
      total += left + right + delta / 15
      error += abs(delta) / 15
      continue
    stack.append((m, b, fm, frm, fb, right, tol / 2))
    stack.append((a, m, fa, flm, fm, left, tol / 2))
  return Integral(
      value=precision.MPValue(total, mantissa_bits),
      error_estimate=float(error),
      subdivisions=subdivisions,
      exhausted=exhausted)
