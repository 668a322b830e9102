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
"""Remez exchange for the reduced weighted Chebyshev problem.

  spec = problem.ProblemSpec.weighted(k=1, m=1, a=0.25)
  solution = remez.remez_solve(spec)
  float(solution.L)   # 1/9
"""

import time
from typing import List, Tuple

from absl import logging
import attr

from pole_approx import errors
from pole_approx.kernel import chebyshev
from pole_approx.kernel import precision
from pole_approx.solver import exchange
from pole_approx.solver import problem as problem_lib

# Dense probe points per reference point in every exchange step.
_PROBES_PER_REFERENCE_POINT = 8


@attr.s(auto_attribs=True, frozen=True)
class AlternationPoint(object):
  """One point of the alternation set.

  Attributes:
    t: abscissa in [a^2, 1].
    x: sqrt(t), in [a, 1].
    residual: r(t).
    sign: +1 or -1, the sign of `residual`.
  """

  t: precision.MPValue
  x: precision.MPValue
  residual: precision.MPValue
  sign: int


@attr.s(auto_attribs=True, frozen=True)
class EquiSolution(object):
  """Certificate of a solved problem.

  Attributes:
    spec: the solved problem.
    L: the minimax error, |h| of the final levelled reference.
    alternation: N+2 points with alternating residual signs.
    q: Q(t) in the Chebyshev basis of [a^2, 1].
    iterations: exchange steps taken.
    levelness: (max |r| - min |r|) / max |r| over `alternation`.
    max_residual: largest |r| seen on the final probe scan.
    h_history: |h| of every levelled reference, in order.
  """

  spec: problem_lib.ProblemSpec
  L: precision.MPValue
  alternation: Tuple[AlternationPoint, ...]
  q: chebyshev.ChebPoly
  iterations: int
  levelness: precision.MPValue
  max_residual: precision.MPValue
  h_history: Tuple[precision.MPValue, ...] = ()

  @property
  def mantissa_bits(self) -> int:
    return self.L.mantissa_bits

  @property
  def degree(self) -> int:
    return self.spec.degree

  def residual(self, t: precision.Number) -> precision.MPValue:
    """r(t) of the solved problem, at the solution's precision."""
    reduced = problem_lib.reduce_to_interval(self.spec)
    ctx = reduced.context
    t = ctx.mpf(precision.raw(t))
    q_value = chebyshev.clenshaw(ctx, self.q.raw_coeffs(ctx),
                                 self.q.to_unit(ctx, t))
    return precision.MPValue(reduced.residual(t, q_value), self.mantissa_bits)

  def spans_interval(self) -> bool:
    """True when the alternation starts at a^2 and ends at 1."""
    return (self.alternation[0].t == self.q.lo and
            self.alternation[-1].t == self.q.hi)


def _merge_points(ctx, *point_lists) -> List:
  merged = sorted(set(ctx.mpf(t) for points in point_lists for t in points))
  return merged


def remez_solve(spec: problem_lib.ProblemSpec) -> EquiSolution:
  """Computes the best weighted approximation by multi-point Remez exchange.

  Each step solves the levelled system on the current reference, scans the
  residual on 8(N+2) Chebyshev points plus the reference, polishes the
  extremum of every sign run and moves the whole reference to N+2 of them.

  Args:
    spec: the problem; its mantissa_bits must satisfy the precision rule.

  Returns:
    the `EquiSolution`.

  Raises:
    errors.FailedPreconditionError: the levelled error fell below what the
      working precision resolves.
    errors.ResourceExhaustedError: no convergence within max_iterations; the
      exception carries the last reference.
    errors.InternalError: alternation lost or a singular levelled system.
  """
  reduced = problem_lib.reduce_to_interval(spec)
  ctx = reduced.context
  bits = reduced.mantissa_bits
  lo, hi = reduced.lo.value, reduced.hi.value
  count = reduced.degree + 2
  level_tol = ctx.mpf(spec.level_tol)
  t_tol = (hi - lo) * ctx.ldexp(1, -(bits // 2))
  floor = ctx.ldexp(1, 16 - bits)
  rounding_slack = 1 - ctx.ldexp(1, 16 - bits)
  q_template = chebyshev.ChebPoly.from_raw(lo, hi, [0], bits)

  probes = chebyshev.lobatto_points(ctx, lo, hi,
                                    _PROBES_PER_REFERENCE_POINT * count)
  reference = chebyshev.lobatto_points(ctx, lo, hi, count)
  h_history = []
  start = time.time()
  logging.log(logging.INFO, 'Remez solve %s a=%s N=%d at %d bits',
              spec.kind.value, spec.a, reduced.degree, bits)

  for iteration in range(1, spec.max_iterations + 1):
    us = [q_template.to_unit(ctx, t) for t in reference]
    coeffs, h = exchange.solve_levelled(
        ctx, chebyshev.vandermonde(ctx, us, reduced.degree),
        [reduced.weight(t) for t in reference],
        [reduced.target(t) for t in reference])
    h_abs = abs(h)
    if h_abs < floor:
      raise errors.FailedPreconditionError(
          'levelled error {} is below the resolution of {} bits; increase '
          'mantissa_bits'.format(ctx.nstr(h_abs, 5), bits))
    if h_history and h_abs < h_history[-1] * rounding_slack:
      logging.log(logging.WARNING,
                  'Levelled error decreased at iteration %d: %s -> %s',
                  iteration, ctx.nstr(h_history[-1], 12), ctx.nstr(h_abs, 12))
    h_history.append(h_abs)

    def residual(t, coeffs=coeffs):
      return reduced.residual(
          t, chebyshev.clenshaw(ctx, coeffs, q_template.to_unit(ctx, t)))

    points = _merge_points(ctx, probes, reference)
    values = [residual(t) for t in points]
    extrema = exchange.locate_extrema(residual, ctx, points, values, t_tol)
    selected = exchange.select_reference(extrema, count)
    magnitudes = [abs(r) for _, r in selected]
    levelness = (max(magnitudes) - min(magnitudes)) / max(magnitudes)
    max_residual = max(max(abs(v) for v in values),
                       max(abs(r) for _, r in extrema))
    logging.log(logging.DEBUG,
                'Remez iteration %d: |h|=%s levelness=%s max|r|=%s', iteration,
                ctx.nstr(h_abs, 15), ctx.nstr(levelness, 3),
                ctx.nstr(max_residual, 15))

    if levelness <= level_tol and max_residual <= (1 + level_tol) * h_abs:
      logging.log(logging.INFO,
                  'Remez converged in %d iterations (%.2fs): L=%s', iteration,
                  time.time() - start, ctx.nstr(h_abs, 17))
      return _make_solution(spec, reduced, selected, coeffs, h_abs, iteration,
                            levelness, max_residual, h_history)
    reference = [t for t, _ in selected]

  raise errors.ResourceExhaustedError(
      'Remez exchange did not converge in {} iterations'.format(
          spec.max_iterations),
      last_reference=tuple(precision.MPValue(t, bits) for t in reference))


def _make_solution(spec, reduced, selected, coeffs, h_abs, iterations,
                   levelness, max_residual, h_history) -> EquiSolution:
  """Packages the converged state as MPValues."""
  bits = reduced.mantissa_bits
  ctx = reduced.context
  wrap = lambda v: precision.MPValue(v, bits)
  alternation = []
  for t, r in selected:
    # The end points map back to a and 1 exactly.
    if t == reduced.lo.value:
      x = ctx.mpf(spec.a)
    elif t == reduced.hi.value:
      x = ctx.one
    else:
      x = ctx.sqrt(t)
    alternation.append(
        AlternationPoint(
            t=wrap(t), x=wrap(x), residual=wrap(r), sign=1 if r > 0 else -1))
  return EquiSolution(
      spec=spec,
      L=wrap(h_abs),
      alternation=tuple(alternation),
      q=chebyshev.ChebPoly.from_raw(reduced.lo.value, reduced.hi.value,
                                    list(coeffs), bits),
      iterations=iterations,
      levelness=wrap(levelness),
      max_residual=wrap(max_residual),
      h_history=tuple(wrap(h) for h in h_history))


def alternation_in_x(sol: EquiSolution) -> List[precision.MPValue]:
  """The alternation abscissae x_j = sqrt(t_j), ascending in [a, 1].

  The first point is expected at a and the last at 1; a solution that
  violates this is logged as an anomaly and returned unchanged.
  """
  if not sol.spans_interval():
    logging.log(logging.WARNING,
                'Alternation of %s a=%s does not span [a, 1]: first x=%s, '
                'last x=%s', sol.spec.kind.value, sol.spec.a,
                float(sol.alternation[0].x), float(sol.alternation[-1].x))
  return [p.x for p in sol.alternation]
