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
"""Independent estimate of L from a discretized problem.

The residual is restricted to a fixed set of Chebyshev points and the
discrete minimax problem is solved by exchange on that set. The discrete
optimum never exceeds the continuous one and approaches it as the grid is
refined.
"""

import bisect
from typing import List, Tuple

from absl import logging
import attr
import numpy as np

from pole_approx import errors
from pole_approx.kernel import chebyshev
from pole_approx.kernel import precision
from pole_approx.solver import exchange
from pole_approx.solver import problem as problem_lib

# Grids with fewer nodes per reference point than this are coarse.
_MIN_NODES_PER_REFERENCE_POINT = 4
# Single-point exchange steps allowed per reference point.
_SINGLE_POINT_STEPS_PER_REFERENCE_POINT = 50


@attr.s(auto_attribs=True, frozen=True)
class OracleEstimate(object):
  """Result of `grid_oracle`.

  Attributes:
    L: the minimax error of the discretized problem.
    grid_size: number of nodes.
    exchanges: exchange steps taken, both phases together.
    fell_back: True when multi-point exchange cycled and the single-point
      phase finished the solve.
    reference: the final reference, as abscissae in [a^2, 1].
  """

  L: precision.MPValue
  grid_size: int
  exchanges: int
  fell_back: bool = False
  reference: Tuple[precision.MPValue, ...] = ()


class _Grid(object):
  """Per-node data of the discretized problem."""

  def __init__(self, reduced: problem_lib.ReducedProblem, size: int):
    ctx = reduced.context
    self.ctx = ctx
    self.nodes = chebyshev.lobatto_points(ctx, reduced.lo.value,
                                          reduced.hi.value, size)
    unit = chebyshev.ChebPoly.from_raw(reduced.lo.value, reduced.hi.value,
                                       [0], reduced.mantissa_bits)
    self.basis = chebyshev.vandermonde(
        ctx, [unit.to_unit(ctx, t) for t in self.nodes], reduced.degree)
    self.targets = np.array([reduced.target(t) for t in self.nodes],
                            dtype=object)
    self.weights = np.array([reduced.weight(t) for t in self.nodes],
                            dtype=object)

  def level(self, reference: List[int]):
    return exchange.solve_levelled(self.ctx, self.basis[reference],
                                   self.weights[reference],
                                   self.targets[reference])

  def residuals(self, coeffs: np.ndarray) -> np.ndarray:
    return self.targets - self.weights * self.basis.dot(coeffs)


def _single_point_swap(reference: List[int], residuals: np.ndarray,
                       j: int) -> List[int]:
  """Brings node j into the reference while keeping the signs alternating."""
  sign = residuals[j] > 0
  pos = bisect.bisect_left(reference, j)
  reference = list(reference)
  if pos == 0:
    if (residuals[reference[0]] > 0) == sign:
      reference[0] = j
    else:
      reference = [j] + reference[:-1]
  elif pos == len(reference):
    if (residuals[reference[-1]] > 0) == sign:
      reference[-1] = j
    else:
      reference = reference[1:] + [j]
  elif (residuals[reference[pos - 1]] > 0) == sign:
    reference[pos - 1] = j
  else:
    reference[pos] = j
  return reference


def grid_oracle(spec: problem_lib.ProblemSpec,
                grid_size: int) -> OracleEstimate:
  """Solves the problem restricted to `grid_size` Chebyshev points.

  Multi-point exchange runs first. If it revisits a reference, the solve
  re-seeds from the best reference seen and finishes by single-point
  exchange, whose levelled error grows strictly at every step.

  Args:
    spec: the problem.
    grid_size: number of nodes, at least N+2. With exactly N+2 nodes the
      answer is the levelled error of interpolation on them.

  Returns:
    an `OracleEstimate`.

  Raises:
    errors.InvalidArgumentError: grid_size below N+2.
    errors.ResourceExhaustedError: no convergence in either phase.
  """
  reduced = problem_lib.reduce_to_interval(spec)
  count = reduced.degree + 2
  if grid_size < count:
    raise errors.InvalidArgumentError(
        'grid of {} nodes cannot hold a reference of {} points'.format(
            grid_size, count))
  if grid_size < _MIN_NODES_PER_REFERENCE_POINT * count:
    logging.log(logging.WARNING,
                'Oracle grid of %d nodes is coarse for N+2=%d', grid_size,
                count)
  ctx = reduced.context
  tol = ctx.mpf(spec.level_tol)
  grid = _Grid(reduced, grid_size)
  reference = sorted(
      set(int(i) for i in np.round(np.linspace(0, grid_size - 1, count))))
  seen = set()
  best_h, best_reference = ctx.zero, reference
  exchanges = 0

  for _ in range(spec.max_iterations):
    coeffs, h = grid.level(reference)
    if abs(h) > best_h:
      best_h, best_reference = abs(h), reference
    residuals = grid.residuals(coeffs)
    if max(abs(r) for r in residuals) <= (1 + tol) * abs(h):
      return _estimate(reduced, grid, abs(h), grid_size, exchanges, False,
                       reference)
    seen.add(tuple(reference))
    maxima = exchange.run_maxima(list(residuals))
    start = exchange.select_window([abs(residuals[i]) for i in maxima], count)
    reference = maxima[start:start + count]
    exchanges += 1
    if tuple(reference) in seen:
      logging.log(logging.INFO,
                  'Oracle exchange cycled after %d steps; switching to '
                  'single-point exchange', exchanges)
      break
  else:
    logging.log(logging.INFO,
                'Oracle multi-point exchange used its %d steps; switching to '
                'single-point exchange', spec.max_iterations)

  reference = best_reference
  for _ in range(_SINGLE_POINT_STEPS_PER_REFERENCE_POINT * count):
    coeffs, h = grid.level(reference)
    residuals = grid.residuals(coeffs)
    j = max(range(grid_size), key=lambda i: abs(residuals[i]))
    if abs(residuals[j]) <= (1 + tol) * abs(h) or j in reference:
      return _estimate(reduced, grid, abs(h), grid_size, exchanges, True,
                       reference)
    reference = _single_point_swap(reference, residuals, j)
    exchanges += 1
  raise errors.ResourceExhaustedError(
      'grid oracle did not converge on {} nodes'.format(grid_size),
      last_reference=tuple(
          precision.MPValue(grid.nodes[i], reduced.mantissa_bits)
          for i in reference))


def _estimate(reduced, grid, h_abs, grid_size, exchanges, fell_back,
              reference) -> OracleEstimate:
  bits = reduced.mantissa_bits
  logging.log(logging.INFO, 'Oracle on %d nodes: L=%s after %d exchanges',
              grid_size, grid.ctx.nstr(h_abs, 17), exchanges)
  return OracleEstimate(
      L=precision.MPValue(h_abs, bits),
      grid_size=grid_size,
      exchanges=exchanges,
      fell_back=fell_back,
      reference=tuple(precision.MPValue(grid.nodes[i], bits)
                      for i in reference))
