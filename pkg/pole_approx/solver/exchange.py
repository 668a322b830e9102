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
"""Alternating-extrema bookkeeping shared by the Remez and grid exchanges.

A residual sampled at ascending points is cut into maximal runs of one sign;
each run contributes its largest magnitude. Consecutive run maxima alternate
in sign, and a new reference is a window of them.
"""

from typing import Callable, List, Sequence, Tuple

from absl import logging
import numpy as np

from pole_approx import errors
from pole_approx.kernel import search


def run_maxima(values: Sequence) -> List[int]:
  """Index of the largest |value| in every maximal same-sign run.

  Exact zeros belong to no run.

  Args:
    values: residual samples at ascending points.

  Returns:
    ascending indices, one per run; the signs at them alternate.
  """
  maxima = []
  run_sign = 0
  for i, v in enumerate(values):
    s = (v > 0) - (v < 0)
    if not s:
      continue
    if s != run_sign:
      maxima.append(i)
      run_sign = s
    elif abs(v) > abs(values[maxima[-1]]):
      maxima[-1] = i
  return maxima


def select_window(magnitudes: Sequence, count: int) -> int:
  """Start of the window of `count` consecutive entries to keep.

  The window holds the global maximum and, among those that do, has the
  largest smallest magnitude.

  Args:
    magnitudes: |residual| at alternating extrema.
    count: window length.

  Returns:
    the index of the first entry of the window.

  Raises:
    errors.InternalError: fewer than `count` entries, i.e. alternation lost.
  """
  total = len(magnitudes)
  if total < count:
    raise errors.InternalError(
        'residual has {} alternating extrema, {} needed'.format(total, count))
  peak = max(range(total), key=lambda i: magnitudes[i])
  first = max(0, peak - count + 1)
  last = min(peak, total - count)
  return max(
      range(first, last + 1),
      key=lambda s: (min(magnitudes[s:s + count]), -s))


def refine_extremum(residual: Callable, ctx, points: Sequence,
                    values: Sequence, i: int, tol) -> Tuple[object, object]:
  """Polishes the sampled extremum points[i] of `residual`.

  The end points of the sampling interval are kept as they are.

  Args:
    residual: r(t) on numbers of `ctx`.
    ctx: working mpmath context.
    points: ascending sample points.
    values: r at `points`.
    i: index of a run maximum.
    tol: absolute tolerance on t.

  Returns:
    (t, r(t)) with |r(t)| >= |values[i]|.
  """
  if i == 0 or i == len(points) - 1:
    return points[i], values[i]
  sign = 1 if values[i] > 0 else -1
  try:
    found = search.find_extremum(
        lambda t: sign * residual(t),
        (points[i - 1], points[i], points[i + 1]),
        tol,
        maximize=True,
        ctx=ctx)
  except errors.InvalidArgumentError:
    # A flat top between samples; the sample itself is as good as any.
    return points[i], values[i]
  if found.value < sign * values[i]:
    return points[i], values[i]
  return found.t, sign * found.value


def locate_extrema(residual: Callable, ctx, points: Sequence,
                   values: Sequence, tol) -> List[Tuple[object, object]]:
  """Alternating local extrema of `residual`, one per sign run, refined."""
  extrema = [
      refine_extremum(residual, ctx, points, values, i, tol)
      for i in run_maxima(values)
  ]
  logging.log(logging.DEBUG, 'Located %d alternating extrema', len(extrema))
  return extrema


def select_reference(extrema: Sequence[Tuple[object, object]],
                     count: int) -> List[Tuple[object, object]]:
  """Keeps `count` consecutive alternating extrema; see `select_window`."""
  start = select_window([abs(r) for _, r in extrema], count)
  return list(extrema[start:start + count])


def solve_levelled(ctx, basis: Sequence[Sequence], weights: Sequence,
                   targets: Sequence) -> Tuple[np.ndarray, object]:
  """Solves w_i * sum_j c_j T_j(u_i) + (-1)^i h = g_i for c and h.

  Args:
    ctx: working mpmath context.
    basis: rows T_0(u_i)..T_N(u_i) at the N+2 reference points.
    weights: w at the reference points.
    targets: g at the reference points.

  Returns:
    (c as an object array, h).

  Raises:
    errors.InternalError: the system is numerically singular.
  """
  rows = [[weights[i] * b for b in basis[i]] + [(-1)**i]
          for i in range(len(targets))]
  try:
    solution = ctx.lu_solve(ctx.matrix(rows), ctx.matrix(list(targets)))
  except ZeroDivisionError as e:
    raise errors.InternalError('levelled system is singular: {}'.format(e))
  values = [solution[j] for j in range(len(targets))]
  return np.array(values[:-1], dtype=object), values[-1]
