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
"""Convergence sweeps: solved errors against their predicted limits.

A sweep solves one instance per m, normalizes each error and compares it
with the closed-form limit. Instances are solved on a thread pool and the
rows come back in m order.
"""

import concurrent.futures
from typing import Callable, Dict, Optional, Tuple

from absl import logging
import attr

from pole_approx import errors
from pole_approx.asymptotics import formulas
from pole_approx.kernel import precision
from pole_approx.solver import problem
from pole_approx.solver import remez

CSV_COLUMNS = ('m', 'L', 'normalized', 'predicted', 'ratio', 'B',
               'B_predicted', 'B_diff')


@attr.s(auto_attribs=True, frozen=True)
class ConvergenceRow(object):
  """One solved instance of a sweep.

  Attributes:
    m: the sweep index (m, or l = n/2 for even polynomials).
    L: the solved minimax error.
    normalized: L times its growth prefactor.
    predicted: the limit of `normalized`.
    ratio: normalized / predicted.
    B: arccosh(1/L).
    B_predicted: the asymptotic prediction of B.
    B_diff: B - B_predicted.
  """

  m: int
  L: precision.MPValue
  normalized: float
  predicted: float
  ratio: float
  B: float
  B_predicted: float
  B_diff: float


@attr.s(auto_attribs=True, frozen=True)
class ConvergenceTable(object):
  """Rows of a sweep, ordered by m.

  Attributes:
    sweep: which sweep produced the table.
    params: the sweep inputs.
    rows: one row per solved m.
    failure: message of the solve that stopped the sweep early, if any; the
      rows before it are kept.
  """

  sweep: str
  params: Dict[str, object]
  rows: Tuple[ConvergenceRow, ...]
  failure: Optional[str] = None

  @property
  def complete(self) -> bool:
    return self.failure is None

  def column(self, name: str):
    return [getattr(row, name) for row in self.rows]


def _check_range(m_from: int, m_to: int, step: int) -> range:
  if step < 1 or m_from < 1 or m_to < m_from:
    raise errors.InvalidArgumentError(
        'empty sweep range: from={} to={} step={}'.format(m_from, m_to, step))
  return range(m_from, m_to + 1, step)


def _sweep(name: str, params: Dict[str, object], indices: range,
           make_spec: Callable[[int], problem.ProblemSpec],
           make_row: Callable[[int, precision.MPValue], ConvergenceRow],
           jobs: int) -> ConvergenceTable:
  """Solves one spec per index and keeps the rows up to the first failure."""

  def solve(index):
    try:
      return remez.remez_solve(make_spec(index)), None
    except errors.StatusError as e:
      return None, e

  rows = []
  failure = None
  with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
    for index, (sol, error) in zip(indices, pool.map(solve, indices)):
      if error is not None:
        failure = 'solve at m={} failed: {}'.format(index, error)
        logging.log(logging.ERROR, 'Sweep %s stopped: %s', name, failure)
        break
      rows.append(make_row(index, sol.L))
      logging.log(logging.INFO, 'Sweep %s m=%d ratio=%.12g', name, index,
                  rows[-1].ratio)
  return ConvergenceTable(
      sweep=name, params=params, rows=tuple(rows), failure=failure)


def _bits(spec_bits: int, mantissa_bits: Optional[int]) -> int:
  return max(spec_bits, mantissa_bits or 0)


def convergence_table(k: int,
                      a: float,
                      m_from: int,
                      m_to: int,
                      step: int = 1,
                      mantissa_bits: Optional[int] = None,
                      jobs: int = 1) -> ConvergenceTable:
  """Sweeps L^k_m(a) over m against its normalized limit and B asymptote.

  Args:
    k: pole order index at the origin.
    a: inner end of [a, 1].
    m_from: first m.
    m_to: last m, inclusive.
    step: m increment.
    mantissa_bits: lower bound on the working precision; every instance uses
      at least the precision rule for its own m.
    jobs: worker threads.

  Returns:
    the `ConvergenceTable`; a failed solve ends it early.

  Raises:
    errors.InvalidArgumentError: empty range or invalid k, a.
  """
  indices = _check_range(m_from, m_to, step)
  predicted = formulas.limit_rhs_eq01(k, a)

  def make_spec(m):
    spec = problem.ProblemSpec.weighted(k, m, a)
    return spec.with_options(
        mantissa_bits=_bits(spec.minimum_mantissa_bits, mantissa_bits))

  def make_row(m, L):
    normalized = formulas.normalized_error(k, m, a, L)
    b = formulas.b_from_error(L)
    b_predicted = formulas.b_asymptote(k, m, a)
    return ConvergenceRow(
        m=m,
        L=L,
        normalized=normalized,
        predicted=predicted,
        ratio=normalized / predicted,
        B=b,
        B_predicted=b_predicted,
        B_diff=b - b_predicted)

  params = dict(k=k, a=a, m_from=m_from, m_to=m_to, step=step,
                mantissa_bits=mantissa_bits)
  return _sweep('eq01', params, indices, make_spec, make_row, jobs)


def diagonal_convergence_table(a: float,
                               m_from: int,
                               m_to: int,
                               step: int = 1,
                               mantissa_bits: Optional[int] = None,
                               jobs: int = 1) -> ConvergenceTable:
  """Sweeps L^m_m(a) against the diagonal limit.

  B is predicted from the polynomial problem at the mapped point, since
  L^m_m(a) = L^0_m(2 sqrt(a) / (1 + a)).
  """
  indices = _check_range(m_from, m_to, step)
  predicted = formulas.diag_limit_rhs(a)
  mapped = formulas.diag_map(a)

  def make_spec(m):
    spec = problem.ProblemSpec.weighted(m, m, a)
    # The diagonal error decays like the polynomial one at the mapped point.
    rule = precision.default_mantissa_bits(m, mapped)
    return spec.with_options(mantissa_bits=_bits(rule, mantissa_bits))

  def make_row(m, L):
    normalized = formulas.diag_normalized_error(m, a, L)
    b = formulas.b_from_error(L)
    b_predicted = formulas.b_asymptote(0, m, mapped)
    return ConvergenceRow(
        m=m,
        L=L,
        normalized=normalized,
        predicted=predicted,
        ratio=normalized / predicted,
        B=b,
        B_predicted=b_predicted,
        B_diff=b - b_predicted)

  params = dict(a=a, m_from=m_from, m_to=m_to, step=step,
                mantissa_bits=mantissa_bits)
  return _sweep('eq62', params, indices, make_spec, make_row, jobs)


def app1_convergence_table(p: float,
                           a: float,
                           l_from: int,
                           l_to: int,
                           step: int = 1,
                           mantissa_bits: Optional[int] = None,
                           jobs: int = 1) -> ConvergenceTable:
  """Sweeps E_{2l}(p, a), the best even-polynomial error for |x|^p.

  The m column holds l. `normalized` is the error itself and `predicted`
  the large-l asymptotic, so `ratio` tends to one; B columns compare
  arccosh of the inverses of both.
  """
  indices = _check_range(l_from, l_to, step)

  def make_spec(l):
    spec = problem.ProblemSpec.unweighted(p, 2 * l, a)
    return spec.with_options(
        mantissa_bits=_bits(spec.minimum_mantissa_bits, mantissa_bits))

  def make_row(l, L):
    predicted = formulas.app1_en_asymptote(p, a, 2 * l)
    value = float(L)
    b = formulas.b_from_error(L)
    b_predicted = formulas.b_from_error(predicted)
    return ConvergenceRow(
        m=l,
        L=L,
        normalized=value,
        predicted=predicted,
        ratio=value / predicted,
        B=b,
        B_predicted=b_predicted,
        B_diff=b - b_predicted)

  params = dict(p=p, a=a, l_from=l_from, l_to=l_to, step=step,
                mantissa_bits=mantissa_bits)
  return _sweep('app1', params, indices, make_spec, make_row, jobs)
