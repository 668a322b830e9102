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
"""Laurent form of the odd rational approximant of sgn(x)."""

from typing import Dict, Optional

import attr

from pole_approx import errors
from pole_approx.kernel import precision
from pole_approx.solver import problem as problem_lib
from pole_approx.solver import remez


def _sorted_dict(value) -> Dict[int, precision.MPValue]:
  return dict(sorted(dict(value).items()))


@attr.s(auto_attribs=True, frozen=True)
class RationalExpansion(object):
  """f(x) = sum_j c_j x^j over odd j from -(2k-1) to 2m-1.

  Attributes:
    laurent_coeffs: exponent -> coefficient, ascending in the exponent.
  """

  laurent_coeffs: Dict[int, precision.MPValue] = attr.ib(
      converter=_sorted_dict)

  def is_odd(self) -> bool:
    """True when only odd powers of x occur, so f(-x) = -f(x)."""
    return all(j % 2 for j in self.laurent_coeffs)

  def evaluate(self, x: precision.Number) -> precision.MPValue:
    """f(x); x must be nonzero when negative powers are present."""
    bits = max(c.mantissa_bits for c in self.laurent_coeffs.values())
    if isinstance(x, precision.MPValue):
      bits = max(bits, x.mantissa_bits)
    ctx = precision.working_context(bits)
    x = ctx.mpf(precision.raw(x))
    total = ctx.fsum(
        ctx.mpf(c.value) * ctx.power(x, j)
        for j, c in self.laurent_coeffs.items())
    return precision.MPValue(total, bits)


def expand_rational(
    sol: remez.EquiSolution,
    spec: Optional[problem_lib.ProblemSpec] = None) -> RationalExpansion:
  """Rewrites f(x) = Q(x^2) / x^(2k-1) in powers of x.

  Args:
    sol: a solved WEIGHTED_SGN instance.
    spec: the problem; defaults to `sol.spec`.

  Returns:
    the `RationalExpansion`, one coefficient per odd exponent
    -(2k-1), ..., 2m-1.

  Raises:
    errors.FailedPreconditionError: for an UNWEIGHTED_ABS_P solution.
  """
  spec = spec or sol.spec
  if spec.kind != problem_lib.Kind.WEIGHTED_SGN:
    raise errors.FailedPreconditionError(
        'Laurent expansion needs a weighted sgn solution, got {}'.format(
            spec.kind.value))
  shift = 2 * spec.k - 1
  monomial = sol.q.to_monomial()
  return RationalExpansion(
      laurent_coeffs={2 * j - shift: c for j, c in enumerate(monomial)})
