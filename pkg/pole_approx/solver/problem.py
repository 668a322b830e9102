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
"""Problem descriptions and their reduction to one interval.

Both extremal problems are even/odd symmetric, so they live on x in [a, 1].
With t = x^2 they become weighted Chebyshev problems on [a^2, 1]:

  WEIGHTED_SGN     sgn(x) ~ Q(x^2) / x^(2k-1)   residual 1 - t^(1/2-k) Q(t),
                   deg Q <= m + k - 1.
  UNWEIGHTED_ABS_P |x|^p ~ Q(x^2)              residual t^(p/2) - Q(t),
                   deg Q <= n / 2.
"""

import enum
from typing import Callable, Optional

import attr

from pole_approx import errors
from pole_approx.kernel import precision

# Inputs closer to the ends of (0, 1) degenerate; see `allow_degenerate`.
_MIN_A = 0.01
_MAX_A = 0.99


@enum.unique
class Kind(enum.Enum):
  """The extremal problem being solved."""

  WEIGHTED_SGN = 'weighted-sgn'
  UNWEIGHTED_ABS_P = 'unweighted-abs-p'


@attr.s(auto_attribs=True, frozen=True)
class ProblemSpec(object):
  """Identifies one extremal problem plus the numerical options of its solve.

  Attributes:
    kind: which problem.
    a: inner end of [a, 1], strictly inside (0, 1).
    k: pole order index at the origin (WEIGHTED_SGN), k >= 0.
    m: pole order index at infinity (WEIGHTED_SGN), m >= 1.
    p: exponent of |x|^p (UNWEIGHTED_ABS_P), positive and not an even
      integer.
    n: even polynomial degree (UNWEIGHTED_ABS_P), n >= 2.
    mantissa_bits: working precision; None selects the kernel rule.
    level_tol: relative levelness at which the exchange stops.
    max_iterations: exchange budget.
    allow_degenerate: admit a <= 0.01 or a >= 0.99.
  """

  kind: Kind
  a: float
  k: int = 0
  m: int = 1
  p: float = 1.0
  n: int = 2
  mantissa_bits: Optional[int] = None
  level_tol: float = 1e-12
  max_iterations: int = 60
  allow_degenerate: bool = False

  @classmethod
  def weighted(cls, k: int, m: int, a: float, **options) -> 'ProblemSpec':
    """The sgn problem with poles of order 2k-1 at 0 and 2m-1 at infinity."""
    spec = cls(kind=Kind.WEIGHTED_SGN, a=float(a), k=k, m=m, **options)
    spec.validate()
    return spec

  @classmethod
  def unweighted(cls, p: float, n: int, a: float,
                 **options) -> 'ProblemSpec':
    """Best approximation of |x|^p by even polynomials of degree n."""
    spec = cls(
        kind=Kind.UNWEIGHTED_ABS_P, a=float(a), p=float(p), n=n, **options)
    spec.validate()
    return spec

  @classmethod
  def weighted_abs_p(cls, p: int, n: int, a: float,
                     **options) -> 'ProblemSpec':
    """The weighted |x|^p / x^p problem; same solve as L^k_m(a).

    Args:
      p: positive odd integer, p = 2k - 1.
      n: even degree, n = 2(k + m - 1).
      a: inner end of [a, 1].
      **options: numerical options of `ProblemSpec`.

    Returns:
      the equivalent WEIGHTED_SGN spec.
    """
    if p != int(p) or int(p) < 1 or int(p) % 2 != 1:
      raise errors.InvalidArgumentError(
          'weighted |x|^p needs a positive odd p, got {}'.format(p))
    if n % 2 or n < int(p) + 1:
      raise errors.InvalidArgumentError(
          'weighted |x|^p needs an even n >= p + 1, got n={}'.format(n))
    k = (int(p) + 1) // 2
    return cls.weighted(k, n // 2 - k + 1, a, **options)

  def validate(self) -> None:
    """Raises errors.InvalidArgumentError if the spec is not admissible."""
    if not 0.0 < self.a < 1.0:
      raise errors.InvalidArgumentError(
          'a must lie strictly inside (0, 1), got {}'.format(self.a))
    if not self.allow_degenerate and not _MIN_A < self.a < _MAX_A:
      raise errors.InvalidArgumentError(
          'a={} is degenerate; pass allow_degenerate=True to solve anyway'
          .format(self.a))
    if self.kind == Kind.WEIGHTED_SGN:
      if self.k < 0 or self.m < 1:
        raise errors.InvalidArgumentError(
            'need k >= 0 and m >= 1, got k={} m={}'.format(self.k, self.m))
    else:
      if self.p <= 0 or (self.p == int(self.p) and int(self.p) % 2 == 0):
        raise errors.InvalidArgumentError(
            'p must be positive and not an even integer, got {}'.format(
                self.p))
      if self.n < 2 or self.n % 2:
        raise errors.InvalidArgumentError(
            'n must be an even integer >= 2, got {}'.format(self.n))
    if self.level_tol <= 0 or self.max_iterations < 1:
      raise errors.InvalidArgumentError('level_tol and max_iterations must '
                                        'be positive')
    if (self.mantissa_bits is not None and
        self.mantissa_bits < self.minimum_mantissa_bits):
      raise errors.FailedPreconditionError(
          'mantissa_bits={} is below the {} bits this problem needs; '
          'increase the precision'.format(self.mantissa_bits,
                                          self.minimum_mantissa_bits))

  @property
  def degree(self) -> int:
    """N, the degree budget of Q."""
    if self.kind == Kind.WEIGHTED_SGN:
      return self.m + self.k - 1
    return self.n // 2

  @property
  def decay_exponent(self) -> int:
    """Power of (1-a)/(1+a) that governs the size of the error."""
    return self.m if self.kind == Kind.WEIGHTED_SGN else self.n // 2

  @property
  def minimum_mantissa_bits(self) -> int:
    return precision.default_mantissa_bits(self.decay_exponent, self.a)

  @property
  def effective_mantissa_bits(self) -> int:
    return self.mantissa_bits or self.minimum_mantissa_bits

  def with_options(self, **options) -> 'ProblemSpec':
    """Returns a validated copy with some fields replaced."""
    spec = attr.evolve(self, **options)
    spec.validate()
    return spec


@attr.s(auto_attribs=True, frozen=True)
class ReducedProblem(object):
  """A weighted Chebyshev problem r(t) = g(t) - w(t) Q(t) on [lo, hi].

  Attributes:
    spec: the originating problem.
    lo: a^2.
    hi: 1.
    degree: N, the degree budget of Q.
    mantissa_bits: working precision.
    target: g, taking and returning numbers of `context`.
    weight: w, same convention.
  """

  spec: ProblemSpec
  lo: precision.MPValue
  hi: precision.MPValue
  degree: int
  mantissa_bits: int
  target: Callable
  weight: Callable

  @property
  def context(self):
    return precision.working_context(self.mantissa_bits)

  def residual(self, t, q_value):
    """r(t) given Q(t)."""
    return self.target(t) - self.weight(t) * q_value


def reduce_to_interval(spec: ProblemSpec) -> ReducedProblem:
  """Rewrites `spec` as a single-interval weighted problem in t = x^2.

  The supremum of the original error over [a, 1] equals the supremum of the
  reduced residual over [a^2, 1].

  Args:
    spec: a validated problem.

  Returns:
    the `ReducedProblem`.
  """
  spec.validate()
  bits = spec.effective_mantissa_bits
  ctx = precision.working_context(bits)
  a = ctx.mpf(spec.a)
  if spec.kind == Kind.WEIGHTED_SGN:
    exponent = ctx.mpf(1) / 2 - spec.k
    target = lambda t: ctx.one
    weight = lambda t: ctx.power(t, exponent)
  else:
    exponent = ctx.mpf(spec.p) / 2
    target = lambda t: ctx.power(t, exponent)
    weight = lambda t: ctx.one
  return ReducedProblem(
      spec=spec,
      lo=precision.MPValue(a * a, bits),
      hi=precision.MPValue(1, bits),
      degree=spec.degree,
      mantissa_bits=bits,
      target=target,
      weight=weight)
