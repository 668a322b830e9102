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
"""Closed-form limits and asymptotic predictions for the minimax errors.

Every evaluator returns a Python float (complex for `model_phi`). Quantities
that combine a tiny error with a huge growth factor are formed in log space
at multiprecision before rounding.
"""

import enum
import inspect
import math
from typing import Any, Dict, Union

import attr

from pole_approx import errors
from pole_approx.asymptotics import model
from pole_approx.kernel import gamma
from pole_approx.kernel import precision

# Precision of the log-space normalizations.
_LOG_SPACE_BITS = 128


@enum.unique
class FormulaId(enum.Enum):
  """Identifies the closed form an `AsymptoticReport` evaluates."""

  EQ01 = 'eq01'
  EQ41_B = 'eq41'
  EQ32_B_FROM_L = 'eq32'
  YK = 'yk'
  EQ62_DIAG = 'eq62'
  EQ6215_MAP = 'eq6215'
  APP1_EN = 'app1'
  ESTAR_CONST = 'estar'
  MODEL_C = 'model-c'
  MODEL_B = 'model-b'
  MODEL_B_Q = 'model-b-q'
  MODEL_PHI = 'model-phi'


@attr.s(auto_attribs=True, frozen=True)
class AsymptoticReport(object):
  """One evaluated closed form.

  Attributes:
    formula_id: which formula.
    inputs: argument name -> value, as passed.
    value: the result.
  """

  formula_id: FormulaId
  inputs: Dict[str, Any]
  value: Union[float, complex]


def _check_k(k) -> int:
  if isinstance(k, bool) or k != int(k) or k < 0:
    raise errors.InvalidArgumentError(
        'k must be a non-negative integer, got {!r}'.format(k))
  return int(k)


def _check_a(a, allow_one=False) -> float:
  a = float(a)
  if not (0.0 < a < 1.0 or (allow_one and a == 1.0)):
    raise errors.InvalidArgumentError(
        'a must lie in (0, 1), got {}'.format(a))
  return a


def _check_m(m) -> int:
  if m != int(m) or m < 1:
    raise errors.InvalidArgumentError(
        'm must be a positive integer, got {!r}'.format(m))
  return int(m)


def _check_p(p) -> float:
  p = float(p)
  if p <= 0 or (p == int(p) and int(p) % 2 == 0):
    raise errors.InvalidArgumentError(
        'p must be positive and not an even integer, got {}'.format(p))
  return p


def _log_context(*values):
  bits = max([_LOG_SPACE_BITS] + [
      v.mantissa_bits for v in values if isinstance(v, precision.MPValue)
  ])
  return precision.working_context(bits)


def limit_rhs_eq01(k: int, a: float) -> float:
  """lim_m L^k_m(a) ((1+a)/(1-a))^(m-1/2) (2m-1)^(k+1/2).

  Equals (2/pi) ((1-a^2)/(2a))^(k+1/2) Gamma(k+1/2).
  """
  k, a = _check_k(k), _check_a(a)
  ctx = precision.working_context(_LOG_SPACE_BITS)
  base = (1 - ctx.mpf(a)**2) / (2 * ctx.mpf(a))
  value = (2 / ctx.pi * ctx.power(base, k + ctx.mpf(1) / 2) *
           gamma.gamma_half_integer(k, _LOG_SPACE_BITS).value)
  return float(value)


def normalized_error(k: int, m: int, a: float, L: precision.Number) -> float:
  """L ((1+a)/(1-a))^(m-1/2) (2m-1)^(k+1/2), formed in log space."""
  k, m, a = _check_k(k), _check_m(m), _check_a(a)
  ctx = _log_context(L)
  L = ctx.mpf(precision.raw(L))
  if L <= 0:
    raise errors.InvalidArgumentError('L must be positive, got {}'.format(L))
  half = ctx.mpf(1) / 2
  log_value = (ctx.log(L) + (m - half) * ctx.log((1 + ctx.mpf(a)) /
                                                (1 - ctx.mpf(a))) +
               (k + half) * ctx.log(2 * m - 1))
  return float(ctx.exp(log_value))


def b_from_error(L: precision.Number) -> float:
  """B = arccosh(1/L), the inverse of L = 1 / cosh(B).

  Raises:
    errors.OutOfRangeError: for L outside (0, 1).
  """
  ctx = _log_context(L)
  L = ctx.mpf(precision.raw(L))
  if not 0 < L < 1:
    raise errors.OutOfRangeError(
        'arccosh(1/L) needs L in (0, 1), got {}'.format(L))
  return float(ctx.acosh(1 / L))


def y_k_closed(k: int) -> float:
  """Y_k = log Gamma(k+1/2) - (k+1/2) log 2 - log pi, for integer k >= 0."""
  k = _check_k(k)
  ctx = precision.working_context(_LOG_SPACE_BITS)
  value = (ctx.log(gamma.gamma_half_integer(k, _LOG_SPACE_BITS).value) -
           (k + ctx.mpf(1) / 2) * ctx.log(2) - ctx.log(ctx.pi))
  return float(value)


def b_asymptote(k: int, m: int, a: float) -> float:
  """Large-m surrogate for B^k_m(a) = arccosh(1 / L^k_m(a)).

  (m-1/2) log((1+a)/(1-a)) + (k+1/2) log(2m-1) + (k+1/2) log(a/(1-a^2))
  - Y_k; its difference to the true B tends to zero.
  """
  k, m, a = _check_k(k), _check_m(m), _check_a(a)
  return ((m - 0.5) * math.log((1 + a) / (1 - a)) +
          (k + 0.5) * math.log(2 * m - 1) +
          (k + 0.5) * math.log(a / (1 - a * a)) - y_k_closed(k))


def diag_map(a: float) -> float:
  """a' = 2 sqrt(a) / (1+a), with L^m_m(a) = L^0_m(a'); a = 1 is fixed."""
  a = _check_a(a, allow_one=True)
  return 2 * math.sqrt(a) / (1 + a)


def diag_limit_rhs(a: float) -> float:
  """lim_m L^m_m(a) ((1+sqrt a)/(1-sqrt a))^(2m-1) (2m-1)^(1/2).

  Equals (1-a) / sqrt(pi sqrt(a) (1+a)).
  """
  a = _check_a(a)
  return (1 - a) / math.sqrt(math.pi * math.sqrt(a) * (1 + a))


def diag_normalized_error(m: int, a: float, L: precision.Number) -> float:
  """L ((1+sqrt a)/(1-sqrt a))^(2m-1) (2m-1)^(1/2), formed in log space."""
  m, a = _check_m(m), _check_a(a)
  ctx = _log_context(L)
  L = ctx.mpf(precision.raw(L))
  if L <= 0:
    raise errors.InvalidArgumentError('L must be positive, got {}'.format(L))
  root = ctx.sqrt(ctx.mpf(a))
  log_value = (ctx.log(L) + (2 * m - 1) * ctx.log((1 + root) / (1 - root)) +
               ctx.log(2 * m - 1) / 2)
  return float(ctx.exp(log_value))


def app1_en_asymptote(p: float, a: float, n: int) -> float:
  """Asymptotic of E_n(p, a), the best even degree-n error for |x|^p.

  With s = -p/2 and l = n/2 the value is

    a^(-s-1) l^(s-1) / |Gamma(s)| ((1-a)/(1+a))^(l+1) (1+a)^2 / 2.

  Raises:
    errors.InvalidArgumentError: p even or not positive, n odd or below 2.
  """
  p, a = _check_p(p), _check_a(a)
  if n != int(n) or n < 2 or int(n) % 2:
    raise errors.InvalidArgumentError(
        'n must be an even integer >= 2, got {!r}'.format(n))
  s, l = -p / 2, int(n) // 2
  return (a**(-s - 1) * l**(s - 1) / abs(gamma.gamma_real(s)) *
          ((1 - a) / (1 + a))**(l + 1) * (1 + a)**2 / 2)


def estar_limit_const(p: float, a: float) -> float:
  """lim_n ((1+a)/(1-a))^(n/2+1) n^(p/2+1) E*_n(p, a).

  Equals ((1+a)^2/a)^(p/2+1) c(p), c(p) = (2/pi) 2^(-p/2-1) Gamma(p/2+1).
  """
  p, a = _check_p(p), _check_a(a)
  exponent = p / 2 + 1
  c_p = 2 / math.pi * 2**(-exponent) * gamma.gamma_real(exponent)
  return ((1 + a)**2 / a)**exponent * c_p


_EVALUATORS = {
    FormulaId.EQ01: limit_rhs_eq01,
    FormulaId.EQ41_B: b_asymptote,
    FormulaId.EQ32_B_FROM_L: b_from_error,
    FormulaId.YK: y_k_closed,
    FormulaId.EQ62_DIAG: diag_limit_rhs,
    FormulaId.EQ6215_MAP: diag_map,
    FormulaId.APP1_EN: app1_en_asymptote,
    FormulaId.ESTAR_CONST: estar_limit_const,
    FormulaId.MODEL_C: model.model_critical_point,
    FormulaId.MODEL_B: model.model_B,
    FormulaId.MODEL_B_Q: model.model_B_q,
    FormulaId.MODEL_PHI: model.model_phi,
}


def formula_inputs(formula_id: FormulaId):
  """Names of the inputs `evaluate` expects for `formula_id`."""
  return tuple(inspect.signature(_EVALUATORS[formula_id]).parameters)


def evaluate(formula_id: Union[FormulaId, str], **inputs) -> AsymptoticReport:
  """Evaluates one closed form by identifier.

  Args:
    formula_id: a FormulaId or its string value, e.g. 'eq01'.
    **inputs: exactly the inputs named by `formula_inputs(formula_id)`.

  Returns:
    the `AsymptoticReport`.

  Raises:
    errors.InvalidArgumentError: unknown formula, missing or extra inputs.
  """
  try:
    formula_id = FormulaId(formula_id)
  except ValueError:
    raise errors.InvalidArgumentError(
        'unknown formula {!r}; expected one of {}'.format(
            formula_id, ', '.join(f.value for f in FormulaId)))
  expected = formula_inputs(formula_id)
  if set(inputs) != set(expected):
    raise errors.InvalidArgumentError(
        'formula {} takes inputs ({}), got ({})'.format(
            formula_id.value, ', '.join(expected), ', '.join(sorted(inputs))))
  value = _EVALUATORS[formula_id](**inputs)
  return AsymptoticReport(
      formula_id=formula_id,
      inputs={name: inputs[name] for name in expected},
      value=value)
