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
"""Command payloads and their JSON, CSV and text renderings.

JSON is canonical: fields appear in declaration order, doubles use the
shortest decimal that round-trips and multiprecision values are written as
{"value": <decimal string>, "bits": <mantissa width>}. Parsing the output and
serializing it again with `dumps_canonical` reproduces it byte for byte.
"""

import csv
import enum
import io
import json
import math
from typing import Dict, Optional, Tuple

import attr
import numpy as np

from pole_approx.asymptotics import formulas
from pole_approx.kernel import precision
from pole_approx.solver import rational
from pole_approx.solver import remez
from pole_approx.verification import checks
from pole_approx.verification import tables

# Significant digits of every CSV number.
CSV_DIGITS = 17


@attr.s(auto_attribs=True, frozen=True)
class SolveResult(object):
  """Payload of `solve`.

  Attributes:
    solution: the certified solution.
    B: arccosh(1/L).
    laurent: the odd rational function in powers of x; None for the
      unweighted problem.
  """

  solution: remez.EquiSolution
  B: float
  laurent: Optional[rational.RationalExpansion] = None


@attr.s(auto_attribs=True, frozen=True)
class SuiteResult(object):
  """Payload of `verify`.

  Attributes:
    suite: the suite name.
    passed: True iff every report passed.
    reports: one report per check, in declaration order.
  """

  suite: str
  passed: bool
  reports: Tuple[checks.CheckReport, ...]


@attr.s(auto_attribs=True, frozen=True)
class OutputEnvelope(object):
  """What every command emits.

  Attributes:
    tool_version: pole_approx version.
    command: the subcommand.
    params: every effective input, defaults included.
    payload: SolveResult, ConvergenceTable, AsymptoticReport or SuiteResult.
    elapsed_ms: wall time of the command.
  """

  tool_version: str
  command: str
  params: Dict[str, object]
  payload: object
  elapsed_ms: int


def to_jsonable(value):
  """Converts payload values to plain JSON types, recursively."""
  if value is None or isinstance(value, (bool, str)):
    return value
  if isinstance(value, precision.MPValue):
    return {'value': value.to_decimal(), 'bits': value.mantissa_bits}
  if isinstance(value, enum.Enum):
    return value.value
  if isinstance(value, (int, np.integer)):
    return int(value)
  if isinstance(value, (float, np.floating)):
    value = float(value)
    return value if math.isfinite(value) else repr(value)
  if isinstance(value, complex):
    return {'real': to_jsonable(value.real), 'imag': to_jsonable(value.imag)}
  if hasattr(value, '_mpf_'):
    return str(value)
  if attr.has(type(value)):
    return {
        field.name: to_jsonable(getattr(value, field.name))
        for field in attr.fields(type(value))
    }
  if isinstance(value, dict):
    return {str(key): to_jsonable(item) for key, item in value.items()}
  if isinstance(value, (list, tuple, np.ndarray)):
    return [to_jsonable(item) for item in value]
  raise TypeError('cannot serialize {!r}'.format(type(value)))


def dumps_canonical(document) -> str:
  return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


def render_json(envelope: OutputEnvelope) -> str:
  return dumps_canonical(to_jsonable(envelope))


def _csv_number(value) -> str:
  if isinstance(value, precision.MPValue):
    return value.to_decimal(CSV_DIGITS)
  if isinstance(value, int):
    return str(value)
  return '{:.{}g}'.format(float(value), CSV_DIGITS)


def render_csv(table: tables.ConvergenceTable) -> str:
  """The sweep as CSV with the fixed header; rows stop at a failure."""
  out = io.StringIO()
  writer = csv.writer(out, lineterminator='\n')
  writer.writerow(tables.CSV_COLUMNS)
  for row in table.rows:
    writer.writerow(
        [_csv_number(getattr(row, name)) for name in tables.CSV_COLUMNS])
  return out.getvalue()


def _text_solve(result: SolveResult):
  sol = result.solution
  spec = sol.spec
  lines = [
      '{} a={} N={} bits={}'.format(spec.kind.value, spec.a, spec.degree,
                                    sol.mantissa_bits),
      'L = {}'.format(sol.L.to_decimal()),
      'B = {!r}'.format(result.B),
      'iterations = {}  levelness = {:.3e}'.format(sol.iterations,
                                                   float(sol.levelness)),
      'alternation (x, residual):',
  ]
  lines.extend('  {:.17g}  {:+.6e}'.format(float(p.x), float(p.residual))
               for p in sol.alternation)
  lines.append('chebyshev coefficients on [{:.17g}, 1]:'.format(
      float(sol.q.lo)))
  lines.extend('  c{} = {}'.format(j, c.to_decimal())
               for j, c in enumerate(sol.q.coeffs))
  if result.laurent is not None:
    lines.append('laurent coefficients:')
    lines.extend('  x^{} : {}'.format(j, c.to_decimal())
                 for j, c in result.laurent.laurent_coeffs.items())
  return lines


def _text_table(table: tables.ConvergenceTable):
  lines = ['  '.join('{:>14}'.format(name) for name in tables.CSV_COLUMNS)]
  for row in table.rows:
    cells = [str(row.m), '{:.8e}'.format(float(row.L))]
    cells += ['{:.10g}'.format(getattr(row, name))
              for name in tables.CSV_COLUMNS[2:]]
    lines.append('  '.join('{:>14}'.format(cell) for cell in cells))
  if table.failure:
    lines.append('INCOMPLETE: ' + table.failure)
  return lines


def _text_report(report: formulas.AsymptoticReport):
  inputs = ', '.join('{}={}'.format(k, v) for k, v in report.inputs.items())
  value = report.value
  if isinstance(value, complex):
    shown = '{!r} {:+}i'.format(value.real, value.imag)
  else:
    shown = repr(float(value))
  return ['{}({}) = {}'.format(report.formula_id.value, inputs, shown)]


def _text_suite(result: SuiteResult):
  lines = []
  for report in result.reports:
    lines.append('{} {}'.format('PASS' if report.passed else 'FAIL',
                                report.check_id))
    if not report.passed and report.details:
      lines.append('  ' + report.details)
  lines.append('{}: {} of {} checks passed'.format(
      result.suite, sum(r.passed for r in result.reports),
      len(result.reports)))
  return lines


_TEXT_RENDERERS = (
    (SolveResult, _text_solve),
    (tables.ConvergenceTable, _text_table),
    (formulas.AsymptoticReport, _text_report),
    (SuiteResult, _text_suite),
)


def render_text(envelope: OutputEnvelope) -> str:
  """Human-readable payload; params and timing go to the log instead."""
  for payload_type, renderer in _TEXT_RENDERERS:
    if isinstance(envelope.payload, payload_type):
      return '\n'.join(renderer(envelope.payload)) + '\n'
  raise TypeError('no text rendering for {!r}'.format(type(envelope.payload)))
