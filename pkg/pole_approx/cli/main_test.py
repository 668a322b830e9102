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
"""End-to-end tests of the pole-approx command line."""

import io
import json
import os

from absl.testing import absltest
from absl.testing import parameterized

from pole_approx.cli import envelope
from pole_approx.cli import main


def _run(*argv):
  out = io.StringIO()
  code = main.run(list(argv), out)
  return code, out.getvalue()


def _run_json(*argv):
  code, text = _run(*(argv + ('--format', 'json')))
  return code, json.loads(text) if text else None


def _value(mp_json):
  return float(mp_json['value'])


class ParserTest(absltest.TestCase):

  def test_short_options_beside_absl_flags(self):
    parser = main.make_parser()
    args = parser.parse_args(
        ['solve', '--unweighted', '--p', '3', '--n', '8', '--a', '0.4'])
    self.assertEqual(args.p, 3.0)
    self.assertEqual(args.n, 8)
    args = parser.parse_args(
        ['sweep', '--sweep', 'app1', '--p', '1', '--a', '0.5', '--m-from',
         '1', '--m-to', '2'])
    self.assertEqual(args.p, 1.0)

  def test_abbreviations_are_rejected(self):
    code, _ = _run('solve', '--unweight', '--p', '1', '--n', '2', '--a', '0.5')
    self.assertEqual(code, main.EXIT_USAGE)


class SolveTest(parameterized.TestCase):

  def setUp(self):
    super().setUp()
    os.environ.pop(main.PREC_BITS_ENV, None)

  def test_polynomial_closed_form(self):
    code, text = _run('solve', '--k', '0', '--m', '1', '--a', '0.333333333333')
    self.assertEqual(code, main.EXIT_OK)
    self.assertIn('L = 0.5000000000', text)
    self.assertIn('laurent coefficients:', text)

  def test_diagonal_closed_form_json(self):
    code, document = _run_json('solve', '--k', '1', '--m', '1', '--a', '0.25')
    self.assertEqual(code, main.EXIT_OK)
    self.assertEqual(document['command'], 'solve')
    solution = document['payload']['solution']
    self.assertAlmostEqual(_value(solution['L']), 1 / 9, delta=1e-12)
    self.assertLen(solution['alternation'], 3)
    self.assertEqual(sorted(document['payload']['laurent']['laurent_coeffs']),
                     ['-1', '1'])
    params = document['params']
    self.assertEqual(params['tol'], 1e-12)
    self.assertEqual(params['max_iterations'], 60)
    self.assertGreaterEqual(params['prec_bits'], 96)

  def test_json_round_trip(self):
    code, text = _run('solve', '--k', '1', '--m', '2', '--a', '0.5',
                      '--format', 'json')
    self.assertEqual(code, main.EXIT_OK)
    self.assertEqual(envelope.dumps_canonical(json.loads(text)), text)

  def test_unweighted(self):
    code, document = _run_json('solve', '--unweighted', '--p', '1', '--n', '2',
                               '--a', '0.5')
    self.assertEqual(code, main.EXIT_OK)
    self.assertAlmostEqual(
        _value(document['payload']['solution']['L']), 1 / 48, delta=1e-14)
    self.assertIsNone(document['payload']['laurent'])

  def test_precision_from_environment(self):
    os.environ[main.PREC_BITS_ENV] = '200'
    self.addCleanup(os.environ.pop, main.PREC_BITS_ENV, None)
    code, document = _run_json('solve', '--k', '1', '--m', '1', '--a', '0.5')
    self.assertEqual(code, main.EXIT_OK)
    self.assertEqual(document['params']['prec_bits'], 200)
    self.assertEqual(document['payload']['solution']['L']['bits'], 200)

  def test_flag_beats_environment(self):
    os.environ[main.PREC_BITS_ENV] = '200'
    self.addCleanup(os.environ.pop, main.PREC_BITS_ENV, None)
    _, document = _run_json('solve', '--k', '1', '--m', '1', '--a', '0.5',
                            '--prec-bits', '160')
    self.assertEqual(document['params']['prec_bits'], 160)

  def test_bad_environment(self):
    os.environ[main.PREC_BITS_ENV] = 'lots'
    self.addCleanup(os.environ.pop, main.PREC_BITS_ENV, None)
    code, _ = _run('solve', '--k', '1', '--m', '1', '--a', '0.5')
    self.assertEqual(code, main.EXIT_USAGE)

  @parameterized.parameters(
      [('solve', '--k', '1', '--m', '1')],
      [('solve', '--k', '-1', '--m', '1', '--a', '0.5')],
      [('solve', '--k', '1', '--a', '0.5')],
      [('solve', '--unweighted', '--p', '2', '--n', '4', '--a', '0.5')],
      [('solve', '--k', '1', '--m', '1', '--a', '1.5')],
      [('solve', '--k', '1', '--m', '1', '--a', '0.5', '--format', 'csv')],
      [('solve', '--k', 'one', '--m', '1', '--a', '0.5')],
      [('frobnicate',)],
  )
  def test_usage_errors(self, argv):
    code, text = _run(*argv)
    self.assertEqual(code, main.EXIT_USAGE)
    self.assertEqual(text, '')

  def test_precision_below_rule(self):
    code, _ = _run('solve', '--k', '1', '--m', '1', '--a', '0.5',
                   '--prec-bits', '30')
    self.assertEqual(code, main.EXIT_NUMERICAL)

  def test_iteration_budget(self):
    code, _ = _run('solve', '--k', '2', '--m', '6', '--a', '0.5',
                   '--max-iterations', '1')
    self.assertEqual(code, main.EXIT_NUMERICAL)


class SweepTest(absltest.TestCase):

  def test_csv(self):
    code, text = _run('sweep', '--k', '1', '--a', '0.5', '--m-from', '1',
                      '--m-to', '3', '--jobs', '2')
    self.assertEqual(code, main.EXIT_OK)
    lines = text.splitlines()
    self.assertEqual(lines[0], ','.join(envelope.tables.CSV_COLUMNS))
    self.assertEqual([line.split(',')[0] for line in lines[1:]],
                     ['1', '2', '3'])

  def test_out_file(self):
    path = os.path.join(self.create_tempdir().full_path, 'sweep.csv')
    code, text = _run('sweep', '--k', '0', '--a', '0.5', '--m-from', '2',
                      '--m-to', '4', '--out', path)
    self.assertEqual(code, main.EXIT_OK)
    self.assertEqual(text, '')
    with open(path) as f:
      self.assertLen(f.read().splitlines(), 4)

  def test_json_echoes_params(self):
    code, document = _run_json('sweep', '--sweep', 'eq62', '--a', '0.25',
                               '--m-from', '1', '--m-to', '2')
    self.assertEqual(code, main.EXIT_OK)
    self.assertEqual(document['params']['sweep'], 'eq62')
    self.assertEqual(document['params']['step'], 1)
    self.assertEqual(document['payload']['sweep'], 'eq62')
    self.assertLen(document['payload']['rows'], 2)

  def test_app1(self):
    code, text = _run('sweep', '--sweep', 'app1', '--p', '1', '--a', '0.5',
                      '--m-from', '1', '--m-to', '2')
    self.assertEqual(code, main.EXIT_OK)
    self.assertLen(text.splitlines(), 3)

  def test_empty_range(self):
    code, _ = _run('sweep', '--k', '1', '--a', '0.5', '--m-from', '5',
                   '--m-to', '4')
    self.assertEqual(code, main.EXIT_USAGE)

  def test_failed_solve_keeps_partial_csv(self):
    code, text = _run('sweep', '--k', '1', '--a', '0.995', '--m-from', '1',
                      '--m-to', '2')
    self.assertEqual(code, main.EXIT_NUMERICAL)
    self.assertEqual(text.splitlines(), [','.join(envelope.tables.CSV_COLUMNS)])


class AsymptTest(parameterized.TestCase):

  @parameterized.parameters(
      (('--formula', 'eq01', '--k', '1', '--a', '0.5'), 0.366452, 1e-6),
      (('--formula', 'yk', '--k', '1'), -2.305233, 1e-6),
      (('--formula', 'model-b-q', '--q', '1', '--m', '2', '--a', '0.25'),
       4.394449, 1e-6),
      (('--formula', 'eq32', '--L', '1e-1280'), 2948.0, 1.0),
  )
  def test_values(self, argv, expected, delta):
    code, document = _run_json('asympt', *argv)
    self.assertEqual(code, main.EXIT_OK)
    self.assertAlmostEqual(document['payload']['value'], expected, delta=delta)

  def test_complex_value(self):
    code, document = _run_json('asympt', '--formula', 'model-phi', '--z', '2j',
                               '--k', '1', '--m', '1', '--a', '0.5')
    self.assertEqual(code, main.EXIT_OK)
    self.assertEqual(document['params']['z'], {'real': 0.0, 'imag': 2.0})
    self.assertAlmostEqual(document['payload']['value']['real'], 0.0,
                           delta=1e-12)
    self.assertGreater(document['payload']['value']['imag'], 0)

  def test_text(self):
    code, text = _run('asympt', '--formula', 'eq6215', '--a', '0.25')
    self.assertEqual(code, main.EXIT_OK)
    self.assertTrue(text.startswith('eq6215(a=0.25) = '))
    self.assertAlmostEqual(float(text.split('=')[-1]), 0.8, places=15)

  @parameterized.parameters(
      [('--formula', 'eq99', '--k', '1')],
      [('--formula', 'eq01', '--k', '1')],
      [('--formula', 'eq32', '--L', '2')],
      [('--formula', 'eq32', '--L', 'small')],
  )
  def test_usage_errors(self, argv):
    code, _ = _run('asympt', *argv)
    self.assertEqual(code, main.EXIT_USAGE)


class VerifyTest(parameterized.TestCase):

  @parameterized.parameters('identities', 'model')
  def test_closed_form_suites(self, suite):
    code, document = _run_json('verify', '--suite', suite)
    self.assertEqual(code, main.EXIT_OK)
    self.assertTrue(document['payload']['passed'])
    self.assertLen(document['payload']['reports'], 1)

  def test_diagonal_defaults(self):
    code, document = _run_json('verify', '--suite', 'diagonal', '--jobs', '3')
    self.assertEqual(code, main.EXIT_OK)
    self.assertLen(document['payload']['reports'], 6)
    ids = [r['check_id'] for r in document['payload']['reports']]
    self.assertEqual(ids[0], 'diagonal(m=1, a=0.25)')

  def test_curve(self):
    code, text = _run('verify', '--suite', 'curve', '--m', '6', '--a', '0.4')
    self.assertEqual(code, main.EXIT_OK)
    self.assertIn('PASS curve(a=0.4, n=12)', text)

  def test_single_symmetry_instance(self):
    code, document = _run_json('verify', '--suite', 'symmetry', '--k', '1',
                               '--m', '2', '--a', '0.4')
    self.assertEqual(code, main.EXIT_OK)
    self.assertLen(document['payload']['reports'], 1)

  def test_failed_check(self):
    code, text = _run('verify', '--suite', 'oracle', '--k', '1', '--m', '1',
                      '--a', '0.5', '--grid-size', '6', '--tol', '1e-12')
    self.assertEqual(code, main.EXIT_CHECK_FAILED)
    self.assertIn('FAIL oracle', text)

  @parameterized.parameters(
      [('--suite', 'everything')],
      [('--suite', 'symmetry', '--k', '1')],
      [('--suite', 'oracle', '--k', '1', '--m', '1', '--a', '0.5',
        '--grid-size', '2')],
      [('--suite', 'model', '--jobs', '0')],
  )
  def test_usage_errors(self, argv):
    code, _ = _run('verify', *argv)
    self.assertEqual(code, main.EXIT_USAGE)


if __name__ == '__main__':
  absltest.main()
