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
"""Init module for the verification checks and convergence sweeps."""
from pole_approx.verification.checks import check_area_identity
from pole_approx.verification.checks import check_convergence
from pole_approx.verification.checks import check_curve_equation
from pole_approx.verification.checks import check_diagonal
from pole_approx.verification.checks import check_equioscillation
from pole_approx.verification.checks import check_formula_consistency
from pole_approx.verification.checks import check_oracle
from pole_approx.verification.checks import check_solvable_model
from pole_approx.verification.checks import check_symmetry
from pole_approx.verification.checks import CheckReport
from pole_approx.verification.tables import app1_convergence_table
from pole_approx.verification.tables import convergence_table
from pole_approx.verification.tables import ConvergenceRow
from pole_approx.verification.tables import ConvergenceTable
from pole_approx.verification.tables import CSV_COLUMNS
from pole_approx.verification.tables import diagonal_convergence_table
