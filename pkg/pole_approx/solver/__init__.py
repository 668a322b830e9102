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
"""Init module for the minimax solvers."""
from pole_approx.solver.grid_oracle import OracleEstimate
from pole_approx.solver.problem import Kind
from pole_approx.solver.problem import ProblemSpec
from pole_approx.solver.problem import reduce_to_interval
from pole_approx.solver.problem import ReducedProblem
from pole_approx.solver.rational import expand_rational
from pole_approx.solver.rational import RationalExpansion
from pole_approx.solver.remez import alternation_in_x
from pole_approx.solver.remez import AlternationPoint
from pole_approx.solver.remez import EquiSolution
from pole_approx.solver.remez import remez_solve
