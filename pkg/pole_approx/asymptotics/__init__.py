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
"""Init module for the closed-form asymptotics."""
from pole_approx.asymptotics.formulas import app1_en_asymptote
from pole_approx.asymptotics.formulas import AsymptoticReport
from pole_approx.asymptotics.formulas import b_asymptote
from pole_approx.asymptotics.formulas import b_from_error
from pole_approx.asymptotics.formulas import diag_limit_rhs
from pole_approx.asymptotics.formulas import diag_map
from pole_approx.asymptotics.formulas import diag_normalized_error
from pole_approx.asymptotics.formulas import estar_limit_const
from pole_approx.asymptotics.formulas import evaluate
from pole_approx.asymptotics.formulas import FormulaId
from pole_approx.asymptotics.formulas import limit_rhs_eq01
from pole_approx.asymptotics.formulas import normalized_error
from pole_approx.asymptotics.formulas import y_k_closed
from pole_approx.asymptotics.model import model_B
from pole_approx.asymptotics.model import model_B_asymptote
from pole_approx.asymptotics.model import model_B_q
from pole_approx.asymptotics.model import model_c_q
from pole_approx.asymptotics.model import model_critical_point
from pole_approx.asymptotics.model import model_phi
from pole_approx.asymptotics.model import ModelParams
