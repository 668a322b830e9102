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
"""Init module for pole_approx."""
from pole_approx import asymptotics
from pole_approx import kernel
from pole_approx import solver
from pole_approx import verification

# Import the solver API.
from pole_approx.solver import grid_oracle
from pole_approx.solver import ProblemSpec
from pole_approx.solver import remez_solve

# Import version string.
from pole_approx.version import __version__
