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
"""Init module for the multiprecision kernel."""
from pole_approx.kernel.chebyshev import cheb_eval
from pole_approx.kernel.chebyshev import ChebPoly
from pole_approx.kernel.gamma import gamma_half_integer
from pole_approx.kernel.gamma import gamma_real
from pole_approx.kernel.precision import as_mpvalue
from pole_approx.kernel.precision import default_mantissa_bits
from pole_approx.kernel.precision import mp
from pole_approx.kernel.precision import MPValue
from pole_approx.kernel.precision import working_context
from pole_approx.kernel.search import Extremum
from pole_approx.kernel.search import find_extremum
from pole_approx.kernel.search import integrate
from pole_approx.kernel.search import Integral
from pole_approx.kernel.search import Quadrature
