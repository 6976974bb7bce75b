# Copyright 2026 The curvlab Authors
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

"""Curvature of holomorphic frames and the projections onto their ranges."""

from ._core import (
    CurvlabError,
    Frame,
    InputError,
    SingularityError,
    ValidationError,
    bergman_frame,
    bott_frame,
    constant_frame,
    contact_compare,
    curvature,
    curvature_formula_residual,
    curvature_table,
    direct_sum,
    f_expr,
    f_value,
    frame_from_json,
    hardy_frame,
    kwon_treil_scan,
    left_multiply,
    load_frame,
    projection,
    projection_derivative,
    run_cli,
    save_frame,
    weighted_shift_frame,
)

__version__ = "1.0.0"
