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

import json

import numpy as np
import pytest

import curvlab


def test_bott_curvature_at_origin():
    k = curvlab.curvature(curvlab.bott_frame(), 0.0)
    assert k.shape == (1, 1)
    assert abs(k[0, 0] + 1.0) < 1e-12


def test_hardy_curvature_matches_disk_metric():
    z = 0.3 - 0.2j
    k = curvlab.curvature(curvlab.hardy_frame(48), z)[0, 0]
    assert abs(k + 1.0 / (1.0 - abs(z) ** 2) ** 2) < 1e-10


def test_projection_is_orthogonal_projection():
    f = curvlab.direct_sum(curvlab.hardy_frame(8), curvlab.bott_frame())
    p = curvlab.projection(f, 0.2 + 0.1j)
    assert np.allclose(p @ p, p, atol=1e-12)
    assert np.allclose(p, p.conj().T, atol=1e-12)
    assert abs(np.trace(p).real - f.rank) < 1e-12


def test_f_expr_and_value():
    assert curvlab.f_expr(1, 1) == "[∂̄P][∂P]"
    f11 = curvlab.f_value(curvlab.bott_frame(), 0.0, 1, 1)
    assert np.allclose(f11, np.diag([1.0, 0.0]), atol=1e-12)
    assert curvlab.curvature_formula_residual(curvlab.bergman_frame(24), 0.25, 2, 3) < 1e-8


def test_curvature_table_shape():
    t = curvlab.curvature_table(curvlab.bott_frame(), 0.1, 2)
    assert len(t) == 3 and all(len(row) == 3 for row in t)


def test_compare_hardy_bergman_distinct():
    v = curvlab.contact_compare(curvlab.hardy_frame(24), curvlab.bergman_frame(24), 0.1)
    assert v["status"] == "distinct"
    w = v["witness"]
    assert abs(w["value_p"] - w["value_q"]) > w["tolerance"]


def test_compare_unitary_conjugate_matched():
    f = curvlab.hardy_frame(6)
    u, _ = np.linalg.qr(np.random.default_rng(3).normal(size=(6, 6)) + 0j)
    g = curvlab.left_multiply(u, f)
    for method in ("contact", "theorem29"):
        assert curvlab.contact_compare(f, g, 0.2, method=method)["status"] == "matched"


def test_kwon_treil_scan():
    s = curvlab.kwon_treil_scan(curvlab.hardy_frame(48), radius=0.5, step=0.1)
    assert s["max_abs_g"] < 1e-4
    assert len(s["z"]) == len(s["g"])


def test_frame_json_round_trip(tmp_path):
    f = curvlab.bergman_frame(10)
    path = tmp_path / "frame.json"
    curvlab.save_frame(f, str(path))
    g = curvlab.load_frame(str(path))
    assert g.dim == f.dim and g.rank == f.rank
    assert np.allclose(curvlab.frame_from_json(f.to_json()).value(0.3), f.value(0.3))
    assert "version" in json.loads(path.read_text())


def test_errors_are_mapped():
    with pytest.raises(curvlab.ValidationError):
        curvlab.kwon_treil_scan(curvlab.hardy_frame(8), radius=1.0)
    with pytest.raises(curvlab.CurvlabError):
        curvlab.load_frame("/nonexistent/frame.json")


def test_cli_in_process():
    code, out, _ = curvlab.run_cli(["--version"])
    assert code == 0 and out.strip() == "curvlab/1"
