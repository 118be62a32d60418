import json
import os

import pytest

verocohom = pytest.importorskip("verocohom")

FIXTURES = os.environ.get("VEROCOHOM_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "fixtures"))


def load(name):
    with open(os.path.join(FIXTURES, name)) as fh:
        return verocohom.spec_from_json(fh.read())


def test_spec_invariants():
    spec = load("center_xyu.json")
    assert (spec.n, spec.d, spec.N, spec.s, spec.dim_T) == (2, 3, 9, 8, 1)


def test_tangent_table_values():
    spec = load("center_xyu.json")
    rows = verocohom.cohom_table(spec, "tangent", 6, 7)
    assert rows[0]["k"] == 6 and rows[0]["h"][1] == 1
    assert rows[1]["k"] == 7 and rows[1]["h"][1] == 0
    for row in rows:
        signed = sum((-1) ** i * h for i, h in enumerate(row["h"]))
        assert signed == row["chi"]


def test_normal_h1_values():
    quad = load("quadric_cone.json")
    assert verocohom.h1_normal(quad, 4) == 3
    cubic = load("cubic_line.json")
    assert cubic.dim_T == 6
    assert verocohom.h1_normal(cubic, 6) == 14


def test_branch_reports():
    quad = verocohom.branch_report(load("quadric_cone.json"))
    assert quad["h_N"] == 1 and quad["q"] == 4 and quad["deg_zprime_upper"] == 4
    cubic = verocohom.branch_report(load("cubic_line.json"))
    assert cubic["h_N"] == 3 and cubic["q"] == 6 and cubic["deg_zprime_upper"] == 15
    assert cubic["h_N_gcd"] == cubic["h_N_tail"]


def test_repcheck():
    res = verocohom.repcheck(1, 1, 1)
    assert res["ok"]
    assert res["summand_dims"] == [3, 1]


def test_surface_helpers():
    assert verocohom.graph_distance([3, 0, 0], [0, 3, 0]) == 3
    assert verocohom.smoothness_violations(3, [[1, 1, 1]]) == []
    assert verocohom.smoothness_violations(3, [[3, 0, 0]]) == [[3, 0, 0]]
    assert verocohom.fast_dim_partials(3, [[1, 1, 1]]) == 3
    assert verocohom.fast_dim_partials_preimage(3, [[1, 1, 1]]) == 0
    assert verocohom.dim_partials(3, [[1, 1, 1]]) == 3
    assert verocohom.dim_partials_preimage(3, [[1, 1, 1]], 1) == 0


def test_parse_errors():
    with pytest.raises(verocohom.SpecParseError):
        verocohom.spec_from_json("{")
    with pytest.raises(verocohom.InconsistentSpecError):
        verocohom.spec_from_json(json.dumps({"n": 2, "d": 3, "T_monomials": [[1, 1, 0]]}))
