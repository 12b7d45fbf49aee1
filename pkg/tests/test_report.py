import json

import pydot
import pytest

from ternions.modules import LEFT
from ternions.report import SCHEMA_VERSION, export_dot, report_json
from ternions.snowflake import (
    classify_all,
    core_with_verdict,
    snowflake_from_submodules,
    twin_compare,
)

TOP_KEYS = ["schema_version", "q", "n", "side", "domain", "counts", "degree_histogram",
            "zero_tuple_degree", "submodules", "core", "containment", "coverage"]


@pytest.fixture(scope="module")
def run2(r2):
    rep = classify_all(r2, 2, LEFT)
    sf = snowflake_from_submodules(r2, 2, LEFT, rep.submodules)
    return rep, sf, core_with_verdict(r2, sf)


def test_classify_json_counts(r2, run2):
    rep, _, _ = run2
    raw = report_json(r2, rep).decode()
    assert '"nonunimodular_free_generators": 42' in raw
    assert '"distinct_submodules": 21' in raw
    data = json.loads(raw)
    assert data["schema_version"] == SCHEMA_VERSION == "1"
    assert "degree_histogram" not in data and "core" not in data
    assert data["containment"] == {"generators_in_I1": True}
    assert data["coverage"] == {"union_equals_ideal_power": True}


def test_full_json_layout(r2, run2):
    rep, sf, core = run2
    data = json.loads(report_json(r2, rep, sf, core))
    assert list(data) == TOP_KEYS
    assert data["degree_histogram"] == {"9": 7, "3": 14, "1": 42}
    assert list(data["degree_histogram"]) == ["9", "3", "1"]
    assert data["zero_tuple_degree"] == 21
    first = data["submodules"][0]
    assert list(first) == ["canonical_generator", "generators", "elements"]
    assert len(first["elements"]) == 8
    gens = [s["canonical_generator"]["enc"] for s in data["submodules"]]
    assert gens == sorted(gens)
    assert data["core"]["line_multiplicities"] == [3] * 7
    assert data["core"]["verdict"] == {"is_projective_plane": True, "order": 2, "failures": []}
    t = first["canonical_generator"]
    assert set(t) == {"enc", "coords", "labels"}
    assert len(t["coords"]) == 3 and len(t["labels"]) == 3


def test_labels_only_for_q2(r3):
    rep = classify_all(r3, 2, LEFT)
    data = json.loads(report_json(r3, rep))
    assert "labels" not in data["submodules"][0]["canonical_generator"]


def test_empty_run_shape(r2):
    rep = classify_all(r2, 2, LEFT, domain="I2")
    sf = snowflake_from_submodules(r2, 2, LEFT, rep.submodules)
    data = json.loads(report_json(r2, rep, sf))
    assert data["counts"]["nonunimodular_free_generators"] == 0
    assert data["counts"]["distinct_submodules"] == 0
    assert data["counts"]["generators_per_submodule"] == {}
    assert data["submodules"] == []
    assert data["degree_histogram"] == {}
    assert data["zero_tuple_degree"] == 0
    assert data["domain"] == "I2"


def test_twin_json(r2):
    data = json.loads(report_json(r2, twin_compare(r2, 2)))
    assert list(data) == ["schema_version", "q", "n", "flags", "left", "right"]
    assert all(data["flags"].values())
    assert data["right"]["containment"] == {"generators_in_I2": True}


def test_json_stable(r2, run2):
    rep, sf, core = run2
    assert report_json(r2, rep, sf, core) == report_json(r2, rep, sf, core)


def test_dot_structure(r2, run2):
    _, sf, core = run2
    text = export_dot(r2, sf, core).decode()
    (g,) = pydot.graph_from_dot_data(text)
    nodes = [n for n in g.get_nodes() if n.get_name() not in ("node", "edge", "graph")]
    sub_nodes = [n for n in nodes if n.get_name().startswith("S")]
    tup_nodes = [n for n in nodes if n.get_name().startswith("t")]
    assert len(sub_nodes) == 21
    assert len(tup_nodes) == 63
    assert len(g.get_edges()) == 147
    core_nodes = [n for n in tup_nodes if n.get("kind") == "core"]
    assert len(core_nodes) == 7
    assert {n.get("degree") for n in core_nodes} == {"9"}
    assert [n.get_name() for n in sub_nodes] == [f"S{k}" for k in range(21)]
