import pytest

import nilgraph


def test_info_a5():
    j = nilgraph.info("A(5)")
    assert j["order"] == 60
    assert j["classes"] == 5
    assert j["is_semisimple"] and j["is_ac_group"]
    assert not j["is_solvable"]


def test_omega_values():
    assert nilgraph.omega("A(5)")["omega"] == 21
    assert nilgraph.omega("PSL(2,7)")["omega"] == 57
    assert nilgraph.omega("S(3)xS(3)")["omega"] == 16
    q8 = nilgraph.omega("Q8")
    assert q8["omega"] == 1 and q8["method"] == "weakly-nilpotent"
    assert nilgraph.omega("S(3)", graph="noncommuting")["omega"] == 4


def test_witness_size_matches_omega():
    r = nilgraph.omega("PGL(2,7)", jobs=2)
    assert r["omega"] == 57
    assert len(r["witness"]) == 57


def test_table_sizes():
    assert len(nilgraph.table("A(5)")) == 22
    assert len(nilgraph.table("S(3)")) == 5


def test_export_graph():
    assert nilgraph.export_graph("S(3)", quotient=True).startswith("p edge 4 6\n")
    assert nilgraph.export_graph("Q8") == "p edge 0 0\n"


def test_suzuki_formulas():
    assert nilgraph.suzuki_omega_formula(8) == 4161
    assert nilgraph.suzuki_omega_formula(32) == 1049601
    assert nilgraph.suzuki_nilp_count(8) == 4162
    with pytest.raises(ValueError):
        nilgraph.suzuki_omega_formula(16)


def test_verify_pgl_small():
    rep = nilgraph.verify("pgl", q=4, with_timing=False)
    assert rep["pass"]
    assert all("seconds" not in c for c in rep["claims"])


def test_semisimple_flags():
    assert nilgraph.is_semisimple("S(5)")
    assert not nilgraph.is_semisimple("S(4)")
    assert nilgraph.order("Sz(8)") == 29120


def test_errors():
    with pytest.raises(nilgraph.InvalidArgument):
        nilgraph.omega("B(5)")
    with pytest.raises(ValueError):
        nilgraph.omega("A(5)", graph="bogus")
    with pytest.raises(nilgraph.ResourceLimit):
        nilgraph.order("S(11)")
