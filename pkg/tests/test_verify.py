import json

import pytest

from cwreg.cache import RegularityCache
from cwreg.cameron_walker import FamilyBounds
from cwreg.errors import PreconditionFailed
from cwreg.graph import Graph, complete_graph, cycle_graph, disjoint_union
from cwreg.monomial import symbolic_power
from cwreg.verify import (
    GraphTask,
    RunConfig,
    compute_values,
    oracle_checks,
    proof_trace,
    run_rows,
    sweep_graphs,
    verify_colon_lemmas,
    verify_lower_bound,
    verify_oracle_random,
    verify_ordinary_power,
    verify_theorem_sweep,
)

K3 = complete_graph(3)
K12 = Graph(3, ((1, 2), (1, 3)))
K13 = Graph(4, ((1, 2), (1, 3), (1, 4)))
G5 = Graph(5, ((1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))
SMALL = FamilyBounds(max_vertices=6)


def test_small_theorem_sweep():
    rep = verify_theorem_sweep(SMALL, [1, 2, 3])
    c = rep.counts()
    assert c["violated"] == 0 and c["ok"] == len(rep.rows)
    assert any(r.graph_id.startswith("cwu") for r in rep.rows)
    for r in rep.rows:
        assert r.reg_symbolic == 2 * r.s + r.ind_match - 1
    assert rep.exit_code() == 0


def test_union_example():
    g = disjoint_union(K13, K3)
    assert compute_values(g, 1, RunConfig(), ["symbolic"])["symbolic"] == 3
    rep = run_rows([GraphTask("u", "union", g, 1)], RunConfig(), lambda r, f: r == f)
    assert rep.rows[0].formula_value == 3 and rep.rows[0].status == "ok"


def test_sweep_ids_and_provenance():
    graphs = sweep_graphs(SMALL)
    ids = [gid for gid, _, _ in graphs]
    assert len(ids) == len(set(ids))
    unions = [(gid, prov) for gid, prov, _ in graphs if gid.startswith("cwu")]
    assert unions and all(prov.startswith("union(cw") for _, prov in unions)
    assert all(g.n <= 6 for _, _, g in graphs)


def test_gen_cap_skips_rows():
    rep = verify_theorem_sweep(SMALL, [3], RunConfig(gen_cap=3), unions=False)
    assert rep.counts()["skipped"] > 0
    assert all(r.status in ("ok", "skipped:gen-cap") for r in rep.rows)
    assert all(r.reg_symbolic is None for r in rep.rows if r.status != "ok")


def test_all_skipped_exit_code():
    tasks = [GraphTask("k3", "k3", K3, 2), GraphTask("g5", "g5", G5, 2)]
    rep = run_rows(tasks, RunConfig(lattice_cap=1), lambda r, f: r == f)
    assert [r.status for r in rep.rows] == ["skipped:lattice-cap"] * 2
    assert rep.exit_code() == 3


def test_lower_bound_small():
    rep = verify_lower_bound(4, [1, 2])
    assert rep.counts()["violated"] == 0
    assert len(rep.rows) == 2 * (1 + 4 + 38)
    assert all(r.details["tight"] for r in rep.rows)  # every connected graph on <= 4 vertices is tight


def test_lower_bound_is_strict_on_c5():
    rep = run_rows([GraphTask("c5", "cycle", cycle_graph(5), 1)], RunConfig(), lambda r, f: r >= f)
    row = rep.rows[0]
    assert row.reg_symbolic == 3 and row.formula_value == 2 and row.status == "ok"


def test_ordinary_examples():
    for g in (K12, K3, G5):
        for s in (1, 2, 3):
            row = verify_ordinary_power(g, s)
            assert row.status == "ok"
            assert row.reg_ordinary == row.reg_symbolic == 2 * s + row.ind_match - 1
    assert verify_ordinary_power(K12, 2).details["bipartite_equal"] is True
    with pytest.raises(PreconditionFailed):
        verify_ordinary_power(cycle_graph(5), 2)


def test_colon_examples():
    rep = verify_colon_lemmas(K3, 1)
    assert rep.status == "ok"
    assert rep.checks[0].lhs == "(1)"  # colon by the whole triangle gives the unit ideal
    rep = verify_colon_lemmas(G5, 3)
    assert rep.status == "ok" and len(rep.checks) == 2
    with pytest.raises(ValueError):
        verify_colon_lemmas(G5, 0)


def test_proof_trace_examples():
    for s in (2, 3):
        rep = proof_trace(G5, s)
        assert rep.status == "ok"
        assert len(rep.checks) > 20 and all(c.passed for c in rep.checks)
        assert "chordal" in rep.checks[0].note
    with pytest.raises(PreconditionFailed):
        proof_trace(K13, 2)  # bipartite, no pendant triangle
    with pytest.raises(PreconditionFailed):
        proof_trace(G5, 1)
    with pytest.raises(PreconditionFailed):
        proof_trace(K3, 2)  # deleting the triangle leaves no edge


def test_cache_roundtrip(tmp_path):
    cache = RegularityCache(tmp_path)
    a = verify_theorem_sweep(SMALL, [1, 2], cache=cache, unions=False)
    n = len(cache)
    assert n == len(a.rows)
    again = RegularityCache(tmp_path)
    assert len(again) == n
    b = verify_theorem_sweep(SMALL, [1, 2], cache=again, unions=False)
    assert a.canonical() == b.canonical()
    assert RegularityCache(tmp_path, version="other").get(K3, 1, 0) is None
    # a torn final line is ignored
    with (tmp_path / "regularity.jsonl").open("a") as fh:
        fh.write('{"hash": "x", "s"')
    assert len(RegularityCache(tmp_path)) == n


def test_cache_never_stores_skips(tmp_path):
    cache = RegularityCache(tmp_path)
    tasks = [GraphTask("k3", "k3", K3, 2), GraphTask("g5", "g5", G5, 2)]
    run_rows(tasks, RunConfig(lattice_cap=1), lambda r, f: r == f, cache=cache)
    assert len(cache) == 0


def test_parallel_matches_serial():
    a = verify_theorem_sweep(FamilyBounds(max_vertices=5), [1, 2], jobs=1)
    b = verify_theorem_sweep(FamilyBounds(max_vertices=5), [1, 2], jobs=2)
    assert a.canonical() == b.canonical()


def test_oracle_and_ordinary_columns():
    cfg = RunConfig(ordinary=True, oracle=True, var_cap=62)
    rep = verify_theorem_sweep(FamilyBounds(max_vertices=5), [1, 2], cfg, unions=False)
    assert rep.counts()["violated"] == 0
    for r in rep.rows:
        assert r.reg_ordinary == r.reg_symbolic
        assert all(a == b == r.reg_symbolic for a, b in r.details["oracle"].values())


def test_oracle_random():
    rep = verify_oracle_random(15, seed=5, cfg=RunConfig(var_cap=62))
    assert rep.counts()["violated"] == 0
    assert all(r.status == "ok" for r in rep.rows)
    rep = oracle_checks(symbolic_power(G5, 2), RunConfig(var_cap=62), box=True)
    assert rep.status == "ok" and len(rep.checks) == 7


def test_report_formats():
    rep = verify_theorem_sweep(FamilyBounds(max_vertices=4), [1], unions=False)
    lines = rep.to_csv().splitlines()
    assert lines[0].startswith("graph_id,")
    assert len(lines) == len(rep.rows) + 1
    doc = json.loads(rep.to_json())
    assert doc["summary"]["ok"] == len(rep.rows)
    assert {"tool_version", "config", "timestamp"} <= set(doc["metadata"])
    assert "elapsed_ms" not in rep.canonical()[0]


def test_partial_cache_hit_computes_missing_kinds(tmp_path):
    cache = RegularityCache(tmp_path)
    cold = verify_theorem_sweep(FamilyBounds(max_vertices=5), [1, 2], cache=cache, unions=False)
    warm = verify_theorem_sweep(FamilyBounds(max_vertices=5), [1, 2], RunConfig(ordinary=True), cache=cache,
                                unions=False)
    assert [r.reg_symbolic for r in cold.sorted_rows()] == [r.reg_symbolic for r in warm.sorted_rows()]
    assert all(r.reg_ordinary is not None for r in warm.rows)
    assert RegularityCache(tmp_path).get(K12, 2, 0, "ordinary") == 4
