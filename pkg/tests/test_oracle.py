import json

import networkx as nx
import pytest

from rexlab.canon import canonical_form
from rexlab.constructions import clique_minus_matching, turan_graph
from rexlab.errors import BadParams, NotExhaustive, ParityInfeasible
from rexlab.graph import complete_graph, complete_multipartite, cycle_graph, disjoint_union, is_regular, path_graph
from rexlab.oracle import (
    Budget,
    RexCache,
    RexRecord,
    connected_regular,
    count_regular,
    enumerate_regular,
    regex_brute,
    rex_brute,
    verify_uniqueness,
)
from rexlab.oracle.enumerate import all_graphs
from rexlab.patterns import to_networkx

K3 = complete_graph(3)

# regular graph counts (all, not necessarily connected)
ALL_CUBIC = {4: 1, 6: 2, 8: 6, 10: 21}
ALL_QUARTIC = {5: 1, 6: 1, 7: 2, 8: 6, 9: 16}
CONNECTED_CUBIC = {4: 1, 6: 2, 8: 5, 10: 19}


@pytest.mark.parametrize("n,count", sorted(ALL_CUBIC.items()))
def test_cubic_counts(n, count):
    assert count_regular(n, 3) == count


@pytest.mark.parametrize("n,count", sorted(ALL_QUARTIC.items()))
def test_quartic_counts(n, count):
    assert count_regular(n, 4) == count


@pytest.mark.parametrize("n,count", sorted(CONNECTED_CUBIC.items()))
def test_connected_cubic_counts(n, count):
    assert len(connected_regular(n, 3)) == count


def test_all_graphs_counts():
    assert [len(all_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_enumeration_is_isomorph_free_and_regular():
    graphs = list(enumerate_regular(8, 3))
    for g in graphs:
        assert is_regular(g) == 3
    nxs = [to_networkx(g) for g in graphs]
    for i in range(len(nxs)):
        for j in range(i + 1, len(nxs)):
            assert not nx.is_isomorphic(nxs[i], nxs[j])


def test_complement_shortcut_agrees():
    a = sorted(canonical_form(g).key() for g in enumerate_regular(9, 6))
    b = sorted(canonical_form(g).key() for g in enumerate_regular(9, 6, complement_shortcut=False))
    # complements of 2-regular graphs: cycle partitions 9, 6+3, 5+4, 3+3+3
    assert a == b and len(a) == 4


def test_forbidden_filter():
    free = list(enumerate_regular(10, 3, K3))
    every = list(enumerate_regular(10, 3))
    assert 0 < len(free) < len(every)


def test_parity_rejected():
    with pytest.raises(ParityInfeasible):
        list(enumerate_regular(7, 3))


def test_budget_exceeded_marks_record():
    rec = rex_brute(12, K3, path_graph(7), budget=5)
    assert not rec.exhaustive
    with pytest.raises(NotExhaustive):
        verify_uniqueness(rec, disjoint_union([complete_graph(6)] * 2))


def test_budget_counter():
    b = Budget(3)
    b.tick(3)
    with pytest.raises(Exception):
        b.tick()


def test_rex_small_values():
    assert rex_brute(6, K3, path_graph(4)).best_value == 2
    rec = rex_brute(9, K3, complete_graph(4))
    assert rec.best_value == 27
    assert verify_uniqueness(rec, turan_graph(9, 3))


def test_rex_paths_certificates():
    rec = rex_brute(12, K3, path_graph(7))
    assert rec.best_value == 40
    assert verify_uniqueness(rec, disjoint_union([complete_graph(6)] * 2))
    rec = rex_brute(11, K3, path_graph(7))
    assert rec.best_value == 18
    assert verify_uniqueness(rec, disjoint_union([complete_graph(5), clique_minus_matching(6)]))


def test_rex_c4_triangle_free():
    rec = rex_brute(8, cycle_graph(4), K3)
    assert rec.best_value == 36
    assert verify_uniqueness(rec, complete_multipartite([4, 4]))


def test_rex_r_filter():
    rec = rex_brute(8, K3, complete_graph(4), r_filter=3)
    assert rec.regularities_scanned == [3]
    assert rec.r_filter == 3


def test_regex_values():
    assert regex_brute(12, path_graph(7)).degree == 5
    assert regex_brute(11, path_graph(7)).degree == 4
    assert regex_brute(8, path_graph(5)).degree == 3
    with pytest.raises(BadParams):
        regex_brute(5, complete_graph(1))


def test_record_json_round_trip():
    rec = rex_brute(6, K3, path_graph(4))
    back = RexRecord.from_json(json.loads(json.dumps(rec.to_json())))
    assert back == rec
    assert back.key() == rec.key()


def test_cache_round_trip(tmp_path):
    cache = RexCache(tmp_path / "c.jsonl")
    rec = rex_brute(6, K3, path_graph(4))
    assert cache.lookup(rec.key()) is None
    cache.store(rec)
    cache.log_finding({"suite": "x", "n": 6})
    assert cache.lookup(rec.key()) == rec
    kinds = [row["kind"] for row in cache.rows()]
    assert kinds == ["rex", "finding"]
    cache.clear()
    assert list(cache.rows()) == []


def test_cache_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("REXLAB_CACHE", str(tmp_path / "x.jsonl"))
    assert RexCache().path == tmp_path / "x.jsonl"
