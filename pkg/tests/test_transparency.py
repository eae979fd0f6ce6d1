import json

import pytest
from hypothesis import given, settings

from chdigraph import (
    Digraph,
    TransparencyMatrix,
    audit_contraction,
    circulant,
    compute_transparency,
    contract_graph,
    contractible_pairs,
    girth,
    neighborhood_counts,
    paper_contract_update,
    shortest_cycle_certificate,
)
from chdigraph.digraph import DigraphError, directed_cycle, transitive_tournament
from chdigraph.transparency import adjacency_from_transparency, metric_violations

from oracles import contract_by_hand, dfs_girth, floyd_warshall
from strategies import digraphs

INF = None
DIGON = Digraph.from_arcs(2, [(0, 1), (1, 0)])
PATH3 = Digraph.from_arcs(3, [(0, 1), (1, 2)])
CYCLE3 = directed_cycle(3)


def as_fw(t: TransparencyMatrix):
    return [[float("inf") if x is None else x for x in row] for row in t.entries]


def test_single_arc():
    t = compute_transparency(Digraph.from_arcs(2, [(0, 1)]))
    assert t[0, 1] == 1 and t[1, 0] is None


def test_three_cycle():
    t = compute_transparency(CYCLE3)
    assert (t[0, 1], t[0, 2], t[1, 0]) == (1, 2, 2)


def test_circulant_entry():
    assert compute_transparency(circulant(7, 3))[0, 6] == 2


@given(digraphs(max_n=9))
def test_matches_floyd_warshall(g):
    assert as_fw(compute_transparency(g)) == floyd_warshall(g.n, list(g.arcs()))


@given(digraphs(max_n=10))
def test_metric_axioms(g):
    t = compute_transparency(g)
    assert metric_violations(t, g) == []
    assert adjacency_from_transparency(t) == [[int(g.has_arc(i, j)) for j in range(g.n)] for i in range(g.n)]


@given(digraphs(max_n=9))
@settings(max_examples=200)
def test_girth_equals_dfs_oracle(g):
    gi = girth(compute_transparency(g))
    assert (None if gi is None else gi.length) == dfs_girth(g.n, list(g.arcs()))


@given(digraphs(max_n=8))
def test_digon_iff_girth_two(g):
    t = compute_transparency(g)
    gi = girth(t)
    has_block = any(t[i, j] == 1 and t[j, i] == 1 for i in range(g.n) for j in range(i + 1, g.n))
    assert (gi is not None and gi.length == 2) == has_block


def test_girth_examples():
    assert girth(compute_transparency(transitive_tournament(6))) is None
    assert girth(compute_transparency(DIGON)).length == 2
    assert girth(compute_transparency(circulant(18, 3))).length == 6


def test_certificates():
    assert shortest_cycle_certificate(CYCLE3).vertices == (0, 1, 2)
    c = shortest_cycle_certificate(circulant(7, 3))
    assert c.length == 3 and c.is_valid_in(circulant(7, 3))
    assert shortest_cycle_certificate(transitive_tournament(5)) is None


@given(digraphs(max_n=9))
def test_certificate_is_valid_shortest_circuit(g):
    c = shortest_cycle_certificate(g)
    gi = girth(compute_transparency(g))
    assert (c is None) == (gi is None)
    if c is not None:
        assert c.is_valid_in(g) and c.length == gi.length


def test_contract_graph_examples():
    res = contract_graph(DIGON, (0, 1))
    assert res.graph.n == 1 and res.graph.num_arcs == 0
    res = contract_graph(PATH3, (0, 1))
    assert res.graph.n == 2 and list(res.graph.arcs()) == [(0, 1)]
    res = contract_graph(CYCLE3, (0, 1))
    assert sorted(res.graph.arcs()) == [(0, 1), (1, 0)]
    with pytest.raises(DigraphError):
        contract_graph(PATH3, (1, 0))


@given(digraphs(min_n=2, max_n=8))
def test_contract_graph_matches_hand_merge(g):
    for arc in list(g.arcs())[:3]:
        res = contract_graph(g, arc)
        n, arcs = contract_by_hand(g.n, list(g.arcs()), arc)
        assert res.graph.n == n == g.n - 1
        assert set(res.graph.arcs()) == arcs


def test_printed_update_examples():
    t = paper_contract_update(TransparencyMatrix.from_rows([[0, 1], [1, 0]]), 0, 1)
    assert t.entries == ((0,),)
    t = paper_contract_update(compute_transparency(PATH3), 0, 1)
    assert t.entries == ((0, 1), (INF, 0))
    with pytest.raises(ValueError):
        paper_contract_update(compute_transparency(PATH3), 0, 2)


@given(digraphs(min_n=2, max_n=8))
def test_printed_update_shrinks_by_one(g):
    t = compute_transparency(g)
    for i, j in contractible_pairs(t)[:3]:
        assert paper_contract_update(t, i, j).n == g.n - 1


def test_audit_contraction():
    assert audit_contraction(DIGON, (0, 1)).verdict == "equal"
    assert audit_contraction(PATH3, (0, 1)).verdict == "equal"
    rep = audit_contraction(CYCLE3, (0, 1))
    # the decrement pass also hits the merged column; recorded as a finding
    assert rep.verdict == "mismatch"
    assert rep.details["first_difference"] == {"row": 1, "col": 0, "expected": 1, "actual": 0}
    blob = json.loads(json.dumps(rep.to_json()))
    assert set(blob) >= {"claim", "instance", "expected", "actual", "verdict"}


def test_contractible_pairs():
    assert contractible_pairs(compute_transparency(DIGON)) == [(0, 1), (1, 0)]
    assert contractible_pairs(compute_transparency(Digraph.from_arcs(2, [(0, 1)]))) == [(0, 1)]
    assert contractible_pairs(compute_transparency(Digraph(3))) == []


def test_neighborhood_counts():
    assert neighborhood_counts(compute_transparency(CYCLE3), 0) == (1, 1, 1)
    assert neighborhood_counts(compute_transparency(Digraph(1)), 0) == (0, 0, 0)
    star = Digraph.from_arcs(3, [(0, 1), (0, 2)])
    assert neighborhood_counts(compute_transparency(star), 0) == (2, 0, 0)


def test_matrix_json_round_trip():
    t = compute_transparency(PATH3)
    blob = t.to_json()
    assert blob == {"n": 3, "entries": [[0, 1, 2], ["inf", 0, 1], ["inf", "inf", 0]]}
    assert TransparencyMatrix.from_json(json.loads(json.dumps(blob))) == t
