import json
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import oracle_flower
from flowerq.graph import FlowerSpec, Graph, GraphError, complete, cycle, from_graph6, split_graph, to_graph6
from flowerq.search import (
    CHALLENGE_SEEDS,
    ExtremalRecord,
    SearchAborted,
    StreamError,
    challenge_graphs,
    edge_order,
    enumerate_labeled,
    fingerprint,
    graph_from_mask,
    ingest_stream,
    labeled_edge_mask,
    labeled_row_batches,
    merge_parts,
    randomized_challenge,
    spectral_extremal_search,
    turan_search,
    worker_count,
)
from flowerq.spectral import q_radius, q_split_closed_form
from flowerq.subgraph import CapabilityError, find_flower, is_complete_bipartite, is_split_graph

S82 = (10 + math.sqrt(84)) / 2


# -- streams ------------------------------------------------------------------------------


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumeration_counts(n, count):
    gs = list(enumerate_labeled(n))
    assert len(gs) == count
    assert len(set(gs)) == count


def test_enumeration_order_is_edge_mask_increment():
    for n in (3, 4, 5):
        assert [labeled_edge_mask(g) for g in enumerate_labeled(n)] == list(range(2 ** (n * (n - 1) // 2)))
        assert all(graph_from_mask(n, labeled_edge_mask(g)) == g for g in enumerate_labeled(n))


def test_edge_order_is_graph6_bit_order():
    g = graph_from_mask(5, 0b1)
    assert list(g.edges()) == [edge_order(5)[0]] == [(0, 1)]
    # graph6 packs bits in the same order, most significant first
    assert to_graph6(graph_from_mask(4, 1 << 5)) == "C" + chr((1 << 0) + 63)


def test_order_7_count_via_batches():
    total = sum(rows.shape[0] for _, rows in labeled_row_batches(7))
    assert total == 2_097_152
    first = next(labeled_row_batches(7, chunk=50))[1]
    assert [tuple(r) for r in first] == [g.adj for _, g in zip(range(50), enumerate_labeled(7))]


def test_enumeration_capability_error():
    with pytest.raises(CapabilityError):
        next(enumerate_labeled(8))
    with pytest.raises(CapabilityError):
        next(labeled_row_batches(8))


def test_ingest_fixture(graph8_path):
    gs = list(ingest_stream(graph8_path))
    assert len(gs) == 12_346
    assert all(g.n == 8 for g in gs)
    assert len({fingerprint(g) for g in gs[:300]}) == 300


def test_ingest_edge_cases(tmp_path):
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert list(ingest_stream(empty)) == []
    hdr = tmp_path / "hdr.g6"
    hdr.write_text(">>graph6<<\nA_\n\nBw\n")
    assert list(ingest_stream(hdr)) == [complete(2), complete(3)]
    bad = tmp_path / "bad.g6"
    bad.write_text("A_\nB!\nBw\n")
    with pytest.raises(StreamError) as info:
        list(ingest_stream(bad))
    assert info.value.line_no == 2 and "bad.g6:2" in str(info.value)
    assert list(ingest_stream(bad, skip_bad=True)) == [complete(2), complete(3)]
    with pytest.raises(OSError):
        list(ingest_stream(tmp_path / "missing.g6"))


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("FLOWERQ_WORKERS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("FLOWERQ_WORKERS", "junk")
    assert worker_count() == 1
    assert worker_count(0) == 1


# -- searches -----------------------------------------------------------------------------


def test_triangle_free_n5():
    rec = spectral_extremal_search(enumerate_labeled(5), FlowerSpec([1]))
    assert rec.best_value == pytest.approx(5.0, abs=1e-8)
    # 5 labeled stars K_{1,4} and 10 labeled K_{2,3}
    assert len(rec.witnesses) == 15
    assert all(is_complete_bipartite(from_graph6(w)) for w in rec.witnesses)
    assert len(rec.classes()) == 2
    assert rec.scanned == 1024 and rec.free_count <= rec.scanned
    assert rec.reference == pytest.approx(5.0)


@pytest.mark.parametrize("n, expected", [(4, 4), (5, 6), (6, 9)])
def test_turan_triangle(n, expected):
    assert turan_search(enumerate_labeled(n), FlowerSpec([1])).best_value == expected


def test_turan_c5_n5():
    # K_4 plus a pendant vertex has 7 edges and no 5-cycle
    rec = turan_search(enumerate_labeled(5), FlowerSpec([2]))
    assert rec.best_value == 7
    assert all(not oracle_flower(from_graph6(w), [2]) for w in rec.witnesses)
    pendant = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
    assert find_flower(pendant, FlowerSpec([2])) is None


def test_empty_stream():
    rec = spectral_extremal_search(iter(()), FlowerSpec([1, 1]))
    assert rec.scanned == 0 and rec.witnesses == [] and rec.best_value is None
    assert rec.matches_reference is None


def test_mixed_orders_rejected():
    with pytest.raises(GraphError):
        spectral_extremal_search([complete(3), complete(4)], FlowerSpec([2]))


def test_budget_abort_names_graph():
    g = complete(12)
    with pytest.raises(SearchAborted) as info:
        spectral_extremal_search([g], FlowerSpec([3, 2]), budget=2)
    assert info.value.graph6 == to_graph6(g)


def test_parallel_matches_serial():
    spec = FlowerSpec([1, 1])
    a = spectral_extremal_search(enumerate_labeled(6), spec, workers=1)
    b = spectral_extremal_search(enumerate_labeled(6), spec, workers=2)
    assert a.as_dict() == b.as_dict()
    c = turan_search(enumerate_labeled(5), FlowerSpec([2]), workers=2)
    assert c.as_dict() == turan_search(enumerate_labeled(5), FlowerSpec([2])).as_dict()


def test_fixture_friendship_search(graph8_path):
    rec = spectral_extremal_search(ingest_stream(graph8_path), FlowerSpec([1, 1]))
    assert abs(rec.best_value - S82) <= 1e-8
    assert len(rec.witnesses) == 1 and is_split_graph(from_graph6(rec.witnesses[0]), 2)
    assert rec.matches_reference


def test_witnesses_are_free_under_oracle():
    rec = spectral_extremal_search(enumerate_labeled(6), FlowerSpec([2, 1]))
    for w in rec.witnesses:
        g = from_graph6(w)
        assert not oracle_flower(g, [2, 1])
        assert abs(q_radius(g).value - rec.best_value) <= 1e-8
    assert rec.scanned >= rec.free_count >= len(rec.witnesses)


def test_split_graph_among_witnesses_when_present():
    # the stream holds S_{8,2}; at the friendship threshold it must be a maximizer
    stream = [split_graph(8, 2), cycle(8), complete(8)]
    rec = spectral_extremal_search(stream, FlowerSpec([1, 1]))
    assert rec.witnesses == [to_graph6(split_graph(8, 2))]
    assert rec.free_count == 2


def _norm(n, best, wit, s, f):
    # shape of a real scan: no witnesses without a best, none above it
    if best is None:
        return n, None, (), s, f
    wit = tuple(sorted(w for w in wit if w[0] <= best))
    if not any(w[0] == best for w in wit):
        wit = wit + ((best, "z"),)
    return n, best, wit, s, f


_part = st.tuples(
    st.just(6),
    st.one_of(st.none(), st.integers(0, 8).map(float)),
    st.lists(st.tuples(st.integers(0, 8).map(float), st.sampled_from("abc")), max_size=4),
    st.integers(0, 5),
    st.integers(0, 5),
).map(lambda p: _norm(*p))


@settings(max_examples=200)
@given(_part, _part, _part, st.sampled_from([0.0, 1.0]))
def test_merge_parts_associative_commutative(a, b, c, band):
    m = lambda x, y: merge_parts(x, y, band)
    assert m(m(a, b), c) == m(a, m(b, c))
    assert m(a, b) == m(b, a)


def test_record_json_round_trip():
    rec = spectral_extremal_search(enumerate_labeled(4), FlowerSpec([1]))
    d = json.loads(rec.to_json())
    again = ExtremalRecord.from_dict(d)
    assert again.as_dict() == rec.as_dict()
    assert rec.summary_row() == [4, 1, rec.best_value, rec.reference, True]


def test_fingerprint_isomorphism_invariant():
    g = split_graph(7, 2)
    rng = random.Random(0)
    perm = list(range(7))
    rng.shuffle(perm)
    assert fingerprint(g) == fingerprint(g.relabel(perm))
    assert fingerprint(g) != fingerprint(cycle(7))


# -- randomized challenge -----------------------------------------------------------------


def test_challenge_trials_zero():
    rec = randomized_challenge(17, FlowerSpec([1, 1]), 0, 1)
    assert rec.scanned == 0 and rec.witnesses == [] and rec.best_value is None


def test_challenge_deterministic_and_free():
    spec = FlowerSpec([1, 1])
    a = randomized_challenge(12, spec, 9, seed=3)
    b = randomized_challenge(12, spec, 9, seed=3)
    assert a.as_dict() == b.as_dict()
    assert a.as_dict() != randomized_challenge(12, spec, 9, seed=4).as_dict()
    bound = q_split_closed_form(12, 2)
    for g6, q in a.samples:
        g = from_graph6(g6)
        assert find_flower(g, spec) is None
        assert q <= bound + 1e-8
    assert not a.violations


def test_challenge_graphs_are_maximal():
    spec = FlowerSpec([2, 1])
    for g in challenge_graphs(10, spec, 3, seed=2):
        assert find_flower(g, spec) is None
        for u, v in g.non_edges():
            assert find_flower(g.add_edge(u, v), spec) is not None


def test_challenge_seed_cycle():
    assert CHALLENGE_SEEDS == ("empty", "split", "bipartite")
    with pytest.raises(GraphError):
        next(challenge_graphs(3, FlowerSpec([2, 2]), 1, 0))
