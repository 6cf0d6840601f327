import json

import pytest

from flowerq.graph import FlowerSpec, GraphError
from flowerq.subgraph import CapabilityError
from flowerq.verify import (
    CHECKS,
    EXHAUSTIVE,
    MAX_STORED_FAILURES,
    PROPERTY,
    CheckReport,
    check_bound_sandwich,
    check_lemma_2_1,
    check_lemma_2_2,
    check_lemma_2_3,
    check_lemma_2_4,
    check_lemma_2_5,
    check_lemma_2_6,
    check_lemma_3_1_conclusion,
    check_lemma_3_2,
    check_theorem_main,
    check_turan_constructions,
    desk_plan,
    labeled_profiles,
    main_threshold,
    run_check,
    span,
    theorem_part,
)


def test_span():
    assert list(span((3, 5))) == [3, 4, 5]
    assert list(span(4)) == [4]


@pytest.mark.parametrize(
    "spec, part, threshold",
    [("1", 1, 5), ("2", 2, 440), ("1,1", 3, 8), ("1,1,1", 3, 22), ("2,1", 4, 45), ("2,2", 4, 89)],
)
def test_threshold_table(spec, part, threshold):
    s = FlowerSpec.parse(spec)
    assert theorem_part(s) == part
    assert main_threshold(s) == threshold


def test_profiles_shape():
    e, mind, lp, circ = labeled_profiles(4)
    assert len(e) == 64
    assert e.max() == 6 and mind.max() == 3 and lp.max() == 4 and circ.max() == 4
    assert lp.min() == 1 and circ.min() == 0


@pytest.mark.parametrize(
    "fn, kw",
    [
        (check_lemma_2_1, {"n_range": (1, 6), "k_range": (3, 5)}),
        (check_lemma_2_6, {"n_range": (1, 6)}),
        (check_lemma_2_3, {"n_range": (4, 6)}),
        (check_lemma_3_2, {"n_range": (4, 6)}),
        (check_lemma_2_4, {"t_range": (2, 3), "n_max": 60, "samples": 20}),
        (check_lemma_2_5, {"t_range": (3, 4), "r_range": (1, 5)}),
        (check_turan_constructions, {"n_range": (9, 11), "k_range": (1, 2)}),
        (check_bound_sandwich, {"n_max": 6, "samples": 500}),
        (check_theorem_main, {"n_range": (4, 5), "spec": "1"}),
    ],
)
def test_small_checks_pass(fn, kw):
    rep = fn(**kw)
    assert rep.passed, rep.to_text()
    assert rep.instances > 0
    for key, value in kw.items():
        assert rep.params[key] == (list(value) if isinstance(value, tuple) else value)


def test_windmill_equality_holds_below_seven():
    rep = check_lemma_2_2(n_range=(1, 6), k_range=(3, 4))
    assert rep.passed, rep.to_text()


def test_windmill_equality_reports_chained_triangles():
    # connected path-free graphs can reach the edge bound without being
    # windmills; a chain of three triangles is one
    rep = check_lemma_2_2(n_range=(7, 7), k_range=(3, 3))
    assert rep.failure_count == 630
    assert len(rep.failures) == MAX_STORED_FAILURES
    assert all(f.params["n"] == 7 for f in rep.failures)
    again = rep.rerun()
    assert again.failure_count == rep.failure_count
    assert [f.graph6 for f in again.failures] == [f.graph6 for f in rep.failures]


def test_theorem_on_fixture(graph8_path):
    rep = check_theorem_main(n_range=(8, 8), spec="1,1", source="fixture", fixture=str(graph8_path))
    assert rep.passed
    assert rep.instances == 12_346
    assert rep.info["n=8"]["classes"] == ["G??F~{"]


def test_theorem_by_challenge_small():
    rep = check_theorem_main(n_range=(9, 9), spec="1,1", source="challenge", trials=12, seed=0)
    assert rep.passed and rep.strength == PROPERTY and rep.instances == 12


def test_dominating_vertex_at_zero_window():
    rep = check_lemma_3_1_conclusion(n=10, spec="1,1", trials=12, seed=0)
    assert rep.passed
    assert rep.strength == PROPERTY


def test_capability_errors():
    with pytest.raises(CapabilityError):
        check_lemma_2_1(n_range=(1, 8))
    with pytest.raises(CapabilityError):
        check_theorem_main(n_range=(8, 8), spec="1")
    with pytest.raises(GraphError):
        run_check("lemma9.9")


def test_report_serialisation():
    rep = check_lemma_2_5(t_range=(3, 3), r_range=(1, 2))
    d = json.loads(rep.to_json())
    assert d["status"] == "pass" and d["check_id"] == "lemma2.5"
    assert "elapsed_s" in d["timing"]
    assert "timing" not in json.loads(rep.to_json(timing=False))
    assert rep.to_text().startswith("[PASS] lemma2.5")


def test_failure_bookkeeping():
    rep = CheckReport("x", {})
    for i in range(MAX_STORED_FAILURES + 5):
        rep.fail({"i": i}, "A_", 1, 2)
    assert rep.failure_count == MAX_STORED_FAILURES + 5
    assert len(rep.failures) == MAX_STORED_FAILURES
    assert rep.status == "fail" and not rep.passed
    assert "... 95 more" in rep.to_text()
    assert CheckReport("y", {}).strength == EXHAUSTIVE


def test_desk_plan_covers_registry():
    ids = {c for c, _ in desk_plan("fixtures/graph8.g6")}
    assert ids == set(CHECKS)
    assert len(desk_plan("f")) == len(desk_plan()) + 1
