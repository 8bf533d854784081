import json
from pathlib import Path

import pytest

from contractlogic.dataset import (
    Case,
    DuplicateId,
    ParseError,
    Prediction,
    UnknownCaseId,
    load_dataset,
    load_predictions,
)
from contractlogic.entailment import Verdict
from contractlogic.harness import (
    DegenerateCase,
    Report,
    compute_shift,
    evaluate,
    reward_signal,
    tag_failures,
)
from contractlogic.parser import parse

DATA = Path(__file__).parent.parent / "src" / "contractlogic" / "data"
GOLDEN = Path(__file__).parent / "golden"

CORPUS = DATA / "toy_corpus.jsonl"


def write_lines(tmp_path, lines, name="ds.jsonl"):
    p = tmp_path / name
    p.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return p


def minimal_record(case_id="c1", hyp="b"):
    return json.dumps(
        {
            "id": case_id,
            "premise_text": "p",
            "premise_forms": ["a"],
            "hypothesis_text": "h",
            "hypothesis_form": hyp,
            "gold_legal": "neutral",
            "axiom_pool": [],
        }
    )


def test_load_single_case(tmp_path):
    cases = load_dataset(write_lines(tmp_path, [minimal_record()]))
    assert len(cases) == 1
    assert cases[0].premise_forms == [parse("a")]


def test_load_bad_hypothesis(tmp_path):
    path = write_lines(tmp_path, [minimal_record(hyp="b &")])
    with pytest.raises(ParseError) as ei:
        load_dataset(path)
    assert "hypothesis_form" in str(ei.value)
    assert ei.value.line_no == 1


def test_load_duplicate_id(tmp_path):
    path = write_lines(tmp_path, [minimal_record("c1"), minimal_record("c1")])
    with pytest.raises(DuplicateId):
        load_dataset(path)


def test_toy_corpus_loads():
    cases = load_dataset(CORPUS)
    assert len(cases) == 20
    assert len({c.id for c in cases}) == 20


def test_compute_shift_toy_corpus_totals():
    cases = load_dataset(CORPUS)
    matrix, verdicts = compute_shift(cases)
    assert sum(sum(row.values()) for row in matrix.values()) == 20
    neutral = sum(1 for v in verdicts.values() if v.verdict is Verdict.NEUTRAL)
    assert matrix["entailment"]["Neutral"] == 8
    assert neutral == 10


def test_compute_shift_diagonal_dataset():
    cases = [
        Case(f"d{i}", "", [parse(p)], "", parse(p), "entailment", [])
        for i, p in enumerate(["a", "b", "c"])
    ]
    matrix, _ = compute_shift(cases)
    assert matrix["entailment"]["Entailment"] == 3
    assert sum(sum(row.values()) for row in matrix.values()) == 3


def test_compute_shift_empty():
    matrix, verdicts = compute_shift([])
    assert verdicts == {}
    assert all(n == 0 for row in matrix.values() for n in row.values())


def test_tag_rules():
    pred = lambda p, cf=False: Prediction("x", p, cf)
    assert tag_failures(Verdict.NEUTRAL, pred("entailment")) == {"assumption_injection"}
    assert tag_failures(Verdict.NEUTRAL, pred("entailment", True)) == {
        "assumption_injection",
        "scope_laundering",
    }
    assert tag_failures(Verdict.ENTAILMENT, pred("entailment")) == set()
    assert tag_failures(Verdict.ENTAILMENT, pred("neutral")) == {"implicit_constraint_blindness"}
    assert tag_failures(Verdict.CONTRADICTION, pred("entailment", True)) == {
        "implicit_constraint_blindness",
        "scope_laundering",
    }
    with pytest.raises(DegenerateCase):
        tag_failures(Verdict.PREMISE_INCONSISTENT, pred("neutral"))


def test_evaluate_unknown_case_id():
    cases = load_dataset(CORPUS)
    with pytest.raises(UnknownCaseId):
        evaluate(cases, [Prediction("zzz", "entailment", False)])


def test_evaluate_missing_prediction_listed():
    cases = load_dataset(CORPUS)
    rep = evaluate(cases, [Prediction("c01", "entailment", False)])
    assert "c02" in rep.aggregates["missing_predictions"]
    assert rep.aggregates["matched_predictions"] == 1


def test_evaluate_echo_predictor_diagonal():
    cases = load_dataset(CORPUS)
    preds = load_predictions(DATA / "pred_echo.jsonl")
    rep = evaluate(cases, preds)
    for verdict, row in rep.confusion.items():
        for predicted, n in row.items():
            if predicted != verdict.lower() and n:
                pytest.fail(f"off-diagonal cell {verdict}->{predicted} = {n}")
    assert all(n == 0 for n in rep.aggregates["tag_counts"].values())


def test_evaluate_all_entailment_histogram():
    cases = load_dataset(CORPUS)
    preds = load_predictions(DATA / "pred_all_entailment.jsonl")
    rep = evaluate(cases, preds)
    matrix, verdicts = compute_shift(cases)
    for v in ("Entailment", "Contradiction", "Neutral"):
        expected = sum(1 for cc in verdicts.values() if cc.verdict.value == v)
        assert rep.confusion[v]["entailment"] == expected
        assert rep.confusion[v]["contradiction"] == 0
        assert rep.confusion[v]["neutral"] == 0


def test_golden_reports_stable():
    cases = load_dataset(CORPUS)
    for name, pred_file in [
        ("all_entailment", "pred_all_entailment.jsonl"),
        ("echo", "pred_echo.jsonl"),
    ]:
        preds = load_predictions(DATA / pred_file)
        got = evaluate(cases, preds).to_json()
        again = evaluate(cases, preds).to_json()
        assert got == again
        assert got == (GOLDEN / f"report_{name}.json").read_text(encoding="utf-8")


def test_matrix_conservation():
    cases = load_dataset(CORPUS)
    preds = load_predictions(DATA / "pred_all_entailment.jsonl")
    rep = evaluate(cases, preds)
    assert sum(sum(r.values()) for r in rep.shift_matrix.values()) == len(cases)
    assert sum(sum(r.values()) for r in rep.confusion.values()) == rep.aggregates[
        "matched_predictions"
    ]


def test_tagging_totality():
    cases = load_dataset(CORPUS)
    preds = load_predictions(DATA / "pred_all_entailment.jsonl")
    rep = evaluate(cases, preds)
    for row in rep.per_case:
        if row["verdict"] == "PremiseInconsistent" or "predicted" not in row:
            continue
        if row["predicted"] == row["verdict"].lower():
            assert row["tags"] == []
        else:
            assert row["tags"]


def test_reward_matching_claim():
    cases = {c.id: c for c in load_dataset(CORPUS)}
    assert reward_signal(cases["c01"], "entailment").reward == 1
    assert reward_signal(cases["c03"], "neutral").reward == 1


def test_reward_ungrounded_claim_carries_axioms():
    case = Case("r1", "", [parse("a")], "", parse("b"), "neutral",
                [__import__("contractlogic.abduction", fromlist=["Axiom"]).Axiom("a1", parse("a -> b"), "g", "context")])
    res = reward_signal(case, "entailment")
    assert res.reward == -1
    assert [s.axiom_ids for s in res.required_axioms.solutions] == [frozenset({"a1"})]


def test_reward_zero_cases():
    cases = {c.id: c for c in load_dataset(CORPUS)}
    assert reward_signal(cases["c01"], "contradiction").reward == 0  # definite vs definite
    assert reward_signal(cases["c04"], "neutral").reward == 0
    assert reward_signal(cases["c08"], "entailment").reward == 0  # premise inconsistent
    assert reward_signal(cases["c08"], "entailment").required_axioms is None


def test_reward_consistency_over_corpus():
    cases = load_dataset(CORPUS)
    _, verdicts = compute_shift(cases)
    for case in cases:
        v = verdicts[case.id].verdict
        for claimed in ("entailment", "contradiction", "neutral"):
            res = reward_signal(case, claimed)
            if v is Verdict.PREMISE_INCONSISTENT:
                assert res.reward == 0
            elif claimed == v.value.lower():
                assert res.reward == 1
            elif v is Verdict.NEUTRAL:
                assert res.reward == -1
                assert res.required_axioms is not None
            else:
                assert res.reward == 0


def test_report_text_rendering():
    cases = load_dataset(CORPUS)
    preds = load_predictions(DATA / "pred_all_entailment.jsonl")
    text = evaluate(cases, preds).to_text()
    assert "Label shift" in text
    assert "c08" in text  # premise inconsistent listing
    assert "assumption_injection: 10" in text
