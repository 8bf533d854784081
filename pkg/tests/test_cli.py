import json
from pathlib import Path

from click.testing import CliRunner

from contractlogic.cli import main

DATA = Path(__file__).parent.parent / "src" / "contractlogic" / "data"
CORPUS = str(DATA / "toy_corpus.jsonl")


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_classify_all():
    res = run("classify", "--dataset", CORPUS)
    assert res.exit_code == 0
    assert "c01\tEntailment" in res.output
    assert "c08\tPremiseInconsistent" in res.output


def test_classify_single_case():
    res = run("classify", "--dataset", CORPUS, "--case", "c11")
    assert res.exit_code == 0
    assert res.output.splitlines()[0].startswith("c11\tContradiction")


def test_classify_unknown_case():
    res = run("classify", "--dataset", CORPUS, "--case", "zzz")
    assert res.exit_code == 1


def test_abduce():
    res = run("abduce", "--dataset", CORPUS, "--case", "c12", "-k", "2")
    assert res.exit_code == 0
    assert "{a1, a2}" in res.output
    assert "score=206" in res.output


def test_abduce_not_neutral():
    res = run("abduce", "--dataset", CORPUS, "--case", "c01")
    assert res.exit_code == 1


def test_abduce_contradiction_target():
    res = run("abduce", "--dataset", CORPUS, "--case", "c17", "--target", "contradiction")
    assert res.exit_code == 0
    assert "{a1}" in res.output


def test_pairs(tmp_path):
    out = tmp_path / "pairs.jsonl"
    res = run("pairs", "--dataset", CORPUS, "--out", str(out))
    assert res.exit_code == 0
    rows = [json.loads(l) for l in out.read_text().splitlines()]
    assert rows
    by_case = {r["case_id"] for r in rows}
    assert "c20" in by_case
    pair = next(r for r in rows if r["case_id"] == "c20")
    assert pair["modified_hypothesis"] == "(assigns(contract_a) -> binds(successor)) -> binds(successor)"


def test_eval_writes_report_and_dimacs(tmp_path):
    report = tmp_path / "report.json"
    dimacs = tmp_path / "cnf"
    res = run(
        "eval",
        "--dataset", CORPUS,
        "--pred", str(DATA / "pred_all_entailment.jsonl"),
        "--report-out", str(report),
        "--emit-dimacs", str(dimacs),
    )
    assert res.exit_code == 0
    body = json.loads(report.read_text())
    assert body["aggregates"]["tag_counts"]["assumption_injection"] == 10
    cnf = (dimacs / "c04_p_and_not_h.cnf").read_text()
    assert "p cnf" in cnf
    assert "[term_days <= 60]" in cnf


def test_eval_bad_predictions(tmp_path):
    bad = tmp_path / "preds.jsonl"
    bad.write_text('{"id": "c01", "predicted": "maybe"}\n')
    report = tmp_path / "r.json"
    res = run("eval", "--dataset", CORPUS, "--pred", str(bad), "--report-out", str(report))
    assert res.exit_code == 1
