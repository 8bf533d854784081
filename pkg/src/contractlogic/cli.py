"""Command-line interface.

Exit codes: 0 success, 1 input error (bad files, unknown ids, bad
arguments), 2 internal invariant breach.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .abduction import AbductionError, abduce, build_minimal_pair
from .cnf import tseitin
from .dataset import DatasetError, load_dataset, load_predictions
from .entailment import Verdict, classify
from .formulas import Not, conj, desugar
from .harness import evaluate
from .parser import pretty
from .review import InvariantBreach, ReplayError, ReviewService


class CliInputError(click.ClickException):
    exit_code = 1


def _load(path: str):
    try:
        return load_dataset(path)
    except (DatasetError, OSError) as exc:
        raise CliInputError(str(exc))


def _find_case(cases, case_id):
    for c in cases:
        if c.id == case_id:
            return c
    raise CliInputError(f"unknown case id {case_id!r}")


@click.group()
def main():
    """Formal contract entailment toolkit."""


@main.command("classify")
@click.option("--dataset", "dataset_path", required=True, type=click.Path(exists=True))
@click.option("--case", "case_id", default=None, help="Classify a single case.")
def classify_cmd(dataset_path, case_id):
    """Compute the formal verdict for each case."""
    cases = _load(dataset_path)
    if case_id is not None:
        cases = [_find_case(cases, case_id)]
    for case in sorted(cases, key=lambda c: c.id):
        cc = classify(case.premise_forms, case.hypothesis_form, case.id)
        click.echo(f"{case.id}\t{cc.verdict.value}\t(gold legal: {case.gold_legal})")
        if cc.verdict is Verdict.NEUTRAL:
            w = cc.witness_h
            bools = ", ".join(f"{pretty(a)}={'T' if v else 'F'}" for a, v in sorted(w.bools.items(), key=lambda kv: pretty(kv[0])))
            click.echo(f"\twitness P&H: {bools} {dict(sorted(w.ints.items()))}")


@main.command("abduce")
@click.option("--dataset", "dataset_path", required=True, type=click.Path(exists=True))
@click.option("--case", "case_id", required=True)
@click.option(
    "--target",
    type=click.Choice(["entailment", "contradiction"]),
    default="entailment",
    show_default=True,
)
@click.option("-k", "cardinality", type=int, default=3, show_default=True)
def abduce_cmd(dataset_path, case_id, target, cardinality):
    """Enumerate minimal axiom sets that make the verdict definite."""
    case = _find_case(_load(dataset_path), case_id)
    tgt = Verdict.ENTAILMENT if target == "entailment" else Verdict.CONTRADICTION
    try:
        result = abduce(case, tgt, cardinality)
    except AbductionError as exc:
        raise CliInputError(str(exc))
    if not result.solutions:
        click.echo(f"{case.id}: no axiom set (size <= {cardinality}) shifts the verdict to {target}")
        return
    for sol in result.solutions:
        click.echo(f"{case.id}\t{{{', '.join(sol.sorted_ids())}}}\tscore={sol.score}")


@main.command("pairs")
@click.option("--dataset", "dataset_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("-k", "cardinality", type=int, default=3, show_default=True)
def pairs_cmd(dataset_path, out_path, cardinality):
    """Build minimal pairs for every neutral case with entailment solutions."""
    import json

    cases = _load(dataset_path)
    rows = []
    for case in sorted(cases, key=lambda c: c.id):
        if classify(case.premise_forms, case.hypothesis_form).verdict is not Verdict.NEUTRAL:
            continue
        if not case.axiom_pool:
            continue
        for sol in abduce(case, Verdict.ENTAILMENT, cardinality).solutions:
            pair = build_minimal_pair(case, sol.axiom_ids)
            check = classify(case.premise_forms, pair.modified_hypothesis).verdict
            if check is not Verdict.ENTAILMENT:
                click.echo(f"invariant breach: pair for {case.id} classifies {check.value}", err=True)
                sys.exit(2)
            rows.append(
                {
                    "case_id": case.id,
                    "axiom_ids": pair.axiom_ids,
                    "original_hypothesis": pretty(case.hypothesis_form),
                    "modified_hypothesis": pretty(pair.modified_hypothesis),
                }
            )
    with open(out_path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    click.echo(f"wrote {len(rows)} minimal pairs to {out_path}")


@main.command("eval")
@click.option("--dataset", "dataset_path", required=True, type=click.Path(exists=True))
@click.option("--pred", "pred_path", required=True, type=click.Path(exists=True))
@click.option("--report-out", "report_path", required=True, type=click.Path())
@click.option("--emit-dimacs", "dimacs_dir", type=click.Path(), default=None,
              help="Also dump each case's clause sets in DIMACS-like text.")
def eval_cmd(dataset_path, pred_path, report_path, dimacs_dir):
    """Score a predictions file against the formal verdicts."""
    cases = _load(dataset_path)
    try:
        preds = load_predictions(pred_path)
        report = evaluate(cases, preds)
    except DatasetError as exc:
        raise CliInputError(str(exc))
    Path(report_path).write_text(report.to_json(), encoding="utf-8")
    if dimacs_dir is not None:
        out = Path(dimacs_dir)
        out.mkdir(parents=True, exist_ok=True)
        for case in cases:
            for suffix, forms in (
                ("p_and_not_h", case.premise_forms + [Not(case.hypothesis_form)]),
                ("p_and_h", case.premise_forms + [case.hypothesis_form]),
            ):
                cs = tseitin(desugar(conj(forms)))
                (out / f"{case.id}_{suffix}.cnf").write_text(cs.to_dimacs(), encoding="utf-8")
    click.echo(report.to_text())
    click.echo(f"report written to {report_path}")


@main.command("serve")
@click.option("--dataset", "dataset_path", required=True, type=click.Path(exists=True))
@click.option("--log", "log_path", required=True, type=click.Path())
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("-k", "cardinality", type=int, default=3, show_default=True)
def serve_cmd(dataset_path, log_path, port, host, cardinality):
    """Run the review service (and the UI bundle, if built)."""
    import uvicorn

    from .api import create_app, default_static_dir

    cases = _load(dataset_path)
    try:
        service = ReviewService(cases, log_path, cardinality)
    except ReplayError as exc:
        raise CliInputError(str(exc))
    app = create_app(service, default_static_dir())
    uvicorn.run(app, host=host, port=port)


def run():
    try:
        main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.Abort:
        sys.exit(1)
    except InvariantBreach as exc:
        click.echo(f"invariant breach: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    run()
