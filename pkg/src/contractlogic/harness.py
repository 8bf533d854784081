"""Batch evaluation: label-shift statistics between legal annotations and
formal verdicts, failure-mode tagging of external predictions, and the
verdict-based reward signal.

All outputs are order-normalized (case id ascending, fixed label orders)
so two runs over the same inputs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .abduction import DEFAULT_K, AbductionResult, abduce
from .dataset import Case, Prediction, UnknownCaseId
from .entailment import ClassifiedCase, Verdict, classify

VERDICT_ORDER = [
    Verdict.ENTAILMENT,
    Verdict.CONTRADICTION,
    Verdict.NEUTRAL,
    Verdict.PREMISE_INCONSISTENT,
]
DEFINITE_VERDICTS = VERDICT_ORDER[:3]
LABEL_ORDER = ["entailment", "contradiction", "neutral"]

TAG_ASSUMPTION_INJECTION = "assumption_injection"
TAG_SCOPE_LAUNDERING = "scope_laundering"
TAG_CONSTRAINT_BLINDNESS = "implicit_constraint_blindness"


class DegenerateCase(ValueError):
    """Failure tagging is undefined when the premise itself is inconsistent."""


@dataclass
class Report:
    shift_matrix: dict[str, dict[str, int]]
    confusion: dict[str, dict[str, int]]
    premise_inconsistent: list[str]
    per_case: list[dict]
    aggregates: dict

    def to_json(self) -> str:
        payload = {
            "shift_matrix": self.shift_matrix,
            "confusion": self.confusion,
            "premise_inconsistent": self.premise_inconsistent,
            "per_case": self.per_case,
            "aggregates": self.aggregates,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = []
        verdict_names = [v.value for v in VERDICT_ORDER]
        width = max(len(n) for n in verdict_names) + 2
        lines.append("Label shift (gold legal rows x formal verdict columns)")
        header = " " * 15 + "".join(n.rjust(width) for n in verdict_names)
        lines.append(header)
        for gold in LABEL_ORDER:
            row = self.shift_matrix[gold]
            lines.append(gold.ljust(15) + "".join(str(row[n]).rjust(width) for n in verdict_names))
        lines.append("")
        lines.append("Confusion (formal verdict rows x predicted columns)")
        lines.append(" " * 15 + "".join(n.rjust(width) for n in LABEL_ORDER))
        for v in DEFINITE_VERDICTS:
            row = self.confusion[v.value]
            lines.append(v.value.ljust(15) + "".join(str(row[n]).rjust(width) for n in LABEL_ORDER))
        lines.append("")
        if self.premise_inconsistent:
            lines.append("Premise-inconsistent cases: " + ", ".join(self.premise_inconsistent))
        agg = self.aggregates
        lines.append(f"Entailment->Neutral shift proportion: {agg['entailment_to_neutral_shift']:.4f}")
        if agg.get("dominant_confusion_cell"):
            lines.append(f"Dominant confusion cell: {agg['dominant_confusion_cell']}")
        lines.append(
            "Entailment<->Contradiction confusions: "
            f"{agg['entailment_contradiction_confusions']}"
        )
        for tag in sorted(agg["tag_counts"]):
            lines.append(f"tag {tag}: {agg['tag_counts'][tag]}")
        if agg["missing_predictions"]:
            lines.append("Missing predictions: " + ", ".join(agg["missing_predictions"]))
        return "\n".join(lines) + "\n"


def _empty_shift_matrix() -> dict[str, dict[str, int]]:
    return {gold: {v.value: 0 for v in VERDICT_ORDER} for gold in LABEL_ORDER}


def compute_shift(cases: list[Case]) -> tuple[dict[str, dict[str, int]], dict[str, ClassifiedCase]]:
    """Classify every case and tabulate gold legal label vs formal verdict."""
    matrix = _empty_shift_matrix()
    verdicts: dict[str, ClassifiedCase] = {}
    for case in sorted(cases, key=lambda c: c.id):
        cc = classify(case.premise_forms, case.hypothesis_form, case.id)
        verdicts[case.id] = cc
        matrix[case.gold_legal][cc.verdict.value] += 1
    return matrix, verdicts


def tag_failures(verdict: Verdict, pred: Prediction) -> set[str]:
    if verdict is Verdict.PREMISE_INCONSISTENT:
        raise DegenerateCase("cannot tag predictions on a premise-inconsistent case")
    tags: set[str] = set()
    formal = verdict.value.lower()
    if verdict is Verdict.NEUTRAL and pred.predicted in ("entailment", "contradiction"):
        tags.add(TAG_ASSUMPTION_INJECTION)
    if pred.claims_formal and pred.predicted != formal:
        tags.add(TAG_SCOPE_LAUNDERING)
    if verdict in (Verdict.ENTAILMENT, Verdict.CONTRADICTION) and pred.predicted != formal:
        tags.add(TAG_CONSTRAINT_BLINDNESS)
    return tags


def evaluate(
    cases: list[Case],
    predictions: list[Prediction] | None = None,
    abduction_k: int = DEFAULT_K,
    verdicts: dict[str, ClassifiedCase] | None = None,
) -> Report:
    """Score predictions against formal verdicts.

    `verdicts` lets a caller substitute already-computed (or reviewer-
    adjusted) classifications; by default every case is classified here.
    """
    predictions = predictions or []
    case_ids = {c.id for c in cases}
    for p in predictions:
        if p.id not in case_ids:
            raise UnknownCaseId(f"prediction for unknown case id {p.id!r}")
    pred_by_id = {p.id: p for p in predictions}

    if verdicts is None:
        matrix, verdicts = compute_shift(cases)
    else:
        matrix = _empty_shift_matrix()
        for case in cases:
            matrix[case.gold_legal][verdicts[case.id].verdict.value] += 1
    confusion = {v.value: {lbl: 0 for lbl in LABEL_ORDER} for v in DEFINITE_VERDICTS}
    tag_counts = {
        TAG_ASSUMPTION_INJECTION: 0,
        TAG_SCOPE_LAUNDERING: 0,
        TAG_CONSTRAINT_BLINDNESS: 0,
    }
    premise_inconsistent: list[str] = []
    per_case: list[dict] = []
    missing: list[str] = []

    for case in sorted(cases, key=lambda c: c.id):
        cc = verdicts[case.id]
        row: dict = {"id": case.id, "gold_legal": case.gold_legal, "verdict": cc.verdict.value}
        pred = pred_by_id.get(case.id)
        if cc.verdict is Verdict.PREMISE_INCONSISTENT:
            premise_inconsistent.append(case.id)
        if pred is None:
            if predictions:
                missing.append(case.id)
        elif cc.verdict is not Verdict.PREMISE_INCONSISTENT:
            confusion[cc.verdict.value][pred.predicted] += 1
            tags = sorted(tag_failures(cc.verdict, pred))
            for t in tags:
                tag_counts[t] += 1
            row["predicted"] = pred.predicted
            row["tags"] = tags
        else:
            row["predicted"] = pred.predicted
            row["tags"] = []
        if cc.verdict is Verdict.NEUTRAL and case.axiom_pool:
            row["abduction"] = {
                target.value: [
                    {"axiom_ids": s.sorted_ids(), "score": s.score}
                    for s in abduce(case, target, abduction_k).solutions
                ]
                for target in (Verdict.ENTAILMENT, Verdict.CONTRADICTION)
            }
        per_case.append(row)

    total = len(cases)
    e_to_n = matrix["entailment"][Verdict.NEUTRAL.value]
    e_c_confusions = (
        confusion[Verdict.ENTAILMENT.value]["contradiction"]
        + confusion[Verdict.CONTRADICTION.value]["entailment"]
    )
    dominant = None
    best = 0
    for v in DEFINITE_VERDICTS:
        for lbl in LABEL_ORDER:
            n = confusion[v.value][lbl]
            if n > best:
                best = n
                dominant = f"{v.value}->{lbl}"
    aggregates = {
        "total_cases": total,
        "matched_predictions": sum(
            1 for c in cases if c.id in pred_by_id and verdicts[c.id].verdict is not Verdict.PREMISE_INCONSISTENT
        ),
        "entailment_to_neutral_shift": (e_to_n / total) if total else 0.0,
        "dominant_confusion_cell": dominant,
        "entailment_contradiction_confusions": e_c_confusions,
        "tag_counts": tag_counts,
        "missing_predictions": sorted(missing),
    }
    return Report(matrix, confusion, premise_inconsistent, per_case, aggregates)


@dataclass
class RewardResult:
    reward: int
    required_axioms: AbductionResult | None = None


def reward_signal(case: Case, claimed: str, k: int = DEFAULT_K) -> RewardResult:
    """Formal-verification reward for an external claim about a case.

    +1 when the claim matches the computed verdict; -1 for a definite claim
    on a formally neutral case, together with the minimal axiom sets that
    would have been needed to ground it; 0 otherwise.
    """
    cc = classify(case.premise_forms, case.hypothesis_form, case.id)
    if cc.verdict is Verdict.PREMISE_INCONSISTENT:
        return RewardResult(0)
    if claimed == cc.verdict.value.lower():
        return RewardResult(1)
    if cc.verdict is Verdict.NEUTRAL and claimed in ("entailment", "contradiction"):
        target = Verdict.ENTAILMENT if claimed == "entailment" else Verdict.CONTRADICTION
        return RewardResult(-1, abduce(case, target, k))
    return RewardResult(0)
