"""Interchange format: newline-delimited JSON cases and predictions.

Each case carries its clause texts for display, pre-formalized formulas in
the concrete grammar, the annotators' legal label, and a candidate axiom
pool for abduction.  Loading is all-or-nothing with line-accurate errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .abduction import Axiom
from .formulas import ArithFormError, Formula
from .parser import FormulaSyntaxError, parse

GOLD_LABELS = ("entailment", "contradiction", "neutral")
AXIOM_SOURCES = ("background-law", "context", "custom")


class DatasetError(ValueError):
    pass


class ParseError(DatasetError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {reason}")


class DuplicateId(DatasetError):
    def __init__(self, line_no: int, case_id: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: duplicate id {case_id!r}")


class UnknownCaseId(DatasetError):
    pass


@dataclass
class Case:
    id: str
    premise_text: str
    premise_forms: list[Formula]
    hypothesis_text: str
    hypothesis_form: Formula
    gold_legal: str
    axiom_pool: list[Axiom] = field(default_factory=list)


@dataclass
class Prediction:
    id: str
    predicted: str
    claims_formal: bool
    rationale: str = ""


def _parse_form(text, line_no: int, where: str) -> Formula:
    if not isinstance(text, str):
        raise ParseError(line_no, f"{where} must be a string")
    try:
        return parse(text)
    except (FormulaSyntaxError, ArithFormError) as exc:
        raise ParseError(line_no, f"{where}: {exc}") from exc


def load_dataset(path: str | Path) -> list[Case]:
    cases: list[Case] = []
    seen: set[str] = set()
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            rec = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(line_no, f"bad JSON: {exc}") from exc
        if not isinstance(rec, dict):
            raise ParseError(line_no, "record must be an object")
        try:
            case_id = rec["id"]
            premise_text = rec["premise_text"]
            premise_forms = rec["premise_forms"]
            hypothesis_text = rec["hypothesis_text"]
            hypothesis_form = rec["hypothesis_form"]
            gold = rec["gold_legal"]
        except KeyError as exc:
            raise ParseError(line_no, f"missing field {exc.args[0]}") from exc
        if case_id in seen:
            raise DuplicateId(line_no, case_id)
        seen.add(case_id)
        if gold not in GOLD_LABELS:
            raise ParseError(line_no, f"gold_legal must be one of {GOLD_LABELS}, got {gold!r}")
        if not isinstance(premise_forms, list):
            raise ParseError(line_no, "premise_forms must be an array")
        forms = [_parse_form(t, line_no, f"premise_forms[{i}]") for i, t in enumerate(premise_forms)]
        hyp = _parse_form(hypothesis_form, line_no, "hypothesis_form")
        pool: list[Axiom] = []
        pool_ids: set[str] = set()
        for i, ax in enumerate(rec.get("axiom_pool", [])):
            try:
                ax_id, form, gloss, source = ax["id"], ax["form"], ax["gloss"], ax["source"]
            except KeyError as exc:
                raise ParseError(line_no, f"axiom_pool[{i}] missing field {exc.args[0]}") from exc
            if ax_id in pool_ids:
                raise ParseError(line_no, f"axiom_pool[{i}] duplicate axiom id {ax_id!r}")
            pool_ids.add(ax_id)
            if source not in AXIOM_SOURCES:
                raise ParseError(line_no, f"axiom_pool[{i}] source must be one of {AXIOM_SOURCES}")
            pool.append(Axiom(ax_id, _parse_form(form, line_no, f"axiom_pool[{i}].form"), gloss, source))
        cases.append(Case(case_id, premise_text, forms, hypothesis_text, hyp, gold, pool))
    return cases


def load_predictions(path: str | Path) -> list[Prediction]:
    preds: list[Prediction] = []
    seen: set[str] = set()
    for line_no, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            rec = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(line_no, f"bad JSON: {exc}") from exc
        try:
            pid, predicted = rec["id"], rec["predicted"]
        except KeyError as exc:
            raise ParseError(line_no, f"missing field {exc.args[0]}") from exc
        if pid in seen:
            raise DuplicateId(line_no, pid)
        seen.add(pid)
        if predicted not in GOLD_LABELS:
            raise ParseError(line_no, f"predicted must be one of {GOLD_LABELS}, got {predicted!r}")
        preds.append(
            Prediction(pid, predicted, bool(rec.get("claims_formal", False)), rec.get("rationale", ""))
        )
    return preds
