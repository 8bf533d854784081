"""Reviewer-loop state: pending axiom questions per neutral case, yes/no
answers, and an append-only event log that fully reconstructs state on
restart.

A *yes* conjoins the accepted axioms to the premise and re-classifies;
the result must match the question's target or the service is broken.
A *no* retires that solution; a case whose every solution was answered
no (or that never had one) is genuinely underspecified.
"""

from __future__ import annotations

import hashlib
import json
import os
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .abduction import DEFAULT_K, abduce, review_question
from .dataset import Case
from .entailment import ClassifiedCase, Verdict, classify
from .harness import Report, evaluate


class ReviewError(Exception):
    pass


class ReplayError(ReviewError):
    def __init__(self, line_no: int, reason: str):
        self.line_no = line_no
        super().__init__(f"event log line {line_no}: {reason}")


class UnknownCase(ReviewError):
    pass


class NotPending(ReviewError):
    pass


class UnknownSolution(ReviewError):
    pass


class ConflictingAnswer(ReviewError):
    pass


class InvariantBreach(RuntimeError):
    """An accepted axiom set failed to reproduce its target verdict."""


AUTO_CLASSIFIED = "AutoClassified"
NEEDS_REVIEW = "NeedsReview"
RESOLVED_ENTAILMENT = "ResolvedEntailment"
RESOLVED_CONTRADICTION = "ResolvedContradiction"
GENUINELY_UNDERSPECIFIED = "GenuinelyUnderspecified"


@dataclass
class PendingQuestion:
    target: Verdict
    axiom_ids: tuple[str, ...]  # sorted
    score: int
    question: str


@dataclass
class CaseReviewState:
    case: Case
    classified: ClassifiedCase
    status: str
    pending: list[PendingQuestion] = field(default_factory=list)
    accepted: list[str] = field(default_factory=list)
    answered: dict[frozenset[str], str] = field(default_factory=dict)

    def effective_verdict(self) -> Verdict:
        if self.status == RESOLVED_ENTAILMENT:
            return Verdict.ENTAILMENT
        if self.status == RESOLVED_CONTRADICTION:
            return Verdict.CONTRADICTION
        return self.classified.verdict


class ReviewService:
    """Single-writer review state over a dataset plus an event log."""

    def __init__(self, cases: list[Case], log_path: str | Path, k: int = DEFAULT_K):
        self.cases = {c.id: c for c in cases}
        self.log_path = Path(log_path)
        self.k = k
        self.lock = threading.Lock()
        self.states: dict[str, CaseReviewState] = {}
        for case in sorted(cases, key=lambda c: c.id):
            self.states[case.id] = self._initial_state(case)
        self._replay()

    def _initial_state(self, case: Case) -> CaseReviewState:
        cc = classify(case.premise_forms, case.hypothesis_form, case.id)
        if cc.verdict is not Verdict.NEUTRAL:
            return CaseReviewState(case, cc, AUTO_CLASSIFIED)
        pending: list[PendingQuestion] = []
        if case.axiom_pool:
            for target in (Verdict.ENTAILMENT, Verdict.CONTRADICTION):
                for sol in abduce(case, target, self.k).solutions:
                    ids = tuple(sol.sorted_ids())
                    pending.append(
                        PendingQuestion(target, ids, sol.score, review_question(case, ids))
                    )
        status = NEEDS_REVIEW if pending else GENUINELY_UNDERSPECIFIED
        return CaseReviewState(case, cc, status, pending)

    # -- event log -----------------------------------------------------

    def _replay(self) -> None:
        if not self.log_path.exists():
            return
        for line_no, raw in enumerate(
            self.log_path.read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not raw.strip():
                raise ReplayError(line_no, "blank line in event log")
            try:
                ev = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ReplayError(line_no, f"bad JSON: {exc}") from exc
            if ev.get("type") != "answer":
                raise ReplayError(line_no, f"unknown event type {ev.get('type')!r}")
            try:
                self._apply(ev["case_id"], ev["axiom_set"], ev["answer"], ev["reviewer"])
            except KeyError as exc:
                raise ReplayError(line_no, f"missing field {exc.args[0]}") from exc
            except ReviewError as exc:
                raise ReplayError(line_no, str(exc)) from exc

    def _append(self, event: dict) -> None:
        line = json.dumps(event, sort_keys=True) + "\n"
        with open(self.log_path, "a", encoding="utf-8") as fh:
            fh.write(line)
            fh.flush()
            os.fsync(fh.fileno())

    # -- mutations -----------------------------------------------------

    def answer(self, case_id: str, axiom_set: list[str], answer: str, reviewer: str) -> CaseReviewState:
        if answer not in ("yes", "no"):
            raise ReviewError(f"answer must be yes or no, got {answer!r}")
        with self.lock:
            self._validate(case_id, axiom_set)
            event = {
                "timestamp": datetime.now(timezone.utc).isoformat(),
                "type": "answer",
                "case_id": case_id,
                "axiom_set": sorted(axiom_set),
                "answer": answer,
                "reviewer": reviewer,
            }
            self._append(event)  # durable before the state mutates
            return self._apply(case_id, axiom_set, answer, reviewer)

    def _validate(self, case_id: str, axiom_set: list[str]) -> None:
        state = self.states.get(case_id)
        if state is None:
            raise UnknownCase(f"unknown case id {case_id!r}")
        if state.status != NEEDS_REVIEW:
            raise NotPending(f"case {case_id} is {state.status}, not NeedsReview")
        key = frozenset(axiom_set)
        if key in state.answered:
            raise ConflictingAnswer(f"axiom set {sorted(key)} already answered")
        if not any(frozenset(q.axiom_ids) == key for q in state.pending):
            raise UnknownSolution(f"axiom set {sorted(key)} is not a pending solution")

    def _apply(self, case_id: str, axiom_set: list[str], answer: str, reviewer: str) -> CaseReviewState:
        self._validate(case_id, axiom_set)
        state = self.states[case_id]
        key = frozenset(axiom_set)
        question = next(q for q in state.pending if frozenset(q.axiom_ids) == key)
        state.answered[key] = answer
        if answer == "no":
            state.pending = [q for q in state.pending if frozenset(q.axiom_ids) != key]
            if not state.pending:
                state.status = GENUINELY_UNDERSPECIFIED
            return state
        # yes: conjoin accepted axioms to the premise and re-check
        case = state.case
        by_id = {a.id: a for a in case.axiom_pool}
        forms = case.premise_forms + [by_id[i].formula for i in question.axiom_ids]
        recheck = classify(forms, case.hypothesis_form, case_id)
        if recheck.verdict is not question.target:
            raise InvariantBreach(
                f"case {case_id}: accepted axioms {list(question.axiom_ids)} yield "
                f"{recheck.verdict.value}, expected {question.target.value}"
            )
        state.accepted = list(question.axiom_ids)
        state.pending = []
        state.status = (
            RESOLVED_ENTAILMENT
            if question.target is Verdict.ENTAILMENT
            else RESOLVED_CONTRADICTION
        )
        return state

    # -- views ---------------------------------------------------------

    def effective_classified(self) -> dict[str, ClassifiedCase]:
        out = {}
        for cid, st in self.states.items():
            v = st.effective_verdict()
            if v is st.classified.verdict:
                out[cid] = st.classified
            else:
                out[cid] = ClassifiedCase(cid, v)
        return out

    def report(self) -> Report:
        cases = sorted(self.cases.values(), key=lambda c: c.id)
        rep = evaluate(cases, None, self.k, verdicts=self.effective_classified())
        counts = {v.value: 0 for v in Verdict}
        statuses: dict[str, int] = {}
        for st in self.states.values():
            counts[st.effective_verdict().value] += 1
            statuses[st.status] = statuses.get(st.status, 0) + 1
        rep.aggregates["verdict_counts"] = counts
        rep.aggregates["status_counts"] = dict(sorted(statuses.items()))
        return rep

    def snapshot(self) -> dict:
        """Deterministic view of the whole review state."""
        out = {}
        for cid in sorted(self.states):
            st = self.states[cid]
            out[cid] = {
                "status": st.status,
                "verdict": st.effective_verdict().value,
                "accepted": st.accepted,
                "pending": [
                    {
                        "target": q.target.value,
                        "axiom_set": list(q.axiom_ids),
                        "score": q.score,
                    }
                    for q in st.pending
                ],
                "answered": {
                    ",".join(sorted(k)): v for k, v in sorted(st.answered.items(), key=lambda kv: sorted(kv[0]))
                },
            }
        return out

    def snapshot_hash(self) -> str:
        blob = json.dumps(self.snapshot(), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()
