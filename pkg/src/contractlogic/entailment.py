"""Strict three-way entailment over contract clauses.

Entailment holds iff premise AND NOT hypothesis is unsatisfiable;
contradiction iff premise AND hypothesis is unsatisfiable; otherwise the
hypothesis is neutral and both countermodels are surfaced as witnesses.
An unsatisfiable premise is reported explicitly rather than vacuously
entailing everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cnf import tseitin
from .formulas import TRUE, Formula, Model, Not, conj, desugar
from .solver import SatResult, solve


class Verdict(Enum):
    ENTAILMENT = "Entailment"
    CONTRADICTION = "Contradiction"
    NEUTRAL = "Neutral"
    PREMISE_INCONSISTENT = "PremiseInconsistent"


@dataclass
class ClassifiedCase:
    case_id: str
    verdict: Verdict
    # present only for Neutral: model of P & H and model of P & !H
    witness_h: Model | None = None
    witness_not_h: Model | None = None


def sat(f: Formula) -> SatResult:
    """Satisfiability of a formula in the contract fragment."""
    return solve(tseitin(desugar(f)))


def classify(premise: list[Formula], hypothesis: Formula, case_id: str = "") -> ClassifiedCase:
    p = conj(premise) if premise else TRUE
    if not sat(p).is_sat:
        return ClassifiedCase(case_id, Verdict.PREMISE_INCONSISTENT)
    r_not_h = sat(conj([p, Not(hypothesis)]))
    if not r_not_h.is_sat:
        return ClassifiedCase(case_id, Verdict.ENTAILMENT)
    r_h = sat(conj([p, hypothesis]))
    if not r_h.is_sat:
        return ClassifiedCase(case_id, Verdict.CONTRADICTION)
    return ClassifiedCase(case_id, Verdict.NEUTRAL, witness_h=r_h.model, witness_not_h=r_not_h.model)
