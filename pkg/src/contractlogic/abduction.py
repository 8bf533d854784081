"""Minimal-axiom abduction: which candidate assumptions, added to the
premise, turn a neutral case into a definite one.

Solutions are the subset-minimal axiom sets A from the case's candidate
pool with premise AND A satisfiable (no explanation by contradiction) and
premise AND A deciding the hypothesis in the requested direction.
Enumeration is exhaustive up to the cardinality bound: increasing subset
size with superset pruning against already-found solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .entailment import Verdict, classify, sat
from .formulas import Formula, Not, conj, node_count
from .parser import pretty

MAX_POOL = 24
DEFAULT_K = 3

AXIOM_WEIGHT = 100  # cardinality dominates per-axiom structural size

REVIEW_QUESTION = (
    "Does standard contract law or the contractual context implicitly establish this assumption?"
)


class AbductionError(ValueError):
    pass


class NotNeutral(AbductionError):
    pass


class PoolTooLarge(AbductionError):
    pass


class UnknownAxiomId(AbductionError):
    pass


@dataclass(frozen=True)
class Axiom:
    id: str
    formula: Formula
    gloss: str
    source: str  # background-law | context | custom


@dataclass(frozen=True)
class Solution:
    axiom_ids: frozenset[str]
    score: int

    def sorted_ids(self) -> list[str]:
        return sorted(self.axiom_ids)


@dataclass
class AbductionResult:
    case_id: str
    target: Verdict
    solutions: list[Solution]
    exhaustive_up_to: int


@dataclass
class MinimalPair:
    case_id: str
    axiom_ids: list[str]
    modified_hypothesis: Formula


def score(axioms: list[Axiom]) -> int:
    if not axioms:
        raise AbductionError("score requires a nonempty axiom list")
    return AXIOM_WEIGHT * len(axioms) + sum(node_count(a.formula) for a in axioms)


def abduce(case, target: Verdict, k: int = DEFAULT_K) -> AbductionResult:
    """Enumerate all subset-minimal pool subsets of size <= k that shift the
    case's verdict to `target`."""
    if target not in (Verdict.ENTAILMENT, Verdict.CONTRADICTION):
        raise AbductionError(f"target must be Entailment or Contradiction, got {target}")
    if k < 1:
        raise AbductionError("cardinality bound must be >= 1")
    if len(case.axiom_pool) > MAX_POOL:
        raise PoolTooLarge(f"pool of {len(case.axiom_pool)} exceeds {MAX_POOL}")
    if classify(case.premise_forms, case.hypothesis_form).verdict is not Verdict.NEUTRAL:
        raise NotNeutral(f"case {case.id} is not Neutral")

    by_id = {a.id: a for a in case.axiom_pool}
    goal = case.hypothesis_form if target is Verdict.CONTRADICTION else Not(case.hypothesis_form)
    found: list[frozenset[str]] = []
    solutions: list[Solution] = []
    ids = sorted(by_id)
    for size in range(1, min(k, len(ids)) + 1):
        for combo in combinations(ids, size):
            subset = frozenset(combo)
            if any(prev <= subset for prev in found):
                continue
            axioms = [by_id[i] for i in combo]
            forms = case.premise_forms + [a.formula for a in axioms]
            if not sat(conj(forms)).is_sat:
                continue  # explanation by contradiction is no explanation
            if sat(conj(forms + [goal])).is_sat:
                continue
            found.append(subset)
            solutions.append(Solution(subset, score(axioms)))
    solutions.sort(key=lambda s: (s.score, s.sorted_ids()))
    return AbductionResult(case.id, target, solutions, exhaustive_up_to=k)


def build_minimal_pair(case, axiom_ids) -> MinimalPair:
    """Rewrite the hypothesis so the missing assumptions are explicit:
    H becomes (conjunction of A) -> H."""
    from .formulas import Implies

    by_id = {a.id: a for a in case.axiom_pool}
    ordered = sorted(axiom_ids)
    if not ordered:
        raise AbductionError("minimal pair requires at least one axiom")
    missing = [i for i in ordered if i not in by_id]
    if missing:
        raise UnknownAxiomId(f"unknown axiom ids: {', '.join(missing)}")
    antecedent = conj([by_id[i].formula for i in ordered])
    modified = Implies(antecedent, case.hypothesis_form)
    return MinimalPair(case.id, ordered, modified)


def review_question(case, axiom_ids) -> str:
    """Deterministic reviewer prompt: the fixed question plus one line per
    axiom (gloss and formula), in id order."""
    by_id = {a.id: a for a in case.axiom_pool}
    ordered = sorted(axiom_ids)
    missing = [i for i in ordered if i not in by_id]
    if missing:
        raise UnknownAxiomId(f"unknown axiom ids: {', '.join(missing)}")
    lines = [REVIEW_QUESTION]
    for i in ordered:
        a = by_id[i]
        gloss = " ".join(a.gloss.split())
        lines.append(f"  - [{a.id}] {gloss}: {pretty(a.formula)}")
    return "\n".join(lines)
