"""Complete SAT procedure for clause sets over propositional and
difference-logic atoms.

Lazy theory integration: DPLL with unit propagation and chronological
backtracking finds a full Boolean assignment; the arithmetic literals it
asserts are then checked for a negative cycle.  An infeasible assignment
yields a blocking clause (negation of the cycle's contributing literals)
and the search restarts.  Blocking clauses range over a finite atom set
and never repeat, so the loop terminates.

Branching is fixed (lowest variable index first, true before false) so
results are fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cnf import ClauseSet
from .diffgraph import DiffGraph, check_negative_cycle, potentials
from .formulas import ZERO, ArithAtom, Model, PropAtom

DECISION_BUDGET = 10**7


class DecisionBudgetExceeded(RuntimeError):
    pass


class Status(Enum):
    SAT = "sat"
    UNSAT = "unsat"


@dataclass
class SatResult:
    status: Status
    model: Model | None = None

    @property
    def is_sat(self) -> bool:
        return self.status is Status.SAT


def solve(cs: ClauseSet, budget: int = DECISION_BUDGET) -> SatResult:
    clauses = [list(c) for c in cs.clauses]
    counter = [0]
    while True:
        assign = _bool_search(clauses, cs.num_vars, counter, budget)
        if assign is None:
            return SatResult(Status.UNSAT)
        graph = _assert_arith(cs, assign)
        cycle = check_negative_cycle(graph)
        if cycle is None:
            return SatResult(Status.SAT, _build_model(cs, assign, graph))
        clauses.append(_blocking_clause(cycle, graph))


def _assert_arith(cs: ClauseSet, assign: list[bool | None]) -> DiffGraph:
    g = DiffGraph()
    for v in range(1, cs.num_vars + 1):
        atom = cs.atom_table[v]
        if not isinstance(atom, ArithAtom):
            continue
        if assign[v]:
            # x - y <= c
            g.add_constraint(atom.left, atom.right, atom.bound, (v, True))
        else:
            # not(x - y <= c)  =>  y - x <= -c - 1
            g.add_constraint(atom.right, atom.left, -atom.bound - 1, (v, False))
    return g


def _blocking_clause(cycle, graph: DiffGraph) -> list[int]:
    # greedily drop conflict literals while the remainder stays infeasible
    conflict = list(cycle)
    for e in list(conflict):
        trimmed = [x for x in conflict if x is not e]
        if check_negative_cycle(DiffGraph(trimmed)) is not None:
            conflict = trimmed
    lits = []
    for e in conflict:
        var, positive = e.tag
        lits.append(-var if positive else var)
    return sorted(lits, key=abs)


def _build_model(cs: ClauseSet, assign: list[bool | None], graph: DiffGraph) -> Model:
    model = Model()
    for v in range(1, cs.num_vars + 1):
        atom = cs.atom_table[v]
        if isinstance(atom, PropAtom):
            model.bools[atom] = bool(assign[v])
    vals = potentials(graph)
    for name, value in vals.items():
        if name != ZERO:
            model.ints[name] = value
    return model


def _bool_search(
    clauses: list[list[int]],
    num_vars: int,
    counter: list[int],
    budget: int,
) -> list[bool | None] | None:
    """DPLL returning a full satisfying assignment (index 1..num_vars) or None."""
    assign: list[bool | None] = [None] * (num_vars + 1)
    trail: list[int] = []
    # (trail length before the decision, decided var, False already tried)
    decisions: list[list] = []

    def set_lit(lit: int) -> None:
        assign[abs(lit)] = lit > 0
        trail.append(abs(lit))

    def propagate() -> bool:
        changed = True
        while changed:
            changed = False
            for cl in clauses:
                unit = None
                unassigned = 0
                satisfied = False
                for lit in cl:
                    val = assign[abs(lit)]
                    if val is None:
                        unassigned += 1
                        unit = lit
                        if unassigned > 1:
                            break
                    elif val == (lit > 0):
                        satisfied = True
                        break
                if satisfied or unassigned > 1:
                    continue
                if unassigned == 0:
                    return False
                set_lit(unit)
                changed = True
        return True

    def backtrack() -> bool:
        while decisions:
            mark, var, flipped = decisions[-1]
            while len(trail) > mark:
                assign[trail.pop()] = None
            if flipped:
                decisions.pop()
                continue
            decisions[-1][2] = True
            counter[0] += 1
            if counter[0] > budget:
                raise DecisionBudgetExceeded(f"exceeded {budget} decisions")
            set_lit(-var)
            return True
        return False

    while True:
        if propagate():
            var = next((v for v in range(1, num_vars + 1) if assign[v] is None), None)
            if var is None:
                return assign
            counter[0] += 1
            if counter[0] > budget:
                raise DecisionBudgetExceeded(f"exceeded {budget} decisions")
            decisions.append([len(trail), var, False])
            set_lit(var)
        elif not backtrack():
            return None
