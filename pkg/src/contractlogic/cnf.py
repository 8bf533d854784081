"""Equisatisfiable CNF via Tseitin encoding.

Input must be desugared (no Iff, arithmetic atoms in ``<=`` form only).
Each distinct source atom gets a variable; every internal connective gets a
fresh definition variable, tagged as such in the atom table.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import (
    And,
    ArithAtom,
    FalseConst,
    Formula,
    Implies,
    Not,
    Or,
    PropAtom,
    TrueConst,
)
from .parser import pretty

FRESH = "<tseitin>"


@dataclass
class ClauseSet:
    num_vars: int = 0
    clauses: list[list[int]] = field(default_factory=list)
    # var index -> PropAtom | ArithAtom | FRESH marker
    atom_table: dict[int, object] = field(default_factory=dict)
    var_of_atom: dict[object, int] = field(default_factory=dict)

    def new_var(self, atom: object) -> int:
        self.num_vars += 1
        self.atom_table[self.num_vars] = atom
        if atom is not FRESH:
            self.var_of_atom[atom] = self.num_vars
        return self.num_vars

    def var_for(self, atom) -> int:
        v = self.var_of_atom.get(atom)
        if v is None:
            v = self.new_var(atom)
        return v

    def add(self, clause: list[int]) -> None:
        self.clauses.append(clause)

    def to_dimacs(self) -> str:
        lines = []
        for v in range(1, self.num_vars + 1):
            atom = self.atom_table[v]
            name = FRESH if atom is FRESH else pretty(atom)
            lines.append(f"c {v} {name}")
        lines.append(f"p cnf {self.num_vars} {len(self.clauses)}")
        for cl in self.clauses:
            lines.append(" ".join(str(l) for l in cl) + " 0")
        return "\n".join(lines) + "\n"


def _simplify(f: Formula) -> Formula:
    """Constant-fold true/false so the encoder only sees them at the root."""
    if isinstance(f, Not):
        c = _simplify(f.child)
        if isinstance(c, TrueConst):
            return FalseConst()
        if isinstance(c, FalseConst):
            return TrueConst()
        return Not(c)
    if isinstance(f, And):
        kids = []
        for c in map(_simplify, f.children):
            if isinstance(c, FalseConst):
                return FalseConst()
            if not isinstance(c, TrueConst):
                kids.append(c)
        if not kids:
            return TrueConst()
        return kids[0] if len(kids) == 1 else And(tuple(kids))
    if isinstance(f, Or):
        kids = []
        for c in map(_simplify, f.children):
            if isinstance(c, TrueConst):
                return TrueConst()
            if not isinstance(c, FalseConst):
                kids.append(c)
        if not kids:
            return FalseConst()
        return kids[0] if len(kids) == 1 else Or(tuple(kids))
    if isinstance(f, Implies):
        a, b = _simplify(f.lhs), _simplify(f.rhs)
        if isinstance(a, FalseConst) or isinstance(b, TrueConst):
            return TrueConst()
        if isinstance(a, TrueConst):
            return b
        if isinstance(b, FalseConst):
            return Not(a)
        return Implies(a, b)
    return f


def tseitin(f: Formula) -> ClauseSet:
    """Encode a desugared formula as an equisatisfiable clause set."""
    cs = ClauseSet()
    g = _simplify(f)
    if isinstance(g, TrueConst):
        return cs
    if isinstance(g, FalseConst):
        cs.add([])
        return cs
    root = _encode(g, cs)
    cs.add([root])
    return cs


def _encode(f: Formula, cs: ClauseSet) -> int:
    """Return a literal equivalent to f, adding definition clauses."""
    if isinstance(f, (PropAtom, ArithAtom)):
        return cs.var_for(f)
    if isinstance(f, Not):
        return -_encode(f.child, cs)
    if isinstance(f, And):
        lits = [_encode(c, cs) for c in f.children]
        v = cs.new_var(FRESH)
        for l in lits:
            cs.add([-v, l])
        cs.add([v] + [-l for l in lits])
        return v
    if isinstance(f, Or):
        lits = [_encode(c, cs) for c in f.children]
        v = cs.new_var(FRESH)
        for l in lits:
            cs.add([-l, v])
        cs.add([-v] + lits)
        return v
    if isinstance(f, Implies):
        a = _encode(f.lhs, cs)
        b = _encode(f.rhs, cs)
        v = cs.new_var(FRESH)
        cs.add([-v, -a, b])
        cs.add([v, a])
        cs.add([v, -b])
        return v
    raise TypeError(f"tseitin input must be desugared, got {f!r}")
