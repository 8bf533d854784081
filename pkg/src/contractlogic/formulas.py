"""AST for the contract-logic language.

Quantifier-free, ground formulas: propositional atoms over named predicates
with constant arguments, plus integer difference constraints of the form
``x - y <= c`` (at most two variables, unit coefficients).  All nodes are
immutable and hashable; structural equality is node-by-node.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ZERO = "zero"

# comparison operators accepted in arithmetic atoms
ARITH_OPS = ("<=", "<", ">=", ">", "=", "!=")


class FragmentError(ValueError):
    """Formula falls outside the supported fragment."""


class ArithFormError(FragmentError):
    """Arithmetic atom is not in difference form (unit coefficients, <=2 vars)."""


@dataclass(frozen=True)
class Formula:
    pass


@dataclass(frozen=True)
class PropAtom(Formula):
    predicate: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class ArithAtom(Formula):
    """Difference constraint ``left - right OP bound`` (integers).

    ``right`` may be the distinguished variable ``zero``, giving single
    variable bounds like ``x <= 30``.
    """

    left: str
    right: str
    op: str
    bound: int

    def __post_init__(self) -> None:
        if self.op not in ARITH_OPS:
            raise ArithFormError(f"unknown comparison operator {self.op!r}")


@dataclass(frozen=True)
class TrueConst(Formula):
    pass


@dataclass(frozen=True)
class FalseConst(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    children: tuple[Formula, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("And requires >=2 children")


@dataclass(frozen=True)
class Or(Formula):
    children: tuple[Formula, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("Or requires >=2 children")


@dataclass(frozen=True)
class Implies(Formula):
    lhs: Formula
    rhs: Formula


@dataclass(frozen=True)
class Iff(Formula):
    lhs: Formula
    rhs: Formula


TRUE = TrueConst()
FALSE = FalseConst()


def conj(parts: list[Formula]) -> Formula:
    """Conjunction helper: flattens nested Ands, handles 0/1 parts."""
    flat: list[Formula] = []
    for p in parts:
        if isinstance(p, And):
            flat.extend(p.children)
        else:
            flat.append(p)
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def disj(parts: list[Formula]) -> Formula:
    """Disjunction helper: flattens nested Ors, handles 0/1 parts."""
    flat: list[Formula] = []
    for p in parts:
        if isinstance(p, Or):
            flat.extend(p.children)
        else:
            flat.append(p)
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def node_count(f: Formula) -> int:
    """Number of AST nodes; atoms and connectives each count 1."""
    if isinstance(f, (PropAtom, ArithAtom, TrueConst, FalseConst)):
        return 1
    if isinstance(f, Not):
        return 1 + node_count(f.child)
    if isinstance(f, (And, Or)):
        return 1 + sum(node_count(c) for c in f.children)
    if isinstance(f, (Implies, Iff)):
        return 1 + node_count(f.lhs) + node_count(f.rhs)
    raise TypeError(f"not a Formula: {f!r}")


def prop_atoms(f: Formula) -> set[PropAtom]:
    out: set[PropAtom] = set()
    _walk_atoms(f, out, None)
    return out


def arith_vars(f: Formula) -> set[str]:
    """All arithmetic variables occurring in f (excluding ``zero``)."""
    atoms: set[ArithAtom] = set()
    _walk_atoms(f, None, atoms)
    vs = {a.left for a in atoms} | {a.right for a in atoms}
    vs.discard(ZERO)
    return vs


def arith_atoms(f: Formula) -> set[ArithAtom]:
    atoms: set[ArithAtom] = set()
    _walk_atoms(f, None, atoms)
    return atoms


def _walk_atoms(f: Formula, props: set | None, ariths: set | None) -> None:
    if isinstance(f, PropAtom):
        if props is not None:
            props.add(f)
    elif isinstance(f, ArithAtom):
        if ariths is not None:
            ariths.add(f)
    elif isinstance(f, Not):
        _walk_atoms(f.child, props, ariths)
    elif isinstance(f, (And, Or)):
        for c in f.children:
            _walk_atoms(c, props, ariths)
    elif isinstance(f, (Implies, Iff)):
        _walk_atoms(f.lhs, props, ariths)
        _walk_atoms(f.rhs, props, ariths)


@dataclass
class Model:
    """Assignment of prop atoms to booleans and arithmetic variables to ints."""

    bools: dict[PropAtom, bool] = field(default_factory=dict)
    ints: dict[str, int] = field(default_factory=dict)

    def int_value(self, name: str) -> int:
        if name == ZERO:
            return 0
        return self.ints.get(name, 0)


def evaluate(f: Formula, model: Model) -> bool:
    """Evaluate f under a total model (missing prop atoms default to False)."""
    if isinstance(f, TrueConst):
        return True
    if isinstance(f, FalseConst):
        return False
    if isinstance(f, PropAtom):
        return model.bools.get(f, False)
    if isinstance(f, ArithAtom):
        d = model.int_value(f.left) - model.int_value(f.right)
        c = f.bound
        if f.op == "<=":
            return d <= c
        if f.op == "<":
            return d < c
        if f.op == ">=":
            return d >= c
        if f.op == ">":
            return d > c
        if f.op == "=":
            return d == c
        return d != c
    if isinstance(f, Not):
        return not evaluate(f.child, model)
    if isinstance(f, And):
        return all(evaluate(c, model) for c in f.children)
    if isinstance(f, Or):
        return any(evaluate(c, model) for c in f.children)
    if isinstance(f, Implies):
        return (not evaluate(f.lhs, model)) or evaluate(f.rhs, model)
    if isinstance(f, Iff):
        return evaluate(f.lhs, model) == evaluate(f.rhs, model)
    raise TypeError(f"not a Formula: {f!r}")


def desugar(f: Formula) -> Formula:
    """Normalize before CNF: eliminate Iff and reduce every arithmetic atom
    to ``x - y <= c`` with integer semantics.

    Rewrites: ``<`` shifts the bound down; ``>=``/``>`` flip the difference;
    ``=`` splits into two ``<=``; ``!=`` becomes a disjunction of the two
    strict sides.  Logical equivalence is preserved.
    """
    if isinstance(f, (PropAtom, TrueConst, FalseConst)):
        return f
    if isinstance(f, ArithAtom):
        x, y, c = f.left, f.right, f.bound
        le = lambda a, b, k: ArithAtom(a, b, "<=", k)
        if f.op == "<=":
            return f
        if f.op == "<":
            return le(x, y, c - 1)
        if f.op == ">=":
            return le(y, x, -c)
        if f.op == ">":
            return le(y, x, -c - 1)
        if f.op == "=":
            return And((le(x, y, c), le(y, x, -c)))
        # !=: (x - y < c) or (x - y > c)
        return Or((le(x, y, c - 1), le(y, x, -c - 1)))
    if isinstance(f, Not):
        return Not(desugar(f.child))
    if isinstance(f, And):
        return And(tuple(desugar(c) for c in f.children))
    if isinstance(f, Or):
        return Or(tuple(desugar(c) for c in f.children))
    if isinstance(f, Implies):
        return Implies(desugar(f.lhs), desugar(f.rhs))
    if isinstance(f, Iff):
        a, b = desugar(f.lhs), desugar(f.rhs)
        return And((Implies(a, b), Implies(b, a)))
    raise TypeError(f"not a Formula: {f!r}")
