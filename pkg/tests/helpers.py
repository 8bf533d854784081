"""Independent oracles and random-formula generation for the test suite.

The satisfiability oracle never touches the solver: it enumerates the
truth vectors of arithmetic atoms achievable over a bounded integer grid
(numpy), then checks each against every propositional assignment by
direct formula evaluation.

With at most two integer variables plus the zero vertex and bounds |c| <= 41
after strictness shifts, any consistent difference system has a witness
within +-168 of zero, so a [-256, 256] grid decides integer feasibility
exactly.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from contractlogic.formulas import (
    ZERO,
    And,
    ArithAtom,
    FalseConst,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    PropAtom,
    TrueConst,
    arith_atoms,
    prop_atoms,
)

ORACLE_LO, ORACLE_HI = -256, 256


def eval_with_atom_map(f: Formula, amap: dict) -> bool:
    """Evaluate with every atom (prop or arith) given a fixed truth value."""
    if isinstance(f, TrueConst):
        return True
    if isinstance(f, FalseConst):
        return False
    if isinstance(f, (PropAtom, ArithAtom)):
        return amap[f]
    if isinstance(f, Not):
        return not eval_with_atom_map(f.child, amap)
    if isinstance(f, And):
        return all(eval_with_atom_map(c, amap) for c in f.children)
    if isinstance(f, Or):
        return any(eval_with_atom_map(c, amap) for c in f.children)
    if isinstance(f, Implies):
        return (not eval_with_atom_map(f.lhs, amap)) or eval_with_atom_map(f.rhs, amap)
    if isinstance(f, Iff):
        return eval_with_atom_map(f.lhs, amap) == eval_with_atom_map(f.rhs, amap)
    raise TypeError(f)


def _atom_truth_grids(atoms: list[ArithAtom], int_vars: list[str], lo: int, hi: int):
    """Boolean grid per atom over the integer grid of the (<=2) variables."""
    if len(int_vars) == 0:
        grids = {v: np.array([0]) for v in []}
        shape = (1,)
        vals = {}
    elif len(int_vars) == 1:
        x = np.arange(lo, hi + 1)
        vals = {int_vars[0]: x}
        shape = x.shape
    else:
        x, y = np.meshgrid(np.arange(lo, hi + 1), np.arange(lo, hi + 1), indexing="ij")
        vals = {int_vars[0]: x, int_vars[1]: y}
        shape = x.shape

    def value(name):
        if name == ZERO:
            return np.zeros(shape, dtype=np.int64)
        return vals[name]

    out = []
    for a in atoms:
        d = value(a.left) - value(a.right)
        if a.op == "<=":
            g = d <= a.bound
        elif a.op == "<":
            g = d < a.bound
        elif a.op == ">=":
            g = d >= a.bound
        elif a.op == ">":
            g = d > a.bound
        elif a.op == "=":
            g = d == a.bound
        else:
            g = d != a.bound
        out.append(g.ravel())
    return out


def achievable_arith_vectors(
    atoms: list[ArithAtom], lo: int = ORACLE_LO, hi: int = ORACLE_HI
) -> list[tuple[bool, ...]]:
    """All joint truth vectors of the given arithmetic atoms realizable by
    integer values of their variables in [lo, hi]."""
    if not atoms:
        return [()]
    int_vars = sorted({a.left for a in atoms} | {a.right for a in atoms} - {ZERO})
    int_vars = [v for v in int_vars if v != ZERO]
    assert len(int_vars) <= 2, "oracle supports at most two integer variables"
    grids = _atom_truth_grids(atoms, int_vars, lo, hi)
    # bit-pack the per-point truth vector so unique() works on a 1-D array
    codes = np.zeros(grids[0].shape, dtype=np.int64)
    for i, g in enumerate(grids):
        codes |= g.astype(np.int64) << i
    return [
        tuple(bool(code >> i & 1) for i in range(len(atoms))) for code in np.unique(codes)
    ]


def sat_oracle(f: Formula, lo: int = ORACLE_LO, hi: int = ORACLE_HI) -> bool:
    """Bounded-domain enumeration satisfiability, independent of the solver."""
    props = sorted(prop_atoms(f), key=lambda a: (a.predicate, a.args))
    ariths = sorted(arith_atoms(f), key=lambda a: (a.left, a.right, a.op, a.bound))
    vectors = achievable_arith_vectors(ariths, lo, hi)
    for vec in vectors:
        base = dict(zip(ariths, vec))
        for bits in product([False, True], repeat=len(props)):
            amap = dict(base)
            amap.update(zip(props, bits))
            if eval_with_atom_map(f, amap):
                return True
    return False


def equivalent_on_domain(f: Formula, g: Formula, lo: int = -64, hi: int = 64) -> bool:
    """Same satisfying assignments over the bounded domain: every achievable
    joint atom vector and prop assignment evaluates identically."""
    props = sorted(prop_atoms(f) | prop_atoms(g), key=lambda a: (a.predicate, a.args))
    ariths = sorted(
        arith_atoms(f) | arith_atoms(g), key=lambda a: (a.left, a.right, a.op, a.bound)
    )
    for vec in achievable_arith_vectors(ariths, lo, hi):
        base = dict(zip(ariths, vec))
        for bits in product([False, True], repeat=len(props)):
            amap = dict(base)
            amap.update(zip(props, bits))
            if eval_with_atom_map(f, amap) != eval_with_atom_map(g, amap):
                return False
    return True


def clauseset_sat_oracle(clauses: list[list[int]], num_vars: int) -> bool:
    """Naive recursive splitting on a Boolean clause set; no shared code or
    data structures with the production solver."""

    def reduce(cls: list[list[int]], lit: int):
        out = []
        for cl in cls:
            if lit in cl:
                continue
            trimmed = [l for l in cl if l != -lit]
            if not trimmed:
                return None
            out.append(trimmed)
        return out

    def go(cls: list[list[int]]) -> bool:
        if not cls:
            return True
        lit = cls[0][0]
        for choice in (lit, -lit):
            reduced = reduce(cls, choice)
            if reduced is not None and go(reduced):
                return True
        return False

    if any(not cl for cl in clauses):
        return False
    return go([list(cl) for cl in clauses])


# ---------------------------------------------------------------------------
# random formulas

PROP_NAMES = ["a", "b", "c", "d", "e", "f", "g", "h"]
INT_VARS = ["x", "y"]


def random_formula(
    rng,
    max_depth: int = 6,
    n_props: int = 4,
    n_int_vars: int = 2,
    max_bound: int = 40,
    arith_weight: float = 0.3,
    allow_consts: bool = False,
) -> Formula:
    props = PROP_NAMES[:n_props]
    ivars = INT_VARS[:n_int_vars]

    def atom() -> Formula:
        if ivars and rng.random() < arith_weight:
            op = rng.choice(["<=", "<", ">=", ">", "=", "!="])
            bound = rng.randint(-max_bound, max_bound)
            kind = rng.random()
            if len(ivars) == 2 and kind < 0.4:
                left, right = ivars if rng.random() < 0.5 else list(reversed(ivars))
            elif kind < 0.7:
                left, right = rng.choice(ivars), ZERO
            else:
                left, right = ZERO, rng.choice(ivars)
            return ArithAtom(left, right, op, bound)
        if allow_consts and rng.random() < 0.05:
            return TrueConst() if rng.random() < 0.5 else FalseConst()
        name = rng.choice(props)
        if rng.random() < 0.2:
            return PropAtom(name + "_p", (rng.choice(["docs", "info", "party"]),))
        return PropAtom(name)

    def build(depth: int) -> Formula:
        if depth <= 0 or rng.random() < 0.25:
            return atom()
        kind = rng.choice(["not", "and", "or", "implies", "iff"])
        if kind == "not":
            return Not(build(depth - 1))
        if kind in ("and", "or"):
            n = rng.choice([2, 2, 3])
            kids = tuple(build(depth - 1) for _ in range(n))
            return And(kids) if kind == "and" else Or(kids)
        if kind == "implies":
            return Implies(build(depth - 1), build(depth - 1))
        return Iff(build(depth - 1), build(depth - 1))

    return build(max_depth)
