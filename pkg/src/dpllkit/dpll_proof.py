"""DPLL derivation trees and their independent checker.

Derivation payloads are slim: nodes carry only the literal/clause deltas,
never the running valuation or formula.  The checker reconstructs the
(valuation, formula) context top-down and validates the side condition of
every rule application.  It is deliberately independent of the solver:
nothing here imports the search code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ._util import deep_recursion
from .cnf import (
    Clause,
    Formula,
    Lit,
    Valuation,
    canonical_formula,
    canonical_valuation,
    clause_remove,
    formula_remove,
    formula_union,
)


@dataclass(frozen=True, slots=True)
class Conflict:
    pass


@dataclass(frozen=True, slots=True)
class Unit:
    lit: Lit
    sub: "DpllDerivation"


@dataclass(frozen=True, slots=True)
class Elim:
    clause: Clause
    lit: Lit
    sub: "DpllDerivation"


@dataclass(frozen=True, slots=True)
class Red:
    clause: Clause
    lit: Lit  # the valuation literal; its complement is removed from `clause`
    sub: "DpllDerivation"


@dataclass(frozen=True, slots=True)
class Split:
    lit: Lit  # left child assumes `lit`, right child its complement
    left: "DpllDerivation"
    right: "DpllDerivation"


DpllDerivation = Union[Conflict, Unit, Elim, Red, Split]

CONFLICT = Conflict()


def dpll_size(d: DpllDerivation) -> int:
    """Number of rule applications above the Conflict axioms."""
    total = 0
    stack = [d]
    while stack:
        node = stack.pop()
        if isinstance(node, Conflict):
            continue
        total += 1
        if isinstance(node, Split):
            stack.append(node.left)
            stack.append(node.right)
        else:
            stack.append(node.sub)
    return total


@dataclass(frozen=True)
class CheckReport:
    valid: bool
    path: tuple[int, ...] = ()
    reason: Optional[str] = None
    context: Optional[tuple] = None  # (valuation, formula) at the failing node

    def __bool__(self) -> bool:
        return self.valid


VALID = CheckReport(True)


def check_dpll(g0: Valuation, d0: Formula, proof: DpllDerivation) -> CheckReport:
    """Validate ``proof`` as a derivation of the sequent ``g0 |- d0``.

    Contexts are rebuilt per rule: Unit extends the valuation and drops the
    unit clause, Elim drops the subsumed clause, Red replaces the clause by
    its reduct, Split branches on a literal and its complement.  Failures name
    the leftmost violating node by its child-index path.
    """
    g = canonical_valuation(g0)
    with deep_recursion():
        return _check(g, set(g), canonical_formula(d0), proof, ())


def _fail(reason: str, path: tuple[int, ...], g: Valuation, d: Formula) -> CheckReport:
    return CheckReport(False, path, reason, (g, d))


def _check(g: Valuation, gset: set[Lit], d: Formula, node: DpllDerivation,
           path: tuple[int, ...]) -> CheckReport:
    if any(-l in gset for l in gset):
        return _fail("inconsistent-context", path, g, d)
    if isinstance(node, Conflict):
        if () not in d:
            return _fail("conflict-empty-clause-missing", path, g, d)
        return VALID
    if isinstance(node, Unit):
        unit = (node.lit,)
        if unit not in d:
            return _fail("unit-clause-missing", path, g, d)
        g2, gset2 = _extend(g, gset, node.lit)
        return _check(g2, gset2, formula_remove(d, unit), node.sub, path + (0,))
    if isinstance(node, Elim):
        if node.lit not in gset:
            return _fail("elim-literal-not-in-valuation", path, g, d)
        if node.lit not in node.clause:
            return _fail("elim-literal-not-in-clause", path, g, d)
        if node.clause not in d:
            return _fail("elim-clause-missing", path, g, d)
        return _check(g, gset, formula_remove(d, node.clause), node.sub, path + (0,))
    if isinstance(node, Red):
        if node.lit not in gset:
            return _fail("red-literal-not-in-valuation", path, g, d)
        if -node.lit not in node.clause:
            return _fail("red-complement-not-in-clause", path, g, d)
        if node.clause not in d:
            return _fail("red-clause-missing", path, g, d)
        reduct = clause_remove(node.clause, -node.lit)
        d2 = formula_union(formula_remove(d, node.clause), (reduct,))
        return _check(g, gset, d2, node.sub, path + (0,))
    if isinstance(node, Split):
        gl, gsl = _extend(g, gset, node.lit)
        left = _check(gl, gsl, d, node.left, path + (0,))
        if not left.valid:
            return left
        gr, gsr = _extend(g, gset, -node.lit)
        return _check(gr, gsr, d, node.right, path + (1,))
    raise TypeError(f"not a DPLL derivation node: {node!r}")


def _extend(g: Valuation, gset: set[Lit], lit: Lit) -> tuple[Valuation, set[Lit]]:
    if lit in gset:
        return g, gset
    return g + (lit,), gset | {lit}
