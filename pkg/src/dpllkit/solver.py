"""Measure-decreasing DPLL search producing models or refutation trees.

The recursion works on a triple (g, d, t): the current valuation, the working
formula, and the clean clauses (clauses sharing no variable with the
valuation, on which only a split can act).  Witness mode builds an
``Assignment`` or a ``DpllDerivation``; decide mode runs the identical
control flow with evidence construction elided.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

from ._util import deep_recursion
from .cnf import (
    Assignment,
    Formula,
    Lit,
    Valuation,
    canonical_formula,
    canonical_valuation,
    formula_union,
    is_consistent,
    measure,
    vars_of,
)
from .dpll_proof import CONFLICT, DpllDerivation, Elim, Red, Split, Unit


class InvariantViolation(Exception):
    """A debug-mode precondition of the search was violated."""


class MeasureViolation(InvariantViolation):
    """A recursive call failed to decrease the lexicographic measure."""


class InconsistentValuation(ValueError):
    pass


@dataclass(frozen=True)
class SolverConfig:
    mode: str = "witness"  # "witness" | "decide"
    assert_measure: bool = False
    trace: bool = False


@dataclass(frozen=True)
class Verdict:
    satisfiable: bool
    model: Optional[Assignment] = None
    proof: Optional[DpllDerivation] = None
    trace: Optional[tuple[str, ...]] = None


_SAT_DECIDED = Verdict(True)
_UNSAT_DECIDED = Verdict(False)


def complete_model(g: Valuation) -> Assignment:
    """Assignment making every literal of a consistent valuation true;
    other variables take the default polarity."""
    if not is_consistent(g):
        raise InconsistentValuation(f"valuation is inconsistent: {g}")
    return Assignment({abs(l): l > 0 for l in g})


def choose_split(t: Formula) -> Lit:
    """Split literal: the first literal of the first clean clause."""
    if not t:
        raise ValueError("cannot choose a split literal from an empty formula")
    return t[0][0]


def solve(d, cfg: SolverConfig = SolverConfig()) -> Union[Verdict, bool]:
    """Decide a CNF formula.

    Witness mode returns a ``Verdict`` carrying a model or a derivation;
    decide mode returns only the satisfiability boolean.
    """
    formula = canonical_formula(d)
    witness = cfg.mode == "witness"
    log: Optional[list[str]] = [] if (cfg.trace and witness) else None
    with deep_recursion():
        v = _solve((), set(), formula, (), witness, cfg.assert_measure, None, log)
    if not witness:
        return v.satisfiable
    if log is not None:
        v = replace(v, trace=tuple(log))
    return v


def solve_aux(g: Valuation, d, t=(), cfg: SolverConfig = SolverConfig()) -> Verdict:
    """Search from an intermediate state: valuation ``g``, working formula
    ``d``, clean clauses ``t``.  Always returns a full witness Verdict."""
    g = canonical_valuation(g)
    with deep_recursion():
        return _solve(g, set(g), canonical_formula(d), canonical_formula(t),
                      True, cfg.assert_measure, None, None)


def _solve(g: Valuation, gset: set[Lit], d: Formula, t: Formula, witness: bool,
           check: bool, prev: Optional[tuple[int, int]], log: Optional[list[str]]) -> Verdict:
    if check:
        if any(not c for c in t):
            raise InvariantViolation("empty clause among clean clauses")
        if not is_consistent(g):
            raise InvariantViolation(f"inconsistent valuation: {g}")
        if vars_of(g) & vars_of(t):
            raise InvariantViolation("clean clauses share variables with the valuation")
        cur = (measure(g, d, t), len(d))
        if prev is not None and not cur < prev:
            raise MeasureViolation(f"measure did not decrease: {prev} -> {cur}")
        prev = cur

    if not d:
        if not t:
            if log is not None:
                log.append("model")
            return Verdict(True, complete_model(g)) if witness else _SAT_DECIDED
        lit = choose_split(t)
        if log is not None:
            log.append("split")
        left = _solve(g + (lit,), gset | {lit}, t, (), witness, check, prev, log)
        if left.satisfiable:
            return left
        right = _solve(g + (-lit,), gset | {-lit}, t, (), witness, check, prev, log)
        if right.satisfiable:
            return right
        if not witness:
            return _UNSAT_DECIDED
        return Verdict(False, proof=Split(lit, left.proof, right.proof))

    c, rest = d[0], d[1:]
    common = next((l for l in c if l in gset), None)
    if common is not None:
        # the clause is already satisfied by the valuation
        if log is not None:
            log.append("elim")
        r = _solve(g, gset, rest, t, witness, check, prev, log)
        if r.satisfiable or not witness:
            return r
        return Verdict(False, proof=Elim(c, common, r.proof))

    if not c:
        if log is not None:
            log.append("conflict")
        return Verdict(False, proof=CONFLICT) if witness else _UNSAT_DECIDED

    if len(c) == 1:
        lit = c[0]
        if -lit in gset:
            if log is not None:
                log.append("red")
                log.append("conflict")
            if not witness:
                return _UNSAT_DECIDED
            return Verdict(False, proof=Red(c, -lit, CONFLICT))
        if log is not None:
            log.append("unit")
        r = _solve(g + (lit,), gset | {lit}, formula_union(rest, t), (),
                   witness, check, prev, log)
        if r.satisfiable or not witness:
            return r
        return Verdict(False, proof=Unit(lit, r.proof))

    falsified = next((l for l in c if -l in gset), None)
    if falsified is not None:
        if log is not None:
            log.append("red")
        reduct = tuple(x for x in c if x != falsified)
        r = _solve(g, gset, formula_union(rest, (reduct,)), t, witness, check, prev, log)
        if r.satisfiable or not witness:
            return r
        return Verdict(False, proof=Red(c, -falsified, r.proof))

    # no variable of c is decided: move it to the clean clauses
    if log is not None:
        log.append("move")
    return _solve(g, gset, rest, formula_union(t, (c,)), witness, check, prev, log)
