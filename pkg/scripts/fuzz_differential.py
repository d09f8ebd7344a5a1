#!/usr/bin/env python3
"""Differential fuzzing loop: random small CNFs vs. the brute-force oracle.

For every instance the solver verdict (both modes) is compared against
exhaustive enumeration; unsat derivations are checked, translated to
resolution, and checked again.  Exits nonzero on the first disagreement.

Usage: python scripts/fuzz_differential.py [--count N] [--seed S] [--max-var V]
"""

import argparse
import random
import sys

from dpllkit.cnf import evaluate
from dpllkit.dpll_proof import check_dpll, dpll_size
from dpllkit.oracle import brute_force_sat
from dpllkit.resolution import check_res, dpll_to_res, res_size
from dpllkit.solver import SolverConfig, solve


def random_formula(rng, max_var, max_clauses=12, max_clause_len=3):
    from dpllkit.cnf import canonical_formula

    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        clause = []
        for _ in range(rng.randint(1, max_clause_len)):
            v = rng.randint(1, max_var)
            clause.append(v if rng.random() < 0.5 else -v)
        clauses.append(clause)
    return canonical_formula(clauses)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-var", type=int, default=8)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    sat = unsat = 0
    for i in range(args.count):
        d = random_formula(rng, args.max_var)
        expected = brute_force_sat(d).satisfiable
        v = solve(d, SolverConfig(mode="witness", assert_measure=True))
        if v.satisfiable != expected or solve(d, SolverConfig(mode="decide")) != expected:
            print(f"DISAGREEMENT on instance {i}: {d}", file=sys.stderr)
            return 1
        if v.satisfiable:
            sat += 1
            assert evaluate(v.model, d)
        else:
            unsat += 1
            assert check_dpll((), d, v.proof).valid
            r = dpll_to_res((), d, v.proof)
            assert check_res(d, r).valid
            assert res_size(r) <= dpll_size(v.proof)
        if (i + 1) % 500 == 0:
            print(f"{i + 1} instances checked ({sat} sat, {unsat} unsat)", flush=True)
    print(f"ok: {args.count} instances, {sat} sat, {unsat} unsat")
    return 0


if __name__ == "__main__":
    sys.exit(main())
