"""Pigeonhole benchmark harness.

Runs PHP(k, k) and PHP(k+1, k) instances through the solver, verifies every
witness (model evaluation, DPLL check, resolution translation + check) and
reports one record per (instance, mode).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .cnf import evaluate
from .dpll_proof import check_dpll, dpll_size
from .php import PhpSpec, gen_php
from .resolution import check_res, dpll_to_res, res_size
from .solver import SolverConfig, solve

TSV_HEADER = "# instance\tmode\tverdict\tdpll_size\tres_size\tsolve_ms\tcheck_dpll_ms\tcheck_res_ms"


@dataclass
class BenchRecord:
    instance: str
    mode: str
    verdict: str
    dpll_size: Optional[int]
    res_size: Optional[int]
    solve_ms: float
    check_dpll_ms: Optional[float]
    check_res_ms: Optional[float]

    def to_tsv(self) -> str:
        def cell(x):
            if x is None:
                return "-"
            if isinstance(x, float):
                return f"{x:.1f}"
            return str(x)

        return "\t".join(cell(x) for x in (
            self.instance, self.mode, self.verdict, self.dpll_size,
            self.res_size, self.solve_ms, self.check_dpll_ms, self.check_res_ms))


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def bench_instance(name: str, formula, mode: str) -> BenchRecord:
    start = time.perf_counter()
    result = solve(formula, SolverConfig(mode=mode))
    solve_ms = _ms(start)
    if mode == "decide":
        verdict = "sat" if result else "unsat"
        return BenchRecord(name, mode, verdict, None, None, solve_ms, None, None)
    if result.satisfiable:
        if not evaluate(result.model, formula):
            raise AssertionError(f"{name}: model does not satisfy the formula")
        return BenchRecord(name, mode, "sat", None, None, solve_ms, None, None)
    start = time.perf_counter()
    report = check_dpll((), formula, result.proof)
    check_dpll_ms = _ms(start)
    if not report.valid:
        raise AssertionError(f"{name}: solver proof rejected: {report.reason}")
    n = dpll_size(result.proof)
    res_proof = dpll_to_res((), formula, result.proof)
    start = time.perf_counter()
    res_report = check_res(formula, res_proof)
    check_res_ms = _ms(start)
    if not res_report.valid:
        raise AssertionError(f"{name}: translated proof rejected: {res_report.reason}")
    m = res_size(res_proof)
    if m > n:
        raise AssertionError(f"{name}: resolution size {m} exceeds DPLL size {n}")
    return BenchRecord(name, "witness", "unsat", n, m, solve_ms, check_dpll_ms, check_res_ms)


def run_php_bench(php_max: int, modes: Sequence[str] = ("witness", "decide")) -> Iterator[BenchRecord]:
    for k in range(1, php_max + 1):
        for spec in (PhpSpec(k, k), PhpSpec(k + 1, k)):
            name = f"php-{spec.pigeons}-{spec.holes}"
            formula = gen_php(spec)
            for mode in modes:
                yield bench_instance(name, formula, mode)
