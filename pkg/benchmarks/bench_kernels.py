#!/usr/bin/env python3
"""Compare the compiled enumeration kernels against the numpy fallback.

Workloads are the two hot paths: CNF model counting over all variables
and circuit witness counting over all inputs, at a few sizes around the
default 24-bit cap.  Usage:

    python benchmarks/bench_kernels.py [--max-bits 22] [--repeat 3]
"""

import argparse
import random
import time

import numpy as np

from parcensus import BitString, build_j_circuit, make_machine, tseitin_parsimonious
from parcensus.circuit import Circuit, Gate
from parcensus.kernels import available_backends, clause_masks


def random_cnf(rng: random.Random, n_vars: int, n_clauses: int):
    clauses = []
    for _ in range(n_clauses):
        size = rng.randint(2, 3)
        variables = rng.sample(range(1, n_vars + 1), size)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in variables))
    return clauses


def wide_xor_chain(n_bits: int) -> Circuit:
    gates = [Gate.input(1)]
    for i in range(2, n_bits + 1):
        gates.append(Gate.input(i))
        gates.append(Gate.xor(len(gates) - 2, len(gates) - 1))
    return Circuit(n_bits, tuple(gates), len(gates) - 1)


def time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-bits", type=int, default=22)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}")
    rng = random.Random(7)

    rows = []
    for n in (14, 18, args.max_bits):
        clauses = random_cnf(rng, n, 3 * n)
        pos, neg = clause_masks(n, clauses)
        for name, impl in sorted(backends.items()):
            seconds = time_call(
                lambda: impl.count_models_masks(n, pos, neg), args.repeat
            )
            rows.append((f"count_models {n} vars", name, seconds))

    for n in (14, 18, args.max_bits):
        circuit = wide_xor_chain(n)
        ops, a0, a1 = circuit.tables()
        arrays = (
            np.asarray(ops, dtype=np.uint8),
            np.asarray(a0, dtype=np.int32),
            np.asarray(a1, dtype=np.int32),
        )
        for name, impl in sorted(backends.items()):
            seconds = time_call(
                lambda: impl.count_witnesses_tab(n, *arrays, circuit.output),
                args.repeat,
            )
            rows.append((f"count_witnesses {n} bits", name, seconds))

    # one realistic pipeline formula
    lang = make_machine("onehot")
    circuit = build_j_circuit(lang, BitString("11"), 2, 1, 1, 0)
    formula = tseitin_parsimonious(circuit)
    pos, neg = clause_masks(formula.var_count, formula.clauses)
    for name, impl in sorted(backends.items()):
        seconds = time_call(
            lambda: impl.count_models_masks(formula.var_count, pos, neg),
            args.repeat,
        )
        rows.append(
            (f"guess instance ({formula.var_count} vars)", name, seconds)
        )

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'backend':<9}  seconds")
    baseline = {}
    for workload, name, seconds in rows:
        baseline.setdefault(workload, {})[name] = seconds
    for workload, name, seconds in rows:
        times = baseline[workload]
        note = ""
        if len(times) == 2 and name == "cython":
            note = f"  ({times['fallback'] / seconds:.1f}x vs fallback)"
        print(f"{workload:<{width}}  {name:<9}  {seconds:8.4f}{note}")


if __name__ == "__main__":
    main()
