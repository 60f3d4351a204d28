"""Independent reference implementations used as double-entry oracles.

Deliberately coded differently from the package: recursive circuit
evaluation instead of the iterative table sweep, and dict-based clause
checking over itertools assignments instead of bit masks.  Tests compare
these against the production paths; keep them dumb.
"""

import itertools

from parcensus.circuit import (
    OP_AND,
    OP_CONST0,
    OP_CONST1,
    OP_INPUT,
    OP_NOT,
    OP_OR,
    OP_XOR,
)


def eval_circuit_reference(circuit, bits):
    """Recursive memoized evaluation; bits is a 0/1 sequence."""
    memo = {}

    def go(index):
        if index in memo:
            return memo[index]
        gate = circuit.gates[index]
        if gate.op == OP_INPUT:
            value = bits[gate.args[0] - 1]
        elif gate.op == OP_CONST0:
            value = 0
        elif gate.op == OP_CONST1:
            value = 1
        elif gate.op == OP_NOT:
            value = 1 - go(gate.args[0])
        elif gate.op == OP_AND:
            value = min(go(gate.args[0]), go(gate.args[1]))
        elif gate.op == OP_OR:
            value = max(go(gate.args[0]), go(gate.args[1]))
        elif gate.op == OP_XOR:
            value = (go(gate.args[0]) + go(gate.args[1])) % 2
        else:
            raise AssertionError(f"unknown op {gate.op}")
        memo[index] = value
        return value

    return go(circuit.output)


def count_witnesses_reference(circuit):
    total = 0
    for bits in itertools.product((0, 1), repeat=circuit.input_count):
        total += eval_circuit_reference(circuit, bits)
    return total


def witnesses_reference(circuit):
    """Accepting assignments as 0/1 tuples, in lexicographic order."""
    found = []
    for bits in itertools.product((0, 1), repeat=circuit.input_count):
        if eval_circuit_reference(circuit, bits):
            found.append(bits)
    return found


def count_models_reference(formula):
    count = 0
    for assignment in itertools.product(
        (False, True), repeat=formula.var_count
    ):
        good = True
        for clause in formula.clauses:
            if not any(
                (lit > 0) == assignment[abs(lit) - 1] for lit in clause
            ):
                good = False
                break
        if good:
            count += 1
    return count
