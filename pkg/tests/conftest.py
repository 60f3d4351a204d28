import random

import pytest

from parcensus import (
    BitString,
    Circuit,
    Gate,
    build_bit_equals,
    build_exactly_k,
    build_j_circuit,
    build_less_than,
    conjoin,
    make_machine,
    remap_inputs,
    tseitin_parsimonious,
)

# Pipeline test matrix: (machine, params, inputs).  Chosen so the census
# promise holds and every query formula stays under the default 24-bit
# enumeration cap; each machine gets at least five inputs.
PIPELINE_INSTANCES = [
    ("const0", (), ("0", "1", "01", "10", "111")),
    ("exact1", (), ("0", "1", "00", "01", "10")),
    ("exact1", (8, 170), ("0", "1", "01", "10", "11")),
    ("xor2", (), ("0", "1", "01", "10", "0110")),
    ("onehot", (), ("0", "1", "00", "01", "10", "11")),
    ("subsetsum", (1,), ("0", "1", "00", "01", "10", "11")),
]

# Instances engineered to break the census promise, used by the failure
# tests.  Both have two accepting paths that differ in every bit, so at
# guess 1 each bit probe is a forced "yes" for both values and decoding
# trips the ambiguity check no matter what Q says.
VIOLATION_INSTANCES = [
    ("xor2", (1,), "01"),
    ("subsetsum", (1, 1), "11"),
]


def _random_circuit(rng: random.Random, max_inputs: int = 6,
                    max_gates: int = 12) -> Circuit:
    n = rng.randint(1, max_inputs)
    count = rng.randint(1, max_gates)
    gates = []
    for idx in range(count):
        ops = ["input", "const"]
        if idx:
            ops += ["not", "and", "or", "xor"] * 3
        op = rng.choice(ops)
        if op == "input":
            gates.append(Gate.input(rng.randint(1, n)))
        elif op == "const":
            gates.append(Gate.const(rng.randint(0, 1)))
        elif op == "not":
            gates.append(Gate.not_(rng.randrange(idx)))
        elif op == "and":
            gates.append(Gate.and_(rng.randrange(idx), rng.randrange(idx)))
        elif op == "or":
            gates.append(Gate.or_(rng.randrange(idx), rng.randrange(idx)))
        else:
            gates.append(Gate.xor(rng.randrange(idx), rng.randrange(idx)))
    return Circuit(n, tuple(gates), len(gates) - 1)


def structured_circuits() -> list[Circuit]:
    """Constants, single gates, comparators, bit tests, guess-style
    conjunctions, and circuits with unreferenced inputs."""
    out = []
    for n in (1, 2, 3):
        for value in (0, 1):
            out.append(Circuit(n, (Gate.const(value),), 0))
    for op in (Gate.and_, Gate.or_, Gate.xor):
        out.append(Circuit(2, (Gate.input(1), Gate.input(2), op(0, 1)), 2))
    out.append(Circuit(1, (Gate.input(1), Gate.not_(0)), 1))
    for width in (1, 2, 3):
        a = list(range(1, width + 1))
        b = list(range(width + 1, 2 * width + 1))
        out.append(build_less_than(2 * width, a, b))
    for index, value in ((1, 0), (2, 1), (3, 1)):
        out.append(build_bit_equals(3, index, value))
    out.append(build_exactly_k(3, [1, 2, 3], 1))
    out.append(build_exactly_k(4, [1, 3], 1))
    out.append(conjoin([], input_count=2))
    out.append(
        conjoin(
            [
                Circuit(2, (Gate.input(1), Gate.input(2), Gate.xor(0, 1)), 2),
                build_bit_equals(2, 1, 0),
            ]
        )
    )
    # unreferenced inputs: same functions over wider spaces
    out.append(remap_inputs(
        Circuit(2, (Gate.input(1), Gate.input(2), Gate.xor(0, 1)), 2), 5, [2, 4]
    ))
    out.append(build_bit_equals(6, 3, 1))
    # guess-style instances from the library machines
    xor2 = make_machine("xor2")
    for c, j, k, b in ((1, 1, 1, 0), (1, 1, 2, 1), (2, 1, 1, 0), (2, 2, 2, 0)):
        out.append(build_j_circuit(xor2, BitString("01"), c, j, k, b))
    exact1 = make_machine("exact1")
    out.append(build_j_circuit(exact1, BitString("0"), 1, 1, 1, 1))
    out.append(build_j_circuit(exact1, BitString("0"), 1, 1, 2, 0))
    return out


def corpus_circuits(target: int = 230, max_inputs: int = 10,
                    max_cnf_vars: int = 14) -> list[Circuit]:
    """Deterministic mixed corpus; every member fits the stated bounds."""
    rng = random.Random(0xC0FFEE)
    keep = []
    for circuit in structured_circuits():
        formula = tseitin_parsimonious(circuit)
        if circuit.input_count <= max_inputs and formula.var_count <= max_cnf_vars:
            keep.append(circuit)
    while len(keep) < target:
        circuit = _random_circuit(rng)
        formula = tseitin_parsimonious(circuit)
        if circuit.input_count <= max_inputs and formula.var_count <= max_cnf_vars:
            keep.append(circuit)
    return keep


@pytest.fixture(scope="session")
def corpus():
    return corpus_circuits()


@pytest.fixture(scope="session")
def pipeline_languages():
    return [
        (make_machine(name, params), [BitString(s) for s in inputs])
        for name, params, inputs in PIPELINE_INSTANCES
    ]
