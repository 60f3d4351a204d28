import random

import pytest

from parcensus import kernels, tseitin_parsimonious
from parcensus.kernels import available_backends, clause_masks

from conftest import _random_circuit
from reference import count_models_reference, count_witnesses_reference

BACKENDS = available_backends()


def test_backend_selected():
    assert kernels.BACKEND in BACKENDS


def test_fallback_always_available():
    assert "fallback" in BACKENDS


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_count_models_small_cases(name):
    impl = BACKENDS[name]
    # (vars, clauses, expected)
    cases = [
        (0, [], 1),
        (2, [], 4),
        (2, [(1,), (2,)], 1),
        (2, [(1, -2)], 3),
        (3, [(1, 2), (-1, -2), (3,)], 2),
    ]
    for n, clauses, expected in cases:
        pos, neg = clause_masks(n, clauses)
        assert impl.count_models_masks(n, pos, neg) == expected


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_backends_match_reference(name):
    impl = BACKENDS[name]
    rng = random.Random(2024)
    for _ in range(40):
        circuit = _random_circuit(rng, max_inputs=5, max_gates=10)
        formula = tseitin_parsimonious(circuit)
        if formula.var_count > 14:
            continue
        pos, neg = clause_masks(formula.var_count, formula.clauses)
        got = impl.count_models_masks(formula.var_count, pos, neg)
        assert got == count_models_reference(formula)

        import numpy as np

        ops, a0, a1 = circuit.tables()
        witness_count = impl.count_witnesses_tab(
            circuit.input_count,
            np.asarray(ops, dtype=np.uint8),
            np.asarray(a0, dtype=np.int32),
            np.asarray(a1, dtype=np.int32),
            circuit.output,
        )
        assert witness_count == count_witnesses_reference(circuit)


@pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")
def test_compiled_and_fallback_agree():
    import numpy as np

    rng = random.Random(99)
    for _ in range(60):
        circuit = _random_circuit(rng, max_inputs=8, max_gates=16)
        formula = tseitin_parsimonious(circuit)
        pos, neg = clause_masks(formula.var_count, formula.clauses)
        counts = {
            name: impl.count_models_masks(formula.var_count, pos, neg)
            for name, impl in BACKENDS.items()
        }
        assert len(set(counts.values())) == 1, counts

        ops, a0, a1 = circuit.tables()
        args = (
            circuit.input_count,
            np.asarray(ops, dtype=np.uint8),
            np.asarray(a0, dtype=np.int32),
            np.asarray(a1, dtype=np.int32),
            circuit.output,
        )
        witness_counts = {
            name: impl.count_witnesses_tab(*args)
            for name, impl in BACKENDS.items()
        }
        assert len(set(witness_counts.values())) == 1, witness_counts


def test_kernel_bit_limit():
    with pytest.raises(OverflowError):
        kernels.count_models(70, [])
