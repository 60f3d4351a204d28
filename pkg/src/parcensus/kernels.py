"""Backend selection for the enumeration kernels.

The compiled extension (``parcensus._kernels``, built from Cython) is
preferred; when it is missing the numpy fallback in ``_fallback`` is used.
Both expose the same two functions over flat arrays and must return
identical counts; the choice only affects speed.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

try:
    from . import _kernels as _impl

    BACKEND = "cython"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _fallback as _impl

    BACKEND = "fallback"

# Mask-based clause checks use one machine word per clause.
MAX_ENUM_BITS = 62


def clause_masks(var_count: int, clauses: Sequence[Sequence[int]]):
    """Per-clause bit masks of positive and negative literal variables."""
    pos = np.zeros(len(clauses), dtype=np.uint64)
    neg = np.zeros(len(clauses), dtype=np.uint64)
    for idx, clause in enumerate(clauses):
        p = 0
        n = 0
        for lit in clause:
            bit = 1 << (abs(lit) - 1)
            if lit > 0:
                p |= bit
            else:
                n |= bit
        pos[idx] = p
        neg[idx] = n
    return pos, neg


def count_models(var_count: int, clauses: Sequence[Sequence[int]]) -> int:
    """Number of assignments to vars 1..var_count satisfying every clause."""
    if var_count > MAX_ENUM_BITS:
        raise OverflowError(
            f"{var_count} variables exceed the {MAX_ENUM_BITS}-bit kernel limit"
        )
    if any(len(clause) == 0 for clause in clauses):
        return 0
    pos, neg = clause_masks(var_count, clauses)
    return int(_impl.count_models_masks(var_count, pos, neg))


def count_witnesses(
    input_count: int,
    ops: Sequence[int],
    a0: Sequence[int],
    a1: Sequence[int],
    output: int,
) -> int:
    """Number of inputs on which the tabulated circuit outputs 1."""
    if input_count > MAX_ENUM_BITS:
        raise OverflowError(
            f"{input_count} inputs exceed the {MAX_ENUM_BITS}-bit kernel limit"
        )
    return int(
        _impl.count_witnesses_tab(
            input_count,
            np.asarray(ops, dtype=np.uint8),
            np.asarray(a0, dtype=np.int32),
            np.asarray(a1, dtype=np.int32),
            output,
        )
    )


def available_backends() -> dict:
    """Importable kernel implementations, keyed by name (for benchmarks)."""
    backends = {}
    try:
        from . import _kernels

        backends["cython"] = _kernels
    except ImportError:
        pass
    from . import _fallback

    backends["fallback"] = _fallback
    return backends
