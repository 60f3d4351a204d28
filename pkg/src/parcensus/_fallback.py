"""Numpy implementations of the enumeration kernels.

Used when the compiled extension is unavailable.  The assignment space is
swept in chunks so memory stays bounded at large bit counts.
"""

from __future__ import annotations

import numpy as np

_CHUNK_BITS = 18

# Keep in sync with circuit op codes.
_INPUT, _CONST0, _CONST1, _NOT, _AND, _OR, _XOR = range(7)


def _chunks(total: int):
    step = 1 << _CHUNK_BITS
    lo = 0
    while lo < total:
        hi = min(lo + step, total)
        yield np.arange(lo, hi, dtype=np.uint64)
        lo = hi


def count_models_masks(n: int, pos: np.ndarray, neg: np.ndarray) -> int:
    total = 1 << n
    count = 0
    for m in _chunks(total):
        sat = np.ones(m.shape[0], dtype=bool)
        inv = ~m
        for p, q in zip(pos, neg):
            sat &= ((m & p) != 0) | ((inv & q) != 0)
        count += int(np.count_nonzero(sat))
    return count


def count_witnesses_tab(
    n: int, ops: np.ndarray, a0: np.ndarray, a1: np.ndarray, output: int
) -> int:
    total = 1 << n
    count = 0
    for m in _chunks(total):
        size = m.shape[0]
        values: list[np.ndarray] = []
        for g in range(ops.shape[0]):
            op = ops[g]
            if op == _INPUT:
                v = ((m >> np.uint64(int(a0[g]) - 1)) & np.uint64(1)).astype(bool)
            elif op == _CONST0:
                v = np.zeros(size, dtype=bool)
            elif op == _CONST1:
                v = np.ones(size, dtype=bool)
            elif op == _NOT:
                v = ~values[a0[g]]
            elif op == _AND:
                v = values[a0[g]] & values[a1[g]]
            elif op == _OR:
                v = values[a0[g]] | values[a1[g]]
            else:  # _XOR
                v = values[a0[g]] ^ values[a1[g]]
            values.append(v)
        count += int(np.count_nonzero(values[output]))
    return count
