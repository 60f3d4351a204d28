# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels: clause-mask model counting and tabulated
circuit evaluation over the full assignment space."""

from libc.stdlib cimport malloc, free

# Keep in sync with circuit op codes.
cdef enum:
    OP_INPUT = 0
    OP_CONST0 = 1
    OP_CONST1 = 2
    OP_NOT = 3
    OP_AND = 4
    OP_OR = 5
    OP_XOR = 6


def count_models_masks(int n, unsigned long long[:] pos, unsigned long long[:] neg):
    cdef unsigned long long total = (<unsigned long long>1) << n
    cdef unsigned long long m, inv
    cdef Py_ssize_t c, n_clauses = pos.shape[0]
    cdef long long count = 0
    cdef bint ok
    for m in range(total):
        inv = ~m
        ok = True
        for c in range(n_clauses):
            if (m & pos[c]) == 0 and (inv & neg[c]) == 0:
                ok = False
                break
        if ok:
            count += 1
    return count


def count_witnesses_tab(
    int n,
    unsigned char[:] ops,
    int[:] a0,
    int[:] a1,
    int output,
):
    cdef unsigned long long total = (<unsigned long long>1) << n
    cdef unsigned long long m
    cdef Py_ssize_t g, n_gates = ops.shape[0]
    cdef long long count = 0
    cdef unsigned char op
    cdef unsigned char* vals = <unsigned char*>malloc(n_gates)
    if vals == NULL:
        raise MemoryError()
    try:
        for m in range(total):
            for g in range(n_gates):
                op = ops[g]
                if op == OP_INPUT:
                    vals[g] = <unsigned char>((m >> (a0[g] - 1)) & 1)
                elif op == OP_CONST0:
                    vals[g] = 0
                elif op == OP_CONST1:
                    vals[g] = 1
                elif op == OP_NOT:
                    vals[g] = 1 - vals[a0[g]]
                elif op == OP_AND:
                    vals[g] = vals[a0[g]] & vals[a1[g]]
                elif op == OP_OR:
                    vals[g] = vals[a0[g]] | vals[a1[g]]
                else:
                    vals[g] = vals[a0[g]] ^ vals[a1[g]]
            count += vals[output]
    finally:
        free(vals)
    return count
