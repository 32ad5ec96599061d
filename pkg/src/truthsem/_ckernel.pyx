# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: exhaustive fixed-point search over a compiled program.

Same contract as ``_pykernel``.  Values are TV codes
(0 = undetermined, 1 = false, 2 = true).
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int8_t i8
ctypedef cnp.int32_t i32

cdef enum:
    OP_CONST = 0
    OP_HYP = 1
    OP_NOT = 2
    OP_AND = 3
    OP_OR = 4
    OP_IMP = 5
    OP_IFF = 6
    OP_ALL = 7
    OP_ANY = 8


cdef inline void run(const i8[:] op, const i32[:] a0, const i32[:] a1, const i32[:] kids,
                     const i8[:, :] bt, const i8[:] nt, const i8* h, i8* vals) noexcept nogil:
    cdef Py_ssize_t i, j, n = op.shape[0]
    cdef i8 code, acc
    cdef int row
    for i in range(n):
        code = op[i]
        if code == OP_CONST:
            vals[i] = <i8>a0[i]
        elif code == OP_HYP:
            vals[i] = h[a0[i]]
        elif code == OP_NOT:
            vals[i] = nt[vals[a0[i]]]
        elif code <= OP_IFF:
            vals[i] = bt[code - OP_AND, vals[a0[i]] * 3 + vals[a1[i]]]
        else:
            if code == OP_ALL:
                row, acc = 0, 2
            else:
                row, acc = 1, 1
            for j in range(a0[i], a0[i] + a1[i]):
                acc = bt[row, acc * 3 + vals[kids[j]]]
            vals[i] = acc


def find_fixed_points(const i8[:] op, const i32[:] a0, const i32[:] a1, const i32[:] kids,
                      const i32[:] roots, const i8[:, :] bin_table, const i8[:] not_table):
    cdef Py_ssize_t n = roots.shape[0]
    cdef Py_ssize_t nn = op.shape[0]
    cdef Py_ssize_t k
    cdef long long idx, total = 1
    cdef bint fixed
    for k in range(n):
        total *= 3
    h_arr = np.zeros(max(n, 1), dtype=np.int8)
    vals_arr = np.zeros(max(nn, 1), dtype=np.int8)
    cdef i8[:] h = h_arr
    cdef i8[:] vals = vals_arr
    out = []
    cdef i8* hp = &h[0]
    cdef i8* vp = &vals[0]
    for idx in range(total):
        run(op, a0, a1, kids, bin_table, not_table, hp, vp)
        fixed = True
        for k in range(n):
            if vp[roots[k]] != hp[k]:
                fixed = False
                break
        if fixed:
            out.append(bytes(h_arr[:n].tobytes()))
        # odometer, last core sentence least significant
        k = n - 1
        while k >= 0:
            if hp[k] < 2:
                hp[k] += 1
                break
            hp[k] = 0
            k -= 1
    if not out:
        return np.empty((0, n), dtype=np.int8)
    return np.frombuffer(b"".join(out), dtype=np.int8).reshape(len(out), n).copy()


def evaluate_batch(const i8[:] op, const i32[:] a0, const i32[:] a1, const i32[:] kids,
                   const i32[:] roots, const i8[:, :] bin_table, const i8[:] not_table,
                   const i8[:, :] hyps):
    cdef Py_ssize_t m = hyps.shape[0], nn = op.shape[0], r
    result = np.zeros((m, nn), dtype=np.int8)
    cdef i8[:, :] res = result
    h_arr = np.zeros(max(hyps.shape[1], 1), dtype=np.int8)
    cdef i8[:] h = h_arr
    cdef Py_ssize_t k
    for r in range(m):
        for k in range(hyps.shape[1]):
            h[k] = hyps[r, k]
        if nn:
            run(op, a0, a1, kids, bin_table, not_table, &h[0], &res[r, 0])
    return result
