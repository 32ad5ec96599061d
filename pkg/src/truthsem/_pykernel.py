"""Numpy kernel: evaluates a compiled program on many hypotheses at once.

Same contract as the compiled ``_ckernel`` module.  Values are TV codes
(0 = undetermined, 1 = false, 2 = true).
"""

import numpy as np

OP_CONST, OP_HYP, OP_NOT, OP_AND, OP_OR, OP_IMP, OP_IFF, OP_ALL, OP_ANY = range(9)
CHUNK = 1 << 16


def _run(op, a0, a1, kids, bin_table, not_table, hyps):
    """Return an (n_nodes, m) array of node values for the m hypothesis rows."""
    m = hyps.shape[0]
    vals = np.empty((len(op), m), dtype=np.int8)
    for i in range(len(op)):
        code = op[i]
        if code == OP_CONST:
            vals[i] = a0[i]
        elif code == OP_HYP:
            vals[i] = hyps[:, a0[i]]
        elif code == OP_NOT:
            vals[i] = not_table[vals[a0[i]]]
        elif code <= OP_IFF:
            table = bin_table[code - OP_AND]
            vals[i] = table[vals[a0[i]] * 3 + vals[a1[i]]]
        else:
            table = bin_table[0 if code == OP_ALL else 1]
            acc = np.full(m, 2 if code == OP_ALL else 1, dtype=np.int8)
            for j in range(a0[i], a0[i] + a1[i]):
                acc = table[acc * 3 + vals[kids[j]]]
            vals[i] = acc
    return vals


def _decode(start, stop, n):
    idx = np.arange(start, stop, dtype=np.int64)
    hyps = np.empty((stop - start, n), dtype=np.int8)
    for k in range(n - 1, -1, -1):
        hyps[:, k] = idx % 3
        idx //= 3
    return hyps


def find_fixed_points(op, a0, a1, kids, roots, bin_table, not_table):
    n = len(roots)
    total = 3 ** n
    found = []
    for start in range(0, total, CHUNK):
        stop = min(total, start + CHUNK)
        hyps = _decode(start, stop, n)
        vals = _run(op, a0, a1, kids, bin_table, not_table, hyps)
        mask = np.all(vals[roots] == hyps.T, axis=0) if n else np.ones(stop - start, bool)
        found.append(hyps[mask])
    return np.concatenate(found) if found else np.empty((0, n), dtype=np.int8)


def evaluate_batch(op, a0, a1, kids, roots, bin_table, not_table, hyps):
    return np.ascontiguousarray(_run(op, a0, a1, kids, bin_table, not_table, hyps).T)
