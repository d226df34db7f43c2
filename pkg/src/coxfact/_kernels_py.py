"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``."""

import numpy as np


def dp_step(f, table):
    """out[w] = sum_j f[table[w, j]], with Python integers (no overflow)."""
    get = f.__getitem__
    return [sum(map(get, row)) for row in table]


def lehmer_rank(perms):
    perms = np.asarray(perms, dtype=np.int64)
    m, n = perms.shape
    code = np.zeros(m, dtype=np.int64)
    for i in range(n):
        smaller = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        code = code * (n - i) + smaller
    return code
