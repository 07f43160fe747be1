# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled table kernels.

Same contract as ``_pytables``: honest mex recursion over the move rules,
no closed forms.  The mex uses a stamp array (stamp[v] == cell counter
means value v is an option of the current cell) so nothing is cleared
between cells.
"""

import numpy as np


def one_coin_values(int count, bint variant_b=False):
    """Values of One(0..count-1); see the pure twin for the recursion."""
    out = np.zeros(count, dtype=np.int32)
    if variant_b or count == 0:
        return out
    cdef int[::1] vals = out
    cdef unsigned char[::1] seen = np.zeros(count + 2, dtype=np.uint8)
    cdef int r
    cdef int ptr = 0
    for r in range(count):
        vals[r] = ptr
        seen[ptr] = 1
        while seen[ptr]:
            ptr += 1
    return out


def two_coin_table(int bound, bint variant_b=False):
    """Dense Two(x, y) value table, -1 off the strict upper triangle."""
    cdef int size = bound + 1
    arr = np.full((size, size), -1, dtype=np.int32)
    one_arr = one_coin_values(size, variant_b)
    cdef int[:, ::1] g = arr
    cdef int[::1] one = one_arr
    diag_arr = np.zeros(size, dtype=np.int32)
    cdef int[::1] diag = diag_arr
    # option values of (x, y) never exceed 2y + 2
    stamp_arr = np.full(2 * size + 3, -1, dtype=np.int32)
    cdef int[::1] stamp = stamp_arr
    cdef int x, y, i, mex
    cdef int cell = 0
    for y in range(1, size):
        for x in range(y):
            for i in range(x):
                stamp[g[i, y]] = cell       # slide the left coin
            for i in range(x + 1, y):
                stamp[g[x, i]] = cell       # slide the right coin
            for i in range(x):
                stamp[diag[i]] = cell       # push depth x-i, both coins stay on
            stamp[one[0]] = cell            # push depth x+1: survivor on One(0)
            stamp[0] = cell                 # push depth x+2: Empty
            if variant_b:
                stamp[one[y]] = cell        # outright removal: One(y)
            mex = 0
            while stamp[mex] == cell:
                mex += 1
            g[x, y] = mex
            if y == x + 1:
                diag[x] = mex
            cell += 1
    return arr
