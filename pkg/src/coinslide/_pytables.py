"""Pure-Python table kernels (numpy-vectorized fallback).

Same contract as the compiled kernel in ``_ctables``: fill dense value
tables bottom-up by literal mex recursion over the move rules.  Nothing
in here assumes any closed form; these tables are the oracle side of the
oracle-vs-formula cross-checks.
"""

from __future__ import annotations

import numpy as np


def one_coin_values(count: int, variant_b: bool = False) -> np.ndarray:
    """Values of One(0..count-1) by honest mex recursion.

    Under variant B every lone coin is frozen, so each state is terminal
    and the mex of no options is 0.  Under variant A the successors of
    One(r) are exactly One(0..r-1), so the mex over that prefix can be
    maintained incrementally with a moving pointer.
    """
    out = np.zeros(count, dtype=np.int32)
    if variant_b or count == 0:
        return out
    seen = np.zeros(count + 2, dtype=bool)
    ptr = 0  # least value not among out[0..r-1]
    for r in range(count):
        out[r] = ptr
        seen[ptr] = True
        while seen[ptr]:
            ptr += 1
    return out


def two_coin_table(bound: int, variant_b: bool = False) -> np.ndarray:
    """Dense table of Two(x, y) values for 0 <= x < y <= bound.

    Entry [x, y] holds the value; entries off the strict upper triangle
    are -1.  Fill order is y ascending then x ascending, so every
    successor's value is already present: left slides live lower in the
    same column, right slides earlier in the same row, and pushes land on
    the adjacent-pair diagonal.
    """
    size = bound + 1
    g = np.full((size, size), -1, dtype=np.int32)
    diag = np.zeros(size, dtype=np.int32)  # diag[i] = value of Two(i, i+1)
    one = one_coin_values(size, variant_b)
    for y in range(1, size):
        col = g[:, y]
        for x in range(y):
            # push depth x+1 strands the survivor on One(0); depth x+2 clears the strap
            edge = [one[0], 0]
            if variant_b:
                edge.append(one[y])  # outright removal leaves One(y)
            opts = np.concatenate(
                (col[:x], g[x, x + 1 : y], diag[:x], np.array(edge, dtype=np.int32))
            )
            present = np.zeros(opts.size + 2, dtype=bool)
            present[opts[opts < present.size]] = True
            v = int(np.argmin(present))
            g[x, y] = v
            if y == x + 1:
                diag[x] = v
    return g
