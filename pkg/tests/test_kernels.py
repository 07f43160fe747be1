"""Kernel cross-checks.

The reference implementation here is a third, independent route: a plain
dict-memoized mex recursion written directly over core.successors.  Both
table kernels must reproduce it exactly, and each other.
"""

import os
import subprocess
import sys

import numpy as np
import pytest

from coinslide import tables
from coinslide.core import Empty, One, StrapState, Two, Variant, successors


def reference_grundy(state: StrapState, variant: Variant, memo: dict) -> int:
    key = state
    if key in memo:
        return memo[key]
    values = {reference_grundy(s, variant, memo) for _, s in successors(state, variant)}
    g = 0
    while g in values:
        g += 1
    memo[key] = g
    return g


@pytest.mark.parametrize("variant", [Variant.A, Variant.B])
@pytest.mark.parametrize("backend_name", tables.available_backends())
def test_two_coin_table_matches_reference(variant, backend_name):
    bound = 40
    table = tables.raw_two_coin_table(bound, variant, backend_name)
    memo: dict = {}
    for x in range(bound):
        for y in range(x + 1, bound + 1):
            assert table[x, y] == reference_grundy(Two(x, y), variant, memo), (x, y)


@pytest.mark.parametrize("variant", [Variant.A, Variant.B])
@pytest.mark.parametrize("backend_name", tables.available_backends())
def test_one_coin_values_match_reference(variant, backend_name):
    vals = tables.raw_one_coin_values(50, variant, backend_name)
    memo: dict = {}
    for r in range(50):
        assert vals[r] == reference_grundy(One(r), variant, memo), r


def test_table_shape_and_mask():
    t = tables.raw_two_coin_table(12, Variant.A, "python")
    assert t.shape == (13, 13)
    assert t.dtype == np.int32
    lower = np.tril_indices(13)
    assert (t[lower] == -1).all()
    assert (t[np.triu_indices(13, k=1)] >= 1).all()


def test_bound_zero_and_empty():
    t = tables.raw_two_coin_table(0, Variant.A, "python")
    assert t.shape == (1, 1) and t[0, 0] == -1
    assert tables.raw_one_coin_values(0, Variant.A, "python").size == 0


@pytest.mark.skipif("compiled" not in tables.available_backends(), reason="no compiled kernel")
@pytest.mark.parametrize("variant", [Variant.A, Variant.B])
def test_backends_agree(variant):
    a = tables.raw_two_coin_table(100, variant, "compiled")
    b = tables.raw_two_coin_table(100, variant, "python")
    assert (a == b).all()
    oa = tables.raw_one_coin_values(200, variant, "compiled")
    ob = tables.raw_one_coin_values(200, variant, "python")
    assert (oa == ob).all()


def test_cached_tables_grow_and_are_read_only():
    t1 = tables.two_coin_table(10)
    assert t1.shape[0] >= 11
    assert not t1.flags.writeable
    t2 = tables.two_coin_table(t1.shape[0] + 5)
    assert t2.shape[0] >= t1.shape[0] + 6
    # values survive regrowth
    n = t1.shape[0]
    assert (t2[:n, :n] == t1).all()
    ones = tables.one_coin_values(30)
    assert not ones.flags.writeable
    assert ones.shape[0] >= 30


def _spawn(code: str, backend_env: str) -> subprocess.CompletedProcess:
    env = dict(os.environ, COINSLIDE_BACKEND=backend_env)
    return subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )


def test_backend_env_override():
    probe = "from coinslide import tables; print(tables.backend())"
    assert _spawn(probe, "python").stdout.strip() == "python"
    if "compiled" in tables.available_backends():
        assert _spawn(probe, "compiled").stdout.strip() == "compiled"


def test_backend_env_override_rejects_unknown():
    result = _spawn("import coinslide.tables", "fortran")
    assert result.returncode != 0
    assert "COINSLIDE_BACKEND" in result.stderr
