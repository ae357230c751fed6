"""Hot inner loops: table scans and bitmask subset sweeps.

Every kernel is written against numpy arrays in nopython-compatible style.
When numba is importable the kernels are jitted; setting PSG_NUMBA=0 in the
environment forces the plain numpy/Python path (same functions, undecorated).
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

import numpy as np


def _numba_requested() -> bool:
    flag = os.environ.get("PSG_NUMBA", "").strip().lower()
    if flag in {"0", "off", "false", "no"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_requested()


def _assoc_count(table):
    # reason codes: 0 = one side undefined, 1 = defined but unequal
    n = table.shape[0]
    count = 0
    for x in range(n):
        for y in range(n):
            xy = table[x, y]
            for z in range(n):
                yz = table[y, z]
                left = table[xy, z] if xy >= 0 else -1
                right = table[x, yz] if yz >= 0 else -1
                if (left >= 0) != (right >= 0):
                    count += 1
                elif left >= 0 and left != right:
                    count += 1
    return count


def _assoc_fill(table, out):
    n = table.shape[0]
    k = 0
    for x in range(n):
        for y in range(n):
            xy = table[x, y]
            for z in range(n):
                yz = table[y, z]
                left = table[xy, z] if xy >= 0 else -1
                right = table[x, yz] if yz >= 0 else -1
                if (left >= 0) != (right >= 0):
                    out[k, 0] = x
                    out[k, 1] = y
                    out[k, 2] = z
                    out[k, 3] = 0
                    k += 1
                elif left >= 0 and left != right:
                    out[k, 0] = x
                    out[k, 1] = y
                    out[k, 2] = z
                    out[k, 3] = 1
                    k += 1
    return k


def _closed_subset_count(required):
    # subsets M (as bitmasks) with required[i] & ~M == 0 for every i in M
    n = required.shape[0]
    total = 1 << n
    count = 0
    for m in range(1, total):
        ok = True
        for i in range(n):
            if (m >> i) & 1 and required[i] & ~m != 0:
                ok = False
                break
        if ok:
            count += 1
    return count


def _closed_subset_fill(required, out):
    n = required.shape[0]
    total = 1 << n
    k = 0
    for m in range(1, total):
        ok = True
        for i in range(n):
            if (m >> i) & 1 and required[i] & ~m != 0:
                ok = False
                break
        if ok:
            out[k] = m
            k += 1
    return k


if NUMBA_ENABLED:
    from numba import njit

    _assoc_count = njit(cache=True)(_assoc_count)
    _assoc_fill = njit(cache=True)(_assoc_fill)
    _closed_subset_count = njit(cache=True)(_closed_subset_count)
    _closed_subset_fill = njit(cache=True)(_closed_subset_fill)


def assoc_violations(table: np.ndarray) -> np.ndarray:
    """All weak-associativity violations of a table as rows (x, y, z, code)."""
    table = np.ascontiguousarray(table, dtype=np.int16)
    count = _assoc_count(table)
    out = np.empty((count, 4), dtype=np.int64)
    if count:
        _assoc_fill(table, out)
    return out


def closed_subsets(required: np.ndarray) -> np.ndarray:
    """Bitmasks of all nonempty subsets M with required[i] subset of M for i in M.

    With required[i] = "products that must stay inside once i is in", this
    enumerates left/right ideals, two-sided ideals or invariant point sets.
    """
    required = np.ascontiguousarray(required, dtype=np.int64)
    count = _closed_subset_count(required)
    out = np.empty(count, dtype=np.int64)
    if count:
        _closed_subset_fill(required, out)
    return out
