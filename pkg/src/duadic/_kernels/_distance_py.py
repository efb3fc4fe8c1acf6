"""Pure-Python (numpy-assisted) exhaustive minimum-weight enumeration.

Messages walk an odometer over F_q^k \\ {0}; each single-digit transition
adds one precomputed step vector to the running codeword, so the work per
message is O(n) regardless of k.  The compiled backend in _distance_cy.pyx
implements exactly the same contract; results must be bit-identical.
"""

from __future__ import annotations

import numpy as np

__all__ = ["min_weight_prime", "min_weight_table"]


def min_weight_prime(
    rows: np.ndarray, p: int, total: int, stop_at: int = 0
) -> tuple[int, int]:
    """Minimum weight over ``total`` odometer increments in GF(p), p prime.

    ``rows`` is the (k, n) generator matrix of residues.  In a prime field
    the index successor always differs by +1, so every digit transition
    (wrapping included) adds the same row.  Returns (best weight, number of
    messages visited); stops early once best <= stop_at.
    """
    rows = np.asarray(rows, dtype=np.int64)
    k, n = rows.shape
    c = np.zeros(n, dtype=np.int64)
    digits = [0] * k
    best = n + 1
    cnt = 0
    while cnt < total:
        cnt += 1
        i = 0
        while True:
            c += rows[i]
            c %= p
            digits[i] += 1
            if digits[i] == p:
                digits[i] = 0
                i += 1
            else:
                break
        w = int(np.count_nonzero(c))
        if w < best:
            best = w
            if best <= stop_at:
                break
    return best, cnt


def min_weight_table(
    steps: np.ndarray, add_table: np.ndarray, total: int, stop_at: int = 0
) -> tuple[int, int]:
    """Minimum weight via dense add-table lookups (extension fields).

    ``steps[i][v]`` is the codeword delta when message digit i moves from
    index v to index (v+1) mod q; ``add_table`` is the (q, q) index-level
    addition table.  Returns (best weight, messages visited).
    """
    steps = np.asarray(steps, dtype=np.int32)
    add_table = np.asarray(add_table, dtype=np.int32)
    k, q, n = steps.shape
    c = np.zeros(n, dtype=np.int32)
    digits = [0] * k
    best = n + 1
    cnt = 0
    while cnt < total:
        cnt += 1
        i = 0
        while True:
            v = digits[i]
            c = add_table[c, steps[i, v]]
            if v + 1 == q:
                digits[i] = 0
                i += 1
            else:
                digits[i] = v + 1
                break
        w = int(np.count_nonzero(c))
        if w < best:
            best = w
            if best <= stop_at:
                break
    return best, cnt
