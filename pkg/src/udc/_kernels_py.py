"""Pure-Python per-strip stabbing, used when the compiled kernel is unavailable."""

import numpy as np


def stab_strip_ranges(lo, hi, starts):
    """Greedy stabs for segments grouped into contiguous strip ranges.

    Same contract as the compiled version: strip ``s`` owns positions
    ``starts[s]:starts[s+1]``; the result lists, strip by strip, the positions
    whose ``lo`` becomes a stab, stabs descending. Only one strip at a time is
    turned into Python objects, which keeps memory linear in the input.
    """
    lo, hi, starts = np.asarray(lo), np.asarray(hi), np.asarray(starts)
    n = len(lo)
    if len(hi) != n:
        raise ValueError("lo and hi must have equal length")
    if len(starts) < 1 or starts[0] != 0 or starts[-1] != n:
        raise ValueError("starts must run from 0 to len(lo)")
    if (np.diff(starts) < 0).any():
        raise ValueError("starts must be nondecreasing")
    chunks = []
    for a, b in zip(starts[:-1].tolist(), starts[1:].tolist()):
        if a == b:
            continue
        order = a + np.argsort(-lo[a:b], kind="stable")
        lo_l, hi_l = lo[order].tolist(), hi[order].tolist()
        cur = lo_l[0]
        picks = [0]
        for j in range(1, b - a):
            if hi_l[j] < cur:
                cur = lo_l[j]
                picks.append(j)
        chunks.append(order[picks])
    if not chunks:
        return np.empty(0, dtype=np.int64)
    return np.concatenate(chunks).astype(np.int64)
