"""Vectorized block kernels for exhaustive bitmask sweeps.

Every exhaustive sweep below walks the integers 0..2^b - 1 in contiguous
blocks, evaluates a predicate or transform on each block as one numpy int64
vector, and consumes the per-block results in block order.  Workers only
change which thread evaluates a block, never the order results are merged,
so output is identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

BLOCK_SIZE = 1 << 18


def iter_blocks(total: int, block_size: int = BLOCK_SIZE):
    """Yield (lo, hi) spans covering range(total) in increasing order."""
    for lo in range(0, total, block_size):
        yield lo, min(lo + block_size, total)


def scan_blocks(total: int, block_fn, workers: int = 1, block_size: int = BLOCK_SIZE):
    """Yield block_fn(lo, hi) for consecutive blocks, in block order.

    With workers > 1 the blocks run on a thread pool (numpy releases the
    GIL on large array ops); results are still yielded in block order.
    """
    spans = list(iter_blocks(total, block_size))
    if workers <= 1 or len(spans) <= 1:
        for lo, hi in spans:
            yield block_fn(lo, hi)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(lambda span: block_fn(*span), spans)


def neighborhood_codes(closed_masks, lo: int, hi: int):
    """Subset codes and their N[S] bitmasks for every code in [lo, hi).

    Parameters
    ----------
    closed_masks : sequence of int
        Per-vertex closed-neighbourhood bitmasks (Python ints, < 2^62).
    lo, hi : int
        Half-open range of subset codes to evaluate.

    Returns
    -------
    (ids, ns) : pair of int64 arrays
        ids[i] is the subset code, ns[i] the bitmask of its closed
        neighbourhood union.
    """
    ids = np.arange(lo, hi, dtype=np.int64)
    ns = np.zeros(hi - lo, dtype=np.int64)
    for v, mask in enumerate(closed_masks):
        ns |= np.where((ids >> v) & 1 == 1, mask, 0)
    return ids, ns


def convex_flags(closed_masks, lo: int, hi: int):
    """Boolean vector: which subset codes in [lo, hi) are digitally convex.

    A subset S fails exactly when some vertex v outside S has N[v]
    contained in N[S], i.e. v keeps no private neighbour.
    """
    ids, ns = neighborhood_codes(closed_masks, lo, hi)
    ok = np.ones(hi - lo, dtype=bool)
    for v, mask in enumerate(closed_masks):
        outside = (ids >> v) & 1 == 0
        swallowed = (mask & ~ns) == 0
        ok &= ~(outside & swallowed)
    return ok


def mis_flags(closed_masks, lo: int, hi: int):
    """Boolean vector: which subset codes are maximal independent sets.

    For an independent set, maximality is equivalent to domination, so the
    test is: no member is adjacent to another member, and N[S] covers V.
    """
    ids, ns = neighborhood_codes(closed_masks, lo, hi)
    full = (1 << len(closed_masks)) - 1
    flags = ns == full
    for v, mask in enumerate(closed_masks):
        inside = (ids >> v) & 1 == 1
        hits_neighbor = (ids & (mask ^ (1 << v))) != 0
        flags &= ~(inside & hits_neighbor)
    return flags
