"""Pure-Python scan kernel: numpy-vectorized evaluation over the last block
of free coordinates.

Shares the range protocol of the compiled kernel ``_scan``.  Chart ``c`` of
P^4(F_p) is the locus v_0 = ... = v_{c-1} = 0, v_c = 1 with 4 - c free
coordinates; it is split into ``prefix_count(p, c) = p**max(2 - c, 0)``
prefixes, each fixing all free coordinates except the final block (v_3, v_4
for charts 0..2, v_4 alone for chart 3).  The block is evaluated on a
precomputed grid.  Chart 4 is a single point, handled by the dispatcher.

Hits are reported as (prefix, inner) pairs with inner = v_3 * p + v_4 for
charts 0..2 and inner = v_4 for chart 3, so (chart, prefix, inner) ascending
is exactly lexicographic point order.

Limits: p <= P_MAX (grid memory and int64 headroom).  Quadric and linear
coefficient arrays must be int64, reduced into [0, p).
"""

import numpy as np

P_MAX = 2048

_GRIDS = {}


def prefix_count(p, chart):
    """Number of prefix slots for a chart (the range that may be split)."""
    return p ** max(2 - chart, 0)


def _grids(p):
    got = _GRIDS.get(p)
    if got is None:
        s = np.arange(p, dtype=np.int64)
        s2 = (s * s) % p
        st = (s[:, None] * s[None, :]) % p
        got = (s, s2, st)
        if len(_GRIDS) > 8:
            _GRIDS.clear()
        _GRIDS[p] = got
    return got


def _base_vector(p, chart, q):
    """The point of the prefix slot q with the final block zeroed."""
    v = [0, 0, 0, 0, 0]
    v[chart] = 1
    if chart == 0:
        v[1], v[2] = divmod(q, p)
    elif chart == 1:
        v[2] = q
    return v


def _mask2(p, quads, lins, v, grids):
    """Boolean p x p grid (rows v_3, cols v_4) of common zeros at prefix v."""
    s, s2, st = grids
    vn = np.asarray(v, dtype=np.int64)
    mask = np.ones((p, p), dtype=bool)
    for N in quads:
        c0 = int(vn @ N @ vn) % p
        c1 = int((N[:, 3] + N[3, :]) @ vn) % p
        c2 = int((N[:, 4] + N[4, :]) @ vn) % p
        c3 = int(N[3, 3]) % p
        c4 = int(N[3, 4] + N[4, 3]) % p
        c5 = int(N[4, 4]) % p
        acc = (c0 + c1 * s[:, None] + c3 * s2[:, None]
               + c2 * s[None, :] + c5 * s2[None, :] + c4 * st) % p
        mask &= acc == 0
        if not mask.any():
            return mask
    for l in lins:
        l0 = int(l @ vn) % p
        acc = (l0 + int(l[3]) * s[:, None] + int(l[4]) * s[None, :]) % p
        mask &= acc == 0
        if not mask.any():
            return mask
    return mask


def _mask1(p, quads, lins):
    """Boolean p-vector over v_4 for chart 3 (base point (0,0,0,1,0))."""
    s, s2, _ = _grids(p)
    vn = np.asarray([0, 0, 0, 1, 0], dtype=np.int64)
    mask = np.ones(p, dtype=bool)
    for N in quads:
        c0 = int(vn @ N @ vn) % p
        c2 = int((N[:, 4] + N[4, :]) @ vn) % p
        c5 = int(N[4, 4]) % p
        acc = (c0 + c2 * s + c5 * s2) % p
        mask &= acc == 0
        if not mask.any():
            return mask
    for l in lins:
        l0 = int(l @ vn) % p
        acc = (l0 + int(l[4]) * s) % p
        mask &= acc == 0
        if not mask.any():
            return mask
    return mask


def count_range(p, quads, lins, chart, q0, q1):
    """Number of common zeros with prefix slot in [q0, q1)."""
    if chart == 3:
        if q0 > 0:
            return 0
        return int(_mask1(p, quads, lins).sum())
    grids = _grids(p)
    total = 0
    for q in range(q0, q1):
        mask = _mask2(p, quads, lins, _base_vector(p, chart, q), grids)
        total += int(mask.sum())
    return total


def witness_range(p, quads, lins, chart, q0, q1):
    """First hit (prefix, inner) in scan order within [q0, q1), else None."""
    if chart == 3:
        if q0 > 0:
            return None
        mask = _mask1(p, quads, lins)
        if mask.any():
            return (0, int(mask.argmax()))
        return None
    grids = _grids(p)
    for q in range(q0, q1):
        mask = _mask2(p, quads, lins, _base_vector(p, chart, q), grids)
        if mask.any():
            return (q, int(mask.argmax()))
    return None


def collect_range(p, quads, lins, chart, q0, q1, out):
    """Write hits as (prefix, inner) rows into out (in scan order) until it is
    full, but keep counting; returns the total number of hits in the range."""
    cap = out.shape[0]
    total = 0
    if chart == 3:
        if q0 > 0:
            return 0
        idx = np.flatnonzero(_mask1(p, quads, lins))
        stop = min(len(idx), cap)
        out[:stop, 0] = 0
        out[:stop, 1] = idx[:stop]
        return len(idx)
    grids = _grids(p)
    for q in range(q0, q1):
        mask = _mask2(p, quads, lins, _base_vector(p, chart, q), grids)
        idx = np.flatnonzero(mask)
        if total < cap and len(idx):
            take = idx[: cap - total]
            out[total : total + len(take), 0] = q
            out[total : total + len(take), 1] = take
        total += len(idx)
    return total
