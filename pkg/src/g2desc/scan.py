"""Chart-by-chart scan of P^4(F_p) for common zeros of quadratic and linear
forms.

Points are enumerated in a fixed deterministic order: charts in increasing
order (chart c is the locus v_0 = ... = v_{c-1} = 0, v_c = 1), then the free
coordinates lexicographically with the leftmost most significant.  The order,
and hence every result, is independent of the backend and the thread count.

The kernel is the compiled module ``_scan`` when the extension built,
otherwise the numpy fallback ``_scan_py``; set G2DESC_NO_EXT=1 to force the
fallback.  Both expose the same range protocol (count_range, witness_range,
collect_range over prefix slots), so threads just split the prefix space of
each chart into contiguous chunks and combine chunk results in order.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from .exact import FpElem, ParentMismatch, reduce_mod_p

if os.environ.get("G2DESC_NO_EXT") == "1":
    from . import _scan_py as _kernel
    HAVE_C = False
else:
    try:
        from . import _scan as _kernel
        HAVE_C = True
    except ImportError:
        from . import _scan_py as _kernel
        HAVE_C = False

P_MAX = _kernel.P_MAX


def active_kernel():
    """Name of the kernel backing scan_p4: "compiled" or "python"."""
    return "compiled" if HAVE_C else "python"


def _to_residue(x, p):
    if isinstance(x, FpElem):
        if x.p != p:
            raise ParentMismatch(f"residue mod {x.p} used in a mod-{p} scan")
        return x.value
    if isinstance(x, Fraction):
        return reduce_mod_p(x, p).value
    return int(x) % p


def _normalize(p, quadrics, linears):
    quads = np.zeros((len(quadrics), 5, 5), dtype=np.int64)
    for k, mat in enumerate(quadrics):
        rows = list(mat)
        if len(rows) != 5 or any(len(list(r)) != 5 for r in rows):
            raise ValueError("quadric matrices must be 5x5")
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                quads[k, i, j] = _to_residue(x, p)
    lins = np.zeros((len(linears), 5), dtype=np.int64)
    for i, vec in enumerate(linears):
        vec = list(vec)
        if len(vec) != 5:
            raise ValueError("linear forms must have 5 coordinates")
        for j, x in enumerate(vec):
            lins[i, j] = _to_residue(x, p)
    return quads, lins


def _decode(p, chart, q, inner):
    v = [0, 0, 0, 0, 0]
    v[chart] = 1
    if chart == 0:
        v[1], v[2] = divmod(q, p)
    elif chart == 1:
        v[2] = q
    if chart <= 2:
        v[3], v[4] = divmod(inner, p)
    else:
        v[4] = inner
    return tuple(v)


def _chunks(total, threads):
    n = min(threads, total)
    bounds = [total * i // n for i in range(n + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(n) if bounds[i] < bounds[i + 1]]


def _run_ordered(calls, threads):
    """Evaluate thunks, in parallel when asked, returning results in order."""
    if threads <= 1 or len(calls) <= 1:
        return [call() for call in calls]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(call) for call in calls]
        return [fut.result() for fut in futures]


def _collect_chunk(p, quads, lins, chart, q0, q1, cap):
    """Chunk collect with buffer-and-retry; returns list of (prefix, inner)."""
    guess = 4096 if cap is None else cap
    while True:
        buf = np.empty((guess, 2), dtype=np.int64)
        total = _kernel.collect_range(p, quads, lins, chart, q0, q1, buf)
        if total <= guess:
            return [(int(a), int(b)) for a, b in buf[:total]]
        if cap is not None:
            return [(int(a), int(b)) for a, b in buf[:cap]]
        guess = total


def scan_p4(p, quadrics, linears=(), mode="count", threads=1, limit=None):
    """Scan P^4(F_p) for common zeros of the given forms.

    Quadrics are 5x5 matrices N (the form is v.N.v, no symmetry assumed),
    linears are 5-vectors; entries may be ints, Fractions with denominator
    prime to p, or FpElems mod p.  mode "count" returns the number of
    projective points (leading-coordinate-1 representatives), "witness" the
    first point in scan order or None, "collect" the list of the first
    ``limit`` points (all of them if limit is None).
    """
    p = int(p)
    if p < 2:
        raise ValueError("p must be at least 2")
    if p > P_MAX:
        raise ValueError(f"p exceeds the {active_kernel()} kernel limit {P_MAX}")
    if mode not in ("count", "witness", "collect"):
        raise ValueError(f"unknown scan mode {mode!r}")
    threads = max(1, int(threads))
    quads, lins = _normalize(p, quadrics, linears)

    count = 0
    found = []
    for chart in range(4):
        pieces = _chunks(_kernel.prefix_count(p, chart), threads)
        if mode == "count":
            calls = [
                (lambda a=a, b=b: _kernel.count_range(p, quads, lins, chart, a, b))
                for a, b in pieces
            ]
            count += sum(_run_ordered(calls, threads))
        elif mode == "witness":
            calls = [
                (lambda a=a, b=b: _kernel.witness_range(p, quads, lins, chart, a, b))
                for a, b in pieces
            ]
            for hit in _run_ordered(calls, threads):
                if hit is not None:
                    return _decode(p, chart, hit[0], hit[1])
        else:
            cap = None if limit is None else limit
            calls = [
                (lambda a=a, b=b: _collect_chunk(p, quads, lins, chart, a, b, cap))
                for a, b in pieces
            ]
            for part in _run_ordered(calls, threads):
                for q, inner in part:
                    found.append(_decode(p, chart, q, inner))
            if limit is not None and len(found) >= limit:
                return found[:limit]

    # chart 4: the single point (0:0:0:0:1).
    last = all(int(quads[k, 4, 4]) % p == 0 for k in range(quads.shape[0])) and all(
        int(lins[i, 4]) % p == 0 for i in range(lins.shape[0])
    )
    point = (0, 0, 0, 0, 1)
    if mode == "count":
        return count + (1 if last else 0)
    if mode == "witness":
        return point if last else None
    if last:
        found.append(point)
    return found if limit is None else found[:limit]
