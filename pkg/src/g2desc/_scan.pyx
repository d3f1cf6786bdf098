# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled scan kernel: forward-difference sweep along the last coordinate.

Same range protocol as _scan_py (see that module's docstring).  For each
fixed choice of all coordinates but v_4, every quadric restricts to
a*t^2 + b*t + c in t = v_4; the sweep maintains the value and its first
difference, so each point costs two additions and two conditional
subtractions per form.  The GIL is released inside the loops, so disjoint
ranges can run on real threads.

Limits: p < 2**28 (keeps every intermediate product inside signed 64-bit).
Quadric and linear coefficient arrays must be int64, reduced into [0, p).
"""

from libc.stdint cimport int64_t

P_MAX = (1 << 28) - 1

DEF MAXQ = 8
DEF MAXL = 4


cdef inline long long _qeval5(int64_t[:, :, ::1] Q, Py_ssize_t k,
                              long long* v, long long p) noexcept nogil:
    # Q_k(v) mod p; reduce each product of two factors before the third.
    cdef long long acc = 0
    cdef int i, j
    for i in range(5):
        if v[i] != 0:
            for j in range(5):
                acc += ((Q[k, i, j] * v[i]) % p) * v[j]
    return acc % p


cdef inline long long _cross4(int64_t[:, :, ::1] Q, Py_ssize_t k,
                              long long* v, long long p) noexcept nogil:
    # coefficient of t in Q_k(v + t*e_4): sum_i (Q[i,4] + Q[4,i]) v_i.
    cdef long long acc = 0
    cdef int i
    for i in range(5):
        if v[i] != 0:
            acc += ((Q[k, i, 4] + Q[k, 4, i]) % p) * v[i]
    return acc % p


cdef inline void _decode_prefix(long long p, int chart, long long q,
                                long long* v) noexcept nogil:
    v[0] = 0; v[1] = 0; v[2] = 0; v[3] = 0; v[4] = 0
    v[chart] = 1
    if chart == 0:
        v[1] = q / p
        v[2] = q % p
    elif chart == 1:
        v[2] = q


cdef inline void _sweep_init(long long p, int64_t[:, :, ::1] Q, Py_ssize_t nq,
                             int64_t[:, ::1] L, Py_ssize_t nl, long long* v,
                             long long* cur, long long* slope, long long* inc,
                             long long* lcur, long long* linc) noexcept nogil:
    cdef Py_ssize_t k, i
    cdef long long a, b
    for k in range(nq):
        a = Q[k, 4, 4] % p
        b = _cross4(Q, k, v, p)
        cur[k] = _qeval5(Q, k, v, p)
        slope[k] = (a + b) % p
        inc[k] = (2 * a) % p
    for i in range(nl):
        lcur[i] = (L[i, 0] * v[0] + L[i, 1] * v[1] + L[i, 2] * v[2]
                   + L[i, 3] * v[3]) % p
        linc[i] = L[i, 4] % p


cdef inline void _sweep_step(long long p, Py_ssize_t nq, Py_ssize_t nl,
                             long long* cur, long long* slope, long long* inc,
                             long long* lcur, long long* linc) noexcept nogil:
    cdef Py_ssize_t k, i
    for k in range(nq):
        cur[k] += slope[k]
        if cur[k] >= p:
            cur[k] -= p
        slope[k] += inc[k]
        if slope[k] >= p:
            slope[k] -= p
    for i in range(nl):
        lcur[i] += linc[i]
        if lcur[i] >= p:
            lcur[i] -= p


cdef inline bint _is_hit(Py_ssize_t nq, Py_ssize_t nl,
                         long long* cur, long long* lcur) noexcept nogil:
    cdef Py_ssize_t k, i
    for k in range(nq):
        if cur[k] != 0:
            return False
    for i in range(nl):
        if lcur[i] != 0:
            return False
    return True


cdef void _check(long long p, int64_t[:, :, ::1] Q, int64_t[:, ::1] L, int chart):
    if Q.shape[0] > MAXQ:
        raise ValueError("too many quadrics for compiled kernel")
    if L.shape[0] > MAXL:
        raise ValueError("too many linear forms for compiled kernel")
    if Q.shape[1] != 5 or Q.shape[2] != 5 or (L.shape[0] and L.shape[1] != 5):
        raise ValueError("forms must have 5 coordinates")
    if p < 2 or p > P_MAX:
        raise ValueError("p out of range for compiled kernel")
    if chart < 0 or chart > 3:
        raise ValueError("chart must be 0..3")


def prefix_count(p, chart):
    """Number of prefix slots for a chart (the range that may be split)."""
    return p ** max(2 - chart, 0)


def count_range(long long p, int64_t[:, :, ::1] Q, int64_t[:, ::1] L,
                int chart, long long q0, long long q1):
    """Number of common zeros with prefix slot in [q0, q1)."""
    _check(p, Q, L, chart)
    cdef Py_ssize_t nq = Q.shape[0], nl = L.shape[0]
    cdef long long v[5]
    cdef long long cur[MAXQ]
    cdef long long slope[MAXQ]
    cdef long long inc[MAXQ]
    cdef long long lcur[MAXL]
    cdef long long linc[MAXL]
    cdef long long q, s, t, total = 0
    cdef long long smax = p if chart <= 2 else 1
    with nogil:
        for q in range(q0, q1):
            _decode_prefix(p, chart, q, v)
            for s in range(smax):
                if chart <= 2:
                    v[3] = s
                _sweep_init(p, Q, nq, L, nl, v, cur, slope, inc, lcur, linc)
                for t in range(p):
                    if _is_hit(nq, nl, cur, lcur):
                        total += 1
                    _sweep_step(p, nq, nl, cur, slope, inc, lcur, linc)
    return total


def witness_range(long long p, int64_t[:, :, ::1] Q, int64_t[:, ::1] L,
                  int chart, long long q0, long long q1):
    """First hit (prefix, inner) in scan order within [q0, q1), else None."""
    _check(p, Q, L, chart)
    cdef Py_ssize_t nq = Q.shape[0], nl = L.shape[0]
    cdef long long v[5]
    cdef long long cur[MAXQ]
    cdef long long slope[MAXQ]
    cdef long long inc[MAXQ]
    cdef long long lcur[MAXL]
    cdef long long linc[MAXL]
    cdef long long q, s, t
    cdef long long hit_q = -1, hit_inner = -1
    cdef long long smax = p if chart <= 2 else 1
    with nogil:
        for q in range(q0, q1):
            _decode_prefix(p, chart, q, v)
            for s in range(smax):
                if chart <= 2:
                    v[3] = s
                _sweep_init(p, Q, nq, L, nl, v, cur, slope, inc, lcur, linc)
                for t in range(p):
                    if _is_hit(nq, nl, cur, lcur):
                        hit_q = q
                        hit_inner = s * p + t if chart <= 2 else t
                        break
                    _sweep_step(p, nq, nl, cur, slope, inc, lcur, linc)
                if hit_q >= 0:
                    break
            if hit_q >= 0:
                break
    if hit_q < 0:
        return None
    return (hit_q, hit_inner)


def collect_range(long long p, int64_t[:, :, ::1] Q, int64_t[:, ::1] L,
                  int chart, long long q0, long long q1, int64_t[:, ::1] out):
    """Write hits as (prefix, inner) rows into out (in scan order) until it is
    full, but keep counting; returns the total number of hits in the range."""
    _check(p, Q, L, chart)
    cdef Py_ssize_t nq = Q.shape[0], nl = L.shape[0]
    cdef long long cap = out.shape[0]
    cdef long long v[5]
    cdef long long cur[MAXQ]
    cdef long long slope[MAXQ]
    cdef long long inc[MAXQ]
    cdef long long lcur[MAXL]
    cdef long long linc[MAXL]
    cdef long long q, s, t, total = 0
    cdef long long smax = p if chart <= 2 else 1
    with nogil:
        for q in range(q0, q1):
            _decode_prefix(p, chart, q, v)
            for s in range(smax):
                if chart <= 2:
                    v[3] = s
                _sweep_init(p, Q, nq, L, nl, v, cur, slope, inc, lcur, linc)
                for t in range(p):
                    if _is_hit(nq, nl, cur, lcur):
                        if total < cap:
                            out[total, 0] = q
                            out[total, 1] = s * p + t if chart <= 2 else t
                        total += 1
                    _sweep_step(p, nq, nl, cur, slope, inc, lcur, linc)
    return total
