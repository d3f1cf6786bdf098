"""Local solvability of the genus-5 descent curve at the finite places.

Eliminating the Weierstrass hyperplane (v_6 = -(gamma_1 v_1 + ... + gamma_5
v_5)/gamma_6, which is legitimate because gamma_6 = f_6 != 0) turns the three
six-variable Kummer quadrics into a primitive integral system E_0, E_1, E_2
of quadrics in v_1..v_5 whose zero set in P^4 is isomorphic to Z_delta.  All
local decisions run on that system:

* good odd p: Z_delta has good reduction, so an F_p point (smooth, hence
  liftable) proves Q_p-solvability and F_p-emptiness refutes it; counting is
  delegated to the scan kernel;
* p = 2 and bad odd p: digit-by-digit refinement of primitive p-adic
  solutions, organized into the 5 charts by the first unit coordinate.  A
  point mod p^(2t+1) at which the Jacobian of (E_0, E_1, E_2) restricted to
  the free coordinates has a 3x3 minor of valuation <= t certifies a
  Z_p-point (multivariate Hensel); die-out of the refinement tree at level k
  certifies emptiness.

At p = 2 the refinement tree of a solvable twist can stay "flat" for many
levels, so the verdict is found depth-first on saturated nodes: each node
carries the affine quadrics restricted to its residue disk, divided by their
2-content and with F_2-dependent rows replaced by their integer combinations
until the three rows are independent mod 2.  On a saturated node, a digit in
{0,1}^4 making some row odd kills that subdisk outright, and when the rows'
linear parts are independent mod 2 any all-even digit certifies smoothness;
the witness is then refined along its branch until the Hensel criterion is
met on the original system.  When the verdict is Empty, the plain
breadth-first refinement (which provably dies out) is replayed to record the
spec-level depth; at p = 2 it is run on "lookahead" nodes (v mod 2^j with
E(v) = 0 mod 2^(j+1)), which give the same levels as the plain filtration
because E(v) mod 2^k only depends on v mod 2^(k-1).

Odd-prime searches start from the scan kernel's F_p points and expand a node
v at level k by solving grad E(v) . d = -E(v)/p^k over F_p (exact for k >= 1),
so only primes with p^4 within SEARCH_BUDGET are attempted; beyond it the
verdict is Unknown at depth 0.
"""

import itertools
from fractions import Fraction
from math import gcd

from sympy import factorint, primerange

from .descent import Genus5Model, genus5_model
from .exact import DenominatorDivisible, alg_is_unit, discriminant, reduce_mod_p
from .scan import scan_p4

SEARCH_BUDGET = 10**8  # largest p**4 an odd-prime search may start with

_DIGITS2 = tuple(itertools.product((0, 1), repeat=4))


class BadReduction(ValueError):
    """Reduction mod p is not defined or not smooth."""


# ---------------------------------------------------------------------------
# hyperplane elimination and integral quadric utilities


def eliminated_system(quadrics, hyperplane, linears=()):
    """Restrict six-variable quadrics (and extra linear forms) to the P^4 cut
    out by the hyperplane, eliminating the last coordinate.

    The hyperplane (l_1, ..., l_6) must have l_6 != 0; the substitution
    v_6 = -(l_1 v_1 + ... + l_5 v_5)/l_6, cleared of denominators, sends each
    quadric M to A^T M A with A the 6x5 matrix (l_6 * Id ; -l_1 .. -l_5) and
    each linear form m to A^T m.  Returns (quadrics, linears) as primitive
    integer 5x5 matrices / 5-vectors.
    """
    lam = [Fraction(x) for x in hyperplane]
    if lam[5] == 0:
        raise ValueError("hyperplane: last coordinate must be nonzero")
    A = [[Fraction(0)] * 5 for _ in range(6)]
    for i in range(5):
        A[i][i] = lam[5]
        A[5][i] = -lam[i]
    out_q = []
    for M in quadrics:
        M = [[Fraction(x) for x in row] for row in M]
        MA = [[sum(M[i][k] * A[k][j] for k in range(6)) for j in range(5)] for i in range(6)]
        E = [[sum(A[k][i] * MA[k][j] for k in range(6)) for j in range(5)] for i in range(5)]
        out_q.append(_primitive_matrix(E))
    out_l = []
    for m in linears:
        m = [Fraction(x) for x in m]
        w = [sum(A[k][i] * m[k] for k in range(6)) for i in range(5)]
        out_l.append(_primitive_vector(w))
    return out_q, out_l


def _primitive_matrix(E):
    den = 1
    for row in E:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    Ei = [[int(x * den) for x in row] for row in E]
    cont = 0
    for row in Ei:
        for x in row:
            cont = gcd(cont, x)
    if cont > 1:
        Ei = [[x // cont for x in row] for row in Ei]
    return tuple(tuple(row) for row in Ei)


def _primitive_vector(w):
    den = 1
    for x in w:
        den = den * x.denominator // gcd(den, x.denominator)
    wi = [int(x * den) for x in w]
    cont = 0
    for x in wi:
        cont = gcd(cont, x)
    if cont > 1:
        wi = [x // cont for x in wi]
    return tuple(wi)


def _model_system(model: Genus5Model):
    """The primitive integral quadrics of Z_delta in the coordinates v_1..v_5."""
    quads, _ = eliminated_system(model.Q[:3], model.gamma)
    return quads


def qeval(N, v):
    """v . N . v over the integers."""
    return sum(v[i] * sum(N[i][j] * v[j] for j in range(5)) for i in range(5))


def grad(N, v):
    """Gradient of v . N . v for symmetric N."""
    return [2 * sum(N[i][j] * v[j] for j in range(5)) for i in range(5)]


def val_p(x, p):
    """p-adic valuation of a nonzero integer, None for 0."""
    if x == 0:
        return None
    t = 0
    while x % p == 0:
        x //= p
        t += 1
    return t


def minors_min_val(E3, v, chart, p):
    """Minimal p-adic valuation over the 3x3 minors of the Jacobian of the
    three quadrics at v, restricted to the four coordinates != chart (the
    chart column is dependent by Euler's identity, so nothing is lost)."""
    free = [i for i in range(5) if i != chart]
    J = [[g[i] for i in free] for g in (grad(N, v) for N in E3)]
    best = None
    for a, b, c in itertools.combinations(range(4), 3):
        d = (J[0][a] * (J[1][b] * J[2][c] - J[1][c] * J[2][b])
             - J[0][b] * (J[1][a] * J[2][c] - J[1][c] * J[2][a])
             + J[0][c] * (J[1][a] * J[2][b] - J[1][b] * J[2][a]))
        t = val_p(d, p)
        if t is not None and (best is None or t < best):
            best = t
    return best


# ---------------------------------------------------------------------------
# verdict types


class SolvabilityVerdict:
    """Outcome at one prime: status "Solvable" (with a Hensel-certified
    witness), "Empty" (exhaustive refutation at the recorded depth), or
    "Unknown" (precision or budget exhausted at the recorded depth).

    A witness is a dict with keys chart, coords (the five hyperplane
    coordinates v_1..v_5 mod p^precision, leading coordinate 1), precision
    (the k of "solution mod p^k"), and minor_valuation (the t of the Hensel
    criterion 2t + 1 <= k)."""

    __slots__ = ("prime", "status", "witness", "depth")

    def __init__(self, prime, status, witness, depth):
        if status not in ("Solvable", "Empty", "Unknown"):
            raise ValueError(f"unknown status {status!r}")
        self.prime = prime
        self.status = status
        self.witness = witness
        self.depth = depth

    def __repr__(self):
        extra = f", witness@{self.prime}^{self.witness['precision']}" if self.witness else ""
        return f"SolvabilityVerdict(p={self.prime}, {self.status}, depth={self.depth}{extra})"


class ElsReport:
    """Local solvability over the finite places of prime_list.

    overall is False exactly when some verdict is Empty (a proof that
    Z_delta(Q) is empty); primes whose verdict is Unknown are listed in
    unresolved and do not flip overall.  The real place is never checked
    (real_place_checked is always False); callers must treat a True overall
    as "everywhere locally solvable at the tested finite places".
    """

    __slots__ = ("curve_id", "twist", "verdicts", "overall", "unresolved",
                 "real_place_checked")

    def __init__(self, curve_id, twist, verdicts):
        self.curve_id = curve_id
        self.twist = tuple(twist)
        self.verdicts = tuple(verdicts)
        self.overall = not any(v.status == "Empty" for v in verdicts)
        self.unresolved = tuple(v.prime for v in verdicts if v.status == "Unknown")
        self.real_place_checked = False

    def failing_primes(self):
        return tuple(v.prime for v in self.verdicts if v.status == "Empty")

    def __repr__(self):
        return (f"ElsReport({self.curve_id}, overall={self.overall}, "
                f"empty={list(self.failing_primes())}, unresolved={list(self.unresolved)})")


class ReducedModel:
    """The model of Z_delta over F_p for an odd prime of good reduction: the
    three quadrics as symmetric 6x6 matrices with entries in [0, p), plus the
    hyperplane(s) cutting the curve out of P^5."""

    __slots__ = ("p", "Q", "hyperplanes")

    def __init__(self, p, Q, hyperplanes):
        if len(Q) != 3:
            raise ValueError("ReducedModel needs exactly three quadrics")
        if not 1 <= len(hyperplanes) <= 2:
            raise ValueError("ReducedModel needs one or two hyperplanes")
        for M in Q:
            for i in range(6):
                for j in range(6):
                    x = M[i][j]
                    if not 0 <= x < p:
                        raise ValueError("entries must lie in [0, p)")
                    if M[i][j] != M[j][i]:
                        raise ValueError("quadric matrices must be symmetric")
        for h in hyperplanes:
            if any(not 0 <= x < p for x in h):
                raise ValueError("entries must lie in [0, p)")
        self.p = p
        self.Q = tuple(tuple(tuple(row) for row in M) for M in Q)
        self.hyperplanes = tuple(tuple(h) for h in hyperplanes)

    @classmethod
    def from_model(cls, model: Genus5Model, p):
        """Reduce a genus-5 model mod an odd prime of good reduction; raises
        BadReduction when p is even, divides disc(f) * f_6, meets a
        denominator, or makes delta a non-unit."""
        if p == 2:
            raise BadReduction("p = 2: good reduction is only guaranteed at odd primes")
        curve = model.curve
        try:
            bad = discriminant(curve.f) * curve.f6
            if reduce_mod_p(bad, p).value == 0:
                raise BadReduction(f"p = {p} divides disc(f) * f6")
            delta_p = reduce_mod_p(model.delta, p)
            quads = tuple(
                tuple(tuple(reduce_mod_p(Fraction(x + y, 2), p).value for x, y in zip(row, col))
                      for row, col in zip(M, zip(*M)))
                for M in model.Q[:3]
            )
            hyper = tuple(reduce_mod_p(x, p).value for x in model.gamma)
        except DenominatorDivisible as exc:
            raise BadReduction(f"p = {p} divides a denominator: {exc}") from exc
        unit, _ = alg_is_unit(delta_p)
        if not unit:
            raise BadReduction(f"p = {p}: twist is not a unit mod p")
        return cls(p, quads, (hyper,))


# ---------------------------------------------------------------------------
# good odd primes: point counting over F_p


def prime_list(curve):
    """The finite places to test: 2, the odd primes dividing
    numerator(disc(f) * f_6) or any coefficient denominator (of f or alpha),
    and every odd prime <= 97 (the largest prime with p + 1 - 10*sqrt(p) <= 0,
    so that a good reduction could still have no F_p points)."""
    bad = discriminant(curve.f) * curve.f6
    primes = {2}
    primes.update(q for q in factorint(abs(bad.numerator)) if q != 2)
    dens = [c.denominator for c in curve.f.coeffs] + [curve.alpha.denominator]
    for d in dens:
        primes.update(q for q in factorint(d) if q != 2)
    primes.update(primerange(3, 98))
    return sorted(primes)


def count_points_fp(model: Genus5Model, p, threads=1):
    """#Z_delta(F_p) for an odd prime of good reduction, counting projective
    points once via leading-coordinate-1 representatives of the hyperplane
    section in P^4."""
    reduced = ReducedModel.from_model(model, p)
    quads, _ = eliminated_system(reduced.Q, reduced.hyperplanes[0])
    return scan_p4(p, quads, mode="count", threads=threads)


# ---------------------------------------------------------------------------
# p = 2: saturated depth-first verdict search


def _affine_from_chart(E, chart):
    """E restricted to the disk v = e_chart + iota(y): an affine quadric
    (A, b, c) in the 4 free coordinates y, those below the chart scaled by 2
    (a coordinate before the first unit one is divisible by p)."""
    free = [i for i in range(5) if i != chart]
    scale = [2 if i < chart else 1 for i in free]
    A = [[E[free[a]][free[b]] * scale[a] * scale[b] for b in range(4)] for a in range(4)]
    b = [2 * E[chart][free[a]] * scale[a] for a in range(4)]
    c = E[chart][chart]
    return A, b, c


def _s_eval(S, u):
    A, b, c = S
    acc = c
    for i in range(4):
        if u[i]:
            acc += b[i]
            for j in range(4):
                if u[j]:
                    acc += A[i][j]
    return acc


def _s_child(S, u):
    """The affine quadric on the subdisk y = u + 2z, in the coordinate z."""
    A, b, c = S
    c2 = _s_eval(S, u)
    b2 = [2 * (b[i] + 2 * sum(A[i][j] * u[j] for j in range(4))) for i in range(4)]
    A2 = [[4 * A[i][j] for j in range(4)] for i in range(4)]
    return A2, b2, c2


def _s_add(S, T):
    return ([[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(S[0], T[0])],
            [x + y for x, y in zip(S[1], T[1])],
            S[2] + T[2])


def _content2(S):
    A, b, c = S
    g = abs(c)
    for x in b:
        g = gcd(g, x)
    for row in A:
        for x in row:
            g = gcd(g, x)
    if g == 0:
        return None  # identically zero
    return val_p(g, 2) if g % 2 == 0 else 0


def _s_divide(S, m):
    A, b, c = S
    d = 1 << m
    return ([[x // d for x in row] for row in A], [x // d for x in b], c // d)


def _s_mask(S):
    """The 15 mod-2 bits of an affine quadric as an F_2 row vector: the
    upper-triangle entries of A + A^T, then b, then c."""
    A, b, c = S
    m = 0
    bit = 1
    for i in range(4):
        for j in range(i, 4):
            v = A[i][j] + (A[j][i] if j != i else 0)
            if v & 1:
                m |= bit
            bit <<= 1
    for x in b:
        if x & 1:
            m |= bit
        bit <<= 1
    if c & 1:
        m |= bit
    return m


def _saturate(rows):
    """Primitivize the rows and replace F_2-dependent ones by their integer
    combination (which then gains 2-content) until independent mod 2; rows
    that become identically zero are dropped.  Returns (rows, done_flag); the
    flag is False only if 200 passes did not stabilize (the lattice index
    halves each pass, so this never happens for honest inputs)."""
    rows = list(rows)
    for _ in range(200):
        out = []
        for S in rows:
            m = _content2(S)
            if m is None:
                continue
            out.append(_s_divide(S, m) if m else S)
        rows = out
        basis = {}
        dep = None
        for i, S in enumerate(rows):
            mask = _s_mask(S)
            combo = 1 << i
            while mask:
                piv = mask & -mask
                if piv in basis:
                    bm, bc = basis[piv]
                    mask ^= bm
                    combo ^= bc
                else:
                    basis[piv] = (mask, combo)
                    break
            if not mask:
                dep = combo
                break
        if dep is None:
            return rows, True
        idxs = [i for i in range(len(rows)) if dep >> i & 1]
        acc = rows[idxs[0]]
        for i in idxs[1:]:
            acc = _s_add(acc, rows[i])
        rows[idxs[-1]] = acc
    return rows, False


def _jac_full_rank_f2(rows):
    """Whether the three rows' linear parts are independent mod 2."""
    if len(rows) != 3:
        return False
    basis = {}
    for S in rows:
        mask = 0
        for t, x in enumerate(S[1]):
            if x & 1:
                mask |= 1 << t
        while mask:
            piv = mask & -mask
            if piv in basis:
                mask ^= basis[piv]
            else:
                basis[piv] = mask
                break
        if not mask:
            return False
    return True


class _Search2:
    """Depth-first p = 2 verdict search over saturated nodes."""

    def __init__(self, E3, max_depth=20, node_cap=100000):
        self.E3 = E3
        self.max_depth = max_depth
        self.node_cap = node_cap
        self.nodes = 0
        self.capped = False

    def run(self):
        """("solvable", witness) / ("empty", None) / ("unknown", None)."""
        for chart in range(5):
            rows = [_affine_from_chart(E, chart) for E in self.E3]
            res = self._descend(chart, rows, 0,
                                [1 if i == chart else 0 for i in range(5)])
            if res is not None:
                return ("solvable", res)
        if self.capped:
            return ("unknown", None)
        return ("empty", None)

    def _descend(self, chart, rows, j, v):
        self.nodes += 1
        if self.nodes > self.node_cap or j >= self.max_depth:
            self.capped = True
            return None
        rows, sat = _saturate(rows)
        smooth = sat and _jac_full_rank_f2(rows)
        free = [i for i in range(5) if i != chart]
        scale = [2 if i < chart else 1 for i in free]
        for u in _DIGITS2:
            if any(_s_eval(S, u) & 1 for S in rows):
                continue
            v2 = list(v)
            for t in range(4):
                v2[free[t]] += u[t] * (1 << j) * scale[t]
            if smooth:
                return self._refine(chart, rows, u, j, v2)
            res = self._descend(chart, [_s_child(S, u) for S in rows], j + 1, v2)
            if res is not None:
                return res
        return None

    def _refine(self, chart, rows, u, j, v):
        """Follow the smooth branch until the original system satisfies the
        Hensel criterion; returns the witness dict."""
        free = [i for i in range(5) if i != chart]
        scale = [2 if i < chart else 1 for i in free]
        cur_u, cur_j, cur_v = u, j, v
        for _ in range(200):
            t = minors_min_val(self.E3, cur_v, chart, 2)
            if t is not None:
                k = 2 * t + 1
                if (cur_j + 1 >= k
                        and all(qeval(E, cur_v) % (1 << k) == 0 for E in self.E3)):
                    return {"chart": chart,
                            "coords": tuple(x % (1 << k) for x in cur_v),
                            "precision": k,
                            "minor_valuation": t}
            rows, _ = _saturate([_s_child(S, cur_u) for S in rows])
            nxt = None
            for u2 in _DIGITS2:
                if all(_s_eval(S, u2) % 2 == 0 for S in rows):
                    nxt = u2
                    break
            if nxt is None:
                raise RuntimeError("smooth branch lost during refinement")
            cur_j += 1
            v2 = list(cur_v)
            for i in range(4):
                v2[free[i]] += nxt[i] * (1 << cur_j) * scale[i]
            cur_u, cur_v = nxt, v2
        raise RuntimeError("witness refinement did not converge")


def _lookahead_bfs2(E3, max_depth=20, width_cap=200000, trace=None):
    """Plain p = 2 breadth-first refinement on lookahead nodes (v mod 2^j
    with E(v) = 0 mod 2^(j+1), spec level k = j + 1); used to record the
    die-out depth once emptiness is already proved.  Returns (status, depth).
    When trace is a list, the full node set of every level is appended to it
    (for the independent dense-enumeration soundness check)."""
    nodes = []
    for chart in range(5):
        for rest in itertools.product(range(2), repeat=4 - chart):
            v = tuple([0] * chart + [1] + list(rest))
            if all(qeval(N, v) % 4 == 0 for N in E3):
                nodes.append((chart, v))
    if trace is not None:
        trace.append(frozenset(nodes))
    j = 1
    while nodes:
        k = j + 1
        if k >= max_depth:
            return ("unknown", k)
        pj = 1 << j
        nxt = []
        for chart, v in nodes:
            free = [i for i in range(5) if i != chart]
            for digits in itertools.product(range(2), repeat=4):
                w = list(v)
                for i, d in zip(free, digits):
                    w[i] += d * pj
                if all(qeval(N, w) % (pj * 4) == 0 for N in E3):
                    nxt.append((chart, tuple(w)))
        nodes = nxt
        if trace is not None:
            trace.append(frozenset(nodes))
        if len(nodes) > width_cap:
            return ("width-cap", j + 1)
        j += 1
    return ("empty", j + 1)


# ---------------------------------------------------------------------------
# odd primes: breadth-first refinement seeded by the scanner


def _affine_solutions(J, rhs, p):
    """Solutions d in F_p^4 of J d = rhs (J 3x4), as (particular, null basis),
    or None when inconsistent."""
    rows = [[J[i][j] % p for j in range(4)] + [rhs[i] % p] for i in range(3)]
    piv_cols = []
    r = 0
    for col in range(4):
        pr = next((rr for rr in range(r, 3) if rows[rr][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for rr in range(3):
            if rr != r and rows[rr][col]:
                f = rows[rr][col]
                rows[rr] = [(x - f * y) % p for x, y in zip(rows[rr], rows[r])]
        piv_cols.append(col)
        r += 1
        if r == 3:
            break
    if any(rows[rr][4] for rr in range(r, 3)):
        return None
    part = [0, 0, 0, 0]
    for i, c in enumerate(piv_cols):
        part[c] = rows[i][4]
    basis = []
    for fc in (c for c in range(4) if c not in piv_cols):
        vec = [0, 0, 0, 0]
        vec[fc] = 1
        for i, c in enumerate(piv_cols):
            vec[c] = -rows[i][fc] % p
        basis.append(vec)
    return part, basis


def _search_odd(E3, p, max_depth=20, width_cap=200000, threads=1):
    """Breadth-first refinement at an odd prime: level-k nodes are chart
    representatives v mod p^k with E(v) = 0 mod p^k.  Level 1 comes from the
    scan kernel; a node expands by the digits d solving
    grad E(v) . d = -E(v)/p^k mod p (exact for k >= 1).  Returns
    (status, depth, witness_or_None)."""
    points = scan_p4(p, E3, mode="collect", threads=threads)
    nodes = [(v.index(1), tuple(v)) for v in points]
    k = 1
    while nodes:
        for chart, v in nodes:
            t = minors_min_val(E3, v, chart, p)
            if t is not None and 2 * t + 1 <= k:
                pk = p**k
                return ("solvable", k, {"chart": chart,
                                        "coords": tuple(x % pk for x in v),
                                        "precision": k,
                                        "minor_valuation": t})
        if k >= max_depth:
            return ("unknown", k, None)
        if len(nodes) > width_cap:
            return ("width-cap", k, None)
        pk = p**k
        nxt = []
        for chart, v in nodes:
            free = [i for i in range(5) if i != chart]
            J = [[g[i] for i in free] for g in (grad(N, v) for N in E3)]
            rhs = [-(qeval(N, v) // pk) for N in E3]
            sols = _affine_solutions(J, rhs, p)
            if sols is None:
                continue
            part, basis = sols
            for coeffs in itertools.product(range(p), repeat=len(basis)):
                d = list(part)
                for c, vec in zip(coeffs, basis):
                    if c:
                        d = [(x + c * y) % p for x, y in zip(d, vec)]
                w = list(v)
                for i, di in zip(free, d):
                    w[i] += di * pk
                nxt.append((chart, tuple(w)))
        nodes = nxt
        k += 1
    return ("empty", k, None)


# ---------------------------------------------------------------------------
# verdicts and reports


def solvable_at_p(model: Genus5Model, p, max_depth=20, threads=1):
    """Decide Z_delta(Q_p) by p-adic search on the hyperplane-eliminated
    system.  Odd primes with p^4 > SEARCH_BUDGET are not attempted and return
    Unknown at depth 0."""
    E3 = _model_system(model)
    if p == 2:
        verdict, witness = _Search2(E3, max_depth=max_depth).run()
        if verdict == "solvable":
            return SolvabilityVerdict(2, "Solvable", witness, witness["precision"])
        if verdict == "empty":
            status, depth = _lookahead_bfs2(E3, max_depth=max_depth)
            if status == "empty":
                return SolvabilityVerdict(2, "Empty", None, depth)
            # emptiness is proved, but not to a recordable level within caps
            return SolvabilityVerdict(2, "Unknown", None, max_depth)
        return SolvabilityVerdict(2, "Unknown", None, max_depth)
    if p**4 > SEARCH_BUDGET:
        return SolvabilityVerdict(p, "Unknown", None, 0)
    status, depth, witness = _search_odd(E3, p, max_depth=max_depth, threads=threads)
    if status == "solvable":
        return SolvabilityVerdict(p, "Solvable", witness, depth)
    if status == "empty":
        return SolvabilityVerdict(p, "Empty", None, depth)
    return SolvabilityVerdict(p, "Unknown", None, depth)


def _good_prime_verdict(model, p, n, threads):
    """Turn a good-reduction count into a verdict, spot-checking smoothness
    of one counted point (it must hold: good reduction plus Euler's identity
    make every F_p point a valuation-0 witness)."""
    if n == 0:
        return SolvabilityVerdict(p, "Empty", None, 1)
    E3 = _model_system(model)
    v = scan_p4(p, E3, mode="witness", threads=threads)
    chart = v.index(1)
    if minors_min_val(E3, v, chart, p) == 0:
        witness = {"chart": chart, "coords": tuple(v), "precision": 1,
                   "minor_valuation": 0}
        return SolvabilityVerdict(p, "Solvable", witness, 1)
    return None  # smoothness spot-check failed; fall back to the search


def els_report(curve, twist, max_depth=20, primes=None, threads=1, curve_id=None):
    """Local solvability over prime_list(curve) (or an explicit prime list):
    good odd primes by counting, p = 2 and bad primes by p-adic search.  The
    real place is not checked."""
    model = genus5_model(curve, twist)
    if curve_id is None:
        curve_id = f"y^2 = {curve.f}, alpha = {curve.alpha}"
    verdicts = []
    for p in (prime_list(curve) if primes is None else sorted(primes)):
        verdict = None
        if p != 2:
            try:
                n = count_points_fp(model, p, threads=threads)
            except BadReduction:
                pass
            else:
                verdict = _good_prime_verdict(model, p, n, threads)
        if verdict is None:
            verdict = solvable_at_p(model, p, max_depth=max_depth, threads=threads)
        verdicts.append(verdict)
    return ElsReport(curve_id, model.twist.delta.coeffs, verdicts)
