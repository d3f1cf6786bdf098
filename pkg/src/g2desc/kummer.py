"""Twisted desingularized Kummer surface in P(L) = P^5.

Given y^2 = f(x) with a rational Weierstrass x-coordinate alpha and a twist
delta in L* (L = Q[X]/<f>), the surface is cut out by the quadrics
Q_0 = Q_1 = Q_2 = 0, where Q_j is the quadratic form v^T M_j v of the
symmetric matrix M_j = sum_i f6 * d_i * R^(i+j) * T in the dual basis
v_1..v_6 of the g-basis g_i(X) = sum_m f_{i+m} X^m.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import (
    AlgElem,
    QuotAlgebra,
    UniPoly,
    alg_is_unit,
    alg_mul,
    discriminant,
    eval_hom,
)


class InvariantViolation(ValueError):
    """A domain-type invariant failed; the message names the invariant."""


# ---------------------------------------------------------------------------
# small dense matrices as tuples of tuples


def mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)) for i in range(n)
    )


def mat_vec(A, v):
    return tuple(sum(A[i][j] * v[j] for j in range(len(v))) for i in range(len(A)))


def mat_add(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, c):
    return tuple(tuple(c * x for x in row) for row in A)


def mat_identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_inverse(A):
    """Inverse of a square matrix over Q (Gauss-Jordan)."""
    n = len(A)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for k in range(n):
        pivot = next(i for i in range(k, n) if m[i][k] != 0)
        m[k], m[pivot] = m[pivot], m[k]
        inv = Fraction(1) / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                c = m[i][k]
                m[i] = [x - c * y for x, y in zip(m[i], m[k])]
    return tuple(tuple(row[n:]) for row in m)


def qform(M, v):
    """Quadratic form v^T M v (no factor 1/2)."""
    n = len(v)
    return sum(v[i] * sum(M[i][j] * v[j] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# domain types


class SexticCurve:
    """y^2 = f(x) with deg f = 6, f squarefree, and f(alpha) = 0."""

    def __init__(self, f: UniPoly, alpha):
        alpha = Fraction(alpha)
        if f.degree != 6:
            raise InvariantViolation("degree: f must have degree exactly 6")
        if eval_hom(f, alpha) != 0:
            raise InvariantViolation("alpha not a root: f(alpha) != 0")
        if discriminant(f) == 0:
            raise InvariantViolation("not squarefree: discriminant(f) = 0")
        self.f = f
        self.alpha = alpha
        self.L = QuotAlgebra(f)
        self._Tinv = None

    @property
    def f6(self) -> Fraction:
        return Fraction(self.f.coeff(6))

    def coeff(self, i: int) -> Fraction:
        return Fraction(self.f.coeff(i))

    def g_basis_poly(self, i: int) -> UniPoly:
        """g_i(X) = sum_m f_{i+m} X^m for i = 1..6."""
        return UniPoly([self.f.coeff(i + m) for m in range(7 - i)])

    def dual_from_power(self, coords):
        """Coordinates in the dual v-basis of an element given in the power basis."""
        if self._Tinv is None:
            self._Tinv = mat_inverse(hankel_T(self))
        return mat_vec(self._Tinv, tuple(coords))

    def power_from_dual(self, v):
        """Power-basis coordinates of sum_i v_i g_i: the product T.v."""
        return mat_vec(hankel_T(self), tuple(v))

    def __repr__(self):
        return f"SexticCurve({list(self.f.coeffs)}, alpha={self.alpha})"


class Twist:
    """A unit delta = sum d_i X^i of L*."""

    def __init__(self, curve: SexticCurve, delta):
        if isinstance(delta, AlgElem):
            if delta.parent != curve.L:
                raise InvariantViolation("twist not in L: wrong parent algebra")
        else:
            delta = curve.L.elem([Fraction(c) for c in delta])
        ok, _ = alg_is_unit(delta)
        if not ok:
            raise InvariantViolation("twist not a unit: gcd(delta, f) != 1")
        self.curve = curve
        self.delta = delta

    def __repr__(self):
        return f"Twist({list(self.delta.coeffs)})"


class KummerModel:
    """The six symmetric quadric matrices Q_0..Q_5; Q_0..Q_2 cut out the surface,
    Q_3..Q_5 feed the duplication map."""

    def __init__(self, curve: SexticCurve, twist: Twist, Q):
        self.curve = curve
        self.twist = twist
        self.Q = tuple(Q)


# ---------------------------------------------------------------------------
# operations


def companion_R(curve: SexticCurve):
    """Companion matrix of f/f6: subdiagonal ones, last column -f_i/f6."""
    f6 = curve.f6
    rows = [[Fraction(0)] * 6 for _ in range(6)]
    for i in range(5):
        rows[i + 1][i] = Fraction(1)
    for i in range(6):
        rows[i][5] = -curve.coeff(i) / f6
    return tuple(tuple(r) for r in rows)


def hankel_T(curve: SexticCurve):
    """T[i][j] = f_{i+j+1} (0-indexed), zero when i+j+1 > 6."""
    return tuple(
        tuple(curve.coeff(i + j + 1) if i + j + 1 <= 6 else Fraction(0) for j in range(6))
        for i in range(6)
    )


def _quadric_matrices(curve: SexticCurve, twist: Twist, jmax: int):
    """M_j = sum_i f6 d_i R^(i+j) T for j = 0..jmax-1, sharing the powers of R."""
    f6 = curve.f6
    T = hankel_T(curve)
    R = companion_R(curve)
    powers = [mat_identity(6)]
    for _ in range(5 + jmax - 1):
        powers.append(mat_mul(R, powers[-1]))
    d = twist.delta.coeffs
    out = []
    for j in range(jmax):
        M = tuple(tuple(Fraction(0) for _ in range(6)) for _ in range(6))
        for i in range(6):
            if d[i] == 0:
                continue
            M = mat_add(M, mat_scale(mat_mul(powers[i + j], T), f6 * d[i]))
        out.append(M)
    return out


def quadric_Q(curve: SexticCurve, twist: Twist, j: int):
    """The symmetric matrix of Q_j^(delta) in the dual basis v_1..v_6."""
    if not 0 <= j <= 5:
        raise ValueError("j must be in 0..5")
    return _quadric_matrices(curve, twist, j + 1)[j]


def form_C(curve: SexticCurve, twist: Twist, j: int, xi: AlgElem) -> Fraction:
    """Coefficient of X^j in the reduced representative of delta * xi^2 in L."""
    if not 0 <= j <= 5:
        raise ValueError("j must be in 0..5")
    prod = alg_mul(twist.delta, alg_mul(xi, xi))
    return prod.coeffs[j]


def kummer_model(curve: SexticCurve, twist: Twist) -> KummerModel:
    """Bundle Q_0..Q_5 for the twisted desingularized Kummer surface."""
    return KummerModel(curve, twist, _quadric_matrices(curve, twist, 6))
