"""Descent curves and maps.

Z_delta is the genus-5 intersection of the twisted Kummer quadrics with the
hyperplane gamma_1 v_1 + ... + gamma_6 v_6 = 0, where gamma_i = g_i(alpha)
are the ascending coefficients of f/(x - alpha).  The twisted duplication
map to P^1, the quartic form Y (a resultant against h = g/(x - w) over the
etale algebra B = Q[w]/<g>), the genus-1 quotient Y(delta) y^2 = h(alpha)
H(x, z), the map phi, fibers of the duplication map, and the
complete-the-square model change all live here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .exact import (
    AlgElem,
    FpElem,
    QuotAlgebra,
    UniPoly,
    discriminant,
    eval_hom,
    poly_div_exact,
    reduce_mod_p,
    resultant_monic,
)
from .kummer import (
    KummerModel,
    SexticCurve,
    Twist,
    hankel_T,
    kummer_model,
    mat_vec,
    qform,
)


class ZeroPoint(ValueError):
    """All six projective coordinates vanish."""


class NotOnCurve(ValueError):
    """The point does not satisfy the three quadrics."""


class Indeterminate(ArithmeticError):
    """Both duplication-map coordinates vanish (impossible for genuine points)."""


class OmegaEqualsAlpha(ValueError):
    """Fibers over alpha are not linear sections."""


class OmegaNotRoot(ValueError):
    """omega is not a root of f in the working ring."""


class NotDegreeSix(ValueError):
    """q^2 + 4r has no degree-6 dehomogenization in either coordinate order."""


class NotSquarefree(ValueError):
    """q^2 + 4r is not squarefree."""


# ---------------------------------------------------------------------------
# projective points


class P1Point:
    """Point of P^1(Q) in canonical form: coprime integers, den >= 0, inf = (1:0)."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        if num == 0 and den == 0:
            raise ValueError("(0:0) is not a point of P^1")
        if den == 0:
            num = 1
        else:
            g = gcd(num, den)
            num //= g
            den //= g
            if den < 0:
                num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def from_pair(cls, num, den) -> "P1Point":
        """Canonical point (num : den) from a pair of rationals."""
        num, den = Fraction(num), Fraction(den)
        m = num.denominator * den.denominator
        return cls(int(num * m), int(den * m))

    @classmethod
    def from_value(cls, x) -> "P1Point":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def infinity(cls) -> "P1Point":
        return cls(1, 0)

    def is_infinity(self) -> bool:
        return self.den == 0

    def reciprocal(self) -> "P1Point":
        return P1Point(self.den, self.num)

    def to_str(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    @classmethod
    def from_str(cls, s: str) -> "P1Point":
        s = s.strip()
        if s in ("inf", "oo", "infinity"):
            return cls.infinity()
        x = Fraction(s)
        return cls(x.numerator, x.denominator)

    def __eq__(self, other):
        return (
            isinstance(other, P1Point) and self.num == other.num and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"P1Point({self.to_str()!r})"


class ProjPoint4:
    """Point of P^4 in the coordinates v_1..v_5; at least one coordinate nonzero."""

    __slots__ = ("v",)

    def __init__(self, coords):
        v = tuple(Fraction(c) for c in coords)
        if len(v) != 5:
            raise ValueError("expected 5 coordinates")
        if all(c == 0 for c in v):
            raise ZeroPoint("all coordinates vanish")
        self.v = v

    def __eq__(self, other):
        return isinstance(other, ProjPoint4) and self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"ProjPoint4({[str(c) for c in self.v]})"


def as_point(p) -> ProjPoint4:
    return p if isinstance(p, ProjPoint4) else ProjPoint4(p)


# ---------------------------------------------------------------------------
# the genus-5 curve Z_delta


class Genus5Model:
    """Kummer model plus the hyperplane vector gamma (gamma_6 = f6 != 0)."""

    def __init__(self, kummer: KummerModel, gamma):
        self.kummer = kummer
        self.gamma = tuple(gamma)

    @property
    def curve(self) -> SexticCurve:
        return self.kummer.curve

    @property
    def twist(self) -> Twist:
        return self.kummer.twist

    @property
    def Q(self):
        return self.kummer.Q

    @property
    def delta(self) -> AlgElem:
        return self.kummer.twist.delta


def genus5_model(curve: SexticCurve, twist: Twist) -> Genus5Model:
    """Z_delta: the Kummer model together with gamma = coefficients of f/(x - alpha)."""
    if not isinstance(twist, Twist):
        twist = Twist(curve, twist)
    x_minus_alpha = UniPoly([-curve.alpha, Fraction(1)])
    gamma = poly_div_exact(curve.f, x_minus_alpha).coeffs
    return Genus5Model(kummer_model(curve, twist), gamma)


def extend_point(model: Genus5Model, P) -> tuple:
    """The full dual-v vector (v_1..v_6) with v_6 from the hyperplane equation."""
    P = as_point(P)
    gamma = model.gamma
    v6 = -sum(gamma[i] * P.v[i] for i in range(5)) / gamma[5]
    return P.v + (v6,)


def lift_point(model: Genus5Model, P) -> AlgElem:
    """The lift xi in L (power basis) of a P^4 point, using the hyperplane to
    reconstruct v_6; satisfies xi(alpha) = 0."""
    six = extend_point(model, P)
    if all(c == 0 for c in six):
        raise ZeroPoint("all six coordinates vanish")
    power = model.curve.power_from_dual(six)
    return model.curve.L.elem(power)


def is_on_curve(model: Genus5Model, P) -> bool:
    """Whether Q_0, Q_1, Q_2 all vanish at the hyperplane extension of P."""
    six = extend_point(model, P)
    return all(qform(model.Q[j], six) == 0 for j in range(3))


def _dup_pair(model: Genus5Model, six) -> tuple:
    """Unreduced duplication-map coordinates (numerator, denominator)."""
    curve = model.curve
    f5, f6 = curve.coeff(5), curve.f6
    q3 = qform(model.Q[3], six)
    q4 = qform(model.Q[4], six)
    return (-(f5 + f6 * curve.alpha) * q3 - f6 * q4, f6 * q3)


def dup_map(model: Genus5Model, P) -> P1Point:
    """The twisted duplication map to P^1; (1:0) encodes infinity."""
    if not is_on_curve(model, P):
        raise NotOnCurve(f"{P!r} does not satisfy the quadrics")
    six = extend_point(model, P)
    num, den = _dup_pair(model, six)
    if num == 0 and den == 0:
        raise Indeterminate("both duplication coordinates vanish")
    return P1Point.from_pair(num, den)


# ---------------------------------------------------------------------------
# the genus-1 layer over B = Q[w]/<g>


class Genus1Model:
    """Y(delta) y^2 = h(alpha) H(x, z) over B, with h = g/(x - w) of degree 4
    and H the homogenization of h."""

    def __init__(self, B: QuotAlgebra, h: UniPoly, Ydelta: AlgElem, h_alpha: AlgElem):
        self.B = B
        self.h = h
        self.Ydelta = Ydelta
        self.h_alpha = h_alpha
        self.H = tuple(
            h.coeff(i) if not isinstance(h.coeff(i), int) else B.elem([h.coeff(i)])
            for i in range(5)
        )

    def H_eval(self, u, v):
        """H(u, v) = sum_i h_i u^i v^(4-i)."""
        return sum(self.H[i] * (Fraction(u) ** i * Fraction(v) ** (4 - i)) for i in range(5))


class WeightedPoint:
    """Point (u : s : v) of the weighted projective plane P(1,2,1) over B, with
    u, v rational; (u, s, v) ~ (t u, t^2 s, t v)."""

    __slots__ = ("u", "s", "v")

    def __init__(self, u, s: AlgElem, v):
        self.u = Fraction(u)
        self.s = s
        self.v = Fraction(v)
        if self.u == 0 and self.v == 0:
            raise ValueError("(u, v) = (0, 0) is not allowed")

    def __eq__(self, other):
        return (
            isinstance(other, WeightedPoint)
            and self.u == other.u
            and self.v == other.v
            and self.s == other.s
        )

    def __repr__(self):
        return f"WeightedPoint({self.u}, {list(self.s.coeffs)}, {self.v})"


def _monic_h(curve: SexticCurve, h: UniPoly) -> UniPoly:
    """h/f6: monic quartic over B (the leading coefficient of h is the constant f6)."""
    return h * (Fraction(1) / curve.f6)


def _as_B_poly(B: QuotAlgebra, xi: AlgElem) -> UniPoly:
    """The representative of xi (an element of L) as a polynomial with B-constant
    coefficients."""
    return UniPoly([B.elem([c]) for c in xi.coeffs])


def quartic_Y(model: Genus5Model, genus1: Genus1Model, xi: AlgElem) -> AlgElem:
    """Y(xi) = product of xi over the four roots of h, as a resultant against
    the degree-<=5 representative of xi; multiplicative on L."""
    hm = _monic_h(model.curve, genus1.h)
    return resultant_monic(hm, _as_B_poly(genus1.B, xi), 5)


def genus1_model(curve: SexticCurve, twist: Twist) -> Genus1Model:
    """Construct the genus-1 quotient data over B."""
    if not isinstance(twist, Twist):
        twist = Twist(curve, twist)
    x_minus_alpha = UniPoly([-curve.alpha, Fraction(1)])
    g = poly_div_exact(curve.f, x_minus_alpha)
    B = QuotAlgebra(g)
    w = B.gen()
    gB = UniPoly([B.elem([c]) for c in g.coeffs])
    h = poly_div_exact(gB, UniPoly([-w, B.one()]))
    h_alpha = eval_hom(h, curve.alpha) + B.zero()
    hm = _monic_h(curve, h)
    Ydelta = resultant_monic(hm, _as_B_poly(B, twist.delta), 5)
    return Genus1Model(B, h, Ydelta, h_alpha)


def on_genus1_curve(genus1: Genus1Model, point: WeightedPoint) -> bool:
    """Whether Y(delta) s^2 = h(alpha) H(u, v) holds in B."""
    return genus1.Ydelta * (point.s * point.s) == genus1.h_alpha * genus1.H_eval(
        point.u, point.v
    )


def phi_map(model: Genus5Model, genus1: Genus1Model, P) -> WeightedPoint:
    """phi(P) = (u : f6^3 Y(xi) : v) with (u : v) the unreduced duplication pair."""
    if not is_on_curve(model, P):
        raise NotOnCurve(f"{P!r} does not satisfy the quadrics")
    six = extend_point(model, P)
    num, den = _dup_pair(model, six)
    xi = lift_point(model, P)
    f6 = model.curve.f6
    s = (f6**3) * quartic_Y(model, genus1, xi)
    return WeightedPoint(num, s, den)


# ---------------------------------------------------------------------------
# fibers of the duplication map


class FiberSystem:
    """The fiber over a root omega of f: three quadrics plus the two linear
    forms ev_alpha and ev_omega, as a subscheme of P^5.

    Over Q the entries are Fractions (p is None); over F_p they are integers
    in [0, p)."""

    def __init__(self, quadrics, linears, p):
        self.quadrics = tuple(quadrics)
        self.linears = tuple(linears)
        self.p = p


def _g_values(curve: SexticCurve, omega):
    """(g_1(omega), ..., g_6(omega)) via the tail polynomials g_i."""
    return tuple(eval_hom(curve.g_basis_poly(i), omega) for i in range(1, 7))


def fiber_system(model: Genus5Model, omega) -> FiberSystem:
    """Linear-section system cutting out the fiber of the duplication map over
    a root omega != alpha of f (given in Q or in F_p)."""
    curve = model.curve
    if isinstance(omega, FpElem):
        p = omega.p
        alpha_p = reduce_mod_p(curve.alpha, p)
        if omega == alpha_p:
            raise OmegaEqualsAlpha("omega = alpha mod p")
        f_p = reduce_mod_p(curve.f, p)
        if eval_hom(f_p, omega) != 0:
            raise OmegaNotRoot("f(omega) != 0 mod p")
        quadrics = tuple(
            tuple(tuple(reduce_mod_p(x, p).value for x in row) for row in M)
            for M in model.Q[:3]
        )
        ev_alpha = tuple(reduce_mod_p(c, p).value for c in model.gamma)
        curve_p_g = _g_values(curve, omega)
        ev_omega = tuple(c.value for c in curve_p_g)
        return FiberSystem(quadrics, (ev_alpha, ev_omega), p)
    omega = Fraction(omega)
    if omega == curve.alpha:
        raise OmegaEqualsAlpha("omega = alpha")
    if eval_hom(curve.f, omega) != 0:
        raise OmegaNotRoot("f(omega) != 0")
    ev_alpha = model.gamma
    ev_omega = _g_values(curve, omega)
    return FiberSystem(model.Q[:3], (ev_alpha, ev_omega), None)


# ---------------------------------------------------------------------------
# model changes: completing the square and pulling x-coordinates back


class CoordTransform:
    """Record of the model change: the cubic q from y^2 + q y = r, and whether
    the two projective coordinates were swapped to make deg f = 6."""

    __slots__ = ("swap", "q")

    def __init__(self, swap: bool, q):
        self.swap = bool(swap)
        self.q = tuple(Fraction(c) for c in q)

    def __eq__(self, other):
        return (
            isinstance(other, CoordTransform)
            and self.swap == other.swap
            and self.q == other.q
        )

    def __repr__(self):
        return f"CoordTransform(swap={self.swap}, q={[str(c) for c in self.q]})"


def complete_square(q, r):
    """From y^2 + q(x,z) y = r(x,z) (q a binary cubic, r of degree <= 6) to the
    sextic model y^2 = f via f = q^2 + 4r, swapping x and z if needed so that
    the x^6 coefficient is nonzero.

    Returns (f: UniPoly, CoordTransform).  Coefficients ascend in powers of x.
    """
    q = [Fraction(c) for c in q]
    r = [Fraction(c) for c in r]
    if len(q) > 4:
        raise ValueError("q must be a binary cubic (at most 4 coefficients)")
    if len(r) > 7:
        raise ValueError("r must have degree at most 6 (at most 7 coefficients)")
    q += [Fraction(0)] * (4 - len(q))
    r += [Fraction(0)] * (7 - len(r))
    fcoeffs = [
        sum(q[i] * q[k - i] for i in range(max(0, k - 3), min(3, k) + 1)) + 4 * r[k]
        for k in range(7)
    ]
    swap = fcoeffs[6] == 0
    if swap:
        fcoeffs = fcoeffs[::-1]
    if fcoeffs[6] == 0:
        raise NotDegreeSix("x^6 and z^6 coefficients both vanish")
    f = UniPoly(fcoeffs)
    if discriminant(f) == 0:
        raise NotSquarefree("q^2 + 4r is not squarefree")
    return f, CoordTransform(swap, q)


def pullback_x(transform: CoordTransform, t: P1Point) -> P1Point:
    """Map x-coordinates on the sextic model back to the original model."""
    return t.reciprocal() if transform.swap else t
