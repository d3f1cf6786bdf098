"""Exact arithmetic substrate: rationals, univariate polynomials over a
commutative coefficient ring, quotient algebras R[X]/<m>, prime-field
elements, resultants via fraction-free (Bareiss) determinants, and
coefficientwise reduction mod p.

Coefficient rings are duck-typed: Fraction/int, FpElem, and AlgElem all
support the arithmetic the generic routines need (including mixed
arithmetic with plain ints, so 0 and 1 work as universal constants).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class NonzeroRemainder(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class NonInvertibleLead(ArithmeticError):
    """A leading coefficient that must be a unit is not invertible."""


class ParentMismatch(ValueError):
    """Operands belong to different quotient algebras."""


class DegreeExceeded(ValueError):
    """A polynomial exceeds its declared formal degree."""


class DenominatorDivisible(ArithmeticError):
    """Reduction mod p hit a denominator divisible by p."""


# ---------------------------------------------------------------------------
# rational serialization ("n" or "n/d", d > 0, reduced)


def rat_to_str(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


# ---------------------------------------------------------------------------
# prime-field elements


class FpElem:
    """Element of F_p, value normalized to [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ParentMismatch(f"F_{self.p} vs F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return (reduce_mod_p(other, self.p)).value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElem(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElem(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElem(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElem(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElem(-self.value, self.p)

    def __pow__(self, n: int):
        return FpElem(pow(self.value, n, self.p), self.p)

    def inv(self) -> "FpElem":
        try:
            return FpElem(pow(self.value, -1, self.p), self.p)
        except ValueError:
            raise NonInvertibleLead(f"{self.value} not invertible mod {self.p}")

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElem(self.value * pow(v, -1, self.p), self.p)

    def __eq__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"FpElem({self.value}, {self.p})"


# ---------------------------------------------------------------------------
# univariate polynomials


def _is_zero(c) -> bool:
    return c == 0


def _invert(c):
    """Inverse of a unit coefficient; NonInvertibleLead otherwise."""
    if isinstance(c, int) or isinstance(c, Fraction):
        if c == 0:
            raise NonInvertibleLead("zero leading coefficient")
        return Fraction(1, 1) / c
    if isinstance(c, FpElem):
        return c.inv()
    if isinstance(c, AlgElem):
        ok, inv = alg_is_unit(c)
        if not ok:
            raise NonInvertibleLead("leading coefficient not a unit in the algebra")
        return inv
    raise NonInvertibleLead(f"cannot invert {type(c).__name__}")


class UniPoly:
    """Univariate polynomial; coeffs[i] holds the X^i coefficient.

    Trailing zeros are trimmed, so the empty tuple is the zero polynomial
    and otherwise the last entry is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return UniPoly([other]) - self

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def __pow__(self, n: int):
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, t):
        result = 0
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by X^k."""
        if self.is_zero():
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


def divmod_poly(a: UniPoly, b: UniPoly):
    """Quotient and remainder; the leading coefficient of b must be a unit."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lead = b.lc()
    lead_inv = None if lead == 1 else _invert(lead)
    q = {}
    rem = list(a.coeffs)
    db = b.degree
    while len(rem) - 1 >= db and rem:
        c = rem[-1] if lead_inv is None else rem[-1] * lead_inv
        shift = len(rem) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b.coeffs):
            rem[shift + i] = rem[shift + i] - c * bc
        while rem and _is_zero(rem[-1]):
            rem.pop()
    qc = [0] * (max(q) + 1 if q else 0)
    for k, v in q.items():
        qc[k] = v
    return UniPoly(qc), UniPoly(rem)


def poly_div_exact(a: UniPoly, b: UniPoly) -> UniPoly:
    """Exact quotient a/b; NonzeroRemainder if b does not divide a."""
    q, r = divmod_poly(a, b)
    if not r.is_zero():
        raise NonzeroRemainder(f"remainder of degree {r.degree}")
    return q


def eval_hom(a, t):
    """Evaluation homomorphism: value of (the representative of) a at t."""
    if isinstance(a, AlgElem):
        return a.poly()(t)
    return a(t)


# ---------------------------------------------------------------------------
# quotient algebras R[X]/<modulus>


class QuotAlgebra:
    """R[X]/<modulus>; the modulus has degree >= 1 and a unit leading coefficient."""

    def __init__(self, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        _invert(modulus.lc())  # NonInvertibleLead if not a unit
        self.modulus = modulus
        self.n = modulus.degree

    def elem(self, coeffs) -> "AlgElem":
        cs = list(coeffs)
        if len(cs) > self.n:
            return self.from_poly(UniPoly(cs))
        cs += [0] * (self.n - len(cs))
        return AlgElem(self, cs)

    def from_poly(self, poly: UniPoly) -> "AlgElem":
        _, r = divmod_poly(poly, self.modulus)
        return self.elem(list(r.coeffs))

    def zero(self) -> "AlgElem":
        return self.elem([])

    def one(self) -> "AlgElem":
        return self.elem([1])

    def gen(self) -> "AlgElem":
        return self.elem([0, 1])

    def __eq__(self, other):
        return isinstance(other, QuotAlgebra) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"QuotAlgebra({self.modulus!r})"


class AlgElem:
    """Element of a QuotAlgebra, stored as the length-n coefficient vector of
    its canonical representative (degree < n)."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent: QuotAlgebra, coeffs):
        assert len(coeffs) == parent.n
        self.parent = parent
        self.coeffs = tuple(coeffs)

    def poly(self) -> UniPoly:
        return UniPoly(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, AlgElem):
            if other.parent != self.parent:
                raise ParentMismatch("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, FpElem)):
            return self.parent.elem([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.parent, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgElem(self.parent, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return AlgElem(self.parent, [-a for a in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.parent.from_poly(self.poly() * o.poly())

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        result = self.parent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.parent, self.coeffs))

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __repr__(self):
        return f"AlgElem({list(self.coeffs)})"


def alg_mul(a: AlgElem, b: AlgElem) -> AlgElem:
    """Product in the quotient algebra; ParentMismatch if parents differ."""
    if not isinstance(b, AlgElem) or a.parent != b.parent:
        raise ParentMismatch("elements of different algebras")
    return a * b


def alg_is_unit(a: AlgElem):
    """(True, a^-1) when gcd(representative, modulus) = 1, else (False, None).

    Extended Euclid over the coefficient field (Q or F_p).
    """
    if a.is_zero():
        return False, None
    r0, r1 = a.parent.modulus, a.poly()
    # Bezout coefficient on the a-side: s0*modulus + t0*a = r0-chain
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    if r0.degree != 0:
        return False, None
    c = _invert(r0.lc())
    return True, a.parent.from_poly(t0 * c)


# ---------------------------------------------------------------------------
# reduction mod p


def reduce_mod_p(x, p: int):
    """Coefficientwise reduction; DenominatorDivisible if p divides a denominator."""
    if isinstance(x, int):
        return FpElem(x, p)
    if isinstance(x, Fraction):
        if x.denominator % p == 0:
            raise DenominatorDivisible(f"denominator {x.denominator} divisible by {p}")
        return FpElem(x.numerator * pow(x.denominator, -1, p), p)
    if isinstance(x, UniPoly):
        return UniPoly([reduce_mod_p(c, p) for c in x.coeffs])
    if isinstance(x, AlgElem):
        modulus_p = reduce_mod_p(x.parent.modulus, p)
        return QuotAlgebra(modulus_p).elem([reduce_mod_p(c, p) for c in x.coeffs])
    raise TypeError(f"cannot reduce {type(x).__name__}")


# ---------------------------------------------------------------------------
# determinants and resultants


def _int_div_exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise NonzeroRemainder(f"{a} not divisible by {b}")
    return q


def _intpoly_div_exact(a: UniPoly, b: UniPoly) -> UniPoly:
    """Exact quotient in Z[w]: every synthetic-division step must divide."""
    rem = list(a.coeffs)
    db = b.degree
    lead = b.lc()
    q = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        c = _int_div_exact(rem[-1], lead)
        shift = len(rem) - 1 - db
        q[shift] = c
        for i, bc in enumerate(b.coeffs):
            rem[shift + i] -= c * bc
        while rem and rem[-1] == 0:
            rem.pop()
    if rem:
        raise NonzeroRemainder("inexact polynomial division")
    return UniPoly(q)


def bareiss_det(rows):
    """Fraction-free determinant over Z or Z[w] (entries int or int-coeff UniPoly)."""
    n = len(rows)
    if n == 0:
        return 1
    polyring = any(isinstance(e, UniPoly) for row in rows for e in row)
    if polyring:
        m = [[e if isinstance(e, UniPoly) else UniPoly([e]) for e in row] for row in rows]
        zero = UniPoly()
        one = UniPoly([1])
        div = _intpoly_div_exact
        is_zero = lambda e: e.is_zero()
    else:
        m = [list(row) for row in rows]
        zero, one = 0, 1
        div = _int_div_exact
        is_zero = lambda e: e == 0
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(m[k][k]):
            pivot_row = next((i for i in range(k + 1, n) if not is_zero(m[i][k])), None)
            if pivot_row is None:
                return zero
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _det_field(rows, invert):
    """Plain Gaussian elimination for field entries (FpElem)."""
    n = len(rows)
    m = [list(row) for row in rows]
    det = None
    sign = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if not _is_zero(m[i][k])), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        piv = m[k][k]
        det = piv if det is None else det * piv
        inv = invert(piv)
        for i in range(k + 1, n):
            if _is_zero(m[i][k]):
                continue
            c = m[i][k] * inv
            for j in range(k, n):
                m[i][j] = m[i][j] - c * m[k][j]
    return -det if sign < 0 else det


def _entry_to_wpoly(e) -> UniPoly:
    """View a matrix entry (scalar or AlgElem) as its representative in Q[w]."""
    if isinstance(e, AlgElem):
        return e.poly()
    return UniPoly([e])


def _sylvester_rows(a: UniPoly, dega: int, b: UniPoly, degb: int):
    """Sylvester matrix rows for a (formal degree dega) and b (formal degree degb)."""
    n = dega + degb
    rows = []
    a_desc = [a.coeff(dega - i) for i in range(dega + 1)]
    b_desc = [b.coeff(degb - i) for i in range(degb + 1)]
    for s in range(degb):
        rows.append([0] * s + a_desc + [0] * (n - s - dega - 1))
    for s in range(dega):
        rows.append([0] * s + b_desc + [0] * (n - s - degb - 1))
    return rows


def _det_dispatch(rows):
    """Determinant of a matrix with Fraction/int or AlgElem(Q) or FpElem entries."""
    flat = [e for row in rows for e in row]
    if any(isinstance(e, FpElem) for e in flat):
        return _det_field(rows, lambda c: c.inv())
    if any(isinstance(e, AlgElem) for e in flat):
        # Lift to Q[w], clear denominators rowwise, Bareiss over Z[w], reduce once.
        parent = next(e.parent for e in flat if isinstance(e, AlgElem))
        wrows = [[_entry_to_wpoly(e) for e in row] for row in rows]
        scale = Fraction(1)
        irows = []
        for row in wrows:
            dens = [Fraction(c).denominator for poly in row for c in poly.coeffs]
            mult = lcm(*dens) if dens else 1
            scale *= mult
            irows.append(
                [UniPoly([int(Fraction(c) * mult) for c in poly.coeffs]) for poly in row]
            )
        det = bareiss_det(irows)
        return parent.from_poly(UniPoly([Fraction(c) for c in det.coeffs])) * (1 / scale)
    # rational entries: clear denominators rowwise, integer Bareiss
    scale = Fraction(1)
    irows = []
    for row in rows:
        dens = [Fraction(e).denominator for e in row]
        mult = lcm(*dens) if dens else 1
        scale *= mult
        irows.append([int(Fraction(e) * mult) for e in row])
    return Fraction(bareiss_det(irows)) / scale


def resultant_monic(a: UniPoly, b: UniPoly, formal_deg_b: int):
    """Product of b over the roots of the monic polynomial a.

    Computed as the determinant of the (deg a + formal_deg_b)-square Sylvester
    matrix with b padded to formal_deg_b; padding with zero leading
    coefficients does not change the value because a is monic.
    """
    if a.is_zero() or a.lc() != 1:
        raise ValueError("first argument must be monic")
    if b.degree > formal_deg_b:
        raise DegreeExceeded(f"degree {b.degree} exceeds formal degree {formal_deg_b}")
    dega = a.degree
    if formal_deg_b == 0:
        c = b.coeff(0)
        if isinstance(c, int):
            c = Fraction(c)
        return c**dega
    rows = _sylvester_rows(a, dega, b, formal_deg_b)
    return _det_dispatch(rows)


def discriminant(f: UniPoly) -> Fraction:
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f), over Q."""
    n = f.degree
    if n < 1:
        raise ValueError("degree must be >= 1")
    fp = f.derivative()
    rows = _sylvester_rows(f, n, fp, n - 1)
    res = _det_dispatch(rows)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * res / Fraction(f.lc())
