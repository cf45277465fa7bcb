"""Exact scalars: rational functions in q and c, extended by s = sqrt(q + 1/q).

Two backends share one arithmetic surface:

* ``Scalar`` -- symbolic element a + b*s of Q(q, c)[s]/(s^2 - q - 1/q).
* ``mpq`` / ``QuadNumber`` -- values at a rational point (q, c), where s
  becomes sqrt(q + 1/q) kept exact as a quadratic irrationality.

A *field* object (``SymbolicField`` or ``SpecializedField``) hands out the
constants q, c, s and coerces integers, so code written against a field runs
unchanged on either backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import flint
from gmpy2 import mpq

CTX = flint.fmpz_mpoly_ctx.get(("q", "c"), "lex")
_ZERO_POLY = CTX.constant(0)
_ONE_POLY = CTX.constant(1)

_RATIONALS = (int, Fraction, type(mpq(1)))


def _poly_from_int(v):
    return CTX.constant(int(v))


class RationalFn:
    """Element num/den of Q(q, c) with integer-coefficient polynomials.

    Canonical form: gcd(num, den) = 1 and the leading coefficient of den
    (lex order, q > c) is positive.  Negative powers of q and c live in den.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, normalized=False):
        if den is None:
            den = _ONE_POLY
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # -- construction -----------------------------------------------------
    @classmethod
    def coerce(cls, x):
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, int):
            return cls(_poly_from_int(x), normalized=True)
        if isinstance(x, (Fraction, type(mpq(1)))):
            x = Fraction(int(x.numerator), int(x.denominator))
            return cls(_poly_from_int(x.numerator), _poly_from_int(x.denominator),
                       normalized=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalFn")

    @classmethod
    def monomial(cls, eq=0, ec=0, coeff=1):
        """coeff * q**eq * c**ec for integer (possibly negative) exponents."""
        num = CTX.term(coeff=int(coeff), exp_vec=(max(eq, 0), max(ec, 0)))
        den = CTX.term(exp_vec=(max(-eq, 0), max(-ec, 0)))
        return cls(num, den, normalized=True)

    def normalize(self):
        return RationalFn(self.num, self.den)

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def as_fraction(self):
        """The value as a Fraction; ValueError unless constant."""
        if not (self.num.is_constant() and self.den.is_constant()):
            raise ValueError("%s is not a rational constant" % self)
        num = int(self.num.leading_coefficient()) if self.num else 0
        return Fraction(num, int(self.den.leading_coefficient()))

    def is_laurent(self):
        """True when the denominator is a monomial q^a c^b."""
        return len(self.den.to_dict()) == 1

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            try:
                other = RationalFn.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((tuple(sorted(self.num.to_dict().items())),
                     tuple(sorted(self.den.to_dict().items()))))

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return RationalFn(-self.num, self.den, normalized=True)

    def __add__(self, other):
        if not isinstance(other, RationalFn):
            if not isinstance(other, _RATIONALS):
                return NotImplemented
            other = RationalFn.coerce(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        if b == d:
            n = a + c
            if b.is_one():
                return RationalFn(n, b, normalized=True)
            return RationalFn(n, b)
        if b.is_one():
            return RationalFn(a * d + c, d, normalized=True)
        if d.is_one():
            return RationalFn(a + c * b, b, normalized=True)
        g = b.gcd(d)
        bg, dg = b / g, d / g
        return RationalFn(a * dg + c * bg, b * dg)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RationalFn):
            if not isinstance(other, _RATIONALS):
                return NotImplemented
            other = RationalFn.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFn):
            if not isinstance(other, _RATIONALS):
                return NotImplemented
            other = RationalFn.coerce(other)
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return RationalFn(_ZERO_POLY, normalized=True)
        if b.is_one() and d.is_one():
            return RationalFn(a * c, b, normalized=True)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        num, den = a * c, b * d
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFn(num, den, normalized=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        num, den = self.den, self.num
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return RationalFn(num, den, normalized=True)

    def __truediv__(self, other):
        if not isinstance(other, RationalFn):
            if not isinstance(other, _RATIONALS):
                return NotImplemented
            other = RationalFn.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFn(self.num ** e, self.den ** e, normalized=True)

    # -- evaluation / output ------------------------------------------------
    def evaluate(self, qv, cv):
        """Exact value at q = qv, c = cv (rationals)."""
        den = _eval_poly(self.den, qv, cv)
        if den == 0:
            raise ZeroDivisionError(
                "denominator vanishes at q=%s, c=%s: offending factor %s"
                % (qv, cv, _vanishing_factor(self.den, qv, cv)))
        return _eval_poly(self.num, qv, cv) / den

    def to_json(self):
        return {"num": _poly_terms(self.num), "den": _poly_terms(self.den)}

    @classmethod
    def from_json(cls, data):
        return cls(_poly_from_terms(data["num"]), _poly_from_terms(data["den"]))

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    __repr__ = __str__


def _normalize(num, den):
    if num.is_zero():
        return num, _ONE_POLY
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num, den = num / g, den / g
    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


def _eval_poly(p, qv, cv):
    qv, cv = mpq(qv), mpq(cv)
    total = mpq(0)
    for (eq, ec), coeff in p.to_dict().items():
        total += int(coeff) * qv ** int(eq) * cv ** int(ec)
    return total


def _vanishing_factor(p, qv, cv):
    _, factors = p.factor()
    for f, _ in factors:
        if _eval_poly(f, qv, cv) == 0:
            return str(f)
    return str(p)


def _poly_terms(p):
    items = sorted(p.to_dict().items(), reverse=True)
    return [[int(e[0]), int(e[1]), str(int(v))] for e, v in items]


def _poly_from_terms(terms):
    return CTX.from_dict({(int(eq), int(ec)): int(v) for eq, ec, v in terms}) \
        if terms else CTX.constant(0)


# ---------------------------------------------------------------------------
# Q(q, c)[s]
# ---------------------------------------------------------------------------

_Q = RationalFn(CTX.gens()[0], normalized=True)
_QP = _Q + _Q.inverse()  # s^2


class Scalar:
    """a + b*s with a, b in Q(q, c) and s^2 = q + 1/q.

    ``b`` is stored as None when zero; even-N code never touches s.
    """

    __slots__ = ("a", "b")

    def __init__(self, a, b=None):
        self.a = RationalFn.coerce(a)
        if b is not None:
            b = RationalFn.coerce(b)
            if b.is_zero():
                b = None
        self.b = b

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        return cls(x)

    def is_zero(self):
        return self.b is None and self.a.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (RationalFn,) + _RATIONALS):
                other = Scalar(other)
            else:
                return NotImplemented
        return self.a == other.a and (
            (self.b is None and other.b is None)
            or (self.b is not None and other.b is not None and self.b == other.b))

    def __hash__(self):
        return hash((self.a, self.b))

    def __neg__(self):
        return Scalar(-self.a, None if self.b is None else -self.b)

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (RationalFn,) + _RATIONALS):
                return NotImplemented
            return Scalar(self.a + other, self.b)
        if other.b is None:
            b = self.b
        elif self.b is None:
            b = other.b
        else:
            b = self.b + other.b
        return Scalar(self.a + other.a, b)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (RationalFn,) + _RATIONALS):
                return NotImplemented
            other = Scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (RationalFn,) + _RATIONALS):
                return NotImplemented
            other = RationalFn.coerce(other)
            return Scalar(self.a * other, None if self.b is None else self.b * other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if b1 is None and b2 is None:
            return Scalar(a1 * a2)
        if b1 is None:
            return Scalar(a1 * a2, a1 * b2)
        if b2 is None:
            return Scalar(a1 * a2, b1 * a2)
        return Scalar(a1 * a2 + b1 * b2 * _QP, a1 * b2 + b1 * a2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        if self.b is None:
            return Scalar(self.a.inverse())
        norm = self.a * self.a - self.b * self.b * _QP
        inv = norm.inverse()
        return Scalar(self.a * inv, -self.b * inv)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (RationalFn,) + _RATIONALS):
                return NotImplemented
            other = Scalar(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def normalize(self):
        return Scalar(self.a.normalize(), None if self.b is None else self.b.normalize())

    def to_json(self):
        return {"a": self.a.to_json(),
                "b": (self.b if self.b is not None else RationalFn.coerce(0)).to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(RationalFn.from_json(data["a"]), RationalFn.from_json(data["b"]))

    def __str__(self):
        if self.b is None or not self.b:
            return str(self.a)
        if not self.a:
            return "(%s)*s" % self.b
        return "%s + (%s)*s" % (self.a, self.b)

    __repr__ = __str__


ZERO = Scalar(0)
ONE = Scalar(1)
Q = Scalar(_Q)
C = Scalar(RationalFn(CTX.gens()[1], normalized=True))
S = Scalar(0, 1)


def arith(x, y, op):
    """Field operation ``op`` in {'add','sub','mul','div'} on two Scalars."""
    x, y = Scalar.coerce(x), Scalar.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError("unknown operation %r" % (op,))


# ---------------------------------------------------------------------------
# Specialization
# ---------------------------------------------------------------------------

class QuadNumber:
    """a + b*sqrt(r) with rational a, b and a fixed non-square rational r."""

    __slots__ = ("a", "b", "r")

    def __init__(self, a, b, r):
        self.a, self.b, self.r = mpq(a), mpq(b), mpq(r)

    @staticmethod
    def make(a, b, r):
        if b == 0:
            return mpq(a)
        return QuadNumber(a, b, r)

    def _split(self, other):
        if isinstance(other, QuadNumber):
            if other.r != self.r:
                raise ValueError("mixing different quadratic fields")
            return other.a, other.b
        if isinstance(other, _RATIONALS):
            return mpq(other), mpq(0)
        return None

    def __eq__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return self.a == parts[0] and self.b == parts[1]

    def __hash__(self):
        return hash((self.a, self.b, self.r))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __neg__(self):
        return QuadNumber(-self.a, -self.b, self.r)

    def __add__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return QuadNumber.make(self.a + parts[0], self.b + parts[1], self.r)

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        return QuadNumber.make(self.a - parts[0], self.b - parts[1], self.r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        parts = self._split(other)
        if parts is None:
            return NotImplemented
        a2, b2 = parts
        return QuadNumber.make(self.a * a2 + self.b * b2 * self.r,
                               self.a * b2 + self.b * a2, self.r)

    __rmul__ = __mul__

    def inverse(self):
        norm = self.a * self.a - self.b * self.b * self.r
        if norm == 0:
            raise ZeroDivisionError("division by zero QuadNumber")
        return QuadNumber.make(self.a / norm, -self.b / norm, self.r)

    def __truediv__(self, other):
        if isinstance(other, QuadNumber):
            return self * other.inverse()
        if isinstance(other, _RATIONALS):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadNumber.make(self.a / other, self.b / other, self.r)
        return NotImplemented

    def __rtruediv__(self, other):
        return mpq(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = mpq(1), self
        while e:
            if e & 1:
                result = base * result
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return "%s + %s*sqrt(%s)" % (self.a, self.b, self.r)


@dataclass(frozen=True)
class EvalPoint:
    """Rational specialization point for q and c."""

    q_value: Fraction
    c_value: Fraction = Fraction(1)
    s_mode: str = "quadratic"

    def __post_init__(self):
        object.__setattr__(self, "q_value", Fraction(self.q_value))
        object.__setattr__(self, "c_value", Fraction(self.c_value))
        if self.q_value in (0, 1, -1):
            raise ValueError("q must avoid 0 and +-1, got %s" % self.q_value)
        if self.c_value == 0:
            raise ValueError("c must be nonzero at an evaluation point")
        if self.s_mode not in ("quadratic", "symbolic"):
            raise ValueError("s_mode must be 'quadratic' or 'symbolic'")

    @property
    def s_square(self):
        return mpq(self.q_value) + 1 / mpq(self.q_value)


def evaluate(x, at):
    """Exact value of ``x`` at ``at``: an mpq, or a QuadNumber when s survives.

    With ``at.s_mode == 'symbolic'`` the result is a Scalar with constant
    components, s kept formal.
    """
    x = Scalar.coerce(x)
    qv, cv = at.q_value, at.c_value
    a = x.a.evaluate(qv, cv)
    if x.b is None:
        return a if at.s_mode == "quadratic" else Scalar(Fraction(int(a.numerator), int(a.denominator)))
    b = x.b.evaluate(qv, cv)
    if at.s_mode == "symbolic":
        return Scalar(Fraction(int(a.numerator), int(a.denominator)),
                      Fraction(int(b.numerator), int(b.denominator)))
    # q + 1/q is never a rational square for rational q != +-1
    return QuadNumber.make(a, b, at.s_square)


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

class SymbolicField:
    """Coefficients in Q(q, c)[s]."""

    mode = "symbolic"
    point = None

    def __init__(self):
        self.zero, self.one = ZERO, ONE
        self.q, self.c, self.s = Q, C, S
        self.qp = Q + Q.inverse()
        self.qm = Q - Q.inverse()

    def __call__(self, x):
        return Scalar.coerce(x)

    def to_scalar(self, x):
        return Scalar.coerce(x)

    def from_scalar(self, x):
        return Scalar.coerce(x)

    def qpow(self, e):
        return q_power(e)

    def __repr__(self):
        return "SymbolicField()"

    def __eq__(self, other):
        return isinstance(other, SymbolicField)

    def __hash__(self):
        return hash("symbolic")


class SpecializedField:
    """Coefficients at a rational point; s = sqrt(q + 1/q) exact."""

    mode = "specialized"

    def __init__(self, point):
        if not isinstance(point, EvalPoint):
            point = EvalPoint(*point)
        self.point = point
        self.zero, self.one = mpq(0), mpq(1)
        self.q = mpq(point.q_value)
        self.c = mpq(point.c_value)
        self.s = QuadNumber(0, 1, point.s_square)
        self.qp = self.q + 1 / self.q
        self.qm = self.q - 1 / self.q
        self._qpow = {}

    def __call__(self, x):
        if isinstance(x, (QuadNumber, type(mpq(1)))):
            return x
        if isinstance(x, (int, Fraction)):
            return mpq(x)
        return self.from_scalar(x)

    def from_scalar(self, x):
        """Specialize a constant-or-symbolic Scalar to this point."""
        return evaluate(x, self.point)

    def to_scalar(self, x):
        """Constant Scalar with the same value (b*sqrt(r) becomes b*s)."""
        if isinstance(x, QuadNumber):
            return Scalar(_frac(x.a), _frac(x.b))
        return Scalar(_frac(x))

    def qpow(self, e):
        try:
            return self._qpow[e]
        except KeyError:
            v = self._qpow[e] = self.q ** e
            return v

    def __repr__(self):
        return "SpecializedField(q=%s, c=%s)" % (self.point.q_value, self.point.c_value)

    def __eq__(self, other):
        return isinstance(other, SpecializedField) and other.point == self.point

    def __hash__(self):
        return hash(self.point)


def _frac(x):
    x = mpq(x)
    return Fraction(int(x.numerator), int(x.denominator))


SYMBOLIC = SymbolicField()


def is_zero(x):
    return not x


# ---------------------------------------------------------------------------
# q-numbers
# ---------------------------------------------------------------------------

def qnum(m, field=SYMBOLIC):
    """[m] = (1 - q^{-4m}) / (1 - q^{-4}) = sum_{k<m} q^{-4k}."""
    return _geometric(m, 4, field)


def qnum_base_q(m, field=SYMBOLIC):
    """[m]_q = (1 - q^{-2m}) / (1 - q^{-2}): the q^2 -> q variant."""
    return _geometric(m, 2, field)


def _geometric(m, step, field):
    if m < 0:
        raise ValueError("q-number of a negative integer")
    qinv = 1 / field.q
    total, term = field.zero, field.one
    for _ in range(m):
        total = total + term
        term = term * qinv ** step
    return total


def qfact(m, field=SYMBOLIC, base=qnum):
    result = field.one
    for k in range(1, m + 1):
        result = result * base(k, field)
    return result


def qbinom(m, p, field=SYMBOLIC, base=qnum):
    if not 0 <= p <= m:
        raise ValueError("q-binomial needs 0 <= p <= m, got m=%d p=%d" % (m, p))
    return qfact(m, field, base) / (qfact(p, field, base) * qfact(m - p, field, base))


def qbinom_base_q(m, p, field=SYMBOLIC):
    return qbinom(m, p, field, base=qnum_base_q)


@lru_cache(maxsize=None)
def q_power(e):
    """Symbolic q**e as a Scalar (cached; used heavily by the rewriter)."""
    return Scalar(RationalFn.monomial(e, 0))
