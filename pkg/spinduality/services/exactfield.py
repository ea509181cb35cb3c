"""
Exact arithmetic in the number field K = Q(i, sqrt 2).

Every scalar the package handles lives in K: the imaginary unit used by the
odd generator of the Sergeev action and by the zeta involutions, and the
1/sqrt(2) normalisations of the spin generators and of the Clifford idempotents.

Elements are stored as four rational coordinates on the fixed basis
{1, i, r2, i*r2} (r2 = sqrt 2). Coordinates use the rational type of sympy's
QQ domain, which is backed by gmpy2 when it is installed.
"""

import re
from enum import Enum
from typing import NamedTuple, Tuple, Union

from sympy.polys.domains import QQ

_MPQ = type(QQ(0))
_ZERO = QQ(0)
_ONE = QQ(1)
_TWO = QQ(2)

Scalar = Union["FieldElem", int]

_TEXT_PATTERN = re.compile(
    r"^\s*(-?\d+)/(\d+) \+ (-?\d+)/(\d+)\*i \+ (-?\d+)/(\d+)\*r2"
    r" \+ (-?\d+)/(\d+)\*ir2\s*$"
)


def _rational(value) -> _MPQ:
    """Convert an int, QQ element or fraction-like value to a QQ element."""
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, int):
        return QQ(value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is None or denominator is None:
        raise TypeError(f"cannot use {value!r} as a rational coordinate")
    return QQ(int(numerator), int(denominator))


def _fraction_text(q: _MPQ) -> str:
    return f"{int(q.numerator)}/{int(q.denominator)}"


def _compact_text(q: _MPQ) -> str:
    if q.denominator == 1:
        return str(int(q.numerator))
    return _fraction_text(q)


class FieldClass(str, Enum):
    """Smallest listed subfield containing an element"""

    RATIONAL = "rational"
    GAUSSIAN = "gaussian"
    REAL_QUADRATIC = "real-quadratic"
    GENERIC = "generic"


class Classification(NamedTuple):
    """Result of classify(): subfield plus integrality of all coordinates"""

    field_class: FieldClass
    integral: bool


class ArithOp(str, Enum):
    """Binary operations exposed through arith()"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"


class FieldElem:
    """
    An element a + b*i + c*r2 + d*i*r2 of Q(i, sqrt 2).

    Instances are treated as immutable values: every operation returns a new
    element and the representation is unique, so equality is coordinate
    equality and elements can be used as dictionary keys.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = _rational(a)
        self.b = _rational(b)
        self.c = _rational(c)
        self.d = _rational(d)

    @classmethod
    def _make(cls, a, b, c, d) -> "FieldElem":
        elem = object.__new__(cls)
        elem.a = a
        elem.b = b
        elem.c = c
        elem.d = d
        return elem

    @classmethod
    def zero(cls) -> "FieldElem":
        return cls._make(_ZERO, _ZERO, _ZERO, _ZERO)

    @classmethod
    def one(cls) -> "FieldElem":
        return cls._make(_ONE, _ZERO, _ZERO, _ZERO)

    @classmethod
    def imag_unit(cls) -> "FieldElem":
        return cls._make(_ZERO, _ONE, _ZERO, _ZERO)

    @classmethod
    def sqrt2(cls) -> "FieldElem":
        return cls._make(_ZERO, _ZERO, _ONE, _ZERO)

    @classmethod
    def rational(cls, numerator: int, denominator: int = 1) -> "FieldElem":
        return cls._make(QQ(numerator, denominator), _ZERO, _ZERO, _ZERO)

    @classmethod
    def sqrt2_power(cls, exponent: int) -> "FieldElem":
        """Return (sqrt 2)**exponent for any integer exponent."""
        half, odd = divmod(exponent, 2)
        scale = _TWO**half if half >= 0 else _ONE / _TWO ** (-half)
        if odd:
            return cls._make(_ZERO, _ZERO, scale, _ZERO)
        return cls._make(scale, _ZERO, _ZERO, _ZERO)

    @property
    def coords(self) -> Tuple[_MPQ, _MPQ, _MPQ, _MPQ]:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    # Coercion

    @classmethod
    def coerce(cls, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        return cls._make(_rational(value), _ZERO, _ZERO, _ZERO)

    @staticmethod
    def _other(value):
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, (int, _MPQ)):
            return FieldElem._make(_rational(value), _ZERO, _ZERO, _ZERO)
        return None

    # Arithmetic

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElem._make(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElem._make(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElem._make(-self.a, -self.b, -self.c, -self.d)

    def _scaled(self, q: _MPQ) -> "FieldElem":
        return FieldElem._make(self.a * q, self.b * q, self.c * q, self.d * q)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not (o.b or o.c or o.d):
            return self._scaled(o.a)
        a, b, c, d = self.a, self.b, self.c, self.d
        if not (b or c or d):
            return o._scaled(a)
        e, f, g, h = o.a, o.b, o.c, o.d
        # i*i = -1, r2*r2 = 2, (i*r2)**2 = -2
        return FieldElem._make(
            a * e - b * f + 2 * (c * g - d * h),
            a * f + b * e + 2 * (c * h + d * g),
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def conjugate_i(self) -> "FieldElem":
        """Image under the automorphism i -> -i."""
        return FieldElem._make(self.a, -self.b, self.c, -self.d)

    def conjugate_sqrt2(self) -> "FieldElem":
        """Image under the automorphism r2 -> -r2."""
        return FieldElem._make(self.a, self.b, -self.c, -self.d)

    def norm(self) -> _MPQ:
        """Product of the four conjugates, a rational number."""
        partial = self * self.conjugate_i()
        return (partial * partial.conjugate_sqrt2()).a

    def inverse(self) -> "FieldElem":
        if not self:
            raise ZeroDivisionError("division by zero in Q(i, sqrt 2)")
        if self.is_rational:
            return FieldElem._make(_ONE / self.a, _ZERO, _ZERO, _ZERO)
        conj = self.conjugate_i()
        partial = self * conj
        cofactor = conj * partial.conjugate_sqrt2()
        return cofactor._scaled(_ONE / (partial * partial.conjugate_sqrt2()).a)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElem":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = FieldElem.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison and hashing

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.c == o.c and self.d == o.d

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.c, self.d))

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    # Classification

    def classify(self) -> Classification:
        integral = all(q.denominator == 1 for q in self.coords)
        if not (self.b or self.c or self.d):
            field_class = FieldClass.RATIONAL
        elif not (self.c or self.d):
            field_class = FieldClass.GAUSSIAN
        elif not (self.b or self.d):
            field_class = FieldClass.REAL_QUADRATIC
        else:
            field_class = FieldClass.GENERIC
        return Classification(field_class, integral)

    def is_rational_integer(self) -> bool:
        return self.is_rational and self.a.denominator == 1

    # Text forms

    def to_text(self) -> str:
        """Canonical serialization "a/b + c/d*i + e/f*r2 + g/h*ir2"."""
        a, b, c, d = (_fraction_text(q) for q in self.coords)
        return f"{a} + {b}*i + {c}*r2 + {d}*ir2"

    @classmethod
    def parse(cls, text: str) -> "FieldElem":
        match = _TEXT_PATTERN.match(text)
        if match is None:
            raise ValueError(f"not a field element serialization: {text!r}")
        ints = [int(group) for group in match.groups()]
        if any(den == 0 for den in ints[1::2]):
            raise ValueError(f"zero denominator in {text!r}")
        return cls._make(*(QQ(ints[j], ints[j + 1]) for j in range(0, 8, 2)))

    def __str__(self) -> str:
        parts = []
        for q, label in zip(self.coords, ("", "i", "r2", "ir2")):
            if not q:
                continue
            if label and abs(q) == 1:
                text = label if q > 0 else f"-{label}"
            elif label:
                text = f"{_compact_text(q)}*{label}"
            else:
                text = _compact_text(q)
            if parts and text.startswith("-"):
                parts.append(f"- {text[1:]}")
            elif parts:
                parts.append(f"+ {text}")
            else:
                parts.append(text)
        return " ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FieldElem({self})"


def arith(x: Scalar, y: Scalar, op: ArithOp) -> FieldElem:
    """Exact binary field operation."""
    x, y = FieldElem.coerce(x), FieldElem.coerce(y)
    op = ArithOp(op)
    if op is ArithOp.ADD:
        return x + y
    if op is ArithOp.SUB:
        return x - y
    return x * y


def invert(x: Scalar) -> FieldElem:
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return FieldElem.coerce(x).inverse()


def classify(x: Scalar) -> Classification:
    return FieldElem.coerce(x).classify()


def field_sum(values) -> FieldElem:
    total = FieldElem.zero()
    for value in values:
        total = total + value
    return total


ZERO = FieldElem.zero()
ONE = FieldElem.one()
IMAG = FieldElem.imag_unit()
SQRT2 = FieldElem.sqrt2()
