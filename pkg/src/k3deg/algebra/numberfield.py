"""Simple algebraic extensions Q[t]/(p) with p irreducible over Q."""
from __future__ import annotations

from fractions import Fraction

from . import upoly


class NumberField:
    """The field Q[t]/(p).  ``p`` is stored monic, low degree first."""

    __slots__ = ("modulus", "degree", "name", "_key")

    def __init__(self, modulus, name: str = "t"):
        mod = upoly.monic(upoly.trim([Fraction(c) for c in modulus]))
        if len(mod) < 2:
            raise ValueError("modulus must have positive degree")
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self.name = name
        self._key = self.modulus

    def __eq__(self, other):
        return isinstance(other, NumberField) and self._key == other._key

    def __hash__(self):
        return hash(("NumberField", self._key))

    def __repr__(self):
        return f"NumberField({upoly_str(self.modulus, self.name)})"

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (list, tuple)):
            return NFElement(self, self._reduce([Fraction(c) for c in value]))
        return NFElement(self, (Fraction(value),))

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return NFElement(self, (-self.modulus[0],))
        return NFElement(self, (Fraction(0), Fraction(1)))

    def zero(self):
        return NFElement(self, ())

    def one(self):
        return NFElement(self, (Fraction(1),))

    def _reduce(self, coeffs):
        c = upoly.trim(coeffs)
        if len(c) > self.degree:
            c = upoly.rem(c, list(self.modulus))
        return tuple(c)


def upoly_str(coeffs, var="t") -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{a}*{mono}"
        else:
            body = str(a)
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class NFElement:
    """An element of a :class:`NumberField`, stored as a reduced tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) if other else ()
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, tuple(upoly.add(self.coeffs, o)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, tuple(upoly.sub(self.coeffs, o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if len(o) <= 1:
            return NFElement(self.field, tuple(upoly.scale(self.coeffs, o[0]) if o else ()))
        return NFElement(self.field, self.field._reduce(upoly.mul(self.coeffs, o)))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in number field")
        if len(self.coeffs) == 1:
            return NFElement(self.field, (1 / self.coeffs[0],))
        g, s, _ = upoly.xgcd(list(self.coeffs), list(self.field.modulus))
        if len(g) != 1:
            raise ArithmeticError("modulus is not irreducible")
        return NFElement(self.field, self.field._reduce(s))

    def __truediv__(self, other):
        if isinstance(other, NFElement):
            return self * other.inverse()
        o = Fraction(other)
        if not o:
            raise ZeroDivisionError("division by zero")
        return self * (1 / o)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._lift(other) if isinstance(other, (NFElement, int, Fraction)) else NotImplemented
        if o is NotImplemented:
            return False
        return tuple(self.coeffs) == tuple(o)

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash((self.field, self.coeffs))

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def rational(self) -> Fraction:
        if len(self.coeffs) > 1:
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __repr__(self):
        return upoly_str(self.coeffs, self.field.name)

    __str__ = __repr__


def is_rational_value(c) -> bool:
    return not isinstance(c, NFElement) or c.is_rational()
