"""Dense univariate polynomials over an exact field.

A polynomial is a list of coefficients ``[a0, a1, ..., an]`` with ``an != 0``;
the zero polynomial is ``[]``.  Coefficients may be :class:`fractions.Fraction`
or :class:`k3deg.algebra.numberfield.NFElement`; nothing here depends on which.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

ONE = Fraction(1)
ZERO = Fraction(0)


def trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def deg(a) -> int:
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def neg(a):
    return [-c for c in a]


def sub(a, b):
    return add(a, neg(b))


def scale(a, c):
    if not c:
        return []
    return trim([x * c for x in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def power(a, n: int):
    out = [ONE]
    base = a
    while n:
        if n & 1:
            out = mul(out, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return out


def divmod_(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv = ONE / b[-1]
    if len(r) - 1 < db:
        return [], trim(r)
    q = [ZERO] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c:
            for j in range(db + 1):
                r[k + j] = r[k + j] - c * b[j]
    return trim(q), trim(r[:db])


def rem(a, b):
    return divmod_(a, b)[1]


def quo(a, b):
    return divmod_(a, b)[0]


def divexact(a, b):
    q, r = divmod_(a, b)
    if r:
        raise ArithmeticError("inexact univariate division")
    return q


def monic(a):
    if not a:
        return []
    inv = ONE / a[-1]
    return [c * inv for c in a[:-1]] + [ONE]


def gcd(a, b):
    """Monic gcd; ``gcd([], []) == []``."""
    a, b = trim(a), trim(b)
    if all(isinstance(c, (int, Fraction)) for c in a + b):
        return _gcd_rational(a, b)
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def _primitive_int(a):
    den = 1
    for c in a:
        den = ilcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _gcd_rational(a, b):
    # primitive remainder sequence over Z keeps coefficient growth in check
    a = _primitive_int(a) if a else []
    b = _primitive_int(b) if b else []
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = list(a)
        lb, db = b[-1], len(b) - 1
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [c * lb for c in r]
            for j in range(db + 1):
                r[shift + j] -= lr * b[j]
            while r and not r[-1]:
                r.pop()
        a, b = b, (_primitive_int(r) if r else [])
    return monic([Fraction(c) for c in a])


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return [], [], []
    inv = ONE / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(a):
    return trim([a[i] * i for i in range(1, len(a))])


def evaluate(a, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def compose(a, b):
    """``a(b(x))``."""
    out = []
    for c in reversed(a):
        out = add(mul(out, b), [c] if c else [])
    return out


def taylor_shift(a, c):
    """Coefficients of ``a(x + c)``."""
    out = list(a)
    n = len(out)
    if not c:
        return out
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + c * out[j + 1]
    return trim(out)


def squarefree_factors(a):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic factors.

    The product of ``factor**multiplicity`` equals ``monic(a)``.
    """
    a = trim(a)
    if len(a) <= 1:
        return []
    da = derivative(a)
    g = gcd(a, da)
    b = divexact(monic(a), g)
    c = scale(divexact(da, g), ONE / a[-1])
    d = sub(c, derivative(b))
    out = []
    i = 1
    while len(b) > 1:
        f = gcd(b, d)
        b = divexact(b, f)
        c = divexact(d, f)
        d = sub(c, derivative(b))
        if len(f) > 1:
            out.append((f, i))
        i += 1
    return out


def root_multiplicities(a) -> list[int]:
    """Multiplicities of the roots of ``a`` over the algebraic closure."""
    out = []
    for f, e in squarefree_factors(a):
        out.extend([e] * deg(f))
    return sorted(out, reverse=True)


def is_squarefree(a) -> bool:
    a = trim(a)
    return len(a) <= 1 or len(gcd(a, derivative(a))) == 1


def resultant(a, b):
    """Sylvester resultant of two univariate polynomials (``a`` rows first)."""
    a, b = trim(a), trim(b)
    if not a or not b:
        return ZERO
    n, m = deg(a), deg(b)
    if m == 0:
        return b[0] ** n
    if n == 0:
        return a[0] ** m
    sign = ONE
    acc = ONE
    while True:
        n, m = deg(a), deg(b)
        if m == 0:
            return sign * acc * b[0] ** n
        r = rem(a, b)
        if not r:
            return ZERO
        if n % 2 and m % 2:
            sign = -sign
        acc = acc * b[-1] ** (n - deg(r))
        a, b = b, r
