"""Sparse multivariate polynomials with weighted variables.

Terms are kept in a dict mapping exponent tuples to nonzero coefficients.
Coefficients are :class:`fractions.Fraction` or elements of one
:class:`~k3deg.algebra.numberfield.NumberField`.  Instances are treated as
immutable: every operation returns a new polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

from .numberfield import NFElement


class VariableMismatch(ValueError):
    """Raised when combining polynomials over different variable lists."""


def _coerce(c):
    if isinstance(c, NFElement):
        return c
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class MultiPoly:
    __slots__ = ("names", "weights", "terms", "_hash")

    def __init__(self, terms, names, weights=None):
        names = tuple(names)
        self.names = names
        self.weights = tuple(weights) if weights is not None else (1,) * len(names)
        if len(self.weights) != len(names):
            raise ValueError("one weight per variable required")
        clean = {}
        n = len(names)
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError("exponent vector length differs from variable count")
            if c:
                clean[e] = _coerce(c)
        self.terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, terms, names, weights):
        p = object.__new__(cls)
        p.names = names
        p.weights = weights
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, names, weights=None):
        return cls({}, names, weights)

    @classmethod
    def const(cls, c, names, weights=None):
        return cls({(0,) * len(tuple(names)): c}, names, weights)

    @classmethod
    def var(cls, name, names, weights=None):
        names = tuple(names)
        e = [0] * len(names)
        e[names.index(name)] = 1
        return cls({tuple(e): Fraction(1)}, names, weights)

    @classmethod
    def gens(cls, names, weights=None):
        return tuple(cls.var(v, names, weights) for v in names)

    def _same(self, other):
        if self.names != other.names or self.weights != other.weights:
            raise VariableMismatch(f"variables {self.names}/{self.weights} vs {other.names}/{other.weights}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return MultiPoly.const(other, self.names, self.weights)
        return NotImplemented

    def new(self, terms):
        return MultiPoly._raw(terms, self.names, self.weights)

    # arithmetic

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return self.new(out)

    __radd__ = __add__

    def __neg__(self):
        return self.new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            if not other:
                return self.new({})
            c = _coerce(other)
            out = {}
            for e, v in self.terms.items():
                w = v * c
                if w:
                    out[e] = w
            return self.new(out)
        o = self._lift(other)
        if o is NotImplemented:
            return o
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return self.new({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, MultiPoly):
            from .polyalg import divexact
            return divexact(self, c)
        if not c:
            raise ZeroDivisionError("division by zero")
        inv = 1 / _coerce(c)
        return self * inv

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = MultiPoly.const(1, self.names, self.weights)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.names == other.names and self.weights == other.weights and self.terms == other.terms
        if isinstance(other, (int, Fraction, NFElement)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.names): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, self.weights, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * len(self.names), Fraction(0))

    def index(self, var) -> int:
        return var if isinstance(var, int) else self.names.index(var)

    def degree(self, var=None) -> int:
        """Total degree, or degree in ``var``; ``-1`` for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.index(var)
        return max(e[i] for e in self.terms)

    def wdegree(self, e) -> int:
        return sum(a * w for a, w in zip(e, self.weights))

    def weighted_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.wdegree(e) for e in self.terms)

    def homogeneous_degree(self, weighted=True):
        """Common (weighted) degree of all terms, or ``None`` if not homogeneous."""
        degs = {self.wdegree(e) if weighted else sum(e) for e in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def low_degree(self) -> int:
        """Lowest total degree of a term (the multiplicity at the origin)."""
        if not self.terms:
            raise ValueError("zero polynomial has no lowest degree")
        return min(sum(e) for e in self.terms)

    def homogeneous_part(self, d: int):
        return self.new({e: c for e, c in self.terms.items() if sum(e) == d})

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, a in enumerate(e):
                if a:
                    used.add(i)
        return sorted(used)

    def leading(self):
        """Graded-lex leading ``(exponent, coefficient)``."""
        e = max(self.terms, key=lambda e: (sum(e), e))
        return e, self.terms[e]

    def lc(self):
        return self.leading()[1]

    def coefficient_field(self):
        for c in self.terms.values():
            if isinstance(c, NFElement):
                return c.field
        return None

    def is_rational(self) -> bool:
        return all(not isinstance(c, NFElement) or c.is_rational() for c in self.terms.values())

    def to_rational(self):
        return self.new({e: (c.rational() if isinstance(c, NFElement) else c) for e, c in self.terms.items()})

    # calculus and substitution

    def diff(self, var):
        i = self.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return self.new(out)

    def coeffs_in(self, var):
        """Map ``k -> coefficient of var**k`` (a polynomial free of ``var``)."""
        i = self.index(var)
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            k = f[i]
            f[i] = 0
            out.setdefault(k, {})[tuple(f)] = c
        return {k: self.new(t) for k, t in out.items()}

    @classmethod
    def from_coeffs(cls, coeffs, var, names, weights=None):
        names = tuple(names)
        i = names.index(var) if not isinstance(var, int) else var
        out = MultiPoly.zero(names, weights)
        terms = {}
        for k, p in coeffs.items():
            for e, c in p.terms.items():
                f = list(e)
                f[i] += k
                terms[tuple(f)] = c
        return MultiPoly._raw(terms, out.names, out.weights)

    def evaluate(self, values):
        """Substitute scalars.  ``values`` maps names (or indices) to scalars.

        Returns a scalar when every variable is assigned, else a polynomial.
        """
        idx = {self.index(k): _coerce(v) for k, v in values.items()}
        if len(idx) == len(self.names):
            acc = Fraction(0)
            for e, c in self.terms.items():
                t = c
                for i, a in enumerate(e):
                    if a:
                        t = t * idx[i] ** a
                acc = acc + t
            return acc
        out = {}
        for e, c in self.terms.items():
            t = c
            f = list(e)
            for i, v in idx.items():
                if f[i]:
                    t = t * v ** f[i]
                    f[i] = 0
            f = tuple(f)
            s = out.get(f)
            out[f] = t if s is None else s + t
        return self.new({e: c for e, c in out.items() if c})

    def compose(self, images, names=None, weights=None):
        """Substitute a polynomial for every variable.

        ``images`` is a sequence of polynomials, one per variable of ``self``,
        all living in the same target ring.
        """
        if len(images) != len(self.names):
            raise ValueError("one image per variable required")
        target = images[0] if images else None
        names = target.names if names is None else tuple(names)
        weights = target.weights if weights is None else tuple(weights)
        cache = [dict() for _ in images]

        def pw(i, k):
            d = cache[i]
            if k not in d:
                d[k] = images[i] ** k if k < 2 or (k - 1) not in d else d[k - 1] * images[i]
            return d[k]

        acc = {}
        one = MultiPoly.const(1, names, weights)
        for e, c in sorted(self.terms.items()):
            t = one * c
            for i, a in enumerate(e):
                if a:
                    t = t * pw(i, a)
            for f, v in t.terms.items():
                s = acc.get(f)
                acc[f] = v if s is None else s + v
        return MultiPoly._raw({e: c for e, c in acc.items() if c}, names, weights)

    def translate(self, shift):
        """``f(x + shift)``; ``shift`` is a sequence of scalars."""
        gens = MultiPoly.gens(self.names, self.weights)
        return self.compose([g + s if s else g for g, s in zip(gens, shift)])

    def linear_change(self, matrix):
        """``f(M x)`` for a square matrix given as rows."""
        gens = MultiPoly.gens(self.names, self.weights)
        images = []
        for row in matrix:
            acc = MultiPoly.zero(self.names, self.weights)
            for c, g in zip(row, gens):
                if c:
                    acc = acc + g * c
            images.append(acc)
        return self.compose(images)

    def map_coeffs(self, fn):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return self.new(out)

    def embed(self, names, weights=None):
        """Re-express in a ring whose variable list contains ours."""
        names = tuple(names)
        pos = [names.index(v) for v in self.names]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(names)
            for i, a in zip(pos, e):
                f[i] = a
            out[tuple(f)] = c
        return MultiPoly(out, names, weights)

    def drop(self, keep):
        """Restrict to the variables in ``keep`` (others must be absent)."""
        keep = tuple(keep)
        pos = [self.names.index(v) for v in keep]
        out = {}
        for e, c in self.terms.items():
            if any(a for i, a in enumerate(e) if i not in pos):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(e[i] for i in pos)] = c
        return MultiPoly(out, keep, tuple(self.weights[i] for i in pos))

    def to_upoly(self, var=None):
        """Dense coefficient list in the single variable ``var``."""
        if var is None:
            used = self.variables_used()
            i = used[0] if used else 0
        else:
            i = self.index(var)
        if any(a for e in self.terms for j, a in enumerate(e) if j != i):
            raise ValueError("polynomial is not univariate")
        if not self.terms:
            return []
        n = max(e[i] for e in self.terms)
        out = [Fraction(0)] * (n + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    @classmethod
    def from_upoly(cls, coeffs, var, names, weights=None):
        names = tuple(names)
        i = names.index(var)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * len(names)
                e[i] = k
                terms[tuple(e)] = c
        return cls(terms, names, weights)

    def integer_normalized(self):
        """Scale a Q-polynomial to be integral, primitive, with positive lc."""
        if not self.terms:
            return self
        if self.coefficient_field() is not None:
            return self.monic()
        den = 1
        for c in self.terms.values():
            den = ilcm(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = igcd(g, c.numerator * (den // c.denominator))
        s = Fraction(den, g)
        if self.lc() < 0:
            s = -s
        return self * s

    def monic(self):
        if not self.terms:
            return self
        return self * (1 / self.lc())

    def normalized(self):
        if self.coefficient_field() is None:
            return self.integer_normalized()
        return self.monic()

    def __repr__(self):
        from ..parsing import format_poly
        return format_poly(self)

    __str__ = __repr__
