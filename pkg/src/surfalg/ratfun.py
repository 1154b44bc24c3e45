"""Rational functions num/den over MPoly.

Values are kept unreduced by default: arithmetic just cross-multiplies, and
`normalize` divides out the gcd and fixes signs.  Equality is decided by
cross-multiplication, so unreduced intermediates compare correctly.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly, align, exact_div, poly_gcd


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = MPoly.const(num, den.vars if isinstance(den, MPoly) else ())
        if den is None:
            den = MPoly.const(1, num.vars)
        if isinstance(den, (int, Fraction)):
            den = MPoly.const(den, num.vars)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        num, den = align(num, den)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, vars):
        return cls(MPoly.zero(vars))

    @classmethod
    def const(cls, c, vars=()):
        return cls(MPoly.const(c, vars))

    @property
    def vars(self):
        return self.num.vars

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        r = self.normalize()
        return r.num.is_constant() and r.den.is_constant()

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, MPoly):
            return RatFun(other)
        return RatFun(MPoly.const(other, self.vars))

    def __add__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("inverse of zero rational function")
            return RatFun(self.den ** (-n), self.num ** (-n))
        return RatFun(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        r = self.normalize()
        return hash((r.num, r.den))

    def diff(self, name):
        return RatFun(self.num.diff(name) * self.den - self.num * self.den.diff(name),
                      self.den * self.den)

    def eval(self, point):
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return self.num.eval(point) / d

    def normalize(self):
        """Reduce to lowest terms; den gets integer coefficients, positive lead,
        content coprime with the numerator content."""
        if self.num.is_zero():
            return RatFun(MPoly.zero(self.vars), MPoly.const(1, self.vars))
        g = poly_gcd(self.num, self.den)
        num, den = self.num, self.den
        if not (g.is_constant() and g.constant_value() == 1):
            num, den = exact_div(num, g), exact_div(den, g)
        # scale so both num and den have integer coefficients with coprime contents
        cn, cd = num.content(), den.content()
        num_i = num.scaled(Fraction(1) / cn)
        den_i = den.scaled(Fraction(1) / cd)
        ratio = cn / cd  # num/den == ratio * num_i/den_i
        num_f = num_i.scaled(Fraction(ratio.numerator))
        den_f = den_i.scaled(Fraction(ratio.denominator))
        _, lc = den_f.leading()
        if lc < 0:
            num_f, den_f = -num_f, -den_f
        return RatFun(num_f, den_f)

    def to_poly(self):
        """The underlying MPoly when the denominator divides the numerator."""
        r = self.normalize()
        if r.den.is_constant():
            return r.num.scaled(Fraction(1) / r.den.constant_value())
        out = exact_div(r.num, r.den)
        return out

    def rename(self, mapping):
        return RatFun(self.num.rename(mapping), self.den.rename(mapping))

    def to_text(self):
        r = self.normalize()
        if r.den.is_constant() and r.den.constant_value() == 1:
            return r.num.to_text()
        return f"({r.num.to_text()}) / ({r.den.to_text()})"

    def __repr__(self):
        return f"RatFun({self.to_text()})"
