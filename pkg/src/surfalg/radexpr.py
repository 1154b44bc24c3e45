"""Radical-graded expressions: finite sums sum_s q_s(u,v) * W^s.

The grades s are half-integers stored as integer half-counts (s = k/2 is the
entry k), the coefficients q_s are rational functions, and W is one fixed
base polynomial per expression.  Everything with a square root in the
surface geometry (unit normals, curvature, plane offsets) lives here; the
even-grade part of an expression is an ordinary rational function.

`normalize` reduces each part and migrates W factors between coefficient
and grade while keeping grades separate (cheap, used inside arithmetic);
`collapse` additionally folds each parity class into a single grade with a
W-free reduced coefficient, which is the canonical form equality, hashing,
and display use.
"""

from __future__ import annotations

from fractions import Fraction

from .mpoly import MPoly, PolynomialError, try_div
from .ratfun import RatFun

GRADE_CAP = 16  # |s| <= 8 in half-integer units


class BaseMismatchError(ValueError):
    pass


class GradeOverflowError(ArithmeticError):
    pass


class RadExpr:
    __slots__ = ("base", "parts")

    def __init__(self, base, parts=None):
        if not isinstance(base, MPoly):
            raise PolynomialError("base of a radical expression must be an MPoly")
        if base.is_zero():
            raise PolynomialError("base polynomial must be nonzero")
        self.base = base
        clean = {}
        for k, q in (parts or {}).items():
            if abs(k) > GRADE_CAP:
                raise GradeOverflowError(f"grade {k}/2 exceeds the +-{GRADE_CAP // 2} cap")
            if not isinstance(q, RatFun):
                q = RatFun(q) if isinstance(q, MPoly) else RatFun.const(q, base.vars)
            if not q.is_zero():
                clean[int(k)] = q
        self.parts = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def rational(cls, q, base):
        if isinstance(q, MPoly):
            q = RatFun(q)
        elif not isinstance(q, RatFun):
            q = RatFun.const(q, base.vars)
        return cls(base, {0: q})

    @classmethod
    def sqrt_base(cls, base):
        return cls(base, {1: RatFun.const(1, base.vars)})

    @classmethod
    def zero(cls, base):
        return cls(base, {})

    def is_zero(self):
        return all(q.is_zero() for q in self._folded().values())

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if isinstance(other, RadExpr):
            if other.base != self.base:
                raise BaseMismatchError("radical expressions have different bases")
            return other
        if isinstance(other, (int, Fraction, MPoly, RatFun)):
            return RadExpr.rational(other, self.base)
        raise TypeError(f"cannot combine RadExpr with {type(other).__name__}")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        parts = dict(self.parts)
        for k, q in other.parts.items():
            parts[k] = parts[k] + q if k in parts else q
        return RadExpr(self.base, parts)

    __radd__ = __add__

    def __neg__(self):
        return RadExpr(self.base, {k: -q for k, q in self.parts.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        parts = {}
        for k1, q1 in self.parts.items():
            for k2, q2 in other.parts.items():
                k = k1 + k2
                prod = q1 * q2
                parts[k] = parts[k] + prod if k in parts else prod
        out = RadExpr(self.base, parts)
        return out.normalize() if parts else out

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other).normalize()
        if other.is_zero():
            raise ZeroDivisionError("division by zero radical expression")
        if len(other.parts) == 1:
            (k2, q2), = other.parts.items()
            parts = {k1 - k2: q1 / q2 for k1, q1 in self.parts.items()}
            return RadExpr(self.base, parts).normalize()
        if self.is_zero():
            return RadExpr.zero(self.base)
        raise PolynomialError(
            "division by a mixed-parity radical expression is not exact")

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise PolynomialError("radical expression power must be an integer")
        if n < 0:
            return (RadExpr.rational(1, self.base) / self) ** (-n)
        out = RadExpr.rational(1, self.base)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._check(other)
        except (BaseMismatchError, TypeError):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        n = self.collapse()
        return hash((n.base, tuple(sorted((k, q.normalize().num, q.normalize().den)
                                          for k, q in n.parts.items()))))

    # -- calculus ----------------------------------------------------------

    def diff(self, name):
        """d/d name, using d(W^s) = s W^(s-1) dW."""
        dW = self.base.diff(name)
        parts = {}
        for k, q in self.parts.items():
            dq = q.diff(name)
            if not dq.is_zero():
                parts[k] = parts[k] + dq if k in parts else dq
            if k != 0 and not dW.is_zero():
                chain = q * RatFun(dW.scaled(Fraction(k, 2)))
                kk = k - 2
                parts[kk] = parts[kk] + chain if kk in parts else chain
        return RadExpr(self.base, parts).normalize()

    # -- normal form ------------------------------------------------------

    def _folded(self):
        """Collapse to at most one part per parity: {0: even RatFun, 1: odd RatFun}
        with integer base powers folded into the coefficients.  Each parity is
        assembled over the single denominator W^max_shift to avoid fraction
        blowup."""
        if self.base.is_constant():
            c = Fraction(self.base.constant_value())
            out = {}
            for k, q in self.parts.items():
                parity = k & 1
                if k & 1:
                    folded = q * RatFun.const(c ** ((k - 1) // 2), q.vars)
                else:
                    folded = q * RatFun.const(c ** (k // 2), q.vars)
                if c == 1:
                    parity = 0
                out[parity] = out[parity] + folded if parity in out else folded
            return out
        out = {}
        for parity in (0, 1):
            ks = sorted(k for k in self.parts if (k & 1) == parity)
            if not ks:
                continue
            kmin = ks[0]
            acc = None
            for k in ks:
                q = self.parts[k]
                shift = (k - kmin) // 2
                if shift:
                    q = RatFun(q.num * self.base ** shift, q.den)
                acc = q if acc is None else acc + q
            j = (kmin - parity) // 2
            if j > 0:
                acc = RatFun(acc.num * self.base ** j, acc.den)
            elif j < 0:
                acc = RatFun(acc.num, acc.den * self.base ** (-j))
            out[parity] = acc
        return out

    def normalize(self):
        """Reduce each part and migrate base-polynomial factors into the grade;
        parts stay separate (no cross-grade folding), so graded arithmetic keeps
        polynomial-sized coefficients."""
        parts = {}
        const_base = self.base.is_constant()
        for k, q in self.parts.items():
            q = q.normalize()
            if q.is_zero():
                continue
            if not const_base:
                num, den = q.num, q.den
                changed = False
                while True:
                    d = try_div(num, self.base)
                    if d is None:
                        break
                    num, k, changed = d, k + 2, True
                while True:
                    d = try_div(den, self.base)
                    if d is None:
                        break
                    den, k, changed = d, k - 2, True
                if changed:
                    q = RatFun(num, den).normalize()
            if abs(k) > GRADE_CAP:
                raise GradeOverflowError(f"grade {k}/2 exceeds the +-{GRADE_CAP // 2} cap")
            parts[k] = parts[k] + q if k in parts else q
        return RadExpr(self.base, parts)

    def collapse(self):
        """Fully folded canonical form: at most one part per parity."""
        folded = self._folded()
        out = RadExpr(self.base, {})
        parts = {}
        for parity, q in folded.items():
            q = q.normalize()
            if q.is_zero():
                continue
            k = parity
            if not self.base.is_constant():
                num, den = q.num, q.den
                while True:
                    d = try_div(num, self.base)
                    if d is None:
                        break
                    num, k = d, k + 2
                while True:
                    d = try_div(den, self.base)
                    if d is None:
                        break
                    den, k = d, k - 2
                q = RatFun(num, den).normalize()
            if abs(k) > GRADE_CAP:
                raise GradeOverflowError(f"grade {k}/2 exceeds the +-{GRADE_CAP // 2} cap")
            parts[k] = q
        out.parts = parts
        return out

    def even_part_ratfun(self):
        """The even (rational) part as a RatFun."""
        folded = self._folded()
        return folded.get(0, RatFun.zero(self.base.vars))

    def to_ratfun(self):
        """Convert to a plain rational function; error if a radical part remains."""
        folded = self._folded()
        odd = folded.get(1)
        if odd is not None and not odd.is_zero():
            raise PolynomialError("radical expression has a nonzero odd-grade part")
        return folded.get(0, RatFun.zero(self.base.vars)).normalize()

    def odd_cofactor(self):
        """q with self = q * W^(1/2) exactly; error if an even part remains."""
        folded = self._folded()
        even = folded.get(0)
        if even is not None and not even.is_zero():
            raise PolynomialError("radical expression has a nonzero even-grade part")
        return folded.get(1, RatFun.zero(self.base.vars)).normalize()

    def eval_float(self, point):
        """Numeric evaluation (floats); odd grades use the positive square root."""
        import math
        pt = {k: v if isinstance(v, (int, Fraction)) else Fraction(v)
              for k, v in point.items()}
        w = float(self.base.eval(pt))
        total = 0.0
        for k, q in self.parts.items():
            val = float(q.eval(pt))
            if k:
                total += val * math.pow(w, k / 2.0) if w > 0 or k % 2 == 0 else float("nan")
            else:
                total += val
        return total

    def eval_exact(self, point):
        """Exact evaluation, defined only when the odd part vanishes at the point."""
        folded = self._folded()
        odd = folded.get(1)
        if odd is not None and not odd.is_zero():
            raise PolynomialError("exact evaluation requires a purely rational value")
        even = folded.get(0)
        return even.eval(point) if even is not None else Fraction(0)

    def to_text(self):
        n = self.collapse()
        if not n.parts:
            return "0"
        bits = []
        for k in sorted(n.parts, reverse=True):
            q = n.parts[k]
            if k == 0:
                bits.append(q.to_text())
            else:
                grade = f"W^({k}/2)" if k % 2 else f"W^{k // 2}"
                bits.append(f"[{q.to_text()}] * {grade}")
        return "  +  ".join(bits)

    def __repr__(self):
        return f"RadExpr({self.to_text()}; W = {self.base.to_text()})"
