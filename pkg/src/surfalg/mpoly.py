"""Sparse multivariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values, which are always stored
reduced with a positive denominator.  Exponent vectors are tuples aligned
with an ordered variable tuple; no zero coefficient is ever stored.  The
canonical form (graded-lex term order, integer content removed, positive
leading coefficient) is what all equality-up-to-scalar comparisons and the
text serialization are based on.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class PolynomialError(ValueError):
    pass


def grlex_key(expts):
    """Sort key for graded-lex: total degree first, lex on exponents second."""
    return (sum(expts), expts)


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise PolynomialError(f"coefficient must be rational, got {type(c).__name__}")


def _as_coeff(c):
    """Coefficients are stored as int when integral, Fraction otherwise."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise PolynomialError(f"coefficient must be rational, got {type(c).__name__}")


def _coeff_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _as_fraction(a) / b


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        for expts, c in (terms or {}).items():
            c = _as_coeff(c)
            if len(expts) != len(self.vars):
                raise PolynomialError("exponent vector length does not match variables")
            if c:
                clean[tuple(expts)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, c, vars=()):
        c = _as_coeff(c)
        if not c:
            return cls(vars, {})
        return cls(vars, {(0,) * len(tuple(vars)): c})

    @classmethod
    def var(cls, name, vars):
        vars = tuple(vars)
        if name not in vars:
            raise PolynomialError(f"unknown variable {name!r}")
        e = tuple(1 if w == name else 0 for w in vars)
        return cls(vars, {e: 1})

    @classmethod
    def parse(cls, text, vars):
        """Parse the canonical text form, e.g. ``27*x^3*y^3 - 2*y^2*z^3``."""
        vars = tuple(vars)
        text = text.replace("**", "^").strip()
        if not text:
            raise PolynomialError("empty polynomial text")
        # split into signed terms
        chunks = []
        sign, buf = 1, []
        depth_guard = text.replace(" ", "")
        i = 0
        cur = ""
        cur_sign = 1
        first = True
        while i < len(depth_guard):
            ch = depth_guard[i]
            if ch in "+-" and not first and depth_guard[i - 1] not in "*^/+-":
                chunks.append((cur_sign, cur))
                cur_sign = 1 if ch == "+" else -1
                cur = ""
            elif ch in "+-" and first:
                cur_sign = 1 if ch == "+" else -1
            else:
                cur += ch
            first = False
            i += 1
        chunks.append((cur_sign, cur))
        terms = {}
        for sgn, chunk in chunks:
            if not chunk:
                raise PolynomialError(f"malformed term in {text!r}")
            coeff = Fraction(sgn)
            expts = [0] * len(vars)
            for factor in chunk.split("*"):
                if not factor:
                    raise PolynomialError(f"malformed term {chunk!r}")
                if factor[0].isdigit():
                    coeff *= Fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in vars:
                    raise PolynomialError(f"unknown variable {name!r} in {text!r}")
                expts[vars.index(name)] += int(power) if power else 1
            key = tuple(expts)
            coeff += terms.get(key, 0)
            if coeff:
                terms[key] = coeff
            else:
                terms.pop(key, None)
        return cls(vars, terms)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise PolynomialError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name):
        i = self._index(name)
        return max((e[i] for e in self.terms), default=0)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise PolynomialError("zero polynomial has no leading term")
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    def _index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r}") from None

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        a, b = align(self, other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        a, b = align(self, other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = align(self, other)
        if len(a.terms) < len(b.terms):
            a, b = b, a
        if len(b.terms) == 1:
            (e2, c2), = b.terms.items()
            if not any(e2):
                return MPoly(a.vars, {e: c * c2 for e, c in a.terms.items()})
            return MPoly(a.vars, {tuple(x + y for x, y in zip(e, e2)): c * c2
                                  for e, c in a.terms.items()})
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return MPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("polynomial power must be a nonnegative integer")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other, self.vars)

    # -- calculus / evaluation ---------------------------------------------

    def diff(self, name):
        i = self._index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            terms[tuple(d)] = c * e[i]
        return MPoly(self.vars, terms)

    def eval(self, point):
        """Exact evaluation; `point` must cover every variable."""
        for name in self.vars:
            if name not in point:
                raise PolynomialError(f"missing value for variable {name!r}")
        vals = [_as_fraction(point[name]) for name in self.vars]
        maxes = [0] * len(self.vars)
        for e in self.terms:
            for i, p in enumerate(e):
                maxes[i] = max(maxes[i], p)
        pows = []
        for val, m in zip(vals, maxes):
            row = [Fraction(1)]
            for _ in range(m):
                row.append(row[-1] * val)
            pows.append(row)
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, p in enumerate(e):
                if p:
                    t *= pows[i][p]
            total += t
        return total

    def subs_polys(self, values):
        """Substitute an MPoly for each variable (polynomial composition)."""
        out_vars = None
        for name in self.vars:
            if name not in values:
                raise PolynomialError(f"missing substitution for {name!r}")
            out_vars = values[name].vars if out_vars is None else out_vars
        maxes = [self.degree_in(name) for name in self.vars]
        pows = []
        for name, m in zip(self.vars, maxes):
            row = [MPoly.const(1, out_vars)]
            for _ in range(m):
                row.append(row[-1] * values[name])
            pows.append(row)
        total = MPoly.zero(out_vars)
        for e, c in self.terms.items():
            t = MPoly.const(c, out_vars)
            for i, p in enumerate(e):
                if p:
                    t = t * pows[i][p]
            total = total + t
        return total

    def rename(self, mapping):
        """Rename variables; mapping may cover a subset."""
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise PolynomialError("variable rename collides")
        return MPoly(new_vars, dict(self.terms))

    def extend(self, vars):
        """View this polynomial in a larger variable tuple."""
        vars = tuple(vars)
        idx = [vars.index(v) for v in self.vars]
        n = len(vars)
        terms = {}
        for e, c in self.terms.items():
            out = [0] * n
            for i, p in zip(idx, e):
                out[i] = p
            terms[tuple(out)] = c
        return MPoly(vars, terms)

    # -- normal forms --------------------------------------------------

    def content(self):
        """Positive rational c with self/c integer, coprime coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = _igcd(num, abs(c.numerator))
            den = den * c.denominator // _igcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self):
        c = self.content()
        if not c or c == 1:
            return self
        return MPoly(self.vars, {e: k / c for e, k in self.terms.items()})

    def canonical(self):
        """Primitive with positive graded-lex leading coefficient."""
        if not self.terms:
            return self
        p = self.primitive()
        _, lc = p.leading()
        return -p if lc < 0 else p

    def scaled(self, c):
        c = _as_fraction(c)
        return MPoly(self.vars, {e: k * c for e, k in self.terms.items()})

    # -- text form -----------------------------------------------------

    def to_text(self):
        """Faithful text form: terms in descending graded-lex order."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, power in zip(self.vars, e):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append(f"{name}^{power}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def canonical_text(self):
        """Canonical comparison surface: canonical form in the text format."""
        return self.canonical().to_text()

    def __repr__(self):
        return f"MPoly({self.to_text()!r}, vars={self.vars})"


def align(p, q):
    """Bring two polynomials onto a shared variable tuple (union, left order first)."""
    if p.vars == q.vars:
        return p, q
    merged = list(p.vars) + [v for v in q.vars if v not in p.vars]
    return p.extend(merged), q.extend(merged)


# -- exact division ---------------------------------------------------------


def try_div(p, q):
    """Exact quotient p/q, or None if q does not divide p."""
    if q.is_zero():
        raise PolynomialError("division by zero polynomial")
    p, q = align(p, q)
    if p.is_zero():
        return p
    rem = dict(p.terms)
    qlm, qlc = q.leading()
    quot = {}
    while rem:
        m = max(rem, key=grlex_key)
        diff = tuple(a - b for a, b in zip(m, qlm))
        if any(d < 0 for d in diff):
            return None
        c = _coeff_div(rem[m], qlc)
        quot[diff] = c
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(diff, e2))
            s = rem.get(e, 0) - c * c2
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return MPoly(p.vars, quot)


def exact_div(p, q):
    out = try_div(p, q)
    if out is None:
        raise PolynomialError("inexact polynomial division")
    return out


# -- gcd (content/primitive + subresultant PRS) -----------------------------


def _univar(p, i):
    """Dense coefficient list in variable i (entries: MPoly with that exponent zeroed)."""
    d = p.degree_in(p.vars[i])
    coeffs = [dict() for _ in range(d + 1)]
    for e, c in p.terms.items():
        e2 = list(e)
        k = e2[i]
        e2[i] = 0
        coeffs[k][tuple(e2)] = c
    return [MPoly(p.vars, t) for t in coeffs]


def _from_univar(coeffs, vars, i):
    total = {}
    for k, coef in enumerate(coeffs):
        for e, c in coef.terms.items():
            e2 = list(e)
            e2[i] += k
            total[tuple(e2)] = total.get(tuple(e2), 0) + c
    return MPoly(vars, total)


def _list_gcd(polys):
    g = MPoly.zero(polys[0].vars) if polys else None
    for p in polys:
        g = poly_gcd(g, p)
        if g.is_constant() and not g.is_zero():
            return MPoly.const(1, g.vars)
    return g


def _trim(coeffs):
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def _prem(A, B, vars, i):
    """Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A reduced modulo B."""
    A = _trim(list(A))
    dB = len(B) - 1
    lcB = B[-1]
    steps = max(len(A) - len(B) + 1, 0)
    reductions = 0
    while A and len(A) - 1 >= dB:
        dA = len(A) - 1
        lcA = A[-1]
        shift = dA - dB
        A = [c * lcB for c in A]
        for k, bc in enumerate(B):
            A[k + shift] = A[k + shift] - lcA * bc
        _trim(A)
        reductions += 1
    for _ in range(steps - reductions):
        A = [c * lcB for c in A]
    return A


def poly_gcd(p, q):
    """A gcd of p and q: primitive, positive leading coefficient; gcd(0,0) = 0.

    Content/primitive-part recursion with a subresultant PRS core.  Large
    bivariate inputs first go through an evaluation-interpolation fast path
    whose candidate is certified by trial division, so the fast path can
    only speed things up, never change a result.
    """
    if p is None or p.is_zero():
        return q.canonical()
    if q.is_zero():
        return p.canonical()
    p0, q0 = align(p, q)
    p0, q0 = p0.canonical(), q0.canonical()
    if p0.is_constant() or q0.is_constant():
        return MPoly.const(1, p0.vars)
    involved = [name for name in p0.vars
                if p0.degree_in(name) > 0 or q0.degree_in(name) > 0]
    if len(involved) == 2 and (p0.total_degree() + q0.total_degree() > 16
                               or len(p0.terms) + len(q0.terms) > 40):
        g = _gcd_bivar_eval(p0, q0, involved)
        if g is not None:
            return g
    # main variable: first one present in both
    main = None
    for i, name in enumerate(p0.vars):
        if p0.degree_in(name) > 0 and q0.degree_in(name) > 0:
            main = i
            break
    if main is None:
        return MPoly.const(1, p0.vars)
    A, B = _univar(p0, main), _univar(q0, main)
    if len(A) < len(B):
        A, B = B, A
    contA, contB = _list_gcd(A), _list_gcd(B)
    cont = poly_gcd(contA, contB)
    A = [exact_div(c, contA) for c in A]
    B = [exact_div(c, contB) for c in B]
    vars = p0.vars
    one = MPoly.const(1, vars)
    g, h = one, one
    while True:
        delta = len(A) - len(B)
        R = _prem(A, B, vars, main)
        if not R:
            break
        if len(R) == 1:
            B = [one]
            break
        divisor = g * h ** delta
        A, B = B, [exact_div(c, divisor) for c in R]
        g = A[-1]
        if delta == 0:
            h = h  # unchanged
        elif delta == 1:
            h = g
        else:
            h = exact_div(g ** delta, h ** (delta - 1))
    prim = _from_univar(B, vars, main)
    prim = exact_div(prim, _list_gcd(_univar(prim, main)))
    return (cont * prim).canonical()


def poly_lcm(p, q):
    if p.is_zero() or q.is_zero():
        return MPoly.zero(p.vars)
    g = poly_gcd(p, q)
    return exact_div(p * q, g).canonical()


def _int_square_split(n):
    """n = a^2 * b with b squarefree (trial division up to 10^4, then isqrt)."""
    a, b = 1, 1
    n = abs(n)
    d = 2
    while d * d <= n and d < 10 ** 4:
        while n % (d * d) == 0:
            a *= d
            n //= d * d
        if n % d == 0:
            b *= d
            n //= d
        d += 1
    r = isqrt_exact(n)
    if r is not None:
        a *= r
    else:
        b *= n
    return a, b


def isqrt_exact(n):
    from math import isqrt
    r = isqrt(n)
    return r if r * r == n else None


def squarefree_split(p):
    """p = (sign) * s^2 * f with f free of repeated factors.

    Returns (s, f) with s, f canonical; the sign and any non-square rational
    content land in f.  Uses the characteristic-zero identity
    gcd(p, dp/du, dp/dv) = product of primes to one less multiplicity.
    """
    if p.is_zero():
        raise PolynomialError("cannot square-split the zero polynomial")
    cont = p.content()
    sign = 1
    _, lc = p.leading()
    if lc < 0:
        sign = -1
    prim = p.scaled(Fraction(sign) / cont)
    # distinct-power decomposition
    layers = []  # w_i = prod f^(e-i)
    w = prim
    while not w.is_constant():
        g = None
        for name in w.vars:
            d = w.diff(name)
            if d.is_zero():
                continue
            g = poly_gcd(g, d) if g is not None else d
        g = poly_gcd(w, g) if g is not None else MPoly.const(1, w.vars)
        layers.append((w, g))
        w = g
    s = MPoly.const(1, p.vars)
    f = MPoly.const(1, p.vars)
    ys = [exact_div(wi, gi) for wi, gi in layers]  # y_i = prod of primes with e >= i
    ys.append(MPoly.const(1, p.vars))
    for i in range(len(layers)):
        # primes with exact multiplicity i+1
        part = exact_div(ys[i], poly_gcd(ys[i], ys[i + 1])) if i + 1 < len(ys) else ys[i]
        mult = i + 1
        if not part.is_constant():
            s = s * part ** (mult // 2)
            if mult % 2:
                f = f * part
    ca, cb = _int_square_split(cont.numerator)
    da, db = _int_square_split(cont.denominator)
    s = s.scaled(Fraction(ca, da))
    f = f.scaled(Fraction(cb * sign, db))
    return s, f


# -- evaluation-interpolation gcd fast path ----------------------------------


def _dense_ints(p, name):
    """Dense integer coefficient list of a univariate (in `name`) polynomial."""
    i = p.vars.index(name)
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // _igcd(den, c.denominator)
    out = [0] * (p.degree_in(name) + 1)
    for e, c in p.terms.items():
        out[e[i]] += int(c * den)
    return out


def _trim_ints(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _prim_ints(a):
    g = 0
    for c in a:
        g = _igcd(g, abs(c))
        if g == 1:
            return a
    return [c // g for c in a] if g > 1 else a


def _gcd_univar_ints(a, b):
    """Primitive-PRS gcd of dense integer lists; primitive, positive lead."""
    a, b = _prim_ints(_trim_ints(list(a))), _prim_ints(_trim_ints(list(b)))
    if not a:
        a, b = b, a
    while b:
        if len(a) < len(b):
            a, b = b, a
        # pseudo-remainder of a by b
        r = list(a)
        lcb = b[-1]
        while r and len(r) >= len(b):
            lcr = r[-1]
            shift = len(r) - len(b)
            r = [c * lcb for c in r]
            for k, bc in enumerate(b):
                r[k + shift] -= lcr * bc
            _trim_ints(r)
        a, b = b, _prim_ints(r)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _eval_ints(coeffs, t):
    total = 0
    for c in reversed(coeffs):
        total = total * t + c
    return total


class _LagrangeNodes:
    """Shared integer Lagrange data for several interpolations on one node set."""

    def __init__(self, points):
        self.points = points
        n = len(points)
        node = [1]  # prod (x - t_i), ascending coefficients
        for t in points:
            node = [0] + node
            for k in range(len(node) - 1):
                node[k] -= t * node[k + 1]
        self.numerators = []  # node / (x - t_i), integer synthetic division
        self.weights = []     # prod_{j != i} (t_i - t_j)
        for i, t in enumerate(points):
            q = [0] * n
            carry = node[n]
            for k in range(n - 1, -1, -1):
                q[k] = carry
                carry = node[k] + carry * t
            self.numerators.append(q)
            w = 1
            for j, tj in enumerate(points):
                if j != i:
                    w *= t - tj
            self.weights.append(w)
        W0 = 1
        for w in self.weights:
            W0 = W0 * w // _igcd(W0, abs(w))
        self.common = abs(W0)

    def interpolate(self, values):
        """Exact interpolation through (t_i, values_i); values may be Fractions."""
        n = len(self.points)
        den_lcm = 1
        for v in values:
            v = _as_fraction(v)
            den_lcm = den_lcm * v.denominator // _igcd(den_lcm, v.denominator)
        ints = [int(_as_fraction(v) * den_lcm) for v in values]
        acc = [0] * n
        for vi, q, w in zip(ints, self.numerators, self.weights):
            f = vi * (self.common // w)
            if not f:
                continue
            for k in range(n):
                if q[k]:
                    acc[k] += f * q[k]
        scale = Fraction(1, self.common * den_lcm)
        return [c * scale for c in acc]


def _gcd_bivar_eval(p, q, involved):
    """Evaluation-interpolation bivariate gcd; returns None when inconclusive.

    Images along one variable are combined by Lagrange interpolation with a
    leading-coefficient correction; the assembled candidate is accepted only
    if it divides both inputs exactly.
    """
    main, sec = involved
    dpm, dqm = p.degree_in(main), q.degree_in(main)
    if dpm == 0 or dqm == 0:
        return None
    # treat p, q as univariate in `main` with integer-poly coefficients in `sec`
    def univar_rows(poly):
        mi = poly.vars.index(main)
        si = poly.vars.index(sec)
        rows = [dict() for _ in range(poly.degree_in(main) + 1)]
        den = 1
        for c in poly.terms.values():
            den = den * c.denominator // _igcd(den, c.denominator)
        for e, c in poly.terms.items():
            rows[e[mi]][e[si]] = rows[e[mi]].get(e[si], 0) + int(c * den)
        return [[r.get(k, 0) for k in range(max(r) + 1)] if r else [0] for r in rows]

    prow, qrow = univar_rows(p), univar_rows(q)
    lcp, lcq = prow[-1], qrow[-1]
    gamma = _gcd_univar_ints(lcp, lcq)
    db = min(p.degree_in(sec), q.degree_in(sec))
    needed = db + (len(gamma) - 1) + 1
    pts, images = [], []
    dmin = None
    t = 0
    attempts = 0
    while len(pts) < needed and attempts < 8 * needed + 32:
        attempts += 1
        t = -t if t > 0 else -t + 1  # 0, 1, -1, 2, -2, ...
        if _eval_ints(lcp, t) == 0 or _eval_ints(lcq, t) == 0:
            continue
        a = _trim_ints([_eval_ints(row, t) for row in prow])
        b = _trim_ints([_eval_ints(row, t) for row in qrow])
        g = _gcd_univar_ints(a, b)
        d = len(g) - 1
        if dmin is None or d < dmin:
            dmin, pts, images = d, [], []
        if d > dmin:
            continue  # unlucky evaluation point
        scale = Fraction(_eval_ints(gamma, t), g[-1])
        pts.append(t)
        images.append([Fraction(c) * scale for c in g])
    if dmin is None or len(pts) < needed:
        return None
    if dmin == 0 and len(gamma) == 1:
        return MPoly.const(1, p.vars)
    # interpolate each main-variable coefficient as a polynomial in sec
    terms = {}
    mi = p.vars.index(main)
    si = p.vars.index(sec)
    nodes = _LagrangeNodes(pts)
    for k in range(dmin + 1):
        vals = [img[k] if k < len(img) else Fraction(0) for img in images]
        for j, c in enumerate(nodes.interpolate(vals)):
            if c:
                e = [0] * len(p.vars)
                e[mi], e[si] = k, j
                terms[tuple(e)] = c
    cand = MPoly(p.vars, terms).canonical()
    if cand.is_zero():
        return None
    if try_div(p, cand) is None or try_div(q, cand) is None:
        return None
    return cand
