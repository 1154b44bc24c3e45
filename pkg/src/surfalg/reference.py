"""Previously reported results for the built-in surfaces.

Everything here is a verbatim transcription of published values for the
reference TF surface and its two operator images, kept exactly as displayed
(including the readings suspected to be misprints).  The verify module and
the acceptance suite adjudicate these against first-principles computation;
nothing in this registry is ever silently substituted for a computed value.
"""

from __future__ import annotations

from .mpoly import MPoly
from .ratfun import RatFun
from .surface import SurfacePatch
from .implicit import ParametricMap3

PARAMS = ("u", "v")
XYZ = ("x", "y", "z")
ABC = ("a", "b", "c")


def _uv():
    return MPoly.var("u", PARAMS), MPoly.var("v", PARAMS)


def j_poly():
    """(u+1)^2 + (v+1)^2 + 1, the recurring quadratic."""
    u, v = _uv()
    return ((u + 1) ** 2 + (v + 1) ** 2 + 1).canonical()


def tf_patch():
    """The reference TF surface (u, v, u + v + u v)."""
    u, v = _uv()
    return SurfacePatch(u, v, u + v + u * v)


def delta1_printed_patch():
    """The parametrization reported as the first-operator image."""
    u, v = _uv()
    j = j_poly()
    return SurfacePatch(2 * (u + 1) * j, 2 * (v + 1) * j, 6 * (u + 1) * (v + 1) * j)


def delta3_printed_patch():
    """The parametrization reported as the third-operator image."""
    u, v = _uv()
    j = j_poly()
    return SurfacePatch(RatFun(-2 * (u + 1) * (v + 1) ** 2, j ** 2),
                        RatFun(-2 * (u + 1) ** 2 * (v + 1), j ** 2),
                        RatFun(2 * (u + 1) * (v + 1), j ** 2))


def delta1_printed_map():
    p = delta1_printed_patch()
    return ParametricMap3.from_patch(p)


def delta3_printed_map():
    p = delta3_printed_patch()
    return ParametricMap3.from_patch(p)


# reported implicit equations and their degrees
Q_DELTA1_TEXT = "27*x^3*y^3 - 18*x^2*y^2*z - 2*x^2*z^3 - 2*y^2*z^3"
Q_DELTA3_TEXT = "x^4 + 2*x^2*y^2 + 2*x^2*z^2 + y^4 + 2*y^2*z^2 + z^4 - 2*x*y*z"
REPORTED_DEGREES = {"paper-deltaI": 6, "paper-deltaIII": 4}
REPORTED_CLASSES = {"paper-deltaI": 16, "paper-deltaIII": 15}


def q_delta1():
    return MPoly.parse(Q_DELTA1_TEXT, XYZ)


def q_delta3():
    return MPoly.parse(Q_DELTA3_TEXT, XYZ)


# reported leading terms of the tangential (class) equations, exponent -> coefficient
QHAT_DELTA1_TOP = {(15, 1, 0): 512, (13, 3, 0): 3072, (13, 1, 2): 27648,
                   (11, 5, 0): 7680, (11, 3, 2): -110592}
QHAT_DELTA1_OTHER_TERMS = 143
QHAT_DELTA3_TOP = {(9, 3, 3): -54, (7, 5, 3): 108, (7, 3, 5): 108,
                   (5, 7, 3): -54, (5, 5, 5): -18}
QHAT_DELTA3_OTHER_TERMS = 120


def t_radicand():
    """Degree-6 polynomial reported under the square root of the first image's
    plane offset."""
    u, v = _uv()
    return (81 * u ** 6 + 486 * u ** 5
            + (63 * v ** 2 + 126 * v + 1341) * u ** 4
            + (252 * v ** 2 + 504 * v + 2124) * u ** 3
            + (63 * v ** 4 + 252 * v ** 3 + 810 * v ** 2 + 1116 * v + 2103) * u ** 2
            + (126 * v ** 4 + 504 * v ** 3 + 1116 * v ** 2 + 1224 * v + 1254) * u
            + 81 * v ** 6 + 486 * v ** 5 + 1341 * v ** 4 + 2124 * v ** 3
            + 2103 * v ** 2 + 1254 * v + 499).canonical()


def k_radicand():
    """Degree-6 polynomial reported under the square root for the third image."""
    u, v = _uv()
    return ((v + 2) ** 2 * u ** 4 + 4 * (v + 1) ** 2 * u ** 3
            + (v ** 4 + 4 * v ** 3 + 7 * v ** 2 + 6 * v + 9) * u ** 2
            + (2 * v ** 4 + 8 * v ** 3 + 6 * v ** 2 - 4 * v + 2) * u
            + 2 * v ** 4 + 8 * v ** 3 + 9 * v ** 2 + 2 * v + 1).canonical()


def delta1_tangential_printed(c_denominator="corrected"):
    """Reported tangential coordinates of the first image.

    c_denominator "corrected": 6(u+1)(v+1)[j^2]; "literal": the display's
    6(v+1)(v+1)[j^2], the suspected misprint.
    """
    u, v = _uv()
    j = j_poly()
    alpha = j ** 2
    a = RatFun(-(u * (u + 2) + 3 * v * (v + 2) + 5), 2 * (u + 1) * alpha)
    b = RatFun(-(3 * u * (u + 2) + v * (v + 2) + 5), 2 * (v + 1) * alpha)
    cnum = 3 * (u ** 2 + v ** 2) + 6 * (u + v) + 7
    if c_denominator == "corrected":
        c = RatFun(cnum, 6 * (u + 1) * (v + 1) * alpha)
    elif c_denominator == "literal":
        c = RatFun(cnum, 6 * (v + 1) * (v + 1) * alpha)
    else:
        raise ValueError(f"unknown reading {c_denominator!r}")
    return a, b, c


def delta3_tangential_printed(c_denominator="corrected"):
    """Reported tangential coordinates of the third image, as displayed.

    These fail the orthogonality test against the patch (they differ from
    the first-principles coordinates by the factor j/beta and a sign on a);
    they are kept because the reported class-15 equation belongs to exactly
    this map.
    """
    u, v = _uv()
    j = j_poly()
    alpha = j ** 2
    beta = 3 * u * (u + 2) - 5 * v * (v + 2) + MPoly.const(1, PARAMS)
    a = RatFun((u ** 2 + 2 * u - 3 * v ** 2 - 6 * v - 1) * alpha,
               2 * (u + 1) * (v + 1) ** 2 * beta)
    b = RatFun((3 * u ** 2 + 6 * u - v ** 2 - 2 * v + 1) * alpha,
               2 * (u + 1) ** 2 * (v + 1) * beta)
    cnum = (u ** 2 + 2 * u + v ** 2 + 2 * v - 1) * alpha
    if c_denominator == "corrected":
        c = RatFun(cnum, 2 * (u + 1) * (v + 1) * beta)
    elif c_denominator == "literal":
        c = RatFun(cnum, 2 * (v + 1) * (v + 1) * beta)
    else:
        raise ValueError(f"unknown reading {c_denominator!r}")
    return a, b, c


def delta3_tangential_printed_map():
    """The reported third-image tangential coordinates as an elimination input."""
    a, b, c = delta3_tangential_printed("corrected")
    return ParametricMap3(a, b, c, params=PARAMS, out_vars=ABC)


def delta1_p_squared_printed():
    """Square of the reported plane offset for the first image."""
    u, v = _uv()
    j = j_poly()
    return RatFun((2 * (u + 1) * (v + 1) * j ** 2) ** 2, t_radicand())


def delta3_p_squared_printed():
    """Square of the reported plane offset for the third image."""
    u, v = _uv()
    j = j_poly()
    q = 3 * u ** 2 + 5 * v ** 2 + 6 * u - 10 * v + MPoly.const(1, PARAMS)
    num = (2 * (u + 1) ** 2 * (v + 1) ** 2) ** 2 * q ** 2
    return RatFun(num, k_radicand() * j ** 5)


BUILTIN_SURFACES = ("paper-S", "paper-deltaI", "paper-deltaIII")


def builtin_patch(name):
    if name == "paper-S":
        return tf_patch()
    if name == "paper-deltaI":
        return delta1_printed_patch()
    if name == "paper-deltaIII":
        return delta3_printed_patch()
    raise KeyError(f"unknown built-in surface {name!r}")
