"""Scalar helpers shared by the exact and floating arithmetic lanes.

Exact mode works with python ints and ``fractions.Fraction`` (sympy
expressions are also tolerated, for symbolic cross-checks); identities are
then literal equalities.  Floating mode works with ``complex``; comparisons
always go through an explicit tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

#: default absolute tolerance for complex comparisons (spec: overridable)
COMPLEX_EQ_TOL = 1e-10

#: tolerance used to decide whether two evaluation points coincide
COINCIDENCE_TOL = 1e-12

_INEXACT = (float, complex, np.floating, np.complexfloating)


def is_inexact(x) -> bool:
    return isinstance(x, _INEXACT)


def is_sympy(x) -> bool:
    return type(x).__module__.partition(".")[0] == "sympy"


def is_zero(x, tol: float = COMPLEX_EQ_TOL) -> bool:
    """Zero test: exact for rationals/ints, ``|x| <= tol`` for floats."""
    if is_inexact(x):
        return abs(x) <= tol
    if is_sympy(x):
        flag = x.is_zero
        if flag is None:
            import sympy

            flag = sympy.simplify(x).is_zero
        return bool(flag)
    return x == 0


def eq(a, b, tol: float = COMPLEX_EQ_TOL) -> bool:
    return is_zero(a - b, tol)


def exact_div(a, b):
    """Division that stays in the smallest ring the operands allow."""
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    if is_sympy(a) or is_sympy(b):
        import sympy

        return sympy.cancel(a / b)
    return a / b


def rational_sqrt(x) -> Fraction:
    """Square root of a perfect-square rational, as a ``Fraction``."""
    f = Fraction(x)
    p, q = f.numerator, f.denominator
    if p < 0:
        raise ValueError("negative rational has no rational square root")
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise ValueError(f"{x} is not a perfect rational square")
    return Fraction(rp, rq)
