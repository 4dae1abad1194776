"""Univariate polynomials and rational functions over a generic field.

This is the symbolic backbone of the confluent (coincident-point)
determinant paths: column functions like z^a (1 + beta z)^b are stored
exactly, differentiated by the quotient rule, and evaluated with a L'Hopital
fallback at removable singularities such as the z*y = 1 point of the Cauchy
kernel.  Coefficients may be ints, Fractions or complex numbers.
"""

from __future__ import annotations

from .scalars import COINCIDENCE_TOL, exact_div, is_inexact, is_zero


def _trim(coeffs):
    c = list(coeffs)
    while c and is_zero(c[-1], 0):
        c.pop()
    return c


class Poly:
    """Dense univariate polynomial, ascending coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        self.c = _trim(coeffs)

    @classmethod
    def const(cls, a):
        return cls([a])

    @classmethod
    def monomial(cls, n, coeff=1):
        return cls([0] * n + [coeff])

    @property
    def degree(self):
        return len(self.c) - 1

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        other = other if isinstance(other, Poly) else Poly.const(other)
        n = max(len(self.c), len(other.c))
        a = self.c + [0] * (n - len(self.c))
        b = other.c + [0] * (n - len(other.c))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c])

    def __sub__(self, other):
        return self + (-(other if isinstance(other, Poly) else Poly.const(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([other * x for x in self.c])
        if not self.c or not other.c:
            return Poly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            for j, y in enumerate(other.c):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self):
        return Poly([i * x for i, x in enumerate(self.c)][1:])

    def __call__(self, x):
        acc = 0
        for coeff in reversed(self.c):
            acc = acc * x + coeff
        return acc

    def __repr__(self):
        return f"Poly({self.c!r})"


class RatFunc:
    """Ratio of two polynomials; derivatives are cached per order."""

    __slots__ = ("num", "den", "_derivs")

    def __init__(self, num, den=None):
        self.num = num if isinstance(num, Poly) else Poly.const(num)
        self.den = Poly([1]) if den is None else (den if isinstance(den, Poly) else Poly.const(den))
        if not self.den:
            raise ZeroDivisionError("zero denominator polynomial")
        self._derivs = None

    def derivative(self):
        n, d = self.num, self.den
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def nth_derivative(self, order):
        if self._derivs is None:
            self._derivs = [self]
        while len(self._derivs) <= order:
            self._derivs.append(self._derivs[-1].derivative())
        return self._derivs[order]

    def __add__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, RatFunc) else RatFunc(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, RatFunc) else RatFunc(other)
        return RatFunc(self.num * other.den, self.den * other.num)

    def __call__(self, x, tol=COINCIDENCE_TOL):
        """Evaluate, resolving removable singularities by L'Hopital."""
        den_val = self.den(x)
        zero_tol = tol if is_inexact(den_val) or is_inexact(x) else 0
        if not is_zero(den_val, zero_tol):
            return exact_div(self.num(x), den_val)
        num, den = self.num, self.den
        for _ in range(self.den.degree + 1):
            num_val = num(x)
            if not is_zero(num_val, zero_tol):
                raise ZeroDivisionError("pole encountered in rational-function evaluation")
            num, den = num.derivative(), den.derivative()
            den_val = den(x)
            if not is_zero(den_val, zero_tol):
                return exact_div(num(x), den_val)
        raise ZeroDivisionError("pole encountered in rational-function evaluation")


def linear_power(exp_z, a, b, exp_lin):
    """z^exp_z * (a + b*z)^exp_lin as a RatFunc (either exponent may be negative).

    Covers every bialternant column in the package: Grothendieck columns are
    z^(lam_k+N-k) (1+beta*z)^(k-1), the dual ones z^(lam_k+N-1) (z+beta)^(1-k),
    wavefunction columns s^(k-x_k) (alpha*s-1)^(x_k), and so on.
    """
    num = Poly([1])
    den = Poly([1])
    if exp_z >= 0:
        num = Poly.monomial(exp_z)
    else:
        den = Poly.monomial(-exp_z)
    lin = Poly([a, b])
    if exp_lin >= 0:
        num = num * lin ** exp_lin
    else:
        den = den * lin ** (-exp_lin)
    return RatFunc(num, den)
