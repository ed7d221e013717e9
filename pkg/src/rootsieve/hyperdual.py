"""Hyper-dual numbers for exact first and second derivatives.

A hyper-dual number is ``a + b e1 + c e2 + d e1 e2`` with ``e1**2 = e2**2 = 0``
and ``e1 e2 != 0``.  Seeding ``x + e1 + e2`` and evaluating a function gives
``f(x)`` in the real part, ``f'(x)`` in ``b`` (and ``c``) and ``f''(x)`` in
``d``, with no truncation error.

Arithmetic is done on plain Python floats.  Domain errors raised by the
``math`` module (log of a negative number, division by zero, ...) are left
to propagate; callers turn them into a non-finite flag.
"""
from __future__ import annotations

import math


class HyperDual:
    __slots__ = ("re", "e1", "e2", "e12")

    def __init__(self, re: float, e1: float = 0.0, e2: float = 0.0, e12: float = 0.0):
        self.re = re
        self.e1 = e1
        self.e2 = e2
        self.e12 = e12

    @classmethod
    def variable(cls, x: float) -> "HyperDual":
        return cls(float(x), 1.0, 1.0, 0.0)

    def __repr__(self):
        return f"HyperDual({self.re!r}, {self.e1!r}, {self.e2!r}, {self.e12!r})"

    def _chain(self, f0: float, f1: float, f2: float) -> "HyperDual":
        # g(u) for a scalar g with g(re)=f0, g'(re)=f1, g''(re)=f2
        return HyperDual(
            f0,
            f1 * self.e1,
            f1 * self.e2,
            f1 * self.e12 + f2 * self.e1 * self.e2,
        )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, HyperDual):
            return HyperDual(self.re + other.re, self.e1 + other.e1,
                             self.e2 + other.e2, self.e12 + other.e12)
        return HyperDual(self.re + other, self.e1, self.e2, self.e12)

    __radd__ = __add__

    def __neg__(self):
        return HyperDual(-self.re, -self.e1, -self.e2, -self.e12)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, HyperDual):
            return HyperDual(
                self.re * other.re,
                self.re * other.e1 + self.e1 * other.re,
                self.re * other.e2 + self.e2 * other.re,
                self.re * other.e12 + self.e1 * other.e2
                + self.e2 * other.e1 + self.e12 * other.re,
            )
        return HyperDual(self.re * other, self.e1 * other,
                         self.e2 * other, self.e12 * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "HyperDual":
        r = 1.0 / self.re
        return self._chain(r, -r * r, 2.0 * r * r * r)

    def __truediv__(self, other):
        if isinstance(other, HyperDual):
            return self * other.reciprocal()
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, other):
        if isinstance(other, HyperDual):
            if other.e1 == 0.0 and other.e2 == 0.0 and other.e12 == 0.0:
                return self._powc(other.re)
            # x**y with a variable exponent: exp(y log x)
            return exp(other * log(self))
        return self._powc(float(other))

    def __rpow__(self, other):
        return exp(self * math.log(other))

    def _powc(self, n: float) -> "HyperDual":
        a = self.re
        if n == 0.0:
            return HyperDual(1.0)
        if n.is_integer():
            k = int(n)
            if k == 1:
                return HyperDual(self.re, self.e1, self.e2, self.e12)
            if k == 2:
                return self * self
            return self._chain(a ** k, k * a ** (k - 1), k * (k - 1) * a ** (k - 2))
        if a < 0.0:
            raise ValueError("non-integer power of a negative number")
        if a == 0.0:
            # derivative of a fractional power blows up at the origin
            raise ZeroDivisionError("fractional power at zero")
        return self._chain(a ** n, n * a ** (n - 1.0), n * (n - 1.0) * a ** (n - 2.0))


# -- elementary functions ---------------------------------------------------

def _lift(u) -> HyperDual:
    return u if isinstance(u, HyperDual) else HyperDual(float(u))


def sin(u):
    u = _lift(u)
    s, c = math.sin(u.re), math.cos(u.re)
    return u._chain(s, c, -s)


def cos(u):
    u = _lift(u)
    s, c = math.sin(u.re), math.cos(u.re)
    return u._chain(c, -s, -c)


def tan(u):
    u = _lift(u)
    c = math.cos(u.re)
    if c == 0.0:
        raise ZeroDivisionError("tan pole")
    t = math.tan(u.re)
    sec2 = 1.0 / (c * c)
    return u._chain(t, sec2, 2.0 * t * sec2)


def exp(u):
    u = _lift(u)
    e = math.exp(u.re)
    return u._chain(e, e, e)


def log(u):
    u = _lift(u)
    r = 1.0 / u.re
    return u._chain(math.log(u.re), r, -r * r)


def sqrt(u):
    u = _lift(u)
    if u.re <= 0.0:
        raise ValueError("sqrt is not differentiable at or below zero")
    s = math.sqrt(u.re)
    return u._chain(s, 0.5 / s, -0.25 / (s * u.re))


def fabs(u):
    u = _lift(u)
    if u.re == 0.0:
        raise ValueError("abs is not differentiable at zero")
    sgn = 1.0 if u.re > 0.0 else -1.0
    return u._chain(abs(u.re), sgn, 0.0)


FUNCTIONS = {
    "sin": sin,
    "cos": cos,
    "tan": tan,
    "exp": exp,
    "log": log,
    "sqrt": sqrt,
    "abs": fabs,
}
