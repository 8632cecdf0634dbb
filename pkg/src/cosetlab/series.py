"""Truncated univariate power series with exact coefficients.

Coefficients may be Fractions or any commutative ring element supporting
``+``, ``*`` and multiplication by a Fraction (e.g. :class:`SymFunc`).
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial


class Series:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        """Truncation order N: coefficients a_0..a_N are kept."""
        return len(self.coeffs) - 1

    @classmethod
    def from_function(cls, f, N: int) -> "Series":
        return cls(f(k) for k in range(N + 1))

    def __getitem__(self, k):
        return self.coeffs[k]

    def _zero(self):
        return self.coeffs[0] * 0

    def __add__(self, other: "Series") -> "Series":
        N = min(self.order, other.order)
        return Series(self.coeffs[k] + other.coeffs[k] for k in range(N + 1))

    def __neg__(self):
        return Series(c * -1 for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series(c * other for c in self.coeffs)
        N = min(self.order, other.order)
        out = []
        for k in range(N + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "Series":
        a = self.coeffs
        if isinstance(a[0], (int, Fraction)):
            if a[0] == 0:
                raise ZeroDivisionError("constant term must be invertible")
            inv0 = Fraction(1) / a[0]
        elif a[0] == a[0] * a[0] and a[0] != a[0] * 0:
            inv0 = a[0]  # idempotent nonzero constant: the ring unit
        else:
            raise ZeroDivisionError("reciprocal needs a unit constant term")
        b = [inv0]
        for k in range(1, len(a)):
            acc = a[1] * b[k - 1]
            for i in range(2, k + 1):
                acc = acc + a[i] * b[k - i]
            b.append(acc * (-1) * inv0)
        return Series(b)

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.reciprocal()

    def derivative(self) -> "Series":
        return Series(self.coeffs[k] * k for k in range(1, len(self.coeffs)))

    def integral(self, constant=None) -> "Series":
        c0 = self._zero() if constant is None else constant
        return Series([c0] + [c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)])

    def log(self) -> "Series":
        """``log(a)`` for ``a_0 = 1``, as the integral of ``a'/a``."""
        a0 = self.coeffs[0]
        if not (a0 == 1 or (not isinstance(a0, (int, Fraction)) and a0 == a0 * a0 and a0 != a0 * 0)):
            raise ValueError("log needs constant term 1")
        return (self.derivative() * self.reciprocal()).integral()

    def exp(self) -> "Series":
        """``exp(a)`` for ``a_0 = 0`` (Fraction coefficients)."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs constant term 0")
        N = self.order
        e = [Fraction(1)]
        for k in range(1, N + 1):
            e.append(sum((i * self.coeffs[i] * e[k - i] for i in range(1, k + 1)), Fraction(0)) / k)
        return Series(e)

    def __repr__(self):
        return f"Series({self.coeffs!r})"


def bessel_j0_sqrt(N: int) -> Series:
    """``J_0(2 sqrt(x)) = sum (-x)^n / n!^2`` truncated at order N."""
    return Series(Fraction((-1) ** n, factorial(n) ** 2) for n in range(N + 1))
