"""Polynomials in a single variable x over Q or Q[lambda]."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .ring import LambdaPoly, format_scalar, lambda_eval

__all__ = ["Polynomial"]

_ZERO = Fraction(0)


def _coerce(value):
    if isinstance(value, (Fraction, LambdaPoly)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not a polynomial coefficient: {value!r}")


class Polynomial:
    """Dense polynomial in x, low degree first, trailing zeros trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls((_coerce(value),))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Polynomial:
        return cls((0,) * degree + (_coerce(coeff),))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, n: int):
        return self._coeffs[n] if n <= self.degree else _ZERO

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _coerce(other)
            return Polynomial([c * x for x in self._coeffs])
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        c = _coerce(other)
        return Polynomial([x / c for x in self._coeffs])

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take a non-negative integer")
        out = Polynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        if len(self._coeffs) != len(other._coeffs):
            return False
        return all(a == b for a, b in zip(self._coeffs, other._coeffs))

    __hash__ = None

    def derivative(self, k: int = 1) -> Polynomial:
        p = self
        for _ in range(k):
            p = Polynomial([(i + 1) * p._coeffs[i + 1] for i in range(len(p._coeffs) - 1)])
        return p

    def __call__(self, y):
        """Evaluate at a scalar (Horner)."""
        y = _coerce(y)
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * y + c
        return acc

    def shift(self, y) -> Polynomial:
        """The polynomial q with q(x) = p(x + y), by binomial re-expansion."""
        y = _coerce(y)
        if not y:
            return self
        out = [_ZERO] * len(self._coeffs)
        for n, c in enumerate(self._coeffs):
            if not c:
                continue
            yp = _coerce(1)
            for j in range(n, -1, -1):
                out[j] = out[j] + comb(n, n - j) * yp * c
                yp = yp * y
        return Polynomial(out)

    def specialize(self, v) -> Polynomial:
        """Substitute lambda := v in every coefficient."""
        return Polynomial([lambda_eval(c, v) for c in self._coeffs])

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for d in range(self.degree, -1, -1):
            c = self._coeffs[d]
            if not c:
                continue
            flat = not isinstance(c, LambdaPoly) or c.degree <= 0
            if flat:
                q = c if isinstance(c, Fraction) else c.constant_term
                mag = format_scalar(abs(q))
                if d == 0:
                    body = mag
                else:
                    xs = "x" if d == 1 else f"x^{d}"
                    body = xs if abs(q) == 1 else f"{mag}*{xs}"
                if not parts:
                    parts.append(body if q > 0 else f"-{body}")
                else:
                    parts.append(f"+ {body}" if q > 0 else f"- {body}")
            else:
                cs = f"({format_scalar(c)})"
                body = cs if d == 0 else (f"{cs}*x" if d == 1 else f"{cs}*x^{d}")
                parts.append(body if not parts else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"
