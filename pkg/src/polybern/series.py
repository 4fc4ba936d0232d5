"""Truncated formal power series in t over Q or Q[lambda].

A series stores exactly ``precision`` coefficients (that of t^0 through
t^(precision-1)); binary operations return the minimum of the operand
precisions and never extend silently. Coefficients are Fractions or
LambdaPolys; the two mix freely (Q embeds into Q[lambda]).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    ConstantTermNotOne,
    NonUnitLeadingCoefficient,
    NonzeroConstantTerm,
    NonzeroInnerConstant,
    NotDelta,
    PrecisionExceeded,
)
from .ring import LambdaPoly, format_scalar, lambda_eval

__all__ = ["Series", "invert_constant"]

_ZERO = Fraction(0)


def _coerce_scalar(value):
    if isinstance(value, (Fraction, LambdaPoly)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not a series coefficient: {value!r}")


def invert_constant(c):
    """Multiplicative inverse of an invertible ring constant, else None.

    Invertible means: a nonzero rational, or a degree-0 nonzero LambdaPoly.
    """
    if isinstance(c, LambdaPoly):
        flat, value = c.is_constant()
        if not flat or not value:
            return None
        return 1 / value
    c = Fraction(c)
    if not c:
        return None
    return 1 / c


def _mul_coeffs(a, b, n: int) -> list:
    out = [_ZERO] * n
    for i, ca in enumerate(a):
        if i >= n:
            break
        if not ca:
            continue
        for j in range(min(len(b), n - i)):
            cb = b[j]
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return out


class Series:
    """Formal power series in t, truncated to a fixed precision."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs, precision: int | None = None):
        cs = [_coerce_scalar(c) for c in coeffs]
        if precision is not None:
            if precision < 1:
                raise ValueError("precision must be >= 1")
            if len(cs) < precision:
                cs.extend([_ZERO] * (precision - len(cs)))
            else:
                del cs[precision:]
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "_coeffs", tuple(cs))

    @classmethod
    def zero(cls, precision: int) -> Series:
        return cls((), precision)

    @classmethod
    def one(cls, precision: int) -> Series:
        return cls((Fraction(1),), precision)

    @classmethod
    def t(cls, precision: int) -> Series:
        return cls((_ZERO, Fraction(1)), precision)

    @classmethod
    def constant(cls, value, precision: int) -> Series:
        return cls((_coerce_scalar(value),), precision)

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int):
        return self._coeffs[n]

    def __iter__(self):
        return iter(self._coeffs)

    def order(self) -> int | None:
        """Index of the lowest nonzero coefficient, or None for zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncate(self, precision: int) -> Series:
        if precision > self.precision:
            raise PrecisionExceeded(
                f"cannot extend a series of precision {self.precision} to {precision}"
            )
        return Series(self._coeffs[:precision])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Series):
            n = min(self.precision, other.precision)
            return Series([self._coeffs[i] + other._coeffs[i] for i in range(n)])
        c = _coerce_scalar(other)
        out = list(self._coeffs)
        out[0] = out[0] + c
        return Series(out)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, Series):
            n = min(self.precision, other.precision)
            return Series([self._coeffs[i] - other._coeffs[i] for i in range(n)])
        return self + (-_coerce_scalar(other))

    def __rsub__(self, other):
        return (-self) + _coerce_scalar(other)

    def __mul__(self, other):
        if isinstance(other, Series):
            n = min(self.precision, other.precision)
            return Series(_mul_coeffs(self._coeffs, other._coeffs, n))
        c = _coerce_scalar(other)
        return Series([c * x for x in self._coeffs])

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int) -> Series:
        if not isinstance(n, int):
            raise TypeError("series powers take an integer exponent")
        if n < 0:
            return Series.one(self.precision).div(self.__pow__(-n))
        out = Series.one(self.precision)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def div(self, other: Series) -> Series:
        """Quotient truncated to the result precision.

        If both operands have zero constant term, one common factor of t is
        cancelled first (the shape of every t/(e^t - 1)-style quotient);
        needing deeper cancellation is an error. A non-unit constant term in
        the divisor (such as plain lambda) is allowed as long as every
        quotient coefficient divides exactly in Q[lambda].
        """
        if not isinstance(other, Series):
            raise TypeError("div expects a series divisor")
        n = min(self.precision, other.precision)
        f = list(self._coeffs[:n])
        g = list(other._coeffs[:n])
        if not f[0] and not g[0]:
            f.pop(0)
            g.pop(0)
            n -= 1
            if n == 0:
                raise PrecisionExceeded("division leaves no coefficients")
        g0 = g[0]
        inv = invert_constant(g0)
        if inv is None and not (isinstance(g0, LambdaPoly) and g0):
            raise NonUnitLeadingCoefficient(
                f"divisor constant term {format_scalar(g0)} is not invertible"
            )
        out: list = []
        for i in range(n):
            acc = f[i]
            for j in range(1, i + 1):
                gj = g[j]
                if gj:
                    acc = acc - gj * out[i - j]
            if inv is not None:
                out.append(acc * inv)
            else:
                num = acc if isinstance(acc, LambdaPoly) else LambdaPoly.constant(acc)
                q = num.divide_exact(g0)
                if q is None:
                    raise NonUnitLeadingCoefficient(
                        f"coefficient {format_scalar(acc)} is not divisible by "
                        f"{format_scalar(g0)}"
                    )
                out.append(q)
        return Series(out)

    __truediv__ = div

    # -- composition -------------------------------------------------------

    def compose(self, inner: Series) -> Series:
        """self(inner(t)), truncated to the minimum precision."""
        if inner._coeffs[0]:
            raise NonzeroInnerConstant(
                f"inner series has constant term {format_scalar(inner._coeffs[0])}"
            )
        n = min(self.precision, inner.precision)
        acc = [_ZERO] * n
        acc[0] = self._coeffs[0]
        power = list(inner._coeffs[:n])
        for i in range(1, n):
            fi = self._coeffs[i]
            if fi:
                for m in range(i, n):
                    pm = power[m]
                    if pm:
                        acc[m] = acc[m] + fi * pm
            if i + 1 < n:
                power = _mul_coeffs(power, inner._coeffs, n)
        return Series(acc)

    def revert(self) -> Series:
        """Compositional inverse g with self(g(t)) = g(self(t)) = t."""
        if self._coeffs[0]:
            raise NotDelta("series to revert must have zero constant term")
        if self.precision < 2 or invert_constant(self._coeffs[1]) is None:
            raise NotDelta("series to revert must have an invertible t coefficient")
        n = self.precision
        # Lagrange inversion: n-th coefficient is [t^(n-1)] (t/f)^n / n.
        u = Series.t(n).div(self)
        out = [_ZERO] * n
        out[1] = u[0]
        power = u
        for m in range(2, n):
            power = power * u
            out[m] = power[m - 1] / m
        return Series(out)

    # -- transcendental maps -----------------------------------------------

    def log(self) -> Series:
        """Formal logarithm; needs constant term 1."""
        if self._coeffs[0] != 1:
            raise ConstantTermNotOne(
                f"log needs constant term 1, got {format_scalar(self._coeffs[0])}"
            )
        n = self.precision
        out: list = [_ZERO]
        for m in range(1, n):
            acc = m * self._coeffs[m]
            for j in range(1, m):
                fm = self._coeffs[m - j]
                if fm:
                    acc = acc - j * out[j] * fm
            out.append(acc / m)
        return Series(out)

    def exp(self) -> Series:
        """Formal exponential; needs constant term 0."""
        if self._coeffs[0]:
            raise NonzeroConstantTerm(
                f"exp needs constant term 0, got {format_scalar(self._coeffs[0])}"
            )
        n = self.precision
        out: list = [Fraction(1)]
        for m in range(1, n):
            acc = _ZERO
            for j in range(1, m + 1):
                fj = self._coeffs[j]
                if fj:
                    acc = acc + j * fj * out[m - j]
            out.append(acc / m)
        return Series(out)

    # -- misc ---------------------------------------------------------------

    def derivative(self) -> Series:
        """Coefficient-shift derivative d/dt; precision drops by one."""
        if self.precision < 2:
            raise PrecisionExceeded("cannot differentiate a precision-1 series")
        return Series([(i + 1) * self._coeffs[i + 1] for i in range(self.precision - 1)])

    def specialize(self, v) -> Series:
        """Substitute lambda := v in every coefficient (exact)."""
        return Series([lambda_eval(c, v) for c in self._coeffs])

    def agrees(self, other: Series) -> bool:
        """Equality up to the shorter of the two precisions."""
        n = min(self.precision, other.precision)
        return all(self._coeffs[i] == other._coeffs[i] for i in range(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.precision == other.precision and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    __hash__ = None

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            cs = format_scalar(c)
            if isinstance(c, LambdaPoly) and c.degree > 0:
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*t")
            else:
                parts.append(f"{cs}*t^{i}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.precision})"

    def __repr__(self) -> str:
        return f"Series({self})"
