"""Umbral pairing <f(t)|p(x)>, operator action, and the Bernoulli functional.

A series f acts on polynomials two ways: as a linear functional via
<f|p> = sum_n p_n * n! * [t^n]f, and as an operator via t^k p = p^(k).
The measure-style integral on polynomials is realized exactly as the
pairing against (t/(e^t - 1))^r, which takes x^n to the Bernoulli number
B_n when r = 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import NotDelta, NotInvertible, PolybernError, PrecisionExceeded
from .polynomials import Polynomial
from .series import Series, invert_constant

__all__ = [
    "Functional",
    "pair",
    "op_apply",
    "shift",
    "bernoulli_operator",
    "invariant_integral",
    "difference_property",
    "sheffer_regenerate",
    "sheffer_verify",
    "sheffer_failure",
]


def _series_of(f) -> Series:
    return f.series if isinstance(f, Functional) else f


def _check_precision(f: Series, p: Polynomial, what: str):
    if p.degree >= f.precision:
        raise PrecisionExceeded(
            f"{what} needs series precision > polynomial degree "
            f"({f.precision} <= {p.degree})"
        )


class Functional:
    """A series viewed as a linear functional on polynomials."""

    __slots__ = ("series",)

    def __init__(self, series: Series):
        object.__setattr__(self, "series", series)

    def pair(self, p: Polynomial):
        return pair(self.series, p)

    def __repr__(self) -> str:
        return f"Functional({self.series})"


def pair(f, p: Polynomial):
    """<f(t)|p(x)> = sum_n p_n * n! * [t^n] f."""
    f = _series_of(f)
    _check_precision(f, p, "pairing")
    acc = Fraction(0)
    for n, c in enumerate(p.coeffs):
        if c:
            acc = acc + factorial(n) * c * f[n]
    return acc


def op_apply(f, p: Polynomial) -> Polynomial:
    """f(t) acting on p: sum_k ([t^k]f) * (k-th derivative of p)."""
    f = _series_of(f)
    _check_precision(f, p, "operator action")
    acc = Polynomial()
    d = p
    for k in range(p.degree + 1):
        c = f[k]
        if c:
            acc = acc + d * c
        d = d.derivative()
    return acc


def shift(p: Polynomial, y) -> Polynomial:
    """The translate q(x) = p(x + y)."""
    return p.shift(y)


@lru_cache(maxsize=None)
def bernoulli_operator(precision: int, r: int = 1) -> Series:
    """(t/(e^t - 1))^r at the given precision."""
    n = precision + 1
    base = Series.t(n).div(Series.t(n).exp() - 1)
    return base**r


def invariant_integral(p: Polynomial, r: int = 1):
    """Pairing of p against (t/(e^t - 1))^r; x^n with r = 1 gives B_n."""
    if r < 1:
        raise PolybernError(f"order r must be >= 1, got {r}")
    return pair(bernoulli_operator(p.degree + 1, r), p)


def difference_property(p: Polynomial):
    """(integral of p(x+1) minus integral of p, derivative of p at 0).

    The two components agree for every polynomial.
    """
    lhs = invariant_integral(p.shift(1)) - invariant_integral(p)
    rhs = p.derivative()(0)
    return (lhs, rhs)


def _sheffer_preconditions(g: Series, f: Series):
    if f[0] or f.precision < 2 or invert_constant(f[1]) is None:
        raise NotDelta("f must be a delta series (order exactly 1)")
    if invert_constant(g[0]) is None:
        raise NotInvertible("g must have an invertible constant term")


def sheffer_regenerate(g: Series, f: Series, count: int) -> list[Polynomial]:
    """First ``count`` polynomials generated by (1/g(fbar(t))) e^{x fbar(t)}.

    fbar is the compositional inverse of f; the coefficient of x^m in the
    n-th polynomial is n!/m! times [t^n] of (1/g(fbar)) * fbar^m.
    """
    _sheffer_preconditions(g, f)
    if count > min(g.precision, f.precision):
        raise PrecisionExceeded("not enough series precision to regenerate")
    fbar = f.revert()
    h = Series.one(g.precision).div(g.compose(fbar))
    rows = []
    cur = h
    for m in range(count):
        rows.append(cur)
        if m + 1 < count:
            cur = cur * fbar
    polys = []
    for n in range(count):
        coeffs = [
            Fraction(factorial(n), factorial(m)) * rows[m][n] for m in range(n + 1)
        ]
        polys.append(Polynomial(coeffs))
    return polys


def sheffer_failure(g: Series, f: Series, s: list[Polynomial], nmax: int):
    """First orthogonality or regeneration failure, or None if all pass.

    Returns ("pair", n, k, got, want) when <g f^k | s_n> != n! delta_{n,k},
    or ("regen", n, got_poly, want_poly) when the generating-series route
    disagrees with s_n.
    """
    _sheffer_preconditions(g, f)
    if len(s) <= nmax:
        raise PolybernError(f"need polynomials up to index {nmax}, got {len(s)}")
    for n in range(nmax + 1):
        if s[n].degree != n:
            raise PolybernError(f"s_{n} must have degree {n}, got {s[n].degree}")
    gfk = g
    for k in range(nmax + 1):
        for n in range(nmax + 1):
            got = pair(gfk, s[n])
            want = Fraction(factorial(n)) if n == k else Fraction(0)
            if got != want:
                return ("pair", n, k, got, want)
        if k < nmax:
            gfk = gfk * f
    regen = sheffer_regenerate(g, f, nmax + 1)
    for n in range(nmax + 1):
        if regen[n] != s[n]:
            return ("regen", n, regen[n], s[n])
    return None


def sheffer_verify(g: Series, f: Series, s: list[Polynomial], nmax: int) -> bool:
    """True iff s_0..s_nmax is the Sheffer sequence for (g, f)."""
    return sheffer_failure(g, f, s, nmax) is None
