"""Zero counting: multiplicities, Descartes bounds and Budan-Fourier counts.

Every count comes back as a :class:`CountResult` which keeps the
variation-based ``bound`` apart from an ``exact`` count. A bound is promoted
to exact only when its value forces it (0, or 1 with even defect).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from signvar.errors import (
    EndpointRootError,
    InvalidIntervalError,
    InvariantViolation,
    ZeroPolynomialError,
)
from signvar.poly import Polynomial, as_rational, divide_linear, reflect, sign_at
from signvar.signs import variation_count, variations_at

__all__ = [
    "Interval",
    "CountResult",
    "multiplicity",
    "strip_zero_root",
    "descartes_bound",
    "descartes_bound_negative",
    "count_halfopen",
    "count_closedopen",
    "budan_fourier",
]

INF = math.inf


def _endpoint(v):
    if isinstance(v, float):
        if math.isinf(v):
            return v
        raise TypeError("finite endpoints must be exact rationals")
    return as_rational(v)


@dataclass(frozen=True)
class Interval:
    """Real interval with exact finite endpoints.

    Infinite endpoints are ``-math.inf``/``math.inf`` and always open. A
    closed interval with ``lo == hi`` is allowed and denotes a single point.
    """

    lo: object
    hi: object
    lo_open: bool = True
    hi_open: bool = True

    def __post_init__(self):
        lo, hi = _endpoint(self.lo), _endpoint(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo == -INF or lo == INF:
            if lo == INF:
                raise InvalidIntervalError("lower endpoint cannot be +inf")
            object.__setattr__(self, "lo_open", True)
        if hi == INF or hi == -INF:
            if hi == -INF:
                raise InvalidIntervalError("upper endpoint cannot be -inf")
            object.__setattr__(self, "hi_open", True)
        if lo > hi or (lo == hi and (self.lo_open or self.hi_open)):
            raise InvalidIntervalError(f"empty interval {self}")

    @classmethod
    def open(cls, lo, hi):
        return cls(lo, hi, True, True)

    @classmethod
    def closed(cls, lo, hi):
        return cls(lo, hi, False, False)

    @classmethod
    def left_open(cls, lo, hi):
        """``(lo, hi]``"""
        return cls(lo, hi, True, False)

    @classmethod
    def right_open(cls, lo, hi):
        """``[lo, hi)``"""
        return cls(lo, hi, False, True)

    @classmethod
    def point(cls, x):
        return cls(x, x, False, False)

    @classmethod
    def real_line(cls):
        return cls(-INF, INF)

    @property
    def is_point(self):
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def __contains__(self, x):
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and self.lo_open:
            return False
        if x == self.hi and self.hi_open:
            return False
        return True

    def issubset(self, other):
        if self.lo < other.lo or self.hi > other.hi:
            return False
        if self.lo == other.lo and other.lo_open and not self.lo_open:
            return False
        if self.hi == other.hi and other.hi_open and not self.hi_open:
            return False
        return True

    def __str__(self):
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{_fmt_end(self.lo)}, {_fmt_end(self.hi)}{right}"


def _fmt_end(v):
    if v == INF:
        return "inf"
    if v == -INF:
        return "-inf"
    return str(v)


@dataclass(frozen=True)
class CountResult:
    """A variation bound, and the exact count with its defect when known."""

    bound: int
    exact: int = None
    defect: int = None

    def __post_init__(self):
        if self.bound < 0:
            raise InvariantViolation(f"negative variation bound {self.bound}")
        if self.exact is not None:
            defect = self.bound - self.exact
            if self.defect is not None and self.defect != defect:
                raise ValueError("defect disagrees with bound - exact")
            object.__setattr__(self, "defect", defect)
            if defect < 0 or defect % 2:
                raise InvariantViolation(
                    f"defect {defect} is not a nonnegative even integer "
                    f"(bound {self.bound}, exact {self.exact})"
                )
        elif self.defect is not None:
            raise ValueError("defect given without an exact count")

    @property
    def is_exact(self):
        return self.exact is not None

    def with_exact(self, exact):
        return CountResult(self.bound, exact)


def _forced(bound):
    """Bounds 0 and 1 pin the count: the defect is even and nonnegative."""
    return CountResult(bound, bound) if bound <= 1 else CountResult(bound)


def _require_nonzero(f, what):
    if f.is_zero():
        raise ZeroPolynomialError(f"{what} needs a nonzero polynomial")


def multiplicity(f, lam):
    """Largest m with ``(x - lam)**m`` dividing f, by repeated synthetic division."""
    _require_nonzero(f, "multiplicity")
    lam = as_rational(lam)
    m = 0
    q = f
    while q.degree >= 1:
        q2, r = divide_linear(q, lam)
        if r != 0:
            break
        m += 1
        q = q2
    return m


def strip_zero_root(f):
    """Split ``f = x**mu * rest`` with ``rest(0) != 0``; returns ``(mu, rest)``."""
    _require_nonzero(f, "strip_zero_root")
    mu = next(j for j, c in enumerate(f.coeffs) if c != 0)
    return mu, Polynomial._from_fractions(list(f.coeffs[mu:]))


def descartes_bound(f):
    """Descartes bound on the positive roots of f (zero roots are stripped first)."""
    _require_nonzero(f, "descartes_bound")
    _, rest = strip_zero_root(f)
    return _forced(variation_count(rest.coeffs))


def descartes_bound_negative(f):
    """Descartes bound on the negative roots of f, via ``f(-x)``."""
    _require_nonzero(f, "descartes_bound_negative")
    return descartes_bound(reflect(f))


def _check_interval(a, b):
    a, b = as_rational(a), as_rational(b)
    if not a < b:
        raise InvalidIntervalError(f"need a < b, got a={a}, b={b}")
    return a, b


def count_halfopen(f, a, b):
    """Roots of f in ``(a, b]`` as ``V_f(a) - V_f(b)`` minus an even defect.

    Uses the two shifted Descartes bounds for ``(a, inf)`` and ``(b, inf)``.
    Refuses ``f(b) == 0``: the caller must split there.
    """
    _require_nonzero(f, "count_halfopen")
    a, b = _check_interval(a, b)
    if sign_at(f, b) == 0:
        raise EndpointRootError(f"f({b}) = 0; split the interval at the root", root=b)
    va = variations_at(f, a)
    vb = variations_at(f, b)
    bound = va - vb
    if bound < 0:
        raise InvariantViolation(f"V_f({a}) - V_f({b}) = {bound} is negative")
    if va <= 1 and vb <= 1:
        # both tail counts are forced, so their difference is exact
        return CountResult(bound, va - vb)
    return _forced(bound)


def budan_fourier(f, a, b):
    """Budan-Fourier bound for the roots of f in the open interval ``(a, b)``.

    The bound is ``V_f(a) - V_f(b)``. When ``f(b) == 0`` the root at b is
    removed from the bound (``- mult_f(b)``) so that the defect stays even.
    """
    _require_nonzero(f, "budan_fourier")
    a, b = _check_interval(a, b)
    bound = variations_at(f, a) - variations_at(f, b)
    if sign_at(f, b) == 0:
        bound -= multiplicity(f, b)
    if bound < 0:
        raise InvariantViolation(f"Budan-Fourier bound {bound} is negative on ({a}, {b})")
    return _forced(bound)


def count_closedopen(f, a, b):
    """Roots of f in ``[a, b)``: the ``(a, b]`` count shifted by endpoint multiplicities."""
    _require_nonzero(f, "count_closedopen")
    a, b = _check_interval(a, b)
    va = variations_at(f, a)
    vb = variations_at(f, b)
    ma = multiplicity(f, a)
    mb = multiplicity(f, b)
    bound = va - vb + ma - mb
    if bound < 0:
        raise InvariantViolation(f"[{a}, {b}) bound {bound} is negative")
    if va <= 1 and vb <= 1:
        return CountResult(bound, bound)
    return _forced(bound)
