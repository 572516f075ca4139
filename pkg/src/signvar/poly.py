"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending by degree, so ``coeffs[j]`` is the
coefficient of ``x**j``. Interior zeros are kept: sign-variation counts are
positional. Hot loops run on an integer primitive form through
:mod:`signvar.kernels`.
"""

from fractions import Fraction
from math import gcd as igcd
from numbers import Rational

from signvar import kernels
from signvar.errors import ZeroPolynomialError

__all__ = [
    "Polynomial",
    "as_rational",
    "evaluate",
    "derivative",
    "taylor_shift",
    "add",
    "sub",
    "mul",
    "scale",
    "reflect",
    "divide_linear",
    "divmod_poly",
    "gcd",
    "square_free_part",
]


def as_rational(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are refused: they would smuggle rounding into exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"decimal literal {value!r} is not an exact rational")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def _integer_form(coeffs):
    """Return ``(content, ints)`` with ``coeffs == content * ints`` and content > 0.

    ``ints`` is primitive (gcd 1). The zero polynomial maps to ``(1, [])``.
    """
    if not coeffs:
        return Fraction(1), []
    den = 1
    for c in coeffs:
        d = c.denominator
        den = den // igcd(den, d) * d
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    g = 0
    for v in ints:
        g = igcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    return Fraction(g, den), ints


class Polynomial:
    """Immutable polynomial over the rationals.

    >>> f = Polynomial([2, -3, 1])
    >>> f(3)
    Fraction(2, 1)
    >>> f.degree
    2
    """

    __slots__ = ("coeffs", "_intform")

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._intform = None

    @classmethod
    def _from_fractions(cls, cs):
        # trusted constructor: cs is a list of Fractions
        while cs and cs[-1] == 0:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        obj._intform = None
        return obj

    @classmethod
    def _from_ints(cls, ints, content=Fraction(1)):
        return cls._from_fractions([content * v for v in ints])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @classmethod
    def linear_factor(cls, root):
        """``x - root``."""
        return cls([-as_rational(root), 1])

    @classmethod
    def from_roots(cls, roots, leading=1):
        f = cls([leading])
        for r in roots:
            f = f * cls.linear_factor(r)
        return f

    @property
    def degree(self):
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def integer_form(self):
        """``(content, ints)`` with ``self == content * ints``, content > 0, ints primitive."""
        if self._intform is None:
            self._intform = _integer_form(self.coeffs)
        return self._intform

    def __call__(self, x):
        return evaluate(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __repr__(self):
        return f"Polynomial([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self):
        from signvar.parsing import format_expr

        return format_expr(self)

    def __neg__(self):
        return Polynomial._from_fractions([-c for c in self.coeffs])

    def __add__(self, other):
        return add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _lift(other))

    def __rsub__(self, other):
        return sub(_lift(other), self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        return divmod_poly(self, other)

    def __floordiv__(self, other):
        return divmod_poly(self, other)[0]

    def __mod__(self, other):
        return divmod_poly(self, other)[1]


def _lift(value):
    return value if isinstance(value, Polynomial) else Polynomial([value])


def evaluate(f, x):
    """Exact value ``f(x)``; the zero polynomial evaluates to 0."""
    x = as_rational(x)
    if not f.coeffs:
        return Fraction(0)
    content, ints = f.integer_form()
    p, q = x.numerator, x.denominator
    return content * Fraction(kernels.horner(ints, p, q), q ** (len(ints) - 1))


def sign_at(f, x):
    """Sign of ``f(x)`` in {-1, 0, 1} without forming the rational value."""
    if not f.coeffs:
        return 0
    x = as_rational(x)
    v = kernels.horner(f.integer_form()[1], x.numerator, x.denominator)
    return (v > 0) - (v < 0)


def derivative(f):
    return Polynomial._from_fractions([j * c for j, c in enumerate(f.coeffs) if j])


def taylor_shift(f, a):
    """Return ``g`` with ``g(x) = f(x + a)``; coefficient j of g is ``f^(j)(a)/j!``."""
    a = as_rational(a)
    if a == 0 or f.degree < 1:
        return f
    content, ints = f.integer_form()
    p, q = a.numerator, a.denominator
    shifted = kernels.scaled_shift(ints, p, q)
    n = len(ints) - 1
    out = [content * Fraction(h, q ** (n - j)) for j, h in enumerate(shifted)]
    return Polynomial._from_fractions(out)


def shifted_signs(f, a):
    """Signs of the Taylor coefficients of f at a, skipping the rational rebuild."""
    content, ints = f.integer_form()
    a = as_rational(a)
    if not ints:
        return []
    return kernels.scaled_shift(ints, a.numerator, a.denominator)


def add(f, g):
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for j, c in enumerate(b):
        out[j] += c
    return Polynomial._from_fractions(out)


def sub(f, g):
    return add(f, -g)


def scale(f, c):
    c = as_rational(c)
    if c == 0:
        return Polynomial()
    return Polynomial._from_fractions([c * v for v in f.coeffs])


def mul(f, g):
    """Exact product by coefficient convolution."""
    if not f.coeffs or not g.coeffs:
        return Polynomial()
    cf, fi = f.integer_form()
    cg, gi = g.integer_form()
    return Polynomial._from_ints(kernels.mul(fi, gi), cf * cg)


def reflect(f):
    """``f(-x)``: odd-degree coefficients negated."""
    return Polynomial._from_fractions([-c if j % 2 else c for j, c in enumerate(f.coeffs)])


def divide_linear(f, root):
    """Synthetic division: ``f = (x - root) * q + r`` with ``r == f(root)``."""
    if f.is_zero():
        raise ZeroPolynomialError("divide_linear needs a nonzero polynomial")
    root = as_rational(root)
    cs = f.coeffs
    n = len(cs) - 1
    q = [Fraction(0)] * n
    acc = Fraction(0)
    for j in range(n, 0, -1):
        acc = acc * root + cs[j]
        q[j - 1] = acc
    r = acc * root + cs[0]
    return Polynomial._from_fractions(q), r


def divmod_poly(f, g):
    """Euclidean division over the rationals: ``f = g*q + r`` with deg r < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    lc = g.leading
    gc = g.coeffs
    if len(r) - 1 < dg:
        return Polynomial(), f
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        t = r[k + dg] / lc
        q[k] = t
        if t:
            for j in range(dg + 1):
                r[k + j] -= t * gc[j]
    return Polynomial._from_fractions(q), Polynomial._from_fractions(r[:dg])


def _primitive(ints):
    g = 0
    for v in ints:
        g = igcd(g, v)
        if g == 1:
            return ints
    if g > 1:
        return [v // g for v in ints]
    return ints


def _prem(a, b):
    """Integer pseudo-remainder of ``lc(b)**(da-db+1) * a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    while len(r) - 1 >= db and r:
        t = r[-1]
        shift = len(r) - 1 - db
        r = [v * lc for v in r]
        for j in range(db + 1):
            r[shift + j] -= t * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def _monic(ints):
    if not ints:
        return Polynomial()
    lc = ints[-1]
    return Polynomial._from_fractions([Fraction(v, lc) for v in ints])


def gcd(f, g):
    """Monic gcd over the rationals, via the primitive remainder sequence."""
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomialError("gcd of two zero polynomials is undefined")
    a = f.integer_form()[1]
    b = g.integer_form()[1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return Polynomial([1])
        a, b = b, _primitive(_prem(a, b))
    return _monic(a)


def square_free_part(f):
    """``f / gcd(f, f')`` normalized monic; same distinct roots as f."""
    if f.is_zero():
        raise ZeroPolynomialError("square-free part of the zero polynomial")
    if f.degree < 1:
        return Polynomial([1])
    d = gcd(f, derivative(f))
    q, _ = divmod_poly(f, d)
    return scale(q, 1 / q.leading)
