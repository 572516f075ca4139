"""Real-root isolation by exact bisection driven by sign-variation counts.

The product of the square-free factors is bisected inside its Cauchy bound. An interval
``(a, b)`` is tested first with the Budan-Fourier count ``V_f(a) - V_f(b)``
(two Taylor shifts). That count can stay at 2 forever on intervals touching
a real zero of some derivative (``1 + x**2`` near 0 is the smallest case),
so when it is 2 or more the interval is retested with Descartes's rule on
``(x + 1)**n * f((a + b*x) / (x + 1))``, whose positive roots are the roots
of f in ``(a, b)``. That second count reaches 0 or 1 on small enough
intervals, which is what makes the bisection terminate.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from signvar import kernels
from signvar.counting import Interval
from signvar.errors import IsolationBudgetError, NotIsolatingError, ZeroPolynomialError
from signvar.poly import (
    Polynomial,
    as_rational,
    derivative,
    divide_linear,
    divmod_poly,
    gcd,
    scale,
    sign_at,
)

__all__ = [
    "RootReport",
    "root_bound",
    "square_free_decompose",
    "interval_bound",
    "isolate",
    "refine",
]

BUDGET_PER_DEGREE = 64


@dataclass
class IsolationStats:
    bisections: int = 0
    shifts: int = 0
    budan_fourier_decided: int = 0
    mobius_decided: int = 0
    midpoint_roots: int = 0
    rational_roots: int = 0


@dataclass
class RootReport:
    """Isolated real roots of a polynomial.

    ``exact_roots`` holds ``(root, multiplicity)`` for roots identified as
    rationals; ``isolating`` holds ``(Interval, multiplicity)`` where each open
    interval contains exactly one distinct, irrational root.
    """

    exact_roots: list = field(default_factory=list)
    isolating: list = field(default_factory=list)
    stats: IsolationStats = field(default_factory=IsolationStats)

    @property
    def total_multiplicity(self):
        return sum(m for _, m in self.exact_roots) + sum(m for _, m in self.isolating)

    @property
    def distinct(self):
        return len(self.exact_roots) + len(self.isolating)

    def entries(self):
        """Exact roots and intervals merged in increasing order."""
        items = [(r, r, "exact", r, m) for r, m in self.exact_roots]
        items += [(iv.lo, iv.hi, "interval", iv, m) for iv, m in self.isolating]
        items.sort(key=lambda t: (t[0], t[1]))
        return [(kind, value, m) for _, _, kind, value, m in items]


def root_bound(f):
    """Cauchy bound ``1 + max|a_i / a_n|``: every real root lies in ``(-B, B)``."""
    if f.is_zero():
        raise ZeroPolynomialError("root_bound of the zero polynomial")
    if f.degree < 1:
        raise ValueError("root_bound needs degree >= 1")
    lc = abs(f.leading)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lc


def square_free_decompose(f):
    """Yun's algorithm: ``[(g_1, 1), (g_2, 2), ...]`` with f = c * prod g_i**i.

    Factors are monic, square-free and pairwise coprime; trivial factors are
    omitted.
    """
    if f.is_zero():
        raise ZeroPolynomialError("square_free_decompose of the zero polynomial")
    if f.degree < 1:
        raise ValueError("square_free_decompose needs degree >= 1")
    df = derivative(f)
    a = gcd(f, df)
    b, _ = divmod_poly(f, a)
    c, _ = divmod_poly(df, a)
    d = c - derivative(b)
    out = []
    i = 1
    while b.degree >= 1:
        a = gcd(b, d)
        b, _ = divmod_poly(b, a)
        c, _ = divmod_poly(d, a)
        if a.degree >= 1:
            out.append((a, i))
        d = c - derivative(b)
        i += 1
    return out


def _int_shift_variations(ints, p, q):
    return kernels.sign_variations(kernels.scaled_shift(ints, p, q))


def _budan_fourier_count(ints, a, b):
    return _int_shift_variations(ints, a.numerator, a.denominator) - _int_shift_variations(
        ints, b.numerator, b.denominator
    )


def _mobius_count(ints, a, b):
    """Descartes bound for roots in (a, b) via ``(x+1)**n f((a + b x)/(x + 1))``."""
    w = b - a
    pa, qa = a.numerator, a.denominator
    pw, qw = w.numerator, w.denominator
    # h(x) = (qa*qw)**n f((x + pa*qw) / (qa*qw)), then x = pw*qa*y gives a
    # positive multiple of f(a + w*y), whose roots in (0, 1) are wanted
    h = kernels.scaled_shift(ints, pa * qw, qa * qw)
    c = pw * qa
    g = []
    cj = 1
    for v in h:
        g.append(v * cj)
        cj *= c
    g.reverse()
    return kernels.sign_variations(kernels.taylor_shift(g, 1))


def interval_bound(f, a, b):
    """Upper bound with even defect for the roots of f in ``(a, b)``.

    The Budan-Fourier count is tried first and the Descartes count of the
    Möbius transform second; returns ``(bound, which)``.
    """
    a, b = as_rational(a), as_rational(b)
    ints = f.integer_form()[1]
    bf = _budan_fourier_count(ints, a, b)
    if bf <= 1:
        return bf, "budan-fourier"
    mb = _mobius_count(ints, a, b)
    return min(bf, mb), "mobius"


def _candidate_rational(f, lo, hi):
    """The rational root of f in ``(lo, hi)`` if there is one, else None.

    A rational root p/q of the primitive integer form has q dividing the
    leading coefficient L, and two such rationals are at least 1/L**2 apart.
    Once the interval is narrower than that, the closest fraction with
    denominator <= L to the midpoint is the only candidate.
    """
    ints = f.integer_form()[1]
    L = abs(ints[-1])
    limit = Fraction(1, L * L)
    s_lo = sign_at(f, lo)
    while hi - lo >= limit:
        mid = (lo + hi) / 2
        s = sign_at(f, mid)
        if s == 0:
            return mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    cand = ((lo + hi) / 2).limit_denominator(L)
    if lo < cand < hi and sign_at(f, cand) == 0:
        return cand
    return None


def _isolate_squarefree(g, lo, hi, stats, exact, isolating, budget):
    """Bisect ``(lo, hi)`` for the square-free g; endpoints are not roots of g.

    Appends rational roots to ``exact`` and open intervals to ``isolating``.
    Interval endpoints are kept off every root of g, so each interval is
    certifiable by a strict Sturm count.
    """
    stack = [(g, lo, hi)]
    steps = 0
    while stack:
        f, a, b = stack.pop()
        if f.degree < 1:
            continue
        bound, which = interval_bound(f, a, b)
        stats.shifts += 2 if which == "budan-fourier" else 4
        if bound <= 1:
            if which == "budan-fourier":
                stats.budan_fourier_decided += 1
            else:
                stats.mobius_decided += 1
        if bound == 0:
            continue
        if bound == 1:
            if sign_at(f, a) * sign_at(f, b) >= 0:
                raise NotIsolatingError(f"count 1 on ({a}, {b}) without a sign change")
            if f.degree == 1:
                exact.append(-f.coeffs[0] / f.coeffs[1])
                stats.rational_roots += 1
                continue
            r = _candidate_rational(f, a, b)
            if r is not None:
                exact.append(r)
                stats.rational_roots += 1
            else:
                isolating.append(_clear_endpoints(g, f, a, b))
            continue
        steps += 1
        stats.bisections += 1
        if steps > budget:
            raise IsolationBudgetError(
                f"more than {budget} bisections isolating the roots of {f!r}"
            )
        c = (a + b) / 2
        q, r = divide_linear(f, c)
        if r == 0:
            exact.append(c)
            stats.midpoint_roots += 1
            f = q
        stack.append((f, c, b))
        stack.append((f, a, c))


def _clear_endpoints(full, f, a, b):
    """Shrink ``(a, b)`` around the single irrational root of f until no endpoint is a root of full."""
    s_a = sign_at(f, a)
    while sign_at(full, a) == 0 or sign_at(full, b) == 0:
        mid = (a + b) / 2
        if sign_at(f, mid) == s_a:
            a = mid
        else:
            b = mid
    return Interval.open(a, b)


def isolate(f):
    """Isolate all real roots of f.

    Rational roots are reported exactly; every other real root gets an open
    interval that contains it and no other root of f. Bisection runs once on
    the product of the square-free factors; each root then takes the
    multiplicity of the factor that vanishes (or changes sign) there.
    """
    if f.is_zero():
        raise ZeroPolynomialError("isolate needs a nonzero polynomial")
    report = RootReport()
    if f.degree < 1:
        return report
    factors = square_free_decompose(f)
    sqfree = Polynomial([1])
    for g, _ in factors:
        sqfree = sqfree * g
    B = root_bound(sqfree)
    exact, isolating = [], []
    budget = BUDGET_PER_DEGREE * sqfree.degree
    _isolate_squarefree(sqfree, -B, B, report.stats, exact, isolating, budget)

    def mult_at(r):
        return next(m for g, m in factors if sign_at(g, r) == 0)

    def mult_in(iv):
        return next(m for g, m in factors if sign_at(g, iv.lo) * sign_at(g, iv.hi) < 0)

    report.exact_roots = sorted((r, mult_at(r)) for r in exact)
    report.isolating = sorted(((iv, mult_in(iv)) for iv in isolating), key=lambda t: t[0].lo)
    return report


def refine(f, interval, width):
    """Shrink an isolating interval of f until ``hi - lo <= width``.

    Returns a subinterval of the input that still isolates the same root; a
    closed point interval when the root turns out to be a bisection midpoint.
    """
    width = as_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if f.is_zero():
        raise ZeroPolynomialError("refine needs a nonzero polynomial")
    if interval.is_point:
        return interval
    lo, hi = interval.lo, interval.hi
    g = _squarefree(f)
    s_lo, s_hi = sign_at(g, lo), sign_at(g, hi)
    if s_lo == 0 or s_hi == 0:
        raise NotIsolatingError(f"endpoint of {interval} is a root")
    if s_lo == s_hi:
        raise NotIsolatingError(f"no sign change across {interval}")
    bound, _ = interval_bound(g, lo, hi)
    if bound != 1 and not _single_root(g, lo, hi):
        raise NotIsolatingError(f"{interval} contains more than one root")
    if hi - lo <= width:
        return interval
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = sign_at(g, mid)
        if s == 0:
            return Interval.point(mid)
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return Interval.open(lo, hi)


def _squarefree(f):
    d = gcd(f, derivative(f))
    q, _ = divmod_poly(f, d)
    return scale(q, 1 / q.leading)


def _single_root(g, lo, hi):
    stats = IsolationStats()
    exact, isolating = [], []
    _isolate_squarefree(g, lo, hi, stats, exact, isolating, BUDGET_PER_DEGREE * max(g.degree, 1))
    return len(exact) + len(isolating) == 1
