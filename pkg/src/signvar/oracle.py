"""Independent ground truth for the variation-based counts.

Two sources of truth live here, neither of which touches the Descartes or
Budan-Fourier code paths:

* polynomials synthesized from a known root multiset (:class:`RootSpec`),
* Sturm-sequence root counting, weighted by multiplicity through the chain
  ``f, gcd(f, f'), gcd(gcd(f, f'), ...)``.

The lemma checkers build the product polynomials themselves and compare
coefficient sign variations.
"""

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from signvar import kernels
from signvar.counting import Interval
from signvar.errors import (
    EndpointRootError,
    InvalidIntervalError,
    InvariantViolation,
    ZeroPolynomialError,
)
from signvar.poly import (
    Polynomial,
    as_rational,
    derivative,
    divmod_poly,
    gcd,
    square_free_part,
)

__all__ = [
    "RootSpec",
    "SturmChain",
    "GaussReport",
    "ProductReport",
    "synthesize",
    "sturm_chain",
    "sturm_count",
    "zero_count",
    "confirm",
    "check_gauss_lemma",
    "check_product_lemma",
    "random_root_spec",
    "random_cofactor",
    "random_positive_rational",
]


@dataclass(frozen=True)
class RootSpec:
    """Known real roots and complex-conjugate pairs of a polynomial to build.

    ``complex_pairs`` holds ``(re, im)`` with ``im != 0``; each pair
    contributes ``x**2 - 2*re*x + re**2 + im**2``.
    """

    positives: tuple = ()
    negatives: tuple = ()
    complex_pairs: tuple = ()
    cofactor_constant: Fraction = Fraction(1)

    def __post_init__(self):
        pos = tuple(sorted(as_rational(r) for r in self.positives))
        neg = tuple(sorted(as_rational(r) for r in self.negatives))
        pairs = tuple((as_rational(re), as_rational(im)) for re, im in self.complex_pairs)
        if any(r <= 0 for r in pos):
            raise ValueError("positives must all be > 0")
        if any(r >= 0 for r in neg):
            raise ValueError("negatives must all be < 0")
        if any(im == 0 for _, im in pairs):
            raise ValueError("complex pairs need a nonzero imaginary part")
        c = as_rational(self.cofactor_constant)
        if c == 0:
            raise ValueError("cofactor_constant must be nonzero")
        object.__setattr__(self, "positives", pos)
        object.__setattr__(self, "negatives", neg)
        object.__setattr__(self, "complex_pairs", pairs)
        object.__setattr__(self, "cofactor_constant", c)

    @property
    def k(self):
        return len(self.positives)

    @property
    def l(self):  # noqa: E743
        return len(self.negatives)

    @property
    def m(self):
        return len(self.complex_pairs)

    @property
    def degree(self):
        return self.k + self.l + 2 * self.m

    def real_roots(self):
        """Sorted ``[(root, multiplicity), ...]`` over all real roots."""
        counts = {}
        for r in self.negatives + self.positives:
            counts[r] = counts.get(r, 0) + 1
        return sorted(counts.items())

    def cofactor(self):
        """The factor carrying the negative roots and complex pairs (monic)."""
        h = Polynomial([1])
        for r in self.negatives:
            h = h * Polynomial.linear_factor(r)
        for re, im in self.complex_pairs:
            h = h * Polynomial([re * re + im * im, -2 * re, 1])
        return h


def synthesize(spec):
    """Expand ``c * prod(x - positive) * prod(x - negative) * prod(quadratics)``."""
    f = spec.cofactor() * spec.cofactor_constant
    for r in spec.positives:
        f = f * Polynomial.linear_factor(r)
    return f


@dataclass(frozen=True)
class SturmChain:
    polys: tuple

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def signs_at(self, x):
        if x == math.inf:
            return [_sgn(p.leading) for p in self.polys]
        if x == -math.inf:
            return [_sgn(p.leading) * (-1) ** p.degree for p in self.polys]
        x = as_rational(x)
        return [_sgn(p(x)) for p in self.polys]

    def variations_at(self, x):
        return kernels.sign_variations(self.signs_at(x))


def _sgn(v):
    return (v > 0) - (v < 0)


def sturm_chain(f):
    """Sturm chain of the square-free part of f: ``p0, p0', -rem(p0, p1), ...``.

    The square-free part is rescaled only so that its leading coefficient
    matches f's; later entries are the raw negated Euclidean remainders.
    """
    if f.is_zero():
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    if f.degree < 1:
        return SturmChain((f,))
    p0 = square_free_part(f) * f.leading
    chain = [p0, derivative(p0)]
    while chain[-1].degree > 0:
        _, r = divmod_poly(chain[-2], chain[-1])
        if r.is_zero():
            break
        chain.append(-r)
    return SturmChain(tuple(chain))


# Integer chain for counting: same signs as sturm_chain up to positive factors.


def _prem_sturm(a, b):
    """``-rem(a, b)`` up to a positive factor, on integer coefficient lists."""
    r = list(a)
    db = len(b) - 1
    lc = b[-1]
    k = 0
    while r and len(r) - 1 >= db:
        t = r[-1]
        shift = len(r) - 1 - db
        r = [v * lc for v in r]
        for j in range(db + 1):
            r[shift + j] -= t * b[j]
        while r and r[-1] == 0:
            r.pop()
        k += 1
    flip = lc < 0 and k % 2 == 1
    if not flip:
        r = [-v for v in r]
    g = 0
    for v in r:
        g = math.gcd(g, v)
    if g > 1:
        r = [v // g for v in r]
    return r


def _int_chain(sqfree_ints):
    p0 = sqfree_ints
    p1 = [j * c for j, c in enumerate(p0) if j]
    chain = [p0, p1]
    while len(chain[-1]) > 1:
        r = _prem_sturm(chain[-2], chain[-1])
        if not r:
            break
        chain.append(r)
    return chain


def _chain_variations(chain, x):
    if x == math.inf:
        signs = [c[-1] for c in chain]
    elif x == -math.inf:
        signs = [c[-1] if len(c) % 2 else -c[-1] for c in chain]
    else:
        p, q = x.numerator, x.denominator
        signs = [kernels.horner(c, p, q) for c in chain]
    return kernels.sign_variations(signs)


def _distinct_count(sqfree, lo, hi):
    ints = sqfree.integer_form()[1]
    if len(ints) <= 1:
        return 0
    chain = _int_chain(ints)
    return _chain_variations(chain, lo) - _chain_variations(chain, hi)


def _check_endpoints(f, interval):
    for end in (interval.lo, interval.hi):
        if not math.isinf(end) and f(end) == 0:
            raise EndpointRootError(f"endpoint {end} is a root; split there", root=end)


def _as_interval(interval):
    if isinstance(interval, Interval):
        return interval
    lo, hi = interval
    return Interval.open(lo, hi)


def sturm_count(f, interval):
    """Number of distinct real roots of f in the interval.

    Finite endpoints must not be roots (so openness flags do not matter).
    """
    if f.is_zero():
        raise ZeroPolynomialError("sturm_count needs a nonzero polynomial")
    interval = _as_interval(interval)
    if interval.is_point:
        raise InvalidIntervalError("sturm_count needs a nondegenerate interval")
    _check_endpoints(f, interval)
    if f.degree < 1:
        return 0
    return _distinct_count(square_free_part(f), interval.lo, interval.hi)


def gcd_chain(f):
    """``[f, gcd(f, f'), gcd(g1, g1'), ...]`` down to a constant."""
    out = [f]
    while out[-1].degree >= 1:
        g = out[-1]
        out.append(gcd(g, derivative(g)))
    return out


def zero_count(f, interval, strict=True):
    """Roots of f in the interval counted with multiplicity.

    Root ``r`` of multiplicity ``m`` is a root of the first ``m`` entries of
    :func:`gcd_chain`, so the distinct counts of those entries sum to the
    weighted count. With ``strict`` a finite endpoint that is a root raises
    :class:`EndpointRootError`; otherwise the endpoint is counted according to
    the interval's openness. For square-free g the chain difference
    ``V(lo) - V(hi)`` counts the roots in ``(lo, hi]`` even when an endpoint is
    a root, because a zero first entry is skipped and V agrees with its
    right-hand limit there.
    """
    if f.is_zero():
        raise ZeroPolynomialError("zero_count needs a nonzero polynomial")
    interval = _as_interval(interval)
    if strict:
        _check_endpoints(f, interval)
    if interval.is_point:
        x = interval.lo
        return _multiplicity(f, x)
    chain = gcd_chain(f)
    total = 0
    for g, nxt in zip(chain, chain[1:]):
        sqfree, _ = divmod_poly(g, nxt)
        total += _distinct_count(sqfree, interval.lo, interval.hi)
    if not strict:
        lo, hi = interval.lo, interval.hi
        if not interval.lo_open:
            total += _multiplicity(f, lo)
        if interval.hi_open and not math.isinf(hi):
            total -= _multiplicity(f, hi)
    return total


def confirm(result, f, interval):
    """Attach the Sturm count to a variation :class:`CountResult`.

    Raises :class:`InvariantViolation` when the bound and the count disagree
    in the way the theorems forbid (negative or odd defect).
    """
    return result.with_exact(zero_count(f, _as_interval(interval), strict=False))


def _multiplicity(f, x):
    # kept local so the oracle does not lean on the counting module
    m = 0
    while f.degree >= 1 and f(x) == 0:
        f, _ = divmod_poly(f, Polynomial.linear_factor(x))
        m += 1
    return m


@dataclass(frozen=True)
class GaussReport:
    v_before: int
    v_after: int
    defect: int
    product: Polynomial = field(repr=False, compare=False)


@dataclass(frozen=True)
class ProductReport:
    v_f: int
    k: int
    v_h: int
    defect: int
    product: Polynomial = field(repr=False, compare=False)


def _coeff_variations(f):
    return kernels.sign_variations(f.integer_form()[1])


def check_gauss_lemma(h, lam):
    """Multiply h by ``x - lam`` and measure the jump in coefficient sign changes.

    The jump is one plus a nonnegative even number whenever ``h(0) != 0`` and
    ``lam > 0``; anything else raises :class:`InvariantViolation`.
    """
    lam = as_rational(lam)
    if h.is_zero() or h.coeffs[0] == 0:
        raise ValueError("check_gauss_lemma needs h(0) != 0")
    if lam <= 0:
        raise ValueError("check_gauss_lemma needs lam > 0")
    product = Polynomial.linear_factor(lam) * h
    v_before = _coeff_variations(h)
    v_after = _coeff_variations(product)
    defect = v_after - v_before - 1
    if defect < 0 or defect % 2:
        raise InvariantViolation(
            f"Gauss lemma fails for h={h!r}, lam={lam}: V went {v_before} -> {v_after}"
        )
    return GaussReport(v_before, v_after, defect, product)


def check_product_lemma(h, lams):
    """Multiply h by ``prod(x - lam_i)`` over positive ``lam_i`` and measure the defect."""
    lams = [as_rational(v) for v in lams]
    if h.is_zero() or h.coeffs[0] == 0:
        raise ValueError("check_product_lemma needs h(0) != 0")
    if any(v <= 0 for v in lams):
        raise ValueError("check_product_lemma needs every lam > 0")
    f = h
    for v in lams:
        f = f * Polynomial.linear_factor(v)
    v_f = _coeff_variations(f)
    v_h = _coeff_variations(h)
    k = len(lams)
    defect = v_f - k - v_h
    if defect < 0 or defect % 2:
        raise InvariantViolation(
            f"product lemma fails for h={h!r}, lams={lams}: V_f={v_f}, k={k}, V_h={v_h}"
        )
    return ProductReport(v_f, k, v_h, defect, f)


# Random instance generators. Numerators and denominators are bounded by
# ``size`` to keep coefficient growth small.


def random_positive_rational(rng, size=10):
    return Fraction(rng.randint(1, size), rng.randint(1, size))


def _random_rational(rng, size=10):
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def random_root_spec(rng, max_degree=12, size=10, repeat_prob=0.2):
    """Random :class:`RootSpec` of degree 1..max_degree.

    With probability ``repeat_prob`` a real root repeats an earlier one, so
    multiplicities above one show up regularly.
    """
    degree = rng.randint(1, max_degree)
    m = rng.randint(0, degree // 2)
    real = degree - 2 * m
    k = rng.randint(0, real)
    l = real - k  # noqa: E741

    def draw(count, sign):
        out = []
        for _ in range(count):
            if out and rng.random() < repeat_prob:
                out.append(rng.choice(out))
            else:
                out.append(sign * random_positive_rational(rng, size))
        return out

    pairs = []
    for _ in range(m):
        im = random_positive_rational(rng, size) * rng.choice((1, -1))
        pairs.append((_random_rational(rng, size), im))
    c = random_positive_rational(rng, size) * rng.choice((1, -1))
    return RootSpec(tuple(draw(k, 1)), tuple(draw(l, -1)), tuple(pairs), c)


def random_cofactor(rng, max_degree=12, coeff_bound=10):
    """Integer polynomial of degree 0..max_degree with ``h(0) != 0``, coefficients in range."""
    degree = rng.randint(0, max_degree)
    cs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(degree + 1)]
    while cs[0] == 0:
        cs[0] = rng.randint(-coeff_bound, coeff_bound)
    while cs[-1] == 0:
        cs[-1] = rng.randint(-coeff_bound, coeff_bound)
    return Polynomial(cs)


def case_rng(seed, suite, index):
    """Deterministic per-case generator; ``(seed, suite, index)`` replays one case."""
    return random.Random(f"{seed}:{suite}:{index}")
