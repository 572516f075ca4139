import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from signvar.counting import Interval, descartes_bound
from signvar.errors import NotIsolatingError, ZeroPolynomialError
from signvar.isolation import interval_bound, isolate, refine, root_bound, square_free_decompose
from signvar.oracle import random_root_spec, sturm_count, synthesize, zero_count
from signvar.poly import Polynomial, gcd
from strategies import P, nonzero_polys

x = Polynomial.x()


def test_root_bound_examples():
    assert root_bound(P(-2, 0, 1)) == 3
    assert root_bound(P(-1, 1)) == 2
    assert root_bound(P(2, -3, 1)) == 4
    with pytest.raises(ValueError):
        root_bound(P(3))
    with pytest.raises(ZeroPolynomialError):
        root_bound(P())


@given(nonzero_polys(8, st.integers(-9, 9)))
def test_root_bound_contains_roots(f):
    if f.degree < 1:
        return
    B = root_bound(f)
    assert zero_count(f, Interval.open(-B, B)) == zero_count(f, Interval.real_line())


def test_square_free_examples():
    assert square_free_decompose((x - 1) ** 2 * (x + 2)) == [(x + 2, 1), (x - 1, 2)]
    assert square_free_decompose(P(-2, 0, 1)) == [(P(-2, 0, 1), 1)]
    assert square_free_decompose(x**3) == [(x, 3)]
    assert square_free_decompose(3 * (x**2 + 1) ** 2) == [(x**2 + 1, 2)]


@given(nonzero_polys(8, st.integers(-6, 6)))
def test_square_free_decompose_matches_sympy(f):
    if f.degree < 1:
        return
    ours = square_free_decompose(f)
    prod = Polynomial([f.leading])
    for g, m in ours:
        assert g.leading == 1
        assert gcd(g, g.__class__([j * c for j, c in enumerate(g.coeffs)][1:])) == P(1)
        prod = prod * g**m
    assert prod == f
    X = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], X, domain="QQ")
    _, factors = sympy.sqf_list(sp)
    assert sorted(m for _, m in ours) == sorted(m for _, m in factors)


def test_isolate_rational_roots():
    rep = isolate(P(6, -7, 0, 1))
    assert rep.exact_roots == [(-3, 1), (1, 1), (2, 1)]
    assert rep.isolating == []


def test_isolate_sqrt2():
    f = P(-2, 0, 1)
    rep = isolate(f)
    assert rep.exact_roots == []
    assert len(rep.isolating) == 2
    for iv, m in rep.isolating:
        assert m == 1 and sturm_count(f, iv) == 1
    lo_iv, hi_iv = (iv for iv, _ in rep.isolating)
    assert lo_iv.hi <= 0 <= hi_iv.lo


def test_isolate_no_real_roots():
    rep = isolate(P(1, 0, 1))
    assert rep.exact_roots == [] and rep.isolating == []
    assert rep.total_multiplicity == 0


def test_isolate_multiplicities():
    f = (x - Fraction(1, 3)) ** 3 * (x**2 - 2) ** 2 * (x + 5)
    rep = isolate(f)
    assert rep.exact_roots == [(-5, 1), (Fraction(1, 3), 3)]
    assert sorted(m for _, m in rep.isolating) == [2, 2]
    assert rep.total_multiplicity == zero_count(f, Interval.real_line()) == 8


def test_isolate_symmetric_degenerate_case():
    # y (y^4 - 1) at y = x - 1/3: f'' and f''' vanish at the root 1/3
    y = x - Fraction(1, 3)
    f = y * (y**4 - 1)
    rep = isolate(f)
    assert rep.exact_roots == [(Fraction(-2, 3), 1), (Fraction(1, 3), 1), (Fraction(4, 3), 1)]


def test_isolate_constant_and_zero():
    assert isolate(P(4)).distinct == 0
    with pytest.raises(ZeroPolynomialError):
        isolate(P())


def test_isolate_is_deterministic():
    f = P(-7, 3, 11, -2, -5, 1)
    a, b = isolate(f), isolate(f)
    assert a.exact_roots == b.exact_roots and a.isolating == b.isolating and a.stats == b.stats


def _check_report(f, rep):
    items = rep.entries()
    # pairwise disjoint and in order
    for (k1, v1, _), (k2, v2, _) in zip(items, items[1:]):
        hi1 = v1 if k1 == "exact" else v1.hi
        lo2 = v2 if k2 == "exact" else v2.lo
        assert hi1 <= lo2
        if k1 == "exact" and k2 == "interval":
            assert v1 not in v2
    for iv, _ in rep.isolating:
        assert sturm_count(f, iv) == 1
    for r, m in rep.exact_roots:
        assert f(r) == 0
    assert rep.total_multiplicity == zero_count(f, Interval.real_line())
    assert rep.distinct == sturm_count(f, Interval.real_line())


@given(nonzero_polys(9, st.integers(-12, 12)))
def test_isolate_random_integer_polys(f):
    if f.degree < 1:
        return
    _check_report(f, isolate(f))


def test_isolate_recovers_generator_roots():
    rng = random.Random(42)
    for _ in range(150):
        spec = random_root_spec(rng)
        f = synthesize(spec)
        rep = isolate(f)
        assert rep.isolating == []
        assert rep.exact_roots == spec.real_roots()


def test_descartes_consistency():
    rng = random.Random(7)
    for _ in range(100):
        f = Polynomial([rng.randint(-9, 9) for _ in range(rng.randint(2, 9))])
        if f.degree < 1:
            continue
        rep = isolate(f)
        found = sum(1 for r, _ in rep.exact_roots if r > 0) + sum(1 for iv, _ in rep.isolating if iv.lo >= 0)
        found_mult = sum(m for r, m in rep.exact_roots if r > 0) + sum(m for iv, m in rep.isolating if iv.lo >= 0)
        bound = descartes_bound(f).bound
        assert found <= bound
        assert (bound - found_mult) % 2 == 0 and found_mult <= bound


def test_interval_bound_falls_back():
    bound, which = interval_bound(P(1, 0, 1), Fraction(-1, 8), 0)
    assert bound == 0 and which == "mobius"
    bound, which = interval_bound(P(-2, 0, 1), 1, 2)
    assert bound == 1 and which == "budan-fourier"


def test_refine_examples():
    f = P(-2, 0, 1)
    iv = refine(f, Interval.open(1, 2), Fraction(1, 100))
    assert iv.width <= Fraction(1, 100)
    assert iv.lo**2 < 2 < iv.hi**2
    assert iv.issubset(Interval.open(1, 2))
    same = refine(f, Interval.open(1, 2), 5)
    assert same == Interval.open(1, 2)


def test_refine_hits_exact_root():
    iv = refine(P(Fraction(-1, 3), 1), Interval.open(0, 1), Fraction(1, 10))
    assert Fraction(1, 3) in iv
    iv = refine(P(Fraction(-1, 4), 1), Interval.open(0, 1), Fraction(1, 10))
    assert iv == Interval.point(Fraction(1, 4))


def test_refine_rejects_non_isolating():
    f = (x - 1) * (x - 2) * (x - 3)
    with pytest.raises(NotIsolatingError):
        refine(f, Interval.open(Fraction(1, 2), Fraction(7, 2)), Fraction(1, 10))
    with pytest.raises(NotIsolatingError):
        refine(f, Interval.open(Fraction(1, 2), Fraction(5, 2)), Fraction(1, 10))
    with pytest.raises(NotIsolatingError):
        refine(f, Interval.open(1, Fraction(5, 2)), Fraction(1, 10))


@given(nonzero_polys(7, st.integers(-9, 9)), st.integers(1, 40))
def test_refine_preserves_containment(f, k):
    if f.degree < 1:
        return
    width = Fraction(1, k * k)
    for iv, _ in isolate(f).isolating:
        r = refine(f, iv, width)
        assert r.issubset(iv)
        assert r.is_point or (r.width <= width and sturm_count(f, r) == 1)
