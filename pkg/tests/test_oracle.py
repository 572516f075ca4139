import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from signvar.counting import Interval
from signvar.errors import EndpointRootError, InvariantViolation, ZeroPolynomialError
from signvar.oracle import (
    RootSpec,
    check_gauss_lemma,
    check_product_lemma,
    gcd_chain,
    random_cofactor,
    random_root_spec,
    sturm_chain,
    sturm_count,
    synthesize,
    zero_count,
)
from signvar.poly import Polynomial, divmod_poly
from signvar.signs import variation_count
from strategies import P, nonzero_polys

x = Polynomial.x()
POS = Interval.open(0, math.inf)
NEG = Interval.open(-math.inf, 0)
ALL = Interval.real_line()


def expand_by_hand(roots, leading=1):
    # independent of Polynomial.mul: elementary symmetric polynomials
    cs = [Fraction(leading)]
    for r in roots:
        nxt = [Fraction(0)] * (len(cs) + 1)
        for j, c in enumerate(cs):
            nxt[j + 1] += c
            nxt[j] -= r * c
        cs = nxt
    return Polynomial(cs)


def test_synthesize_examples():
    assert synthesize(RootSpec(positives=(1, 2))) == P(2, -3, 1)
    f = synthesize(RootSpec(positives=(1, 2), negatives=(-3,)))
    assert f == P(6, -7, 0, 1) == expand_by_hand([1, 2, -3])
    assert synthesize(RootSpec(complex_pairs=((0, 1),))) == P(1, 0, 1)


def test_root_spec_validation():
    with pytest.raises(ValueError):
        RootSpec(positives=(0,))
    with pytest.raises(ValueError):
        RootSpec(negatives=(1,))
    with pytest.raises(ValueError):
        RootSpec(complex_pairs=((1, 0),))
    with pytest.raises(ValueError):
        RootSpec(positives=(1,), cofactor_constant=0)


def test_root_spec_counts():
    spec = RootSpec((1, 1, 2), (-1,), ((1, 2), (0, 1)), Fraction(-3, 2))
    assert (spec.k, spec.l, spec.m, spec.degree) == (3, 1, 2, 8)
    f = synthesize(spec)
    assert f.degree == 8 and f.leading == Fraction(-3, 2)
    assert spec.real_roots() == [(-1, 1), (1, 2), (2, 1)]


def test_synthesize_matches_hand_expansion():
    rng = random.Random(11)
    for _ in range(100):
        spec = random_root_spec(rng, 10)
        if spec.m:
            continue
        want = expand_by_hand(list(spec.positives + spec.negatives), spec.cofactor_constant)
        assert synthesize(spec) == want


def test_sturm_chain_examples():
    assert tuple(sturm_chain(P(-2, 0, 1))) == (P(-2, 0, 1), P(0, 2), P(2))
    assert tuple(sturm_chain(x)) == (x, P(1))
    assert tuple(sturm_chain((x - 1) ** 2)) == (x - 1, P(1))
    with pytest.raises(ZeroPolynomialError):
        sturm_chain(P())


def test_sturm_chain_matches_sympy():
    X = sympy.Symbol("x")
    f = x**3 - 2 * x**2 + 3 * x - 5
    chain = sturm_chain(f)
    want = sympy.sturm(sympy.Poly(X**3 - 2 * X**2 + 3 * X - 5, X, domain="QQ"))
    assert len(chain) == len(want)
    for ours, theirs in zip(chain, want):
        assert list(reversed(ours.coeffs)) == [Fraction(int(c.p), int(c.q)) for c in theirs.all_coeffs()]


@given(nonzero_polys(7, st.integers(-9, 9)))
def test_sturm_chain_remainder_identity(f):
    chain = sturm_chain(f)
    assert chain[-1].degree == 0
    for a, b, c in zip(chain, chain[1:], chain[2:]):
        assert divmod_poly(a, b)[1] == -c


@given(nonzero_polys(7, st.integers(-9, 9)), st.integers(-30, 30))
def test_sturm_chain_no_consecutive_zeros(f, t):
    chain = sturm_chain(f)
    vals = [p(Fraction(t, 3)) for p in chain]
    assert not any(a == 0 and b == 0 for a, b in zip(vals, vals[1:]))


def test_sturm_count_examples():
    assert sturm_count(P(-2, 0, 1), Interval.open(0, 2)) == 1
    assert sturm_count(P(1, 0, 1), ALL) == 0
    assert sturm_count(P(2, -3, 1), POS) == 2
    assert sturm_count((x - 1) ** 3, ALL) == 1
    assert sturm_count(P(5), ALL) == 0
    assert sturm_count(P(-2, 0, 1), (0, 2)) == 1


def test_sturm_count_endpoint_root():
    with pytest.raises(EndpointRootError):
        sturm_count(P(2, -3, 1), Interval.open(0, 1))


@given(nonzero_polys(7, st.integers(-9, 9)), st.integers(-40, 40), st.integers(1, 40))
def test_sturm_count_matches_sympy(f, a, w):
    lo, hi = Fraction(a, 4), Fraction(a + w, 4)
    if f(lo) == 0 or f(hi) == 0 or f.degree < 1:
        return
    X = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Integer(int(c)) for c in reversed(f.integer_form()[1])], X)
    want = sp.count_roots(sympy.Rational(a, 4), sympy.Rational(a + w, 4))
    assert sturm_count(f, Interval.open(lo, hi)) == want


def test_zero_count_multiplicities():
    f = (x - 1) ** 3 * (x + 2) ** 2 * (x**2 + 1)
    assert zero_count(f, POS) == 3
    assert zero_count(f, NEG) == 2
    assert zero_count(f, ALL) == 5
    assert sturm_count(f, ALL) == 2


def test_zero_count_endpoints_non_strict():
    f = (x - 1) ** 2 * (x - 3)
    assert zero_count(f, Interval.closed(1, 3), strict=False) == 3
    assert zero_count(f, Interval.open(1, 3), strict=False) == 0
    assert zero_count(f, Interval.left_open(1, 3), strict=False) == 1
    assert zero_count(f, Interval.right_open(1, 3), strict=False) == 2
    assert zero_count(f, Interval.point(1), strict=False) == 2
    with pytest.raises(EndpointRootError):
        zero_count(f, Interval.open(1, 3))


def test_gcd_chain_ends_constant():
    f = (x - 1) ** 3 * (x + 2)
    chain = gcd_chain(f)
    assert [g.degree for g in chain] == [4, 2, 1, 0]


def test_generator_agrees_with_sturm():
    rng = random.Random(3)
    for _ in range(300):
        spec = random_root_spec(rng)
        f = synthesize(spec)
        assert zero_count(f, POS) == spec.k
        assert zero_count(f, NEG) == spec.l
        h = spec.cofactor()
        assert h.coeffs[0] > 0 and h.leading > 0
        assert variation_count(h.coeffs) % 2 == 0


def test_gauss_lemma_examples():
    r = check_gauss_lemma(P(1, 1), 1)
    assert (r.v_before, r.v_after, r.defect) == (0, 1, 0)
    assert r.product == P(-1, 0, 1)
    r = check_gauss_lemma(P(1), 2)
    assert r.product == P(-2, 1) and r.defect == 0
    r = check_gauss_lemma(P(1, -1, 1), 1)
    assert r.product == P(-1, 2, -2, 1)
    assert (r.v_before, r.v_after, r.defect) == (2, 3, 0)


def test_gauss_lemma_positive_defect():
    # h = 1 + x^2 has no sign changes; (x - 1/10) h = -1/10 + x - x^2/10 + x^3 has three
    r = check_gauss_lemma(P(1, 0, 1), Fraction(1, 10))
    assert (r.v_before, r.v_after, r.defect) == (0, 3, 2)


def test_gauss_lemma_preconditions():
    with pytest.raises(ValueError):
        check_gauss_lemma(P(0, 1), 1)
    with pytest.raises(ValueError):
        check_gauss_lemma(P(1, 1), 0)


def test_product_lemma_examples():
    r = check_product_lemma(P(1), [1, 2])
    assert r.product == P(2, -3, 1) and (r.v_f, r.k, r.defect) == (2, 2, 0)
    r = check_product_lemma(P(3, -1, 4), [])
    assert r.defect == 0 and r.v_f == r.v_h
    r = check_product_lemma(P(1, 1), [1])
    assert r.product == P(-1, 0, 1)
    assert (r.v_f, r.k, r.v_h, r.defect) == (1, 1, 0, 0)
    with pytest.raises(ValueError):
        check_product_lemma(P(1), [1, -1])


def test_lemma_checkers_raise_on_violation(monkeypatch):
    import signvar.oracle as oracle

    monkeypatch.setattr(oracle, "_coeff_variations", lambda f: 0)
    with pytest.raises(InvariantViolation):
        check_gauss_lemma(P(1, 1), 1)


def test_random_cofactor_shape():
    rng = random.Random(0)
    for _ in range(200):
        h = random_cofactor(rng, 12)
        assert h.coeffs[0] != 0 and 0 <= h.degree <= 12
        assert all(abs(c) <= 10 for c in h.coeffs)
