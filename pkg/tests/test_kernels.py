from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signvar import kernels

BACKENDS = kernels.available_backends()

int_lists = st.lists(st.integers(-10**6, 10**6), max_size=14)


each_backend = pytest.mark.parametrize("backend", [BACKENDS[k] for k in sorted(BACKENDS)], ids=sorted(BACKENDS))


def naive_shift(cs, p):
    # expand sum c_j (x + p)^j with binomials
    out = [0] * len(cs)
    for j, c in enumerate(cs):
        for i in range(j + 1):
            out[i] += c * comb(j, i) * p ** (j - i)
    return out


def naive_variations(seq):
    nz = [s for s in seq if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


def test_compiled_backend_is_built():
    # the editable install builds the extension; a missing one is a packaging regression
    assert "cython" in BACKENDS


@each_backend
@given(cs=int_lists, p=st.integers(-50, 50))
def test_taylor_shift_matches_binomial_expansion(backend, cs, p):
    assert backend.taylor_shift(cs, p) == naive_shift(cs, p)


@each_backend
@given(cs=int_lists, p=st.integers(-50, 50), q=st.integers(1, 40))
def test_scaled_shift(backend, cs, p, q):
    n = len(cs) - 1
    got = backend.scaled_shift(cs, p, q)
    # q^n F((x+p)/q) = sum c_j q^(n-j) (x+p)^j
    want = naive_shift([c * q ** (n - j) for j, c in enumerate(cs)], p)
    assert got == want


@each_backend
@given(cs=int_lists, p=st.integers(-10**4, 10**4), q=st.integers(1, 10**4))
def test_horner_is_homogenized_value(backend, cs, p, q):
    n = len(cs) - 1
    value = sum(Fraction(c) * Fraction(p, q) ** j for j, c in enumerate(cs))
    assert backend.horner(cs, p, q) == value * q ** max(n, 0)


@each_backend
@given(a=int_lists, b=int_lists)
def test_mul_is_convolution(backend, a, b):
    got = backend.mul(a, b)
    if not a or not b:
        assert got == []
        return
    want = [sum(a[i] * b[k - i] for i in range(len(a)) if 0 <= k - i < len(b)) for k in range(len(a) + len(b) - 1)]
    assert got == want


@each_backend
@given(seq=st.lists(st.integers(-3, 3), max_size=20))
def test_sign_variations(backend, seq):
    assert backend.sign_variations(seq) == naive_variations(seq)


@each_backend
def test_sign_variations_accepts_fractions(backend):
    assert backend.sign_variations([Fraction(1, 2), 0, Fraction(-1, 3), 5]) == 2


@each_backend
def test_kernels_do_not_mutate(backend):
    cs = [1, 2, 3]
    backend.taylor_shift(cs, 2)
    backend.scaled_shift(cs, 1, 3)
    assert cs == [1, 2, 3]


def test_backends_agree_on_large_coefficients():
    if len(BACKENDS) < 2:
        pytest.skip("compiled backend not built")
    cs = [(-1) ** j * 10**40 * (j + 1) for j in range(15)]
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    for p in (-7, -1, 0, 1, 3, 10**12):
        assert py.taylor_shift(cs, p) == cy.taylor_shift(cs, p)
    assert py.scaled_shift(cs, 5, 7) == cy.scaled_shift(cs, 5, 7)
    assert py.horner(cs, -3, 11) == cy.horner(cs, -3, 11)
