"""Randomized and exhaustive verification suites.

Each suite draws its cases from :func:`signvar.oracle.case_rng`, so a single
failing case is replayed from ``(seed, suite, index)``. The expected values
always come from the oracle side (generator ground truth or Sturm counts),
never from the code path under test.
"""

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from signvar.counting import Interval, budan_fourier, descartes_bound, multiplicity
from signvar.errors import SignvarError
from signvar.isolation import isolate
from signvar.oracle import (
    case_rng,
    check_gauss_lemma,
    check_product_lemma,
    random_cofactor,
    random_positive_rational,
    random_root_spec,
    sturm_count,
    synthesize,
    zero_count,
)
from signvar.poly import Polynomial, derivative, gcd, taylor_shift
from signvar.signs import (
    split_variation_cases,
    variation_count,
    variation_parity,
    variations_at,
    variations_at_by_derivatives,
    Parity,
)

__all__ = ["Failure", "SuiteResult", "SUITES", "DEFAULT_SUITES", "run_suite", "run_case", "check_sign_lemmas"]

POS = Interval.open(0, float("inf"))
NEG = Interval.open(float("-inf"), 0)


@dataclass
class Failure:
    index: int
    message: str


@dataclass
class SuiteResult:
    name: str
    seed: int
    cases: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures


def _case_descartes(rng, max_degree, notes):
    spec = random_root_spec(rng, max_degree)
    f = synthesize(spec)
    res = descartes_bound(f)
    k = spec.k
    defect = res.bound - k
    assert defect >= 0 and defect % 2 == 0, f"V_f(0)={res.bound}, k={k} for {f!r}"
    h = spec.cofactor()
    vh = variation_count(h.coeffs)
    assert h.coeffs[0] > 0 and h.leading > 0 and vh % 2 == 0, f"cofactor {h!r} has V={vh}"
    if res.bound == 1:
        notes["corollary_instances"] = notes.get("corollary_instances", 0) + 1
        assert sturm_count(f, POS) == 1, f"V=1 but Sturm finds {sturm_count(f, POS)} positive roots"
        assert zero_count(f, POS) == 1, "V=1 but the positive root is not simple"
        g = gcd(f, derivative(f))
        if g.degree >= 1:
            assert zero_count(g, POS) == 0, "gcd(f, f') has a positive root"


def _case_gauss(rng, max_degree, notes):
    h = random_cofactor(rng, max_degree)
    lam = random_positive_rational(rng)
    check_gauss_lemma(h, lam)


def _case_product(rng, max_degree, notes):
    k = rng.randint(0, min(4, max_degree))
    h = random_cofactor(rng, max_degree - k)
    lams = [random_positive_rational(rng) for _ in range(k)]
    check_product_lemma(h, lams)


def _random_poly_for_bf(rng, max_degree):
    if rng.random() < 0.5:
        return synthesize(random_root_spec(rng, max_degree))
    f = random_cofactor(rng, max_degree)
    if f.degree < 1:
        f = f * Polynomial([rng.randint(-5, 5) or 1, 1])
    return f


def _off_root_point(rng, f, span=12):
    while True:
        x = Fraction(rng.randint(-span * 10, span * 10), rng.randint(1, 10))
        if f(x) != 0:
            return x


def _case_budan_fourier(rng, max_degree, notes):
    f = _random_poly_for_bf(rng, max_degree)
    a = _off_root_point(rng, f)
    b = _off_root_point(rng, f)
    while b == a:
        b = _off_root_point(rng, f)
    a, b = min(a, b), max(a, b)
    bound = variations_at(f, a) - variations_at(f, b)
    z = zero_count(f, Interval.open(a, b))
    assert bound - z >= 0 and (bound - z) % 2 == 0, f"V(a)-V(b)={bound}, Z={z} on ({a}, {b}) for {f!r}"
    assert budan_fourier(f, a, b).bound == bound


def _case_isolation(rng, max_degree, notes):
    spec = random_root_spec(rng, max_degree)
    f = synthesize(spec)
    report = isolate(f)
    expected = spec.real_roots()
    found = list(report.exact_roots)
    for iv, m in report.isolating:
        assert sturm_count(f, iv) == 1, f"interval {iv} is not isolating"
    # generator roots are all rational, so none may be left inside an interval
    assert not report.isolating, f"rational roots left in intervals {report.isolating} for {f!r}"
    assert sorted(found) == expected, f"isolate found {found}, expected {expected}"
    for r, m in found:
        assert multiplicity(f, r) == m


def _case_shift(rng, max_degree, notes):
    f = _random_poly_for_bf(rng, max_degree)
    a = Fraction(rng.randint(-100, 100), rng.randint(1, 10))
    n = rng.randint(0, f.degree + 2)
    v = variations_at(f, a, n)
    assert v == variations_at(taylor_shift(f, a), 0, n), f"shift identity fails at a={a} for {f!r}"
    assert v == variations_at_by_derivatives(f, a, n), f"derivative path disagrees at a={a}"


SUITES = {
    "descartes": _case_descartes,
    "gauss": _case_gauss,
    "product": _case_product,
    "budan-fourier": _case_budan_fourier,
    "isolation": _case_isolation,
    "shift": _case_shift,
}

DEFAULT_SUITES = ("gauss", "product", "descartes", "budan-fourier")


def run_case(suite, seed, index, max_degree=12, notes=None):
    """Run one case; raises on failure."""
    SUITES[suite](case_rng(seed, suite, index), max_degree, {} if notes is None else notes)


def run_suite(suite, seed=0, cases=1000, max_degree=12):
    result = SuiteResult(suite, seed, cases)
    check = SUITES[suite]
    start = time.perf_counter()
    for i in range(cases):
        try:
            check(case_rng(seed, suite, i), max_degree, result.notes)
        except (AssertionError, SignvarError, ArithmeticError, ValueError) as exc:
            result.failures.append(Failure(i, f"{type(exc).__name__}: {exc}"))
    result.elapsed = time.perf_counter() - start
    return result


def check_sign_lemmas(max_length=8):
    """Exhaustive check over every {-1,0,1} sequence up to ``max_length``.

    Returns ``(sequences, splits, failures)``; the expected variation counts
    come from a direct pairwise scan, not the shared kernel.
    """
    failures = []
    sequences = splits = 0
    for length in range(1, max_length + 1):
        for seq in itertools.product((-1, 0, 1), repeat=length):
            sequences += 1
            nz = [s for s in seq if s]
            v = sum(1 for x, y in zip(nz, nz[1:]) if x != y)
            if variation_count(seq) != v:
                failures.append(f"V{seq} = {variation_count(seq)}, expected {v}")
            if seq[0] and seq[-1]:
                want = Parity.EVEN if seq[0] == seq[-1] else Parity.ODD
                if variation_parity(seq) != want or (v % 2 == 0) != (want is Parity.EVEN):
                    failures.append(f"parity of {seq}")
            for ell in range(1, length - 1):
                splits += 1
                rep = split_variation_cases(seq, ell)
                left = [s for s in seq[: ell + 1] if s]
                right = [s for s in seq[ell:] if s]
                vl = sum(1 for x, y in zip(left, left[1:]) if x != y)
                vr = sum(1 for x, y in zip(right, right[1:]) if x != y)
                if (rep.total, rep.left, rep.right) != (v, vl, vr):
                    failures.append(f"split counts of {seq} at {ell}")
                if v != vl + vr + rep.correction:
                    failures.append(f"addition formula fails for {seq} at {ell}")
                if seq[ell] != 0 and rep.correction != 0:
                    failures.append(f"nonzero pivot with correction for {seq} at {ell}")
                if rep.case in ("pivot-nonzero", "zero-side", "bridge-same-sign") and v != vl + vr:
                    failures.append(f"case {rep.case} needs zero correction for {seq} at {ell}")
                if rep.case == "bridge-sign-change" and v != vl + vr + 1:
                    failures.append(f"bridge case needs +1 for {seq} at {ell}")
    for outer in ((1, -1), (-1, 1)):
        for mid in (-1, 0, 1):
            triple = (outer[0], mid, outer[1])
            if variation_count(triple) != 1:
                failures.append(f"V{triple} != 1")
    return sequences, splits, failures
