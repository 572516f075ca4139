"""Exact sign-variation calculus and real-root counting over the rationals."""

from signvar.counting import (
    CountResult,
    Interval,
    budan_fourier,
    count_closedopen,
    count_halfopen,
    descartes_bound,
    descartes_bound_negative,
    multiplicity,
    strip_zero_root,
)
from signvar.errors import (
    EndpointRootError,
    InvalidIntervalError,
    InvariantViolation,
    IsolationBudgetError,
    NotIsolatingError,
    ParseError,
    SignvarError,
    ZeroPolynomialError,
)
from signvar.isolation import RootReport, isolate, refine, root_bound, square_free_decompose
from signvar.kernels import BACKEND
from signvar.oracle import (
    RootSpec,
    SturmChain,
    check_gauss_lemma,
    check_product_lemma,
    sturm_chain,
    sturm_count,
    synthesize,
    zero_count,
)
from signvar.parsing import format_dense, format_expr, parse_polynomial, parse_rational
from signvar.poly import (
    Polynomial,
    add,
    derivative,
    divide_linear,
    divmod_poly,
    evaluate,
    gcd,
    mul,
    reflect,
    scale,
    sub,
    taylor_shift,
)
from signvar.signs import (
    Parity,
    SignSequence,
    SplitReport,
    sign_sequence,
    split_variation_cases,
    variation_count,
    variation_parity,
    variations_at,
)

__version__ = "0.1.0"
