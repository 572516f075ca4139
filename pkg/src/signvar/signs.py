"""Sign sequences and sign-variation counts."""

from dataclasses import dataclass
from enum import Enum

from signvar import kernels
from signvar.poly import as_rational, derivative, evaluate, shifted_signs

__all__ = [
    "SignSequence",
    "SplitReport",
    "Parity",
    "sgn",
    "sign_sequence",
    "variation_count",
    "split_variation_cases",
    "variation_parity",
    "variations_at",
    "derivative_sequence",
    "variations_at_by_derivatives",
]


def sgn(x):
    return (x > 0) - (x < 0)


def _signs(seq):
    return [sgn(as_rational(a)) if isinstance(a, str) else sgn(a) for a in seq]


@dataclass(frozen=True)
class SignSequence:
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        for e in entries:
            if e not in (-1, 0, 1) or isinstance(e, bool):
                raise ValueError(f"sign entries must be -1, 0 or 1, got {e!r}")
        object.__setattr__(self, "entries", tuple(int(e) for e in entries))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def nonzero(self):
        return tuple(e for e in self.entries if e)

    def variations(self):
        return kernels.sign_variations(self.entries)


def sign_sequence(seq):
    """Elementwise sign map of a sequence of rationals."""
    return SignSequence(tuple(sgn(as_rational(a)) for a in seq))


def variation_count(seq):
    """Sign changes between consecutive nonzero entries; 0 for empty or all-zero input."""
    if isinstance(seq, SignSequence):
        return seq.variations()
    return kernels.sign_variations(list(seq))


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class SplitReport:
    """Variation counts of ``A`` and its two halves sharing ``A[split]``.

    ``case`` is one of ``"pivot-nonzero"``, ``"zero-side"``,
    ``"bridge-same-sign"`` or ``"bridge-sign-change"``; ``total`` always equals
    ``left + right + correction``.
    """

    total: int
    left: int
    right: int
    case: str
    correction: int
    split: int


def split_variation_cases(seq, split):
    signs = _signs(seq)
    n = len(signs) - 1
    if not 1 <= split <= n - 1:
        raise IndexError(f"split index {split} outside 1..{n - 1}")
    left = kernels.sign_variations(signs[: split + 1])
    right = kernels.sign_variations(signs[split:])
    total = kernels.sign_variations(signs)
    if signs[split] != 0:
        case, correction = "pivot-nonzero", 0
    elif not any(signs[: split + 1]) or not any(signs[split:]):
        case, correction = "zero-side", 0
    else:
        before = next(s for s in reversed(signs[:split]) if s)
        after = next(s for s in signs[split + 1 :] if s)
        if before == after:
            case, correction = "bridge-same-sign", 0
        else:
            case, correction = "bridge-sign-change", 1
    return SplitReport(total, left, right, case, correction, split)


def variation_parity(eps):
    """Parity of V(eps) read off the endpoints alone; both endpoints must be nonzero."""
    entries = eps.entries if isinstance(eps, SignSequence) else _signs(eps)
    if not entries or entries[0] == 0 or entries[-1] == 0:
        raise ValueError("variation_parity needs nonzero first and last entries")
    return Parity.EVEN if entries[0] == entries[-1] else Parity.ODD


def variations_at(f, lam, n=None):
    """V of the derivative sequence ``(f(lam), f'(lam), ..., f^(n)(lam))``.

    Computed from one Taylor shift: the shifted coefficients have the same
    signs as the derivatives. ``n`` defaults to ``deg f``.
    """
    if n is None:
        n = max(f.degree, 0)
    if n < 0:
        raise ValueError("n must be nonnegative")
    signs = shifted_signs(f, lam)
    return kernels.sign_variations(signs[: n + 1])


def derivative_sequence(f, lam, n=None):
    """``(f(lam), f'(lam), ..., f^(n)(lam))`` by repeated differentiation."""
    if n is None:
        n = max(f.degree, 0)
    lam = as_rational(lam)
    out = []
    g = f
    for _ in range(n + 1):
        out.append(evaluate(g, lam))
        g = derivative(g)
    return out


def variations_at_by_derivatives(f, lam, n=None):
    """Slow path for :func:`variations_at`, kept as an independent cross-check."""
    return kernels.sign_variations(derivative_sequence(f, lam, n))
