"""Pure-Python integer kernels.

Every kernel works on dense ascending coefficient lists of Python ints and
never mutates its arguments. ``_ckernels`` is a drop-in compiled twin.
"""


def sign_variations(seq):
    """Number of sign changes in ``seq`` after dropping zero entries."""
    count = 0
    prev = 0
    for a in seq:
        if a > 0:
            if prev < 0:
                count += 1
            prev = 1
        elif a < 0:
            if prev > 0:
                count += 1
            prev = -1
    return count


def taylor_shift(coeffs, p):
    """Coefficients of ``F(x + p)``, by the Horner cascade of synthetic divisions."""
    c = list(coeffs)
    n = len(c)
    if p == 0 or n < 2:
        return c
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += p * c[j + 1]
    return c


def scaled_shift(coeffs, p, q):
    """Coefficients of ``q**n * F((x + p) / q)`` where ``n = len(coeffs) - 1``."""
    n = len(coeffs) - 1
    if q == 1:
        return taylor_shift(coeffs, p)
    c = [0] * (n + 1)
    w = 1
    for j in range(n, -1, -1):
        c[j] = coeffs[j] * w
        w *= q
    return taylor_shift(c, p)


def horner(coeffs, p, q):
    """``q**n * F(p / q)`` as an exact integer; same sign as ``F(p/q)`` when q > 0."""
    acc = 0
    w = 1
    for a in reversed(coeffs):
        acc = acc * p + a * w
        w *= q
    return acc


def mul(a, b):
    """Integer coefficient convolution."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out
