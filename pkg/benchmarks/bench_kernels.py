"""Compare the compiled and pure-Python kernel backends.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``. Each row is the
best-of-N wall time for one workload on each available backend; the last
column is python time divided by cython time.
"""

import argparse
import random
import timeit

from signvar import isolation, kernels
from signvar.oracle import case_rng, random_root_spec, synthesize


def _workloads(rng):
    dense = [rng.randint(-10**6, 10**6) for _ in range(41)]
    signs = [rng.choice((-1, 0, 1)) for _ in range(5000)]
    polys = [synthesize(random_root_spec(case_rng(0, "bench", i), 12)) for i in range(40)]

    def isolate_all(mod):
        saved = isolation.kernels.__dict__.copy()
        for name in ("sign_variations", "taylor_shift", "scaled_shift", "horner", "mul"):
            setattr(isolation.kernels, name, getattr(mod, name))
        try:
            for f in polys:
                isolation.isolate(f)
        finally:
            isolation.kernels.__dict__.update(saved)

    return [
        ("taylor_shift deg 40 by 7", lambda m: m.taylor_shift(dense, 7)),
        ("scaled_shift deg 40 by 3/8", lambda m: m.scaled_shift(dense, 3, 8)),
        ("horner deg 40 at 5/3", lambda m: m.horner(dense, 5, 3)),
        ("sign_variations len 5000", lambda m: m.sign_variations(signs)),
        ("mul deg 40 x deg 40", lambda m: m.mul(dense, dense)),
        ("isolate 40 random polys", isolate_all),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=20, help="calls per timing for the small kernels")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    names = list(backends)
    rng = random.Random(12345)
    print(f"backends: {', '.join(names)} (active: {kernels.BACKEND})")
    header = f"{'workload':32}" + "".join(f"{n:>12}" for n in names)
    if "cython" in backends and "python" in backends:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn in _workloads(rng):
        number = 1 if label.startswith("isolate") else args.number
        times = {}
        for name, mod in backends.items():
            t = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat))
            times[name] = t / number
        row = f"{label:32}" + "".join(f"{times[n] * 1e3:10.3f}ms" for n in names)
        if "speedup" in header:
            row += f"{times['python'] / times['cython']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
