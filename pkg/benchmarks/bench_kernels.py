"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Reports the best of N runs per case; the sweep case re-imports the package
under each backend in a fresh interpreter.
"""

import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction
from random import Random

from tbinom import _kernels_py

try:
    from tbinom import _ckernels
except ImportError:
    _ckernels = None


def _rand_coeffs(rng, n, den=30):
    return [Fraction(rng.randint(-10**6, 10**6), rng.randint(1, den)) for _ in range(n)]


def kernel_cases(rng):
    a200, b200 = _rand_coeffs(rng, 200), _rand_coeffs(rng, 200)
    a40, b40 = _rand_coeffs(rng, 40), _rand_coeffs(rng, 40)
    poly = _rand_coeffs(rng, 300)
    v = Fraction(-7, 3)
    return {
        "convolve 40x40": lambda m: m.convolve(a40, b40),
        "convolve 200x200": lambda m: m.convolve(a200, b200),
        "convolve 200x200 truncated": lambda m: m.convolve(a200, b200, 199),
        "horner deg 300": lambda m: m.horner(poly, v),
        "add_scaled 200": lambda m: m.add_scaled(a200, b200, v),
    }


SERIES_SNIPPET = (
    "import time;"
    "from tbinom import kernels;"
    "from tbinom.series import series_G, series_H, series_mul;"
    "G, H = series_G(40), series_H(40);"
    "ts=[];"
    "exec('for _ in range({n}):\\n s=time.perf_counter(); series_mul(G, H); ts.append(time.perf_counter()-s)');"
    "print(kernels.BACKEND, min(ts))"
)

SWEEP_SNIPPET = (
    "import time;"
    "from tbinom import kernels, identities;"
    "s=time.perf_counter(); identities.run_sweep('all');"
    "print(kernels.BACKEND, time.perf_counter()-s)"
)


def _in_subprocess(code, pure):
    env = dict(os.environ)
    env.pop("TBINOM_PURE", None)
    if pure:
        env["TBINOM_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-sweep", action="store_true")
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernel not built; only the pure backend is available")
    backends = [("python", _kernels_py)] + ([("cython", _ckernels)] if _ckernels else [])

    print(f"{'case':<30}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in kernel_cases(Random(20261016)).items():
        times = []
        for _, mod in backends:
            number = 20
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=args.repeat)) / number
            times.append(best)
        # both backends must agree before their timings mean anything
        if len(backends) == 2:
            assert fn(_kernels_py) == fn(_ckernels), label
        speed = f"{times[0] / times[1]:>9.2f}x" if len(times) == 2 else ""
        print(f"{label:<30}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times) + speed)

    rows = [("series_mul G*H order 40", SERIES_SNIPPET.format(n=args.repeat))]
    if not args.skip_sweep:
        rows.append(("full verify sweep", SWEEP_SNIPPET))
    for label, code in rows:
        times = []
        for _, _mod in backends:
            name, secs = _in_subprocess(code, pure=(_mod is _kernels_py))
            times.append(secs)
        speed = f"{times[0] / times[1]:>9.2f}x" if len(times) == 2 else ""
        print(f"{label:<30}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
