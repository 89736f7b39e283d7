"""Compare the compiled kernels against the pure-Python fallback.

Times the individual kernels directly and the full solver through each
backend (the latter in subprocesses, since the backend is chosen at import
time).  Run from the repository root:

    python3 benchmarks/backend_bench.py
"""

import os
import subprocess
import sys
import time
import timeit

import numpy as np

from dyckq import _speedups_py as pure
from dyckq.model import gen_balanced

try:
    from dyckq import _speedups as compiled
except ImportError:
    compiled = None


def bench(fn, number):
    return timeit.timeit(fn, number=number) / number


def kernel_rows():
    rng = np.random.Generator(np.random.PCG64(0))
    n = 1 << 16
    S = gen_balanced(n, 3, 2, seed=1)
    codes = S.codes
    P = S.prefix
    b_arr = rng.integers(1, n + 1, size=4096)
    types = S.types

    backends = [("python", pure)] + ([("c", compiled)] if compiled else [])
    rows = []

    for label, case, number in (
        ("classical_check n=2^16", lambda m: m.classical_check_codes(codes, 3, 2, 2), 20),
        ("pm_tables n=2^16 v=2", lambda m: m.pm_tables(P, 2), 20),
    ):
        times = {}
        for name, mod in backends:
            times[name] = bench(lambda: case(mod), number)
        rows.append((label, times))

    tabs = {name: mod.pm_tables(P, 2) for name, mod in backends}
    times = {}
    for name, mod in backends:
        t = tabs[name]
        times[name] = bench(
            lambda: mod.run_attempts(types, P, *t, n, 2, 64, b_arr, None, 0.0, 2.25),
            5)
    rows.append(("mismatch attempts n=2^16 d=64 x4096", times))
    return rows


def solve_wall(pure_backend: bool, n: int) -> float:
    env = dict(os.environ)
    if pure_backend:
        env["DYCKQ_PURE"] = "1"
    else:
        env.pop("DYCKQ_PURE", None)
    code = (
        "import time\n"
        "from dyckq import BACKEND, DyckParams, QueryLedger, SubroutineModel\n"
        "from dyckq.model import gen_balanced\n"
        "from dyckq.solver import solve\n"
        f"S = gen_balanced({n}, 2, 2, seed=1)\n"
        f"p = DyckParams(2, 2, {n})\n"
        "solve(S, p, SubroutineModel(rng_seed=0), QueryLedger())\n"
        "t0 = time.perf_counter()\n"
        "for i in range(3):\n"
        "    solve(S, p, SubroutineModel(rng_seed=i), QueryLedger())\n"
        "print((time.perf_counter() - t0) / 3)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    print(f"{'case':<40} {'python':>12} {'c':>12} {'speedup':>9}")
    for label, times in kernel_rows():
        py = times["python"]
        if "c" in times:
            print(f"{label:<40} {py * 1e3:>10.3f}ms {times['c'] * 1e3:>10.3f}ms "
                  f"{py / times['c']:>8.1f}x")
        else:
            print(f"{label:<40} {py * 1e3:>10.3f}ms {'n/a':>12} {'':>9}")

    for n in (1 << 12, 1 << 14):
        py = solve_wall(True, n)
        row = f"full solve n=2^{n.bit_length() - 1}"
        if compiled is not None:
            cc = solve_wall(False, n)
            print(f"{row:<40} {py * 1e3:>10.3f}ms {cc * 1e3:>10.3f}ms "
                  f"{py / cc:>8.1f}x")
        else:
            print(f"{row:<40} {py * 1e3:>10.3f}ms {'n/a':>12}")


if __name__ == "__main__":
    main()
