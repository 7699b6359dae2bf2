"""Compare the compiled and numpy minimum-weight kernels.

    python benchmarks/bench_min_weight.py [--repeat 3] [--k 14]

Workloads are the bundled 4x5 and q = 4 fixtures plus a random F_3 code of
dimension ``--k`` (3^k codewords). Both kernels must return the same weight.
"""

import argparse
import statistics
import time

import numpy as np

from bicycl import codec
from bicycl._kernels import backends
from bicycl.specfile import load_spec


def fixture_workload(name):
    code = load_spec(name).build()
    tw = code.params.tower
    rows = codec.digit_rows(code, codec.code_basis(code))
    return f"{name} ({tw.q}^{code.K})", rows, tw.p, tw.e


def random_workload(k, n, seed):
    rng = np.random.default_rng(seed)
    # systematic form keeps the rank at k
    rows = np.hstack([np.eye(k, dtype=np.int64), rng.integers(0, 3, (k, n - k))])
    return f"random F_3 [{n}, {k}] (3^{k})", rows, 3, 1


def timed(fn, rows, p, e, repeat):
    times, result = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(rows, p, e, 1)
        times.append(time.perf_counter() - t0)
    return result, statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--k", type=int, default=14, help="dimension of the random code")
    ap.add_argument("--n", type=int, default=40, help="length of the random code")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    kernels = backends()
    if "cython" not in kernels:
        print("compiled kernel not built; timing the numpy fallback only")
    loads = [fixture_workload(n) for n in ("4x5-constacyclic", "4x5-cyclic", "q4-3x5")]
    loads.append(random_workload(args.k, args.n, args.seed))

    names = sorted(kernels)
    print(f"{'workload':34s}" + "".join(f"{n:>12s}" for n in names) + f"{'speedup':>10s}  d_min")
    for label, rows, p, e in loads:
        res = {n: timed(kernels[n], rows, p, e, args.repeat) for n in names}
        weights = {r for r, _ in res.values()}
        if len(weights) != 1:
            raise SystemExit(f"{label}: kernels disagree {res}")
        speed = (f"{res['python'][1] / res['cython'][1]:9.1f}x" if "cython" in res else f"{'-':>10s}")
        print(f"{label:34s}" + "".join(f"{res[n][1]:11.3f}s" for n in names)
              + f"{speed}  {weights.pop()}")


if __name__ == "__main__":
    main()
