"""Compare the compiled and numpy kernels.

    python benchmarks/bench_kernels.py [--points N] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from artifact import SolarModel, build_piecewise, make_qi_table
from artifact import _pykernels

try:
    from artifact import _ckernels
except ImportError:
    _ckernels = None


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--points", type=int, default=1_000_000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    pp = build_piecewise(make_qi_table(SolarModel(amplitude=2.0), "ding"))
    rng = np.random.default_rng(0)
    t = rng.uniform(0.0, pp.year_length, args.points)
    pw_args = (pp.breakpoints, pp.coeff_array(), pp.offsets, pp.total, t)
    n1, n2 = rng.uniform(1, 30, (2, args.points))
    d1, d2 = rng.uniform(-5, 5, (2, args.points))
    x = rng.uniform(0, 30, args.points)
    dy_args = (n1, n2, d1, d2, x)

    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    else:
        print("compiled kernels not built; timing the numpy fallback only")

    print(f"{'kernel':<16}{'backend':<10}{'best (ms)':>12}{'Mpts/s':>10}")
    for kernel, kargs in (("piecewise_eval", pw_args), ("dayan_eval", dy_args)):
        results = {}
        for name, mod in backends.items():
            fn = getattr(mod, kernel)
            best = min(timeit.repeat(lambda: fn(*kargs), number=1, repeat=args.repeat))
            results[name] = fn(*kargs)
            print(f"{kernel:<16}{name:<10}{best * 1e3:>12.2f}{args.points / best / 1e6:>10.1f}")
        if len(results) == 2:
            diff = np.max(np.abs(results["cython"] - results["python"]))
            print(f"{'':<16}max |cython - python| = {diff:.1e}")


if __name__ == "__main__":
    main()
