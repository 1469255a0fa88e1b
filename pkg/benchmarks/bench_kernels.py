"""Time the numba kernels against their pure-numpy counterparts.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel is run once untimed (JIT warm-up), then timed ``--repeat`` times;
the best wall time is reported.  Outputs of the two flavours are compared.
"""
import argparse
import time

import numpy as np

from matchmoments import _kernels
from matchmoments._numba_utils import NUMBA_ENABLED
from matchmoments.oracle import draw_steps, worker_rng


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    four_n = 16
    yield "enumerate n=4 (2,027,025 matchings)", _kernels.enumerate_counts_numba, _kernels.enumerate_counts_numpy, (four_n,)

    draws = draw_steps(worker_rng(7, 0), 50, 100_000)
    yield "sample n=50, 1e5 trials", _kernels.sample_counts_numba, _kernels.sample_counts_numpy, (draws, 200)

    rng = np.random.default_rng(7)
    mat = rng.integers(0, _kernels.MODULUS, size=(40, 41), dtype=np.int64)
    yield "rank mod p, 40x41", _kernels.rank_mod_p_numba, _kernels.rank_mod_p_numpy, (mat, _kernels.MODULUS)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not NUMBA_ENABLED:
        print("numba disabled: both columns time the numpy kernels")
    print(f"{'kernel':<40} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  agree")
    for name, fast, slow, argv in cases():
        t_fast, out_fast = best_of(lambda: fast(*argv), args.repeat)
        t_slow, out_slow = best_of(lambda: slow(*argv), args.repeat)
        agree = np.array_equal(np.asarray(out_fast), np.asarray(out_slow))
        print(f"{name:<40} {t_fast:>10.4f} {t_slow:>10.4f} {t_slow / t_fast:>7.1f}x  {agree}")


if __name__ == "__main__":
    main()
