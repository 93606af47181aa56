"""Time the numba kernels against the numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends are called directly, so the MAXCLASS_DISABLE_NUMBA flag does
not matter here. Results are checked for equality before timing is reported.
"""
import argparse
import time

import numpy as np

from maxclass import _accel
from maxclass.combinatorics import t_table

CASES = [(4, 2, 5), (4, 3, 3), (3, 5, 3), (5, 2, 3), (4, 5, 2)]


def best_of(fn, repeat):
    best, out = float('inf'), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument('--repeat', type=int, default=3)
    args = ap.parse_args()
    if _accel.numba is None:
        raise SystemExit('numba is not installed; nothing to compare')
    print(f'{"case":>10}  {"kernel":>13}  {"rows":>7}  {"numpy s":>9}  {"numba s":>9}  {"speedup":>7}')
    for n, p, N in CASES:
        T = t_table(n, p ** N, p ** (N + n))
        q = p ** N
        # warm the jit (and its on-disk cache) outside the timed region
        E0, _ = _accel._enumerate_numba(n, p, N, T, 0, 1)
        _accel._periods_numba(E0, n, p, N, T)
        _accel._orbit_minimal_numba(E0, n, p, N, T)
        E = _accel._enumerate_numpy(n, p, N, T, 0, q)
        kernels = [
            ('enumerate', lambda: _accel._enumerate_numpy(n, p, N, T, 0, q),
             lambda: _accel._enumerate_numba(n, p, N, T, 0, q)[0]),
            ('periods', lambda: _accel._periods_numpy(E, n, p, N, T),
             lambda: _accel._periods_numba(E, n, p, N, T)),
            ('orbit_minimal', lambda: _accel._orbit_minimal_numpy(E, n, p, N, T),
             lambda: _accel._orbit_minimal_numba(E, n, p, N, T)),
        ]
        for name, f_np, f_nb in kernels:
            t_np, r_np = best_of(f_np, args.repeat)
            t_nb, r_nb = best_of(f_nb, args.repeat)
            np.testing.assert_array_equal(np.asarray(r_np), np.asarray(r_nb))
            print(f'{str((n, p, N)):>10}  {name:>13}  {len(E):>7}  {t_np:9.4f}  {t_nb:9.4f}  {t_np / t_nb:7.1f}')


if __name__ == '__main__':
    main()
