"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from lcc_alpha import _kernels
from lcc_alpha.oracle import PRIMES


def _best(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not installed; nothing to compare")

    rng = np.random.default_rng(0)
    p = PRIMES[0]
    cases = []
    for n in (20, 60, 120):
        a = rng.integers(0, p, size=(n, n), dtype=np.int64)
        cases.append((f"rank_mod_p {n}x{n}",
                      lambda a=a: _kernels.rank_mod_p_numba(a, p),
                      lambda a=a: _kernels.rank_mod_p_numpy(a, p)))
    for ell, t in ((10, 10), (50, 50), (200, 200)):
        cases.append((f"phi_table ell={ell} t={t}",
                      lambda ell=ell, t=t: _kernels.phi_table_numba(ell, t),
                      lambda ell=ell, t=t: _kernels.phi_table_numpy(ell, t)))

    print(f"{'kernel':<28}{'numba (ms)':>12}{'numpy (ms)':>12}{'speedup':>10}")
    for name, fast, slow in cases:
        fast()  # compile outside the timing
        assert np.array_equal(np.asarray(fast()), np.asarray(slow()))
        number = 3
        tf = _best(fast, args.repeat, number) * 1e3
        ts = _best(slow, args.repeat, number) * 1e3
        print(f"{name:<28}{tf:>12.3f}{ts:>12.3f}{ts / tf:>9.1f}x")


if __name__ == "__main__":
    main()
