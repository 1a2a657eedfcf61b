"""Time the compiled and numpy kernel backends on representative workloads.

Run: ``python3 benchmarks/bench_kernels.py [--repeat R]``
"""

import argparse
import timeit

import numpy as np

from analog_ofdm._backend import available_backends


def workloads(rng):
    def crandn(n):
        return rng.standard_normal(n) + 1j * rng.standard_normal(n)

    x256 = crandn(256)
    b = crandn(64 * 64 + 1)
    sparse = np.zeros(74 * 64 * 64, complex)
    sparse[::64] = crandn(74 * 64)  # zero-stuffed, as in the physical chain
    w, t_in, t_out = crandn(64), rng.uniform(0, 6.4e-8, 64), rng.uniform(3.2e-8, 9.6e-8, 4096)
    return {
        "dft_direct N=256": lambda k: k.dft_direct(x256, -1),
        "linear_convolve zero-stuffed 300k x 4k": lambda k: k.linear_convolve(sparse, b),
        "circular_convolve N=256 L=64": lambda k: k.circular_convolve(x256, x256[:64]),
        "chirp_sum 64 in x 4096 out": lambda k: k.chirp_sum(w, t_in, t_out, -6.4e-8, 1.0186e-17),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    backends = available_backends()
    rng = np.random.default_rng(0)
    jobs = workloads(rng)
    names = sorted(backends)
    print(f"{'workload':<42}" + "".join(f"{n:>12}" for n in names) + (f"{'speedup':>10}" if len(names) > 1 else ""))
    for label, job in jobs.items():
        times = {}
        for name in names:
            k = backends[name]
            job(k)  # warm up
            times[name] = min(timeit.repeat(lambda: job(k), number=1, repeat=args.repeat))
        row = f"{label:<42}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
