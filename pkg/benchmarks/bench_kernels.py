"""Compare the compiled kernel against the pure-Python fallback.

Run as: python3 benchmarks/bench_kernels.py [--max-index N]
"""

import argparse
import importlib
import time


def load_kernels():
    kernels = {}
    kernels["pure"] = importlib.import_module("hclab._kernels.pure")
    try:
        kernels["compiled"] = importlib.import_module("hclab._kernels._speed")
    except ImportError:
        print("compiled kernel not available; benchmarking pure only")
    return kernels


def bench_bernoulli(mod, upto: int) -> float:
    nums, dens = [], []
    t0 = time.perf_counter()
    mod.bernoulli_extend(nums, dens, upto)
    return time.perf_counter() - t0


def bench_harmonic(mod, order: int, upto: int) -> float:
    t0 = time.perf_counter()
    mod.harmonic_sum(order, upto)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-index", type=int, default=800,
                        help="largest Bernoulli index to generate")
    args = parser.parse_args()

    kernels = load_kernels()
    results = {}
    for name, mod in kernels.items():
        b = bench_bernoulli(mod, args.max_index)
        h = bench_harmonic(mod, 3, 20000)
        results[name] = (b, h)
        print(f"{name:>8}: bernoulli_extend(0..{args.max_index}) {b:8.3f}s   "
              f"harmonic_sum(3, 20000) {h:8.3f}s")
    if len(results) == 2:
        for i, label in enumerate(("bernoulli_extend", "harmonic_sum")):
            ratio = results["pure"][i] / max(results["compiled"][i], 1e-9)
            print(f"{label}: compiled is {ratio:.2f}x the pure speed")


if __name__ == "__main__":
    main()
