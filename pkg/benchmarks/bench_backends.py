"""Benchmark the enumeration kernels: pure Python vs compiled extension.

Runs the three scan entry points at increasing cylinder word lengths and
prints wall times plus the speedup.  Both backends compute identical exact
results; the comparison below asserts that on the smallest length.

Usage: python benchmarks/bench_backends.py [--lengths 10 11 12] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from f4cantor.kernels import available_backends


def time_call(fn, *args, repeat: int = 1) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--lengths", type=int, nargs="+", default=[10, 11, 12])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; timing pure backend only")
    pure = backends["pure"]
    fast = backends.get("compiled")

    if fast is not None:
        small = min(args.lengths)
        assert pure.scan_cylinders(small) == fast.scan_cylinders(small)
        assert pure.containment_scan(small) == fast.containment_scan(small)

    header = f"{'scan':<16}{'len':>4}{'cylinders':>11}{'pure s':>10}"
    if fast is not None:
        header += f"{'compiled s':>12}{'speedup':>9}"
    print(header)
    for length in args.lengths:
        for name in ("scan_cylinders", "scan_nested", "containment_scan"):
            count = pure.scan_cylinders(length)["count"]
            tp = time_call(getattr(pure, name), length, repeat=args.repeat)
            row = f"{name:<16}{length:>4}{count:>11}{tp:>10.3f}"
            if fast is not None:
                tf = time_call(getattr(fast, name), length, repeat=args.repeat)
                row += f"{tf:>12.4f}{tp / tf:>8.1f}x"
            print(row)


if __name__ == "__main__":
    main()
