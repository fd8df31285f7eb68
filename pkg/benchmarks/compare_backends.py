"""Compare the compiled and pure-Python strip kernels on smoothed L2 covers.

    python benchmarks/compare_backends.py --sizes 100000,200000,1000000 --repeats 3
"""

import argparse

from udc import kernels
from udc.bench import compare_backends
from udc.geometry import Norm


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100000,200000,400000,1000000")
    ap.add_argument("--algo", default="smooth", choices=["single", "smooth", "linf"])
    ap.add_argument("--norm", default="l2")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    norm = Norm.parse(args.norm)
    rows = compare_backends(sizes, args.algo, norm, args.repeats, args.seed)
    print(f"default backend: {kernels.BACKEND}; available: {', '.join(sorted(kernels.BACKENDS))}")
    print(f"{'n':>9} {'backend':>8} {'median s':>10} {'disks':>8}")
    times = {}
    for n, name, secs, count in rows:
        times[n, name] = secs
        print(f"{n:>9} {name:>8} {secs:>10.4f} {count:>8}")
    if "cython" in kernels.BACKENDS:
        for n in sizes:
            print(f"speedup at n={n}: {times[n, 'python'] / times[n, 'cython']:.2f}x")


if __name__ == "__main__":
    main()
