"""Time the compiled traversal kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py --sizes 200 1000 5000 --repeat 5
"""
import argparse
import random
import timeit

from coarse_ep import generators as gg
from coarse_ep import kernels
from coarse_ep.eardecomp import build_maximal
from coarse_ep.packing import induced_pack_or_hit


def workloads(n: int, seed: int):
    rng = random.Random(seed)
    sparse = gg.gnp(n, 2.5 / n, rng)
    girthy = gg.random_girth_graph(n, n + n // 10, 6, rng)
    cubic = gg.random_cubic(n + n % 2, rng)
    small = gg.random_girth_graph(min(n, 300), min(n, 300) + 20, 5, rng)
    return {
        "bfs": lambda: kernels.bfs(sparse, [0]),
        "girth": lambda: kernels.girth_cycle(girthy),
        "cycle_through": lambda: kernels.cycle_through(cubic, 0),
        "build_maximal": lambda: build_maximal(small),
        "pack_or_hit k=3": lambda: induced_pack_or_hit(small, 3),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[200, 1000, 4000])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available")
    print(f"{'workload':<18}{'n':>7}" + "".join(f"{b + ' ms':>14}" for b in backends) + f"{'speedup':>10}")
    for n in args.sizes:
        for name, fn in workloads(n, args.seed).items():
            times = {}
            for b in backends:
                with kernels.use_backend(b):
                    fn()  # warm the csr cache
                    times[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1000
            row = f"{name:<18}{n:>7}" + "".join(f"{times[b]:>14.2f}" for b in backends)
            if len(times) == 2:
                row += f"{times['python'] / max(times['cython'], 1e-9):>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
