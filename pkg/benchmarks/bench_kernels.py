"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 0]
"""

import argparse
import itertools
import random
import timeit

from contractad_lab import _backend
from contractad_lab.graph import path, random_connected_graph


def cases(seed):
    rng = random.Random(seed)
    g14 = random_connected_graph(14, rng, 0.5)
    g10 = random_connected_graph(10, rng, 0.4)
    g8 = random_connected_graph(8, rng, 0.4)
    g7 = random_connected_graph(7, rng, 0.4)
    perms7 = list(itertools.permutations(range(7)))
    p12 = path(12)
    return [
        ("hp_count n=14", lambda k: k.hp_count(g14.n, g14.adj)),
        ("hc_count n=14", lambda k: k.hc_count(g14.n, g14.adj)),
        ("planeq_count path n=12", lambda k: k.planeq_count(p12.n, p12.adj)),
        ("planeq_count n=10", lambda k: k.planeq_count(g10.n, g10.adj)),
        ("planeq_filter_count n=8", lambda k: k.planeq_filter_count(g8.n, g8.adj)),
        ("cyceq_count n=8", lambda k: k.cyceq_count(g8.n, g8.adj)),
        ("is_planeq x 5040, n=7", lambda k: sum(k.is_planeq(7, g7.adj, s) for s in perms7)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    backends = _backend.available()
    names = sorted(backends)
    print(f"{'case':28s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases(args.seed):
        results = {}
        times = {}
        for n in names:
            k = backends[n]
            results[n] = fn(k)
            times[n] = min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
        if len(set(results.values())) != 1:
            raise SystemExit(f"backends disagree on {label}: {results}")
        row = f"{label:28s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
