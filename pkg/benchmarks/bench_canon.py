"""Compare the compiled and pure-Python canonical-labeling kernels.

    python benchmarks/bench_canon.py --n 10 --repeat 3
"""
import argparse
import random
import statistics
import time

from findex import _canon_py, canon
from findex.catalog import all_trees

try:
    from findex import _canon_c
except ImportError:
    _canon_c = None


def closures(n):
    """Neighbor-mask lists of every tree-plus-one-edge graph on n vertices."""
    out = []
    for t in all_trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if not (t.masks[u] >> v) & 1:
                    m = list(t.masks)
                    m[u] |= 1 << v
                    m[v] |= 1 << u
                    out.append(m)
    return out


def shuffled(masks, rng):
    n = len(masks)
    perm = list(range(n))
    rng.shuffle(perm)
    out = [0] * n
    for v, m in enumerate(masks):
        x = 0
        for w in range(n):
            if (m >> w) & 1:
                x |= 1 << perm[w]
        out[perm[v]] = x
    return out


def timeit(kernel, inputs, n, repeat):
    runs = []
    certs = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        certs = [canon.certificate_from_masks(n, m, kernel) for m in inputs]
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), certs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    inputs = [shuffled(m, rng) for m in closures(args.n)]
    print(f"n={args.n}: {len(inputs)} unicyclic labelings, "
          f"{len({canon.certificate_from_masks(args.n, m) for m in inputs})} classes")

    t_py, c_py = timeit(_canon_py, inputs, args.n, args.repeat)
    print(f"python  {t_py * 1e3:9.1f} ms  {t_py / len(inputs) * 1e6:8.1f} us/graph")
    if _canon_c is None:
        print("cython  (extension not built)")
        return
    t_c, c_c = timeit(_canon_c, inputs, args.n, args.repeat)
    print(f"cython  {t_c * 1e3:9.1f} ms  {t_c / len(inputs) * 1e6:8.1f} us/graph")
    print(f"speedup {t_py / t_c:.1f}x, certificates agree: {c_py == c_c}")


if __name__ == "__main__":
    main()
