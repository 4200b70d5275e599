"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Workloads are built from universal witness elements and random words in the
standard generators, so breakpoint counts and exponents are realistic.
"""
import argparse
import random
import time

from thompsonf import standard_generator
from thompsonf._backend import available_backends
from thompsonf.witness import universal_witness
from thompsonf.words import FreeWord, evaluate_word


def workload(seed=0):
    rng = random.Random(seed)
    elements, _ = universal_witness(2, 6)
    gens = [standard_generator(0), standard_generator(1)]
    pool = list(elements) + gens
    for _ in range(30):
        letters = [(rng.randint(0, 1), rng.choice((1, -1))) for _ in range(rng.randint(4, 16))]
        pool.append(evaluate_word(FreeWord(letters, 2), gens))
    pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(300)]
    points = []
    for _ in range(2000):
        e = rng.randint(0, 20)
        points.append((rng.randint(0, 2**e), e))
    chain = [(f._pts, f._slopes, rng.choice((1, -1))) for f in rng.choices(pool, k=40)]
    return pairs, points, chain


def bench(kernels, pairs, points, chain):
    timings = {}

    t = time.perf_counter()
    for f, g in pairs:
        kernels.compose(f._pts, f._slopes, g._pts, g._slopes)
    timings["compose"] = time.perf_counter() - t

    t = time.perf_counter()
    for f, _ in pairs[:50]:
        for n, e in points[:200]:
            kernels.evaluate(f._pts, f._slopes, n, e)
    timings["evaluate"] = time.perf_counter() - t

    t = time.perf_counter()
    for n, e in points:
        kernels.act(chain, n, e)
    timings["act"] = time.perf_counter() - t
    return timings


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    data = workload()
    backends = available_backends()
    best = {}
    for name, kernels in sorted(backends.items()):
        runs = [bench(kernels, *data) for _ in range(args.repeat)]
        best[name] = {op: min(r[op] for r in runs) for op in runs[0]}

    ops = list(next(iter(best.values())))
    print(f"{'op':<10}" + "".join(f"{name:>12}" for name in best) +
          ("     speedup" if len(best) > 1 else ""))
    for op in ops:
        row = f"{op:<10}" + "".join(f"{best[name][op] * 1e3:>10.2f}ms" for name in best)
        if "cython" in best:
            row += f"{best['python'][op] / best['cython'][op]:>11.2f}x"
        print(row)
    if "cython" not in best:
        print("compiled kernels not built; only the fallback was timed")
    return best


if __name__ == "__main__":
    main()
