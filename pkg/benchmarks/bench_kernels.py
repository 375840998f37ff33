"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [-n 3] [-r 6]
"""

import argparse
import time

from fnforest import kernels
from fnforest.oracle import enumerate_ball


def timed(func):
    start = time.perf_counter()
    result = func()
    return time.perf_counter() - start, result


def run(n, radius, repeat):
    rows = []
    raws = None
    for backend in ("pure", "compiled"):
        if backend == "compiled" and kernels.compiled is None:
            print("compiled kernels not built; skipping")
            break
        kernels.use(backend)
        bfs = min(timed(lambda: enumerate_ball(n, radius))[0] for _ in range(repeat))
        if raws is None:
            raws = list(enumerate_ball(n, radius).distance)
        parts = kernels.length_parts
        formula = min(timed(lambda: [parts(n, *raw) for raw in raws])[0] for _ in range(repeat))
        rows.append((backend, bfs, formula))
    kernels.use("compiled" if kernels.compiled is not None else "pure")
    print(f"F({n}) radius {radius}: {len(raws)} elements, best of {repeat}")
    print(f"{'backend':10} {'ball (s)':>10} {'lengths (s)':>12}")
    for backend, bfs, formula in rows:
        print(f"{backend:10} {bfs:10.3f} {formula:12.3f}")
    if len(rows) == 2:
        print(f"{'speedup':10} {rows[0][1] / rows[1][1]:9.1f}x {rows[0][2] / rows[1][2]:11.1f}x")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("-n", type=int, default=3)
    parser.add_argument("-r", "--radius", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    run(args.n, args.radius, args.repeat)


if __name__ == "__main__":
    main()
