"""Compare the pure-Python and compiled kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload runs once per backend with the kernels swapped in place, and
the results are checked for equality before timings are reported.
"""

import argparse
import random
import time
from contextlib import contextmanager

from coverideals import catalog, kernels
from coverideals.invariants import _dual_of_power

OPS = ("minimalize", "multiply", "intersect", "contains", "colon", "intersect_irreducible")


@contextmanager
def backend(module):
    saved = {op: getattr(kernels, op) for op in OPS}
    for op in OPS:
        setattr(kernels, op, getattr(module, op))
    _dual_of_power.cache_clear()
    try:
        yield
    finally:
        for op, fn in saved.items():
            setattr(kernels, op, fn)
        _dual_of_power.cache_clear()


def random_rows(seed, count, n, top):
    rng = random.Random(seed)
    return [tuple(rng.randint(0, top) for _ in range(n)) for _ in range(count)]


def workloads():
    rows = random_rows(1, 20000, 8, 6)
    yield "minimalize 20000 rows, n=8", lambda: kernels.minimalize(rows)
    for name, G, s in [("C7", catalog.cycle(7), 4), ("antihole C7", catalog.antihole(7), 4),
                       ("K6", catalog.complete(6), 6), ("six-vertex example", catalog.six_vertex_example(), 4)]:
        yield f"dual of J^{s}, {name}", lambda G=G, s=s: _dual_of_power(G, s).components


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        _dual_of_power.cache_clear()
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args()
    if kernels.compiled_backend is None:
        raise SystemExit("compiled backend not built; run `pip install -e . --no-build-isolation`")
    print(f"{'workload':38} {'python':>9} {'cython':>9} {'speedup':>8}")
    for label, fn in workloads():
        with backend(kernels.python_backend):
            t_py, r_py = best_of(fn, args.repeat)
        with backend(kernels.compiled_backend):
            t_c, r_c = best_of(fn, args.repeat)
        if list(r_py) != list(r_c):
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:38} {t_py:8.3f}s {t_c:8.3f}s {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
