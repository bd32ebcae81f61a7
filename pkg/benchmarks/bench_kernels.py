"""Time the compiled state-sum kernel against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--crossings 12] [--repeat 3]
"""

from __future__ import annotations

import argparse
import timeit

from skeincalc import kernels, random_tangle
from skeincalc.kauffman import _index, as_kauffman


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--crossings", type=int, default=12)
    ap.add_argument("--diagrams", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    inputs = []
    seed = 0
    while len(inputs) < args.diagrams:
        d = random_tangle(strands=4, rows=40, seed=seed, max_crossings=args.crossings, crossing_density=0.6)
        seed += 1
        if len(d.crossings()) == args.crossings:
            inputs.append(_index(as_kauffman(d)))

    backends = {"python": kernels.state_sum_py}
    if kernels.state_sum_compiled is not None:
        backends["cython"] = kernels.state_sum_compiled
    times = {}
    for name, fn in backends.items():
        t = min(timeit.repeat(lambda: [fn(*x) for x in inputs], number=1, repeat=args.repeat))
        times[name] = t
        print(f"{name:>7}: {t / len(inputs) * 1e3:9.2f} ms per diagram ({args.crossings} crossings)")
    if "cython" in times:
        print(f"speedup: {times['python'] / times['cython']:.1f}x")
        assert all(kernels.state_sum_py(*x) == kernels.state_sum_compiled(*x) for x in inputs)
    else:
        print("compiled kernel not available; run `pip install -e . --no-build-isolation`")


if __name__ == "__main__":
    main()
