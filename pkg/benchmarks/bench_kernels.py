"""Compare the compiled and pure-Python kernels on the library's hot paths.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import statistics
import time
from contextlib import contextmanager

import spgen.genverify
import spgen.linalg
from spgen import _kernels_py
from spgen.completion import complete_nilpotent
from spgen.constructions import example1_pair, lemma3_T
from spgen.genverify import bracket_closure, consistent_check
from spgen.sp_lie import make_context, random_nilpotent

try:
    from spgen import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


@contextmanager
def use_kernels(module):
    saved = spgen.linalg.kernels, spgen.genverify.kernels
    spgen.linalg.kernels = spgen.genverify.kernels = module
    try:
        yield
    finally:
        spgen.linalg.kernels, spgen.genverify.kernels = saved


def closure_sl8():
    p = example1_pair(4)
    assert bracket_closure([p.x, p.y]).dimension == 36


def consistent_n4():
    assert consistent_check(make_context(4), lemma3_T(4))


def completion_sp6():
    ctx = make_context(3)
    rng = random.Random(0)
    for _ in range(5):
        complete_nilpotent(ctx, random_nilpotent(ctx, rng), rng.getrandbits(32), 200)


WORKLOADS = [
    ("bracket closure, n=4 in gl_8", closure_sl8),
    ("consistent_check(T), n=4", consistent_n4),
    ("5 completions in sp_6", completion_sp6),
]


def timed(fn, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - start)
    return statistics.median(runs)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("cython", _kernels_c))
    else:
        print("compiled extension not built; timing pure Python only")

    print(f"{'workload':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "   speedup")
    for label, fn in WORKLOADS:
        times = []
        for _, module in backends:
            with use_kernels(module):
                fn()  # warm caches
                times.append(timed(fn, args.repeat))
        row = f"{label:32s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:.2f}x"
        print(row)


if __name__ == "__main__":
    main()
