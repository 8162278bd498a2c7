"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one line per workload with the best-of-N time for each backend and
the speedup; results must agree exactly or the script exits nonzero.
"""

import argparse
import sys
import time

from tabtype import _core
from tabtype.bridge import exchanged
from tabtype.diagrams import Diagram
from tabtype.permutations import type_of_permutation
from tabtype.tableaux import balanced_type


def workloads():
    yield ("count, staircase type of S_8 (28 boxes)", "count_fillings",
           type_of_permutation(tuple(range(8, 0, -1))), ())
    yield "count, balanced (6,5,4,3)", "count_fillings", balanced_type(Diagram.ferrers((6, 5, 4, 3))), ()
    yield "count, balanced (5,5,5,5)", "count_fillings", balanced_type(Diagram.ferrers((5, 5, 5, 5))), ()
    yield ("semistandard terms, m=3, exchanged type of 351426", "sst_terms",
           exchanged((3, 5, 1, 4, 2, 6)).result, (3,))
    yield ("semistandard terms, m=4, balanced (3,2,1)", "sst_terms",
           balanced_type(Diagram.ferrers((3, 2, 1))), (4,))
    yield ("semistandard terms, m=3, balanced (3,3,2)", "sst_terms",
           balanced_type(Diagram.ferrers((3, 3, 2))), (3,))


def run(kernels, name, t, extra):
    p = t.packed()
    if name == "count_fillings":
        return kernels.count_fillings(p.theta, p.hook, p.over)
    return kernels.sst_terms(p.theta, p.hook, p.over, p.cols, *extra)


def best(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    compiled = _core.compiled_kernels()
    if compiled is None:
        print("compiled kernels are not built; nothing to compare")
        return 1
    python = _core.python_kernels()
    print(f"{'workload':48} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for label, name, t, extra in workloads():
        tc, a = best(lambda: run(compiled, name, t, extra), args.repeat)
        tp, b = best(lambda: run(python, name, t, extra), args.repeat)
        if a != b:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        print(f"{label:48} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
