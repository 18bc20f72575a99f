"""Time the compiled and pure-Python class-sum kernels on graph matrices.

    python3 benchmarks/bench_kernel.py --max-n 9 --repeat 3
"""

import argparse
import time

from immpoly import kernel
from immpoly.graphs import build_family, graph_matrix


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--family", default="complete")
    args = ap.parse_args(argv)
    backends = kernel.available_backends()
    if "cython" not in backends:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'n':>3} {'mode':>8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in range(args.min_n, args.max_n + 1):
        _, rows = graph_matrix(build_family(args.family, n), "L").integer_rows()
        for partial in (False, True):
            results = {b: best_of(lambda: kernel.class_sums(rows, partial, backend=b), args.repeat)
                       for b in backends}
            outs = {b: r[1] for b, r in results.items()}
            assert len({tuple(sorted(o.items())) for o in outs.values()}) == 1, "backends disagree"
            line = f"{n:>3} {'partial' if partial else 'full':>8} "
            line += " ".join(f"{results[b][0]:>9.4f}s" for b in backends)
            if len(backends) == 2:
                line += f"   {results['python'][0] / max(results['cython'][0], 1e-9):7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
