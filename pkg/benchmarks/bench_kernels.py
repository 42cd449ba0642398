"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--bmax 1000] [--oracle-bmax 25]

Prints wall time per backend and the speed-up; also checks that both
backends return identical results on the benchmarked range.
"""
import argparse
import sys
import time

from apollonian import kernels
from apollonian.enumeration import default_search_bound


def _time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bmax", type=int, default=1000, help="solve_params_raw over B = 1..bmax")
    ap.add_argument("--oracle-bmax", type=int, default=25, help="oracle_completions over B = 1..N")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the python backend is available", file=sys.stderr)

    cases = {
        f"solve_params_raw B<={args.bmax}":
            lambda: [kernels.solve_params_raw(B) for B in range(1, args.bmax + 1)],
        f"oracle_completions B<={args.oracle_bmax}":
            lambda: [kernels.oracle_completions(B, default_search_bound(B)) for B in range(1, args.oracle_bmax + 1)],
    }
    previous = kernels.BACKEND
    try:
        for name, fn in cases.items():
            timings, results = {}, {}
            for be in backends:
                kernels.set_backend(be)
                timings[be], results[be] = _time(fn, args.repeat)
            line = "  ".join(f"{be}={timings[be]:.4f}s" for be in backends)
            if len(backends) == 2:
                line += f"  speedup={timings['python'] / timings['cython']:.1f}x"
                if results["python"] != results["cython"]:
                    print(f"{name}: backends disagree", file=sys.stderr)
                    return 1
            print(f"{name}: {line}")
    finally:
        kernels.set_backend(previous)
    return 0


if __name__ == "__main__":
    sys.exit(main())
