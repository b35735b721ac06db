"""Benchmark the compiled enumeration kernels against the pure-Python fallback.

Run as ``python -m pasep.benchmark``.  Every kernel is executed on both
backends (when the compiled one is importable), outputs are compared for
equality, and wall times are reported.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import _kernels_py

try:
    from . import _speedups
except ImportError:
    _speedups = None


def _workloads(heavy: bool):
    perm_n = 9 if heavy else 8
    path_n = 9 if heavy else 8
    return [
        (f"ascent_pattern_counts({perm_n})", "ascent_pattern_counts", (perm_n,)),
        (f"wex_crossing_counts({perm_n})", "wex_crossing_counts", (perm_n,)),
        (
            f"vincular_classical_joint({perm_n})",
            "vincular_classical_joint",
            (perm_n,),
        ),
        ("matching_crossing_hist(6)", "matching_crossing_hist", (6,)),
        (f"signed_path_table({path_n}, False)", "signed_path_table", (path_n, False)),
        (f"signed_path_table({path_n + 1}, True)", "signed_path_table", (path_n + 1, True)),
        ("left_factor_counts(9)", "left_factor_counts", (9,)),
    ]


def _time_call(module, fn: str, args) -> tuple[float, object]:
    t0 = time.perf_counter()
    out = getattr(module, fn)(*args)
    return time.perf_counter() - t0, out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="python -m pasep.benchmark")
    parser.add_argument(
        "--heavy", action="store_true", help="use the largest supported sizes"
    )
    args = parser.parse_args(argv)

    if _speedups is None:
        print("compiled kernels not available; timing pure Python only")
    rows = []
    for label, fn, call_args in _workloads(args.heavy):
        t_py, out_py = _time_call(_kernels_py, fn, call_args)
        if _speedups is not None:
            t_c, out_c = _time_call(_speedups, fn, call_args)
            if out_c != out_py:
                print(f"MISMATCH in {label}: backends disagree", file=sys.stderr)
                return 1
            rows.append((label, t_py, t_c))
        else:
            rows.append((label, t_py, None))

    width = max(len(r[0]) for r in rows)
    header = f"{'kernel'.ljust(width)}  {'pure (s)':>10}  {'compiled (s)':>13}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, t_py, t_c in rows:
        if t_c is None:
            print(f"{label.ljust(width)}  {t_py:10.4f}  {'-':>13}  {'-':>8}")
        else:
            speedup = t_py / t_c if t_c > 0 else float("inf")
            print(
                f"{label.ljust(width)}  {t_py:10.4f}  {t_c:13.4f}  {speedup:7.1f}x"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
