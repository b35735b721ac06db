"""Backend parity: the compiled kernels must agree with the pure fallback."""

import pytest

from pasep import _kernels_py, kernels

try:
    from pasep import _speedups
except ImportError:
    _speedups = None

needs_compiled = pytest.mark.skipif(
    _speedups is None, reason="compiled kernels not built"
)


def test_backend_identifies_itself():
    import os

    assert kernels.BACKEND in ("compiled", "python")
    forced_pure = os.environ.get("PASEP_PURE_PYTHON", "") not in ("", "0")
    if _speedups is not None and not forced_pure:
        assert kernels.BACKEND == "compiled"
    if forced_pure:
        assert kernels.BACKEND == "python"


@needs_compiled
@pytest.mark.parametrize("n", range(1, 7))
def test_permutation_tables_agree(n):
    assert _speedups.ascent_pattern_counts(n) == _kernels_py.ascent_pattern_counts(n)
    assert _speedups.wex_crossing_counts(n) == _kernels_py.wex_crossing_counts(n)
    assert _speedups.vincular_classical_joint(n) == _kernels_py.vincular_classical_joint(n)


@needs_compiled
@pytest.mark.parametrize("n", range(1, 6))
def test_matching_hist_agrees(n):
    assert _speedups.matching_crossing_hist(n) == _kernels_py.matching_crossing_hist(n)


@needs_compiled
@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("restricted", (False, True))
def test_signed_path_tables_agree(n, restricted):
    assert _speedups.signed_path_table(n, restricted) == _kernels_py.signed_path_table(
        n, restricted
    )


@needs_compiled
@pytest.mark.parametrize("n", range(0, 8))
def test_left_factor_counts_agree(n):
    assert _speedups.left_factor_counts(n) == _kernels_py.left_factor_counts(n)


def test_pure_fallback_forced_by_env(tmp_path):
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "import pasep; print(pasep.BACKEND)"],
        env={"PASEP_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_table_totals_are_factorials():
    import math

    for n in range(1, 7):
        total = sum(sum(row) for row in kernels.ascent_pattern_counts(n))
        assert total == math.factorial(n)
        total = sum(sum(row) for row in kernels.wex_crossing_counts(n))
        assert total == math.factorial(n)


def test_benchmark_smoke(capsys):
    from pasep import benchmark

    rc = benchmark.main([])
    out = capsys.readouterr().out
    assert rc == 0
    assert "kernel" in out and "pure (s)" in out
