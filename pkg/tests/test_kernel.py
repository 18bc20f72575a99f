from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from immpoly import kernel, _kernel_py

from test_partitions import _cycle_type

needs_compiled = pytest.mark.skipif("cython" not in kernel.available_backends(),
                                    reason="compiled kernel not built")

small_ints = st.integers(-4, 4)


@st.composite
def int_rows(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return [[draw(small_ints) for _ in range(n)] for _ in range(n)]


def brute_full(rows):
    n = len(rows)
    out = {}
    for p in permutations(range(n)):
        v = 1
        for i in range(n):
            v *= rows[i][p[i]]
        if v:
            t = _cycle_type(p)
            out[t] = out.get(t, 0) + v
    return {k: v for k, v in out.items() if v}


@given(int_rows(max_n=5))
def test_python_kernel_matches_brute_force(rows):
    assert _kernel_py.class_sums(rows, False) == brute_full(rows)


@needs_compiled
@given(int_rows(), st.booleans())
def test_backends_agree(rows, partial):
    assert kernel.class_sums(rows, partial, backend="cython") == kernel.class_sums(rows, partial, backend="python")


@needs_compiled
def test_overflow_falls_back_to_python():
    big = 10**12
    rows = [[big] * 4 for _ in range(4)]
    got = kernel.class_sums(rows, False, backend="cython")
    assert got == _kernel_py.class_sums(rows, False)
    assert sum(got.values()) == 24 * big**4


def test_partial_sums_of_identity():
    # c_r of the identity: every r-subset contributes the all-fixed type
    got = _kernel_py.class_sums([[1, 0, 0], [0, 1, 0], [0, 0, 1]], True)
    assert got == {(): 1, (1,): 3, (1, 1): 3, (1, 1, 1): 1}


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernel.class_sums([[1]], False, backend="fortran")


def test_environment_forces_python_backend():
    import os
    import subprocess
    import sys

    env = dict(os.environ, IMMPOLY_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from immpoly import kernel; print(kernel.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
