"""Acceptance criteria 1-9, exact arithmetic throughout.

Each test prints a pass/fail line; the pytest terminal summary repeats one
line per criterion.  Also runnable directly: ``python3 tests/test_acceptance.py``.
"""

import time
from fractions import Fraction

import pytest

from immpoly import verify

try:
    from conftest import record_acceptance
except ImportError:  # run as a script from elsewhere
    def record_acceptance(*args):
        pass


def _report(criterion, part, res, elapsed, limit=None):
    ok = res.passed and (limit is None or elapsed < limit)
    detail = f"{res.checks} checks, {res.failure_count} failures, {elapsed:.1f}s"
    if limit is not None:
        detail += f" (limit {limit}s)"
    if res.failures:
        detail += f", first witness {res.failures[0]}"
    record_acceptance(criterion, part, ok, detail[:400])
    print(f"criterion {criterion} [{part}]: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def _timed(fn, **kwargs):
    t = time.perf_counter()
    res = fn(**kwargs)
    return res, time.perf_counter() - t


def test_criterion_1_characters():
    res, dt = _timed(verify.suite_characters, max_n=7, closed_max_n=9)
    assert _report(1, "orthogonality + hook closed forms", res, dt, limit=10)


def test_criterion_2_determinant_permanent():
    res, dt = _timed(verify.suite_specializations, max_n=7, count=200)
    assert res.checks == 400
    assert _report(2, "det/per on 200 rational matrices", res, dt, limit=60)


def test_criterion_3_oracle_pair():
    res, dt = _timed(verify.suite_oracle_pair, max_n=6)
    assert _report(3, "subset expansion vs interpolation", res, dt, limit=15 * 60)


def test_criterion_4_hook_closed_forms():
    res, dt = _timed(verify.suite_hook_closed_forms, max_n=6, include_7=True,
                     settings=((1, -1), (1, 1), (0, 1), (2, 3)))
    n7 = res.extra["graphs"] - sum(1 for _ in verify.atlas_graphs(6, connected=True))
    assert n7 >= 500
    assert _report(4, f"closed forms, n<=6 + {n7} graphs at n=7, deviations file", res, dt)


def test_criterion_5_special_forms():
    res, dt = _timed(verify.suite_special_forms, max_n=7)
    assert _report(5, "second-immanant and permanental forms", res, dt)


def test_criterion_6_bounds():
    res, dt = _timed(verify.suite_bounds, general_max_n=6, tree_max_n=8, bipartite_max_n=7,
                     settings=((1, 1), (1, -1), (2, -1)))
    assert _report(6, f"sandwiches {res.extra['graphs']}", res, dt, limit=20 * 60)


def test_criterion_7_orientation_formula():
    res, dt = _timed(verify.suite_orientation_formula, max_n=5,
                     settings=((1, -1), (1, 1), (2, 3), (Fraction(1, 2), Fraction(1, 2))))
    assert _report(7, "orientation census formula", res, dt)


def test_criterion_8_zero_block():
    res, dt = _timed(verify.suite_zero_block, max_n=6, count=100)
    assert _report(8, "zero block", res, dt)


def test_criterion_8_laplace():
    res, dt = _timed(verify.suite_laplace, max_n=6, max_rows=3, samples=3)
    assert _report(8, "row-set expansion", res, dt)


def test_criterion_8_star_degree():
    res, dt = _timed(verify.suite_star_degree, max_n=7,
                     settings=((1, -1), (1, 1), (Fraction(1, 2), Fraction(1, 2)), (3, 2)))
    assert _report(8, "star degree", res, dt)


def test_criterion_9_regular_pairs():
    res, dt = _timed(verify.suite_regular_equivalence, orders=(6, 8), ks=(2, 3),
                     settings=((1, -1), (1, 1)))
    # 1 pair on 6 vertices, 10 on 8, two k values, two settings
    assert res.checks == (1 + 10) * 2 * 2
    assert _report(9, "cubic pairs on 6 and 8 vertices", res, dt)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
