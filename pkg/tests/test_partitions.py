from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from immpoly.partitions import (
    as_partition,
    binom,
    character,
    class_size,
    dimension,
    enumerate_partitions,
    hook,
    hook_character_32,
    hook_character_identity,
    hook_character_involution,
    hook_character_lcycle,
    littlewood_richardson,
    pad,
    remove_rim_hooks,
)

from strategies import partitions_of


def brute_partitions(n, maxpart=None):
    maxpart = n if maxpart is None else maxpart
    if n == 0:
        return [()]
    return [(p,) + rest for p in range(min(n, maxpart), 0, -1) for rest in brute_partitions(n - p, p)]


def test_enumeration_examples():
    assert enumerate_partitions(0) == [()]
    assert len(enumerate_partitions(4)) == 5
    assert len(enumerate_partitions(9)) == 30


@pytest.mark.parametrize("n", range(10))
def test_enumeration_is_reverse_lex(n):
    assert enumerate_partitions(n) == sorted(brute_partitions(n), reverse=True)


def test_rim_hook_examples():
    assert remove_rim_hooks((1, 1), 2) == [((), 1)]
    assert remove_rim_hooks((2, 1), 3) == [((), 1)]
    assert remove_rim_hooks((3,), 4) == []
    # entries are (remaining shape, leg length)
    assert remove_rim_hooks((3, 2), 2) == [((3,), 0)]
    assert remove_rim_hooks((2, 2), 3) == [((1,), 1)]


def test_character_examples():
    assert character((1, 1, 1), (3,)) == 1
    assert character((2, 1, 1), (2, 1, 1)) == -1
    for mu in enumerate_partitions(5):
        assert character((5,), mu) == 1
    with pytest.raises(ValueError):
        character((2, 1), (2, 2))


@pytest.mark.parametrize("n", range(1, 10))
def test_sign_and_trivial_characters(n):
    for mu in enumerate_partitions(n):
        assert character((n,), mu) == 1
        assert character((1,) * n, mu) == (-1) ** (n - len(mu))


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    parts = enumerate_partitions(n)
    for mu in parts:
        for nu in parts:
            s = sum(character(lam, mu) * character(lam, nu) for lam in parts)
            assert s == (factorial(n) // class_size(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_dimension_is_identity_character(n):
    assert sum(dimension(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)
    for lam in enumerate_partitions(n):
        assert dimension(lam) == character(lam, (1,) * n)


def test_hook_fast_path_examples():
    assert hook_character_identity(5, 3) == 6
    assert hook_character_identity(1, 1) == 1
    assert hook_character_identity(7, 4) == character((4, 1, 1, 1), (1,) * 7)
    assert hook_character_lcycle(5, 2, 3) == 1
    assert hook_character_lcycle(4, 3, 2) == 1
    assert hook_character_lcycle(6, 2, 6) == character((2, 1, 1, 1, 1), (6,))
    assert hook_character_involution(5, 2, 1) == hook_character_lcycle(5, 2, 2)
    assert hook_character_involution(6, 3, 2) == character((3, 1, 1, 1), (2, 2, 1, 1))
    assert hook_character_involution(4, 2, 2) == -1
    assert hook_character_32(7, 1) == -1
    assert hook_character_32(8, 8) == 1
    assert hook_character_32(9, 4) == character((4, 1, 1, 1, 1, 1), (3, 2, 1, 1, 1, 1))


@pytest.mark.parametrize("n", range(2, 10))
def test_hook_fast_paths_match_recursion(n):
    for k in range(1, n + 1):
        lam = hook(n, k)
        assert hook_character_identity(n, k) == character(lam, (1,) * n)
        for l in range(2, n + 1):
            assert hook_character_lcycle(n, k, l) == character(lam, pad((l,), n))
        for i in range(1, n // 2 + 1):
            assert hook_character_involution(n, k, i) == character(lam, pad((2,) * i, n))
        if n >= 5:
            assert hook_character_32(n, k) == character(lam, pad((3, 2), n))


def test_binom_convention():
    assert binom(3, -1) == 0 and binom(3, 4) == 0 and binom(0, 0) == 1
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_littlewood_richardson_examples():
    assert littlewood_richardson((3, 1), (3, 1), ()) == 1
    assert littlewood_richardson((2, 1), (1,), (1, 1)) == 1
    assert littlewood_richardson((2, 2), (2,), (2,)) == 1
    assert littlewood_richardson((3, 2, 1), (2, 1), (2, 1)) == 2
    with pytest.raises(ValueError):
        littlewood_richardson((2, 2), (2,), (1,))


@pytest.mark.parametrize("n", range(1, 7))
def test_littlewood_richardson_symmetric_and_dimension_count(n):
    for r in range(n + 1):
        for mu in enumerate_partitions(r):
            for nu in enumerate_partitions(n - r):
                total = 0
                for lam in enumerate_partitions(n):
                    c = littlewood_richardson(lam, mu, nu)
                    assert c == littlewood_richardson(lam, nu, mu)
                    total += c * dimension(lam)
                # induced representation from S_r x S_(n-r)
                assert total == binom(n, r) * dimension(mu) * dimension(nu)


def _cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s not in seen:
            length, v = 0, s
            while v not in seen:
                seen.add(v)
                v = perm[v]
                length += 1
            out.append(length)
    return as_partition(sorted(out, reverse=True))


@pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (5, 2), (6, 3)])
def test_branching_on_direct_sums(n, r):
    types_r = {_cycle_type(p) for p in permutations(range(r))}
    types_s = {_cycle_type(p) for p in permutations(range(n - r))}
    for a in types_r:
        for b in types_s:
            joint = as_partition(sorted(a + b, reverse=True))
            for lam in enumerate_partitions(n):
                rhs = sum(
                    littlewood_richardson(lam, mu, nu) * character(mu, a) * character(nu, b)
                    for mu in enumerate_partitions(r)
                    for nu in enumerate_partitions(n - r)
                )
                assert character(lam, joint) == rhs


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(partitions_of(n), partitions_of(n))))
def test_character_is_integer_bounded_by_dimension(pair):
    lam, mu = pair
    v = character(lam, mu)
    assert isinstance(v, int)
    assert abs(v) <= dimension(lam)
