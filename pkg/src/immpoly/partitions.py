"""Integer partitions, symmetric-group characters and Littlewood-Richardson coefficients.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the unique partition of 0.  All arithmetic is exact.

Canonical order
---------------
:func:`enumerate_partitions` lists partitions in reverse lexicographic order,
``(n), (n-1, 1), (n-2, 2), (n-2, 1, 1), ...``.  Every report in the package
that is indexed by partitions uses this order.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial, prod
from typing import Dict, Iterable, List, Sequence, Tuple

Partition = Tuple[int, ...]

__all__ = [
    "Partition",
    "as_partition",
    "is_partition",
    "weight",
    "enumerate_partitions",
    "hooks",
    "hook",
    "to_counts",
    "from_counts",
    "class_size",
    "pad",
    "remove_rim_hooks",
    "character",
    "clear_character_cache",
    "dimension",
    "binom",
    "hook_character_identity",
    "hook_character_lcycle",
    "hook_character_involution",
    "hook_character_32",
    "littlewood_richardson",
]


def is_partition(parts: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple.

    Raises ValueError if the sequence is not weakly decreasing positive.
    """
    t = tuple(int(p) for p in parts)
    if not is_partition(t):
        raise ValueError(f"not a partition: {t!r}")
    return t


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out: List[Partition] = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def hook(n: int, k: int) -> Partition:
    """The hook shape ``(k, 1^(n-k))``."""
    if not 1 <= k <= n:
        raise ValueError(f"hook arm k={k} outside [1, {n}]")
    return (k,) + (1,) * (n - k)


def hooks(n: int) -> List[Partition]:
    return [hook(n, k) for k in range(n, 0, -1)]


def to_counts(mu: Sequence[int]) -> Dict[int, int]:
    """Cycle-type multiplicities ``{l: t_l}`` of a partition."""
    return dict(sorted(Counter(mu).items()))


def from_counts(counts: Dict[int, int]) -> Partition:
    parts: List[int] = []
    for l, t in counts.items():
        if l < 1 or t < 0:
            raise ValueError(f"bad multiplicity {l}^{t}")
        parts.extend([l] * t)
    return tuple(sorted(parts, reverse=True))


def class_size(mu: Sequence[int]) -> int:
    """Number of permutations of cycle type ``mu`` in S_|mu|."""
    n = sum(mu)
    return factorial(n) // prod(l**t * factorial(t) for l, t in to_counts(mu).items())


def pad(mu: Sequence[int], n: int) -> Partition:
    """Extend ``mu`` with 1-parts up to weight ``n``."""
    w = sum(mu)
    if w > n:
        raise ValueError(f"cannot pad weight {w} to {n}")
    return tuple(sorted(mu, reverse=True)) + (1,) * (n - w)


def remove_rim_hooks(lam: Sequence[int], length: int) -> List[Tuple[Partition, int]]:
    """Every ``(lam minus rim hook, height)`` for rim hooks of the given length.

    Works on beta-numbers: a rim hook of length ``l`` is a bead moved from
    position ``b`` to the empty position ``b - l``; its height is the number
    of beads jumped over.  Results are sorted in canonical partition order.
    """
    if length < 1:
        raise ValueError("rim hook length must be positive")
    lam = tuple(lam)
    m = len(lam)
    beads = [lam[i] + (m - 1 - i) for i in range(m)]
    occupied = set(beads)
    out: List[Tuple[Partition, int]] = []
    for b in beads:
        target = b - length
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        new = sorted((c if c != b else target for c in beads), reverse=True)
        shape = tuple(p for p in (new[i] - (m - 1 - i) for i in range(m)) if p > 0)
        out.append((shape, height))
    out.sort(reverse=True)
    return out


@lru_cache(maxsize=None)
def _character(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    first, rest = mu[0], mu[1:]
    total = 0
    for shape, height in remove_rim_hooks(lam, first):
        total += (-1) ** height * _character(shape, rest)
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Irreducible character value chi_lam on the class of cycle type ``mu``.

    Murnaghan-Nakayama recursion on the largest part of ``mu``, memoized.
    ``mu`` need not be sorted; it is normalized first.
    """
    lam = as_partition(lam)
    mu = tuple(sorted((int(p) for p in mu), reverse=True))
    as_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}|={sum(lam)} vs |{mu}|={sum(mu)}")
    return _character(lam, mu)


def clear_character_cache() -> None:
    _character.cache_clear()


def dimension(lam: Sequence[int]) -> int:
    """chi_lam(identity), via the hook length formula."""
    lam = as_partition(lam)
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hook_prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hook_prod *= row - j + conj[j] - i - 1
    return factorial(n) // hook_prod


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero for ``b < 0`` or ``b > a`` (requires ``a >= 0``)."""
    if a < 0:
        raise ValueError("negative upper index")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def hook_character_identity(n: int, k: int) -> int:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    return binom(n - 1, k - 1)


def hook_character_lcycle(n: int, k: int, l: int) -> int:
    """chi_(k,1^(n-k)) on an ``l``-cycle (cycle type ``(l, 1^(n-l))``)."""
    if not 2 <= l <= n:
        raise ValueError(f"cycle length l={l} outside [2, {n}]")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    a = n - l - 1
    if a < 0:
        return character(hook(n, k), pad((l,), n))
    return binom(a, k - l - 1) + (-1) ** (l - 1) * binom(a, k - 1)


def hook_character_involution(n: int, k: int, i: int) -> int:
    """chi_(k,1^(n-k)) on the class ``(2^i, 1^(n-2i))``."""
    if i < 1 or 2 * i > n:
        raise ValueError(f"involution index i={i} invalid for n={n}")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    a = n - 2 * i - 1
    if a < 0:
        return character(hook(n, k), pad((2,) * i, n))
    return sum((-1) ** j * binom(a, n - k - 2 * j) * comb(i, j) for j in range(i + 1))


def hook_character_32(n: int, k: int) -> int:
    """chi_(k,1^(n-k)) on the class ``(3, 2, 1^(n-5))``."""
    if n < 5:
        raise ValueError("class (3,2,1^(n-5)) needs n >= 5")
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside [1, {n}]")
    if n == 5:
        return character(hook(n, k), (3, 2))
    a = n - 6
    return binom(a, k - 6) - binom(a, k - 4) + binom(a, k - 3) - binom(a, k - 1)


def littlewood_richardson(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^lam_{mu,nu}: the number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(mu) + sum(nu) != sum(lam):
        raise ValueError("weight mismatch: |mu| + |nu| != |lam|")
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    if not nu:
        return 1
    # reading order: rows top to bottom, each row right to left
    cells = [
        (i, j)
        for i in range(len(lam))
        for j in range(lam[i] - 1, (mu[i] if i < len(mu) else 0) - 1, -1)
    ]
    filling: Dict[Tuple[int, int], int] = {}
    count = [0] * (len(nu) + 1)

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = len(nu)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((i - 1, j))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if count[v] >= nu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            count[v] += 1
            filling[(i, j)] = v
            total += place(idx + 1)
            del filling[(i, j)]
            count[v] -= 1
        return total

    return place(0)
