"""Pure-Python cycle-type class sums (fallback for the compiled kernel)."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

Partition = Tuple[int, ...]


def class_sums(rows: Sequence[Sequence[int]], partial: bool) -> Dict[Partition, int]:
    """Sum of entry products over (partial) permutations, keyed by cycle type.

    With ``partial=False`` this enumerates every permutation sigma of
    ``0..n-1`` and adds ``prod_i a[i][sigma(i)]`` to the bucket of its cycle
    type.  With ``partial=True`` it enumerates pairs ``(I, sigma)`` with
    ``sigma`` a permutation of the subset ``I`` (identity elsewhere), adds
    ``prod_{i in I} a[i][sigma(i)]`` under the cycle type of ``sigma``
    restricted to ``I``.  Zero-product branches are pruned.
    """
    n = len(rows)
    nonzero = [[j for j in range(n) if rows[i][j] != 0] for i in range(n)]
    sigma = [-1] * n
    in_sub = [False] * n
    col_used = [False] * n
    sums: Dict[Partition, int] = {}

    def leaf(prod: int) -> None:
        seen = [False] * n
        lengths: List[int] = []
        for v in range(n):
            if in_sub[v] and not seen[v]:
                length = 0
                w = v
                while not seen[w]:
                    seen[w] = True
                    w = sigma[w]
                    length += 1
                lengths.append(length)
        lengths.sort(reverse=True)
        key = tuple(lengths)
        sums[key] = sums.get(key, 0) + prod

    def dfs(i: int, prod: int) -> None:
        if i == n:
            leaf(prod)
            return
        if partial and not col_used[i]:
            col_used[i] = True
            sigma[i] = i
            in_sub[i] = False
            dfs(i + 1, prod)
            col_used[i] = False
        in_sub[i] = True
        row = rows[i]
        for j in nonzero[i]:
            if not col_used[j]:
                col_used[j] = True
                sigma[i] = j
                dfs(i + 1, prod * row[j])
                col_used[j] = False
        in_sub[i] = False

    dfs(0, 1)
    return {k: v for k, v in sums.items() if v != 0}
