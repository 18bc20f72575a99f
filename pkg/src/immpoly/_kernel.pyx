# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cycle-type class sums over int64 with overflow detection.

Same contract as ``_kernel_py.class_sums``.  Raises OverflowError when an
entry, product or bucket sum leaves the int64 range; the caller then falls
back to arbitrary-precision Python.
"""

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *res) nogil
    bint __builtin_add_overflow(long long a, long long b, long long *res) nogil

cdef enum:
    MAXN = 16
    MAXP = 1024

cdef struct State:
    int n
    bint partial
    long long a[MAXN][MAXN]
    int nz[MAXN][MAXN]
    int nnz[MAXN]
    int sigma[MAXN]
    bint in_sub[MAXN]
    bint col_used[MAXN]
    long long P[MAXN + 1][MAXN + 1]
    int offset[MAXN + 2]
    long long sums[MAXP]
    bint overflow


cdef void _leaf(State* s, long long prod) noexcept nogil:
    cdef bint seen[MAXN]
    cdef int lengths[MAXN]
    cdef int nl = 0, v, w, length, r = 0, i, j, tmp, rem, k, idx
    cdef long long rank = 0
    for v in range(s.n):
        seen[v] = False
    for v in range(s.n):
        if s.in_sub[v] and not seen[v]:
            length = 0
            w = v
            while not seen[w]:
                seen[w] = True
                w = s.sigma[w]
                length += 1
            lengths[nl] = length
            nl += 1
            r += length
    # insertion sort, descending
    for i in range(1, nl):
        tmp = lengths[i]
        j = i - 1
        while j >= 0 and lengths[j] < tmp:
            lengths[j + 1] = lengths[j]
            j -= 1
        lengths[j + 1] = tmp
    # rank in reverse-lexicographic order among partitions of r
    rem = r
    k = r
    for i in range(nl):
        rank += s.P[rem][k] - s.P[rem][lengths[i]]
        rem -= lengths[i]
        k = lengths[i]
    idx = s.offset[r] + <int>rank
    if __builtin_add_overflow(s.sums[idx], prod, &s.sums[idx]):
        s.overflow = True


cdef void _dfs(State* s, int i, long long prod) noexcept nogil:
    cdef int t, j
    cdef long long nxt
    if s.overflow:
        return
    if i == s.n:
        _leaf(s, prod)
        return
    if s.partial and not s.col_used[i]:
        s.col_used[i] = True
        s.sigma[i] = i
        s.in_sub[i] = False
        _dfs(s, i + 1, prod)
        s.col_used[i] = False
    s.in_sub[i] = True
    for t in range(s.nnz[i]):
        j = s.nz[i][t]
        if not s.col_used[j]:
            if __builtin_mul_overflow(prod, s.a[i][j], &nxt):
                s.overflow = True
                return
            s.col_used[j] = True
            s.sigma[i] = j
            _dfs(s, i + 1, nxt)
            s.col_used[j] = False
    s.in_sub[i] = False


def class_sums(rows, bint partial):
    """Cycle-type class sums of an integer matrix (see module docstring)."""
    from .partitions import enumerate_partitions

    cdef State s
    cdef int n = len(rows), i, j, w, k, total
    if n > MAXN:
        raise OverflowError("compiled kernel supports n <= 16")
    s.n = n
    s.partial = partial
    s.overflow = False
    for i in range(n):
        if len(rows[i]) != n:
            raise ValueError("matrix must be square")
        s.nnz[i] = 0
        s.col_used[i] = False
        s.in_sub[i] = False
        s.sigma[i] = -1
        for j in range(n):
            s.a[i][j] = rows[i][j]  # OverflowError for entries beyond int64
            if s.a[i][j] != 0:
                s.nz[i][s.nnz[i]] = j
                s.nnz[i] += 1
    for w in range(n + 1):
        for k in range(n + 1):
            if w == 0:
                s.P[w][k] = 1
            elif k == 0:
                s.P[w][k] = 0
            else:
                s.P[w][k] = s.P[w][k - 1] + (s.P[w - k][k] if w >= k else 0)
    total = 0
    for w in range(n + 1):
        s.offset[w] = total
        total += <int>s.P[w][w]
    for i in range(total):
        s.sums[i] = 0
    with nogil:
        _dfs(&s, 0, 1)
    if s.overflow:
        raise OverflowError("int64 overflow in class sums")
    out = {}
    for w in range(n + 1):
        for k, lam in enumerate(enumerate_partitions(w)):
            if s.sums[s.offset[w] + k] != 0:
                out[lam] = s.sums[s.offset[w] + k]
    return out
