# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see ``_pykernels`` for semantics)."""

from libc.stdlib cimport calloc, free
from libc.stdint cimport uint64_t

DEF MAXN = 24


cdef inline int _low_index(unsigned long long x) nogil:
    return __builtin_ctzll(x)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef int _load(adj, unsigned long long *out, int n) except -1:
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels support at most 24 vertices")
    for i in range(n):
        out[i] = adj[i]
    return 0


def hp_table(int n, adj):
    cdef unsigned long long a[MAXN]
    _load(adj, a, n)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t *ends = <uint64_t *>calloc(size * n if n else 1, sizeof(uint64_t))
    if ends == NULL:
        raise MemoryError()
    cdef Py_ssize_t mask, nxt
    cdef int v, u
    cdef uint64_t c, s
    cdef unsigned long long ext
    table = [0] * size
    try:
        for v in range(n):
            ends[(1 << v) * n + v] = 1
        for mask in range(1, size):
            s = 0
            for v in range(n):
                c = ends[mask * n + v]
                if c == 0:
                    continue
                s += c
                ext = a[v] & ~(<unsigned long long>mask)
                while ext:
                    u = __builtin_ctzll(ext)
                    ext &= ext - 1
                    nxt = mask | ((<Py_ssize_t>1) << u)
                    ends[nxt * n + u] += c
            table[mask] = s
    finally:
        free(ends)
    return table


def hp_count(int n, adj):
    if n == 0:
        return 1
    return hp_table(n, adj)[(1 << n) - 1]


def hc_count(int n, adj):
    cdef unsigned long long a[MAXN]
    _load(adj, a, n)
    if n == 0:
        return 0
    if n == 1:
        return 1
    if n == 2:
        return 1 if a[0] & 2 else 0
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef uint64_t *ends = <uint64_t *>calloc(size * n, sizeof(uint64_t))
    if ends == NULL:
        raise MemoryError()
    cdef Py_ssize_t mask, nxt, full = size - 1
    cdef int v, u
    cdef uint64_t c, total = 0
    cdef unsigned long long ext
    try:
        ends[1 * n + 0] = 1
        for mask in range(1, size, 2):
            for v in range(n):
                c = ends[mask * n + v]
                if c == 0:
                    continue
                if mask == full:
                    if a[v] & 1:
                        total += c
                    continue
                ext = a[v] & ~(<unsigned long long>mask)
                while ext:
                    u = __builtin_ctzll(ext)
                    ext &= ext - 1
                    nxt = mask | ((<Py_ssize_t>1) << u)
                    ends[nxt * n + u] += c
    finally:
        free(ends)
    return total


cdef bint _greedy(int n, unsigned long long *a, int *seq, bint cyclic) nogil:
    cdef unsigned long long blk[MAXN]
    cdef unsigned long long nb[MAXN]
    cdef int k = n, i, j, t
    cdef bint found
    if n == 0:
        return False
    for i in range(n):
        blk[i] = (<unsigned long long>1) << seq[i]
        nb[i] = a[seq[i]]
    while k > 1:
        found = False
        for i in range(k if cyclic else k - 1):
            j = i + 1
            if j == k:
                j = 0
            if nb[i] & blk[j]:
                found = True
                break
        if not found:
            return False
        if j == 0:
            blk[0] |= blk[k - 1]
            nb[0] |= nb[k - 1]
        else:
            blk[i] |= blk[j]
            nb[i] |= nb[j]
            for t in range(j, k - 1):
                blk[t] = blk[t + 1]
                nb[t] = nb[t + 1]
        k -= 1
    return True


def is_planeq(int n, adj, seq):
    cdef unsigned long long a[MAXN]
    cdef int s[MAXN]
    cdef int i
    _load(adj, a, n)
    for i in range(n):
        s[i] = seq[i]
    return bool(_greedy(n, a, s, False))


def is_cyceq(int n, adj, seq):
    cdef unsigned long long a[MAXN]
    cdef int s[MAXN]
    cdef int i
    _load(adj, a, n)
    for i in range(n):
        s[i] = seq[i]
    return bool(_greedy(n, a, s, True))


cdef class _TreeCounter:
    # F(S, Y) over canonical scan trees; see _pykernels.planeq_count
    cdef unsigned long long *nb
    cdef unsigned char *conn
    cdef dict memo

    def __cinit__(self, int n, adj):
        cdef unsigned long long a[MAXN]
        cdef Py_ssize_t size = (<Py_ssize_t>1) << n
        cdef Py_ssize_t m
        cdef unsigned long long low, seen, grown
        _load(adj, a, n)
        self.nb = <unsigned long long *>calloc(size, sizeof(unsigned long long))
        self.conn = <unsigned char *>calloc(size, sizeof(unsigned char))
        if self.nb == NULL or self.conn == NULL:
            raise MemoryError()
        self.memo = {}
        for m in range(1, size):
            low = m & -m
            self.nb[m] = self.nb[m ^ low] | a[__builtin_ctzll(low)]
            seen = low
            while True:
                grown = seen | (self.nb[seen] & m)
                if grown == seen:
                    break
                seen = grown
            self.conn[m] = seen == <unsigned long long>m

    def __dealloc__(self):
        free(self.nb)
        free(self.conn)

    cdef object F(self, unsigned long long S, unsigned long long Y):
        cdef unsigned long long A, B
        if not (S & (S - 1)):
            return 1
        key = (S, Y)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        total = 0
        A = (S - 1) & S
        while A:
            if not (A & Y) and self.conn[A]:
                B = S ^ A
                if self.conn[B] and (self.nb[A] & B):
                    total += self.F(A, 0) * self.F(B, self.nb[A] & B)
            A = (A - 1) & S
        self.memo[key] = total
        return total


def planeq_count(int n, adj):
    if n == 0:
        return 0
    if n > 20:
        raise ValueError("subset DP supports at most 20 vertices")
    cdef _TreeCounter t = _TreeCounter(n, adj)
    cdef unsigned long long full = ((<unsigned long long>1) << n) - 1
    if not t.conn[full]:
        return 0
    return t.F(full, 0)


cdef object _perm_count(int n, unsigned long long *a, int *seq, int depth,
                        unsigned long long used, bint cyclic):
    cdef int v
    cdef object total = 0
    if depth == n:
        return 1 if _greedy(n, a, seq, cyclic) else 0
    for v in range(n):
        if used >> v & 1:
            continue
        seq[depth] = v
        total += _perm_count(n, a, seq, depth + 1, used | ((<unsigned long long>1) << v), cyclic)
    return total


def cyceq_count(int n, adj):
    cdef unsigned long long a[MAXN]
    cdef int s[MAXN]
    _load(adj, a, n)
    if n == 0:
        return 0
    s[0] = 0
    return _perm_count(n, a, s, 1, 1, True)


def planeq_filter_count(int n, adj):
    cdef unsigned long long a[MAXN]
    cdef int s[MAXN]
    _load(adj, a, n)
    if n == 0:
        return 0
    return _perm_count(n, a, s, 0, 0, False)
