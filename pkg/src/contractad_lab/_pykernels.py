"""Pure-Python versions of the hot kernels.

Every function takes the vertex count ``n`` and the adjacency bitmasks
``adj`` of a graph on ``0..n-1``.  The compiled module ``_ckernels`` exports
the same names with the same semantics.
"""

from itertools import permutations


def hp_table(n, adj):
    """Directed Hamiltonian path counts of every induced subgraph.

    Entry ``mask`` holds HP of the subgraph induced on ``mask`` (0 for the
    empty mask).  One Held-Karp style pass fills the whole table.
    """
    size = 1 << n
    # ends[mask][v]: paths covering exactly mask, ending at v
    ends = [None] * size
    table = [0] * size
    for v in range(n):
        row = [0] * n
        row[v] = 1
        ends[1 << v] = row
        table[1 << v] = 1
    for mask in range(1, size):
        row = ends[mask]
        if row is None:
            continue
        for v in range(n):
            c = row[v]
            if not c:
                continue
            ext = adj[v] & ~mask
            while ext:
                low = ext & -ext
                u = low.bit_length() - 1
                ext ^= low
                nxt = mask | low
                r = ends[nxt]
                if r is None:
                    r = ends[nxt] = [0] * n
                r[u] += c
        if mask & (mask - 1):
            table[mask] = sum(row)
    return table


def hp_count(n, adj):
    if n == 0:
        return 1
    return hp_table(n, adj)[(1 << n) - 1]


def hc_count(n, adj):
    """Directed Hamiltonian cycles up to rotation.

    A single vertex carries one (loop) cycle and a connected pair carries one
    cycle; from three vertices on, both orientations count separately.
    """
    if n == 0:
        return 0
    if n == 1:
        return 1
    if n == 2:
        return 1 if adj[0] & 2 else 0
    full = (1 << n) - 1
    # paths starting at 0
    cur = {(1, 0): 1}
    for _ in range(n - 1):
        nxt = {}
        for (mask, v), c in cur.items():
            ext = adj[v] & ~mask
            while ext:
                low = ext & -ext
                ext ^= low
                key = (mask | low, low.bit_length() - 1)
                nxt[key] = nxt.get(key, 0) + c
        cur = nxt
    return sum(c for (mask, v), c in cur.items() if mask == full and adj[v] & 1)


def _block_nbrs(adj, mask):
    out = 0
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def is_planeq(n, adj, seq):
    """Greedy membership: contract the first adjacent consecutive pair."""
    if n == 0:
        return False
    blocks = [1 << v for v in seq]
    nbrs = [adj[v] for v in seq]
    while len(blocks) > 1:
        for i in range(len(blocks) - 1):
            if nbrs[i] & blocks[i + 1]:
                blocks[i] |= blocks.pop(i + 1)
                nbrs[i] |= nbrs.pop(i + 1)
                break
        else:
            return False
    return True


def _subset_tables(n, adj):
    """Neighbourhood and connectivity of every vertex subset."""
    size = 1 << n
    nb = [0] * size
    conn = [False] * size
    for m in range(1, size):
        low = m & -m
        nb[m] = nb[m ^ low] | adj[low.bit_length() - 1]
        seen = low
        while True:
            grown = seen | (nb[seen] & m)
            if grown == seen:
                break
            seen = grown
        conn[m] = seen == m
    return nb, conn


def planeq_count(n, adj):
    """Count PlanEq tuples by a DP over canonical trees.

    Scanning a tuple left to right and merging the top two blocks of a stack
    whenever they touch builds one tree per realised tuple.  Its root splits
    the vertex set as A | B, and B's left spine (the blocks that sat directly
    on A during the scan) must avoid the neighbours of A except at the end.
    F(S, Y) counts orderings of S whose proper left-spine blocks miss Y.
    """
    if n == 0:
        return 0
    nb, conn = _subset_tables(n, adj)
    full = (1 << n) - 1
    if not conn[full]:
        return 0
    memo = {}

    def F(S, Y):
        if not S & (S - 1):
            return 1
        key = (S, Y)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        A = (S - 1) & S
        while A:
            if not A & Y and conn[A]:
                B = S ^ A
                if conn[B] and nb[A] & B:
                    total += F(A, 0) * F(B, nb[A] & B)
            A = (A - 1) & S
        memo[key] = total
        return total

    return F(full, 0)


def is_cyceq(n, adj, seq):
    """Cyclic greedy: contract any cyclically adjacent pair, wrap included."""
    if n == 0:
        return False
    blocks = [1 << v for v in seq]
    nbrs = [adj[v] for v in seq]
    while len(blocks) > 1:
        k = len(blocks)
        for i in range(k):
            j = (i + 1) % k
            if nbrs[i] & blocks[j]:
                if j:
                    blocks[i] |= blocks.pop(j)
                    nbrs[i] |= nbrs.pop(j)
                else:
                    blocks[0] |= blocks.pop()
                    nbrs[0] |= nbrs.pop()
                break
        else:
            return False
    return True


def cyceq_count(n, adj):
    """Cyclic classes (representatives start at vertex 0) passing the cyclic test."""
    if n == 0:
        return 0
    return sum(1 for rest in permutations(range(1, n)) if is_cyceq(n, adj, (0,) + rest))


def planeq_filter_count(n, adj):
    """Brute-force count over all n! tuples."""
    if n == 0:
        return 0
    return sum(1 for s in permutations(range(n)) if is_planeq(n, adj, s))
