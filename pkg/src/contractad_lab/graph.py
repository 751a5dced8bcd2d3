"""Labeled simple graphs, tubes, partitions and contraction.

Graphs live on vertices ``0..n-1`` with adjacency stored as one bitmask per
vertex.  They are immutable and hashable, so they serve as memo keys for the
graphic-function machinery.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full or nb >> v & 1:
                raise ValueError(f"bad neighbourhood for vertex {v}")
            for u in _bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # skip validation for adjacency built by this module
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbourhood(self, mask: int) -> int:
        """Union of neighbourhoods of the vertices in ``mask``."""
        out = 0
        for v in _bits(mask):
            out |= self.adj[v]
        return out

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj) ^ self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def is_connected_mask(g: Graph, mask: int) -> bool:
    """Is the induced subgraph on ``mask`` connected?  Empty sets are not."""
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nb = 0
        for v in _bits(frontier):
            nb |= g.adj[v]
        frontier = nb & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g, g.full_mask)


def is_tube(g: Graph, vertices) -> bool:
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask & ~g.full_mask:
        raise ValueError("tube contains vertices outside the graph")
    return is_connected_mask(g, mask)


@lru_cache(maxsize=4096)
def tube_masks(g: Graph) -> tuple[int, ...]:
    """All tubes of ``g`` as bitmasks, in increasing numeric order."""
    return tuple(m for m in range(1, 1 << g.n) if is_connected_mask(g, m))


PARTITION_LIMIT = 10
CHROMATIC_LIMIT = 12
ENUMERATE_LIMIT = 7


def _require_connected(g: Graph):
    if not is_connected(g):
        raise ValueError("graph must be connected")


def tubes(g: Graph) -> list[frozenset[int]]:
    """Connected vertex subsets, ordered by bitmask."""
    _require_connected(g)
    return [frozenset(members(m)) for m in tube_masks(g)]


def induced(g: Graph, vertices) -> Graph:
    """Induced subgraph, relabelled ``0..k-1`` preserving vertex order."""
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if not mask:
        raise ValueError("induced subgraph needs a non-empty vertex set")
    verts = members(mask)
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(mask_of(pos[u] for u in _bits(g.adj[v] & mask)))
    return Graph._trusted(len(verts), tuple(adj))


def partition_masks(g: Graph, within: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``within`` (default all vertices) into tubes.

    Blocks come out sorted by their minimum vertex; the enumeration order is
    deterministic.
    """
    if within is None:
        within = g.full_mask
    tset = set(tube_masks(g))

    def rec(rest):
        if rest == 0:
            yield ()
            return
        low = rest & -rest
        others = rest ^ low
        # every subset of the remaining vertices that contains the lowest one
        sub = others
        while True:
            block = sub | low
            if block in tset:
                for tail in rec(rest & ~block):
                    yield (block,) + tail
            if sub == 0:
                break
            sub = (sub - 1) & others

    yield from rec(within)


def graph_partitions(g: Graph, limit: int = PARTITION_LIMIT) -> Iterator[list[frozenset[int]]]:
    _require_connected(g)
    if g.n > limit:
        raise ValueError(f"graph partitions limited to n <= {limit}")
    for p in partition_masks(g):
        yield [frozenset(members(b)) for b in p]


def contract_masks(
    g: Graph, blocks: Sequence[int], check: bool = True
) -> tuple[Graph, tuple[int, ...]]:
    """Contract a tube partition given as bitmasks.

    Returns the quotient graph together with the blocks in the order used for
    its vertex labels (sorted by minimum original vertex).  ``check=False``
    skips validation for partitions produced by :func:`partition_masks`.
    """
    blocks = tuple(sorted(blocks, key=lambda b: b & -b))
    if not check:
        nbrs = [g.neighbourhood(b) for b in blocks]
        adj = []
        for i in range(len(blocks)):
            m = 0
            for j, c in enumerate(blocks):
                if j != i and nbrs[i] & c:
                    m |= 1 << j
            adj.append(m)
        return Graph._trusted(len(blocks), tuple(adj)), blocks
    covered = 0
    for b in blocks:
        if b == 0 or b & covered:
            raise ValueError("blocks must be non-empty and disjoint")
        covered |= b
    if covered != g.full_mask:
        raise ValueError("blocks do not cover the vertex set")
    nbrs = [g.neighbourhood(b) for b in blocks]
    adj = []
    for i, b in enumerate(blocks):
        if not is_connected_mask(g, b):
            raise ValueError(f"block {members(b)} is not a tube")
        adj.append(mask_of(j for j, c in enumerate(blocks) if j != i and nbrs[i] & c))
    return Graph(len(blocks), tuple(adj)), blocks


def complete_blocks(g: Graph, tubes_: Iterable) -> tuple[int, ...]:
    """Fill a family of disjoint tubes up to a partition with singletons."""
    blocks = [t if isinstance(t, int) else mask_of(t) for t in tubes_]
    rest = g.full_mask
    for b in blocks:
        rest &= ~b
    return tuple(blocks) + tuple(1 << v for v in _bits(rest))


def contract(g: Graph, partition) -> Graph:
    """Quotient graph ``g/I`` for a full tube partition (use
    :func:`complete_blocks` to pad a family of tubes with singletons).
    """
    return contract_masks(g, [b if isinstance(b, int) else mask_of(b) for b in partition])[0]


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~(a | 1 << v) for v, a in enumerate(g.adj)))


# --- families -----------------------------------------------------------------

def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle graph; ``cycle(1)`` and ``cycle(2)`` are the paths P1 and P2."""
    if n <= 2:
        return path(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    labels = []
    for i, size in enumerate(parts):
        if size < 0:
            raise ValueError("part sizes must be non-negative")
        labels.extend([i] * size)
    n = len(labels)
    return Graph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if labels[u] != labels[v]]
    )


def star(n: int) -> Graph:
    """Star with centre 0 and ``n`` leaves."""
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """All labelled connected graphs on ``n`` vertices (26704 for n = 6)."""
    if n > ENUMERATE_LIMIT:
        raise ValueError(f"enumeration limited to n <= {ENUMERATE_LIMIT}")
    if n < 1:
        return
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        adj = [0] * n
        for k, (u, v) in enumerate(pairs):
            if bits >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = Graph._trusted(n, tuple(adj))
        if is_connected(g):
            yield g


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < p])
        if is_connected(g):
            return g


# --- chromatic polynomial -------------------------------------------------------

class IntPolynomial:
    """Dense integer polynomial, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        m = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)
        )

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


@lru_cache(maxsize=None)
def _chrom(n: int, edges: frozenset) -> IntPolynomial:
    # deletion-contraction on an edge set over vertices 0..n-1
    if not edges:
        return IntPolynomial([0] * n + [1])
    e = min(edges)
    u, v = e
    deleted = edges - {e}
    # contract v into u, then relabel to 0..n-2
    merged = set()
    for a, b in deleted:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    relabel = lambda x: x - 1 if x > v else x  # noqa: E731
    contracted = frozenset((relabel(a), relabel(b)) for a, b in merged)
    return _chrom(n, deleted) - _chrom(n - 1, contracted)


def chromatic_polynomial(g: Graph) -> IntPolynomial:
    """Chromatic polynomial by memoised deletion-contraction."""
    if g.n > CHROMATIC_LIMIT:
        raise ValueError(f"chromatic polynomial limited to n <= {CHROMATIC_LIMIT}")
    return _chrom(g.n, frozenset(g.edges()))


def acyclic_orientation_count(g: Graph) -> int:
    """Number of acyclic orientations, ``(-1)^n chi(-1)``."""
    return (-1) ** g.n * chromatic_polynomial(g)(-1)


# --- parsing -------------------------------------------------------------------

def read_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by ``u v`` lines with ``u < v``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge {u} {v} must satisfy u < v")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge")
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def parse_graph_spec(spec: str) -> Graph:
    """Build a graph from ``P5``, ``C6``, ``K4``, ``K2,2,1`` or an edge-list file.

    A leading ``~`` takes the complement.
    """
    s = spec.strip()
    if s.startswith("~"):
        return complement(parse_graph_spec(s[1:]))
    if os.path.isfile(s):
        with open(s) as fh:
            return read_edge_list(fh.read())
    if len(s) >= 2 and s[0] in "PCK":
        body = s[1:]
        try:
            nums = [int(x) for x in body.split(",")]
        except ValueError:
            raise ValueError(f"unrecognised graph spec {spec!r}") from None
        if any(x < 0 for x in nums):
            raise ValueError(f"negative size in graph spec {spec!r}")
        if s[0] == "K" and len(nums) > 1:
            return complete_multipartite(nums)
        if len(nums) != 1:
            raise ValueError(f"unrecognised graph spec {spec!r}")
        return {"P": path, "C": cycle, "K": complete}[s[0]](nums[0])
    raise ValueError(f"unrecognised graph spec {spec!r}")
