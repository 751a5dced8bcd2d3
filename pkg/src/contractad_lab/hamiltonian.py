"""Directed Hamiltonian paths and cycles, and the splice maps between them.

A path is a tuple of vertex labels.  A cycle is stored as the rotation that
starts at its smallest label.  One vertex carries a single loop cycle and a
connected pair carries a single 2-cycle; longer cycles need a genuine cycle
in the graph.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ._backend import kernels
from .graph import (  # noqa: F401  (acyclic_orientation_count re-exported)
    Graph,
    acyclic_orientation_count,
    complete_blocks,
    contract_masks,
    induced,
    is_connected,
    is_connected_mask,
    mask_of,
    members,
)

MAX_VERTICES = 16

Path = tuple[int, ...]
Cycle = tuple[int, ...]


def _check_size(g: Graph, limit: int = MAX_VERTICES):
    if g.n > limit:
        raise ValueError(f"graph has {g.n} vertices, limit is {limit}")


def ham_paths(g: Graph) -> list[Path]:
    """All directed Hamiltonian paths in lexicographic order."""
    _check_size(g)
    n = g.n
    if n == 0:
        return [()]
    full = g.full_mask
    out = []
    seq = []

    def extend(v, used):
        seq.append(v)
        if used == full:
            out.append(tuple(seq))
        else:
            nxt = g.adj[v] & ~used
            for u in range(n):
                if nxt >> u & 1:
                    extend(u, used | 1 << u)
        seq.pop()

    for v in range(n):
        extend(v, 1 << v)
    return out


def canonical_cycle(seq: Sequence[int]) -> Cycle:
    """Rotate so the smallest label comes first."""
    seq = tuple(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def is_ham_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) != g.n or sorted(seq) != list(range(g.n)):
        return False
    return all(g.adjacent(a, b) for a, b in zip(seq, seq[1:]))


def is_ham_cycle(g: Graph, seq: Sequence[int]) -> bool:
    if not is_ham_path(g, seq):
        return False
    if g.n <= 2:
        return True
    return g.adjacent(seq[-1], seq[0])


def ham_cycles(g: Graph) -> list[Cycle]:
    """All directed Hamiltonian cycles as canonical rotations, lexicographic."""
    _check_size(g)
    if g.n == 0:
        return []
    if g.n <= 2:
        return [tuple(range(g.n))] if is_connected(g) else []
    return [p for p in ham_paths(g) if p[0] == 0 and g.adjacent(p[-1], 0)]


def hp(g: Graph) -> int:
    """Number of directed Hamiltonian paths (1 for the empty graph)."""
    _check_size(g, 24)
    return kernels.hp_count(g.n, g.adj)


def hc(g: Graph) -> int:
    _check_size(g, 24)
    return kernels.hc_count(g.n, g.adj)


def _tube_and_contraction(g: Graph, G):
    gm = G if isinstance(G, int) else mask_of(G)
    if gm == 0 or gm & ~g.full_mask or not is_connected_mask(g, gm):
        raise ValueError("G must be a tube of g")
    cg, blocks = contract_masks(g, complete_blocks(g, [gm]))
    return gm, cg, blocks


def _block_vertex(blocks, b):
    (v,) = members(blocks[b])
    return v


def substitute_path(g: Graph, G, outer: Sequence[int], inner: Sequence[int]) -> Optional[Path]:
    """Splice ``inner`` (a path of ``induced(g, G)``) into ``outer`` at the vertex of G.

    ``outer`` is a Hamiltonian path of ``contract(g, {G})``.  Returns None when
    the boundary adjacencies fail, which models the zero of the linear map.
    """
    gm, cg, blocks = _tube_and_contraction(g, G)
    sub = induced(g, gm)
    if not is_ham_path(cg, outer):
        raise ValueError("outer is not a Hamiltonian path of the contracted graph")
    if not is_ham_path(sub, inner):
        raise ValueError("inner is not a Hamiltonian path of the induced subgraph")
    k = blocks.index(gm)
    pos = list(outer).index(k)
    verts = members(gm)
    w = [verts[i] for i in inner]
    before = [_block_vertex(blocks, b) for b in outer[:pos]]
    after = [_block_vertex(blocks, b) for b in outer[pos + 1:]]
    if before and not g.adjacent(before[-1], w[0]):
        return None
    if after and not g.adjacent(w[-1], after[0]):
        return None
    return tuple(before + w + after)


def substitute_cycle(g: Graph, G, outer: Sequence[int], inner: Sequence[int]) -> Optional[Cycle]:
    """Cyclic version of :func:`substitute_path` with wrap-around boundary."""
    gm, cg, blocks = _tube_and_contraction(g, G)
    sub = induced(g, gm)
    if not is_ham_cycle(cg, outer):
        raise ValueError("outer is not a Hamiltonian cycle of the contracted graph")
    if not is_ham_path(sub, inner):
        raise ValueError("inner is not a Hamiltonian path of the induced subgraph")
    k = blocks.index(gm)
    outer = tuple(outer)
    pos = outer.index(k)
    rot = outer[pos:] + outer[:pos]
    verts = members(gm)
    w = [verts[i] for i in inner]
    rest = [_block_vertex(blocks, b) for b in rot[1:]]
    if rest:
        if not (g.adjacent(rest[-1], w[0]) and g.adjacent(w[-1], rest[0])):
            return None
    elif len(w) > 2 and not g.adjacent(w[-1], w[0]):
        return None
    return canonical_cycle(w + rest)


def extend_path_to_cycle(g: Graph, p: Sequence[int]) -> Optional[Cycle]:
    """Close a Hamiltonian path into a cycle when its endpoints are adjacent."""
    if not is_ham_path(g, p):
        raise ValueError("p is not a Hamiltonian path of g")
    if len(p) > 2 and not g.adjacent(p[-1], p[0]):
        return None
    return canonical_cycle(p)


def splice_blocks(g: Graph, outer: Sequence[int], target: int, inner: Sequence[int]):
    """Splice at the level of block masks inside one ambient graph.

    ``outer`` and ``inner`` are sequences of disjoint vertex masks; ``target``
    is a member of ``outer`` that the masks of ``inner`` partition.  Adjacency
    of two blocks means an edge of ``g`` between them.  Returns the spliced
    mask sequence or None.  This is the label-free form used to check that
    the two ways of nesting substitutions agree.
    """
    outer = list(outer)
    pos = outer.index(target)
    inner = list(inner)
    acc = 0
    for b in inner:
        acc |= b
    if acc != target:
        raise ValueError("inner blocks must partition the target block")
    if pos > 0 and not g.neighbourhood(outer[pos - 1]) & inner[0]:
        return None
    if pos + 1 < len(outer) and not g.neighbourhood(inner[-1]) & outer[pos + 1]:
        return None
    return tuple(outer[:pos] + inner + outer[pos + 1:])
