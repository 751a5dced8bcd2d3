"""Koszul complexes of the path contractad and the cycle module, with exact homology.

Path complex: a basis element is a tuple split into blocks, each block a
directed path in the graph, and the concatenation realised by a planar tree.
Its degree is (#blocks - 1) and the differential merges neighbouring blocks
with sign (-1)^(l-1) whenever the junction is an edge.

Cycle complex: the concatenation is read cyclically.  Rotating k blocks by i
places costs (-1)^((k-1) i); we store the rotation whose first block holds
the smallest vertex.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import Graph, is_connected
from .planeq import cyceq_classes, planeq_tuples

MAX_VERTICES = 6

Blocks = tuple[tuple[int, ...], ...]


# --- exact rank ------------------------------------------------------------------

def _integral(vec: dict) -> dict:
    den = 1
    for x in vec.values():
        if isinstance(x, Fraction):
            den = den * x.denominator // math.gcd(den, x.denominator)
    out = {}
    for k, x in vec.items():
        y = x * den
        y = int(y) if not isinstance(y, Fraction) else y.numerator
        if y:
            out[k] = y
    return out


def _primitive(vec: dict) -> dict:
    g = 0
    for x in vec.values():
        g = math.gcd(g, x)
    if g > 1:
        return {k: x // g for k, x in vec.items()}
    return vec


def sparse_rank(vectors: Iterable[dict]) -> int:
    """Rank over Q of sparse vectors (index -> rational), fraction-free.

    Each incoming vector is cleared against stored pivots with integer
    cross-multiplication and divided by its content, so no fractions appear.
    """
    pivots: dict = {}
    rank = 0
    for v in vectors:
        v = _primitive(_integral(v))
        while v:
            p = min(v)
            r = pivots.get(p)
            if r is None:
                pivots[p] = v
                rank += 1
                break
            a, b = r[p], v[p]
            out = {k: a * x for k, x in v.items()}
            for k, x in r.items():
                y = out.get(k, 0) - b * x
                if y:
                    out[k] = y
                else:
                    out.pop(k, None)
            v = _primitive(out)
    return rank


def bareiss_rank(rows: list[list]) -> int:
    """Rank of a dense rational matrix (list of rows) by Bareiss elimination."""
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    mat = []  # rows scaled to integers
    for r in rows:
        d = _integral(dict(enumerate(r)))
        mat.append([d.get(j, 0) for j in range(ncols)])
    rank, prev = 0, 1
    nrows = len(mat)
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, nrows):
            f = mat[i][col]
            row = mat[i]
            top = mat[rank]
            for j in range(col, ncols):
                row[j] = (pv * row[j] - f * top[j]) // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


# --- chain complexes -------------------------------------------------------------

@dataclass
class RationalChainComplex:
    """Graded bases plus sparse differentials.

    ``diffs[d]`` maps (row, col) to the coefficient of basis element ``row``
    of degree d-1 in the boundary of basis element ``col`` of degree d.
    """

    bases: list[list] = field(default_factory=list)
    diffs: dict[int, dict[tuple[int, int], Fraction]] = field(default_factory=dict)

    def dims(self) -> list[int]:
        return [len(b) for b in self.bases]

    def columns(self, d: int) -> list[dict]:
        cols: list[dict] = [dict() for _ in range(len(self.bases[d]))]
        for (r, c), x in self.diffs.get(d, {}).items():
            cols[c][r] = x
        return cols

    def check_square_zero(self) -> bool:
        for d in range(2, len(self.bases)):
            lower = self.columns(d - 1)
            for col in self.columns(d):
                acc: dict = {}
                for mid, x in col.items():
                    for r, y in lower[mid].items():
                        acc[r] = acc.get(r, 0) + x * y
                if any(acc.values()):
                    return False
        return True

    def rank(self, d: int) -> int:
        if d <= 0 or d >= len(self.bases):
            return 0
        return sparse_rank(self.columns(d))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.dims()))

    def dump(self) -> str:
        """Sparse triplets, one ``degree row col num/den`` line each."""
        lines = []
        for d in sorted(self.diffs):
            for (r, c), x in sorted(self.diffs[d].items()):
                x = Fraction(x)
                lines.append(f"{d} {r} {c} {x.numerator}/{x.denominator}")
        return "\n".join(lines) + ("\n" if lines else "")


def homology_ranks(c: RationalChainComplex) -> list[int]:
    """Betti numbers b_d = dim_d - rank d_d - rank d_(d+1)."""
    if not c.check_square_zero():
        raise ValueError("not a chain complex: the differential does not square to zero")
    ranks = [c.rank(d) for d in range(len(c.bases) + 1)]
    return [n - ranks[d] - ranks[d + 1] for d, n in enumerate(c.dims())]


def _assemble(elements, boundary) -> RationalChainComplex:
    """Build a complex from basis elements ``(degree, key)`` in order."""
    degrees = max((d for d, _ in elements), default=-1) + 1
    bases: list[list] = [[] for _ in range(degrees)]
    for d, key in elements:
        bases[d].append(key)
    index = [{k: i for i, k in enumerate(b)} for b in bases]
    diffs: dict[int, dict] = {}
    for d in range(1, degrees):
        mat = {}
        for col, key in enumerate(bases[d]):
            for target, sign in boundary(key):
                r = index[d - 1][target]
                mat[(r, col)] = mat.get((r, col), 0) + sign
        diffs[d] = {k: Fraction(v) for k, v in mat.items() if v}
    return RationalChainComplex(bases, diffs)


def _check_input(g: Graph):
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if g.n > MAX_VERTICES:
        raise ValueError(f"Koszul complexes limited to n <= {MAX_VERTICES}")


# --- path complex ----------------------------------------------------------------

def _split(seq, cuts) -> Blocks:
    out, start = [], 0
    for c in cuts:
        out.append(tuple(seq[start:c + 1]))
        start = c + 1
    out.append(tuple(seq[start:]))
    return tuple(out)


def path_multipartitions(g: Graph, sigma) -> list[Blocks]:
    """Block decompositions of ``sigma`` into directed paths, ordered by cut set."""
    n = len(sigma)
    forced = [i for i in range(n - 1) if not g.adjacent(sigma[i], sigma[i + 1])]
    free = [i for i in range(n - 1) if g.adjacent(sigma[i], sigma[i + 1])]
    out = []
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            out.append((tuple(sorted(forced + list(extra))), _split(sigma, sorted(forced + list(extra)))))
    out.sort()
    return [b for _, b in out]


def _ham_boundary(g: Graph):
    def boundary(blocks: Blocks):
        out = []
        for l in range(len(blocks) - 1):
            if g.adjacent(blocks[l][-1], blocks[l + 1][0]):
                merged = blocks[:l] + (blocks[l] + blocks[l + 1],) + blocks[l + 2:]
                out.append((merged, -1 if l % 2 else 1))
        return out

    return boundary


def build_ham_koszul(g: Graph, sigmas=None) -> RationalChainComplex:
    """Koszul complex of the path contractad at ``g``.

    ``sigmas`` restricts to the summands of the given concatenation tuples.
    """
    _check_input(g)
    if sigmas is None:
        sigmas = planeq_tuples(g)
    elements = []
    for s in sigmas:
        for blocks in path_multipartitions(g, s):
            elements.append((len(blocks) - 1, blocks))
    return _assemble(elements, _ham_boundary(g))


def ham_koszul_components(g: Graph):
    """Yield ``(sigma, complex)`` for each concatenation summand."""
    _check_input(g)
    for s in planeq_tuples(g):
        yield s, build_ham_koszul(g, [s])


# --- cycle complex ---------------------------------------------------------------

def canonical_blocks(blocks: Blocks) -> tuple[Blocks, int]:
    """Rotate so the block holding the smallest vertex is first.

    Returns the rotated blocks and the sign relating them: the input equals
    ``sign`` times the output.
    """
    k = len(blocks)
    low = min(v for b in blocks for v in b)
    i = next(j for j, b in enumerate(blocks) if low in b)
    sign = -1 if (k - 1) * i % 2 else 1
    return blocks[i:] + blocks[:i], sign


def cyclic_adjacent_positions(g: Graph, tau) -> list[int]:
    """Positions i whose junction tau[i] -> tau[i+1 mod n] is an edge."""
    n = len(tau)
    if n == 1:
        return []
    return [i for i in range(n) if g.adjacent(tau[i], tau[(i + 1) % n])]


def cycle_multipartitions(g: Graph, tau) -> list[Blocks]:
    """Canonical cyclic block decompositions of ``tau``, ordered by cut set."""
    n = len(tau)
    adjacent = set(cyclic_adjacent_positions(g, tau))
    forced = [i for i in range(n) if i not in adjacent]
    free = sorted(adjacent)
    out = []
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            cuts = sorted(forced + list(extra))
            if not cuts:
                continue
            # blocks start right after each cut
            blocks = []
            for j, c in enumerate(cuts):
                end = cuts[(j + 1) % len(cuts)]
                length = (end - c) % n or n
                blocks.append(tuple(tau[(c + 1 + t) % n] for t in range(length)))
            canon, _ = canonical_blocks(tuple(blocks))
            out.append((tuple(cuts), canon))
    out.sort()
    return [b for _, b in out]


def _cycham_boundary(g: Graph):
    def boundary(blocks: Blocks):
        k = len(blocks)
        out = []
        if k < 2:
            return out
        for l in range(k - 1):
            if g.adjacent(blocks[l][-1], blocks[l + 1][0]):
                merged = blocks[:l] + (blocks[l] + blocks[l + 1],) + blocks[l + 2:]
                canon, s = canonical_blocks(merged)
                out.append((canon, s * (-1 if l % 2 else 1)))
        # wrap-around merge: (-1)^(k-1) |P_k P_1|P_2|...|P_(k-1)|, which the
        # rotation rule turns into -|P_2|...|P_(k-1)|P_k P_1|
        if g.adjacent(blocks[-1][-1], blocks[0][0]):
            merged = blocks[1:-1] + (blocks[-1] + blocks[0],)
            canon, s = canonical_blocks(merged)
            out.append((canon, -s))
        return out

    return boundary


def build_cycham_koszul(g: Graph, taus=None) -> RationalChainComplex:
    """Koszul complex of the cycle module at ``g``."""
    _check_input(g)
    if taus is None:
        taus = cyceq_classes(g)
    elements = []
    for t in taus:
        for blocks in cycle_multipartitions(g, t):
            elements.append((len(blocks) - 1, blocks))
    return _assemble(elements, _cycham_boundary(g))


def cycham_koszul_components(g: Graph):
    _check_input(g)
    for t in cyceq_classes(g):
        yield t, build_cycham_koszul(g, [t])
