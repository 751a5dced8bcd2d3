"""Orderings realised by planar admissible binary trees, and pattern tools.

Membership works by contraction: a tuple is realised iff repeatedly merging
some adjacent consecutive pair of blocks ends in a single block, and the
order of merges does not matter.  The cyclic version also merges across the
wrap-around.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from ._backend import kernels
from .graph import Graph, is_connected

MAX_FILTER = 9  # n! sweeps
MAX_DP = 12

Pattern = tuple[int, ...]

B_P: tuple[Pattern, ...] = ((2, 4, 1, 3), (3, 1, 4, 2))


def _check_perm(g: Graph, seq: Sequence[int]):
    if sorted(seq) != list(range(g.n)):
        raise ValueError(f"{tuple(seq)} is not a permutation of the vertices 0..{g.n - 1}")


def is_planeq(g: Graph, seq: Sequence[int], rule: str = "first", rng: random.Random | None = None) -> bool:
    """Does the tuple belong to PlanEq(g)?

    ``rule="first"`` contracts the first adjacent pair each round;
    ``rule="any"`` picks an adjacent pair at random (seeded by ``rng``).
    """
    _check_perm(g, seq)
    if rule == "first":
        return kernels.is_planeq(g.n, g.adj, tuple(seq))
    if rule != "any":
        raise ValueError(f"unknown rule {rule!r}")
    rng = rng or random.Random(0)
    blocks = [1 << v for v in seq]
    nbrs = [g.adj[v] for v in seq]
    while len(blocks) > 1:
        choices = [i for i in range(len(blocks) - 1) if nbrs[i] & blocks[i + 1]]
        if not choices:
            return False
        i = rng.choice(choices)
        blocks[i] |= blocks.pop(i + 1)
        nbrs[i] |= nbrs.pop(i + 1)
    return bool(blocks)


def planeq_tuples(g: Graph) -> list[tuple[int, ...]]:
    """PlanEq(g) in lexicographic order (n! filter)."""
    if g.n > MAX_FILTER:
        raise ValueError(f"n! sweep limited to n <= {MAX_FILTER}")
    return [s for s in itertools.permutations(range(g.n)) if kernels.is_planeq(g.n, g.adj, s)]


def planeq_count(g: Graph, method: str = "dp") -> int:
    """|PlanEq(g)|, by the block-stack DP (default) or the n! filter."""
    if not is_connected(g):
        return 0
    if method == "dp":
        if g.n > MAX_DP:
            raise ValueError(f"DP limited to n <= {MAX_DP}")
        return kernels.planeq_count(g.n, g.adj)
    if method == "filter":
        if g.n > MAX_FILTER:
            raise ValueError(f"n! sweep limited to n <= {MAX_FILTER}")
        return kernels.planeq_filter_count(g.n, g.adj)
    raise ValueError(f"unknown method {method!r}")


def is_cyceq(g: Graph, seq: Sequence[int]) -> bool:
    """Is the cyclic class of ``seq`` in CycEq(g)?"""
    _check_perm(g, seq)
    return kernels.is_cyceq(g.n, g.adj, tuple(seq))


def cyceq_classes(g: Graph) -> list[tuple[int, ...]]:
    """CycEq(g) as rotations starting at vertex 0, lexicographic."""
    if g.n > MAX_FILTER:
        raise ValueError(f"sweep limited to n <= {MAX_FILTER}")
    if g.n == 0:
        return []
    return [
        (0,) + r
        for r in itertools.permutations(range(1, g.n))
        if kernels.is_cyceq(g.n, g.adj, (0,) + r)
    ]


def cyceq_count(g: Graph) -> int:
    if not is_connected(g):
        return 0
    if g.n > MAX_FILTER + 1:
        raise ValueError(f"sweep limited to n <= {MAX_FILTER + 1}")
    return kernels.cyceq_count(g.n, g.adj)


# --- permutations and patterns ------------------------------------------------

def is_separable(perm: Sequence[int]) -> bool:
    """Linear-scan separability test on a permutation of 1..n.

    Repeatedly merge the first pair of neighbours whose values differ by one,
    keeping the smaller value and closing the gap above it.
    """
    s = list(perm)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValueError("expected a permutation of 1..n")
    while len(s) > 1:
        for i in range(len(s) - 1):
            if abs(s[i] - s[i + 1]) == 1:
                break
        else:
            return False
        lo = min(s[i], s[i + 1])
        s[i:i + 2] = [lo]
        s = [x - 1 if x > lo else x for x in s]
    return True


def _order(seq: Sequence[int]) -> tuple[int, ...]:
    # positions listed by increasing value; equal for order-isomorphic sequences
    return tuple(sorted(range(len(seq)), key=seq.__getitem__))


def contains_pattern(perm: Sequence[int], pattern: Sequence[int]) -> bool:
    """Brute-force search for a subsequence order-isomorphic to ``pattern``."""
    k = len(pattern)
    if k > len(perm):
        return False
    target = _order(pattern)
    for sub in itertools.combinations(perm, k):
        if _order(sub) == target:
            return True
    return False


def avoids(perm: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains_pattern(perm, p) for p in patterns)


def avoiders_list(n: int, patterns: Iterable[Sequence[int]]) -> list[Pattern]:
    if n > MAX_FILTER:
        raise ValueError(f"n! sweep limited to n <= {MAX_FILTER}")
    patterns = [tuple(p) for p in patterns]
    return [s for s in itertools.permutations(range(1, n + 1)) if avoids(s, patterns)]


def avoiders(n: int, patterns: Iterable[Sequence[int]]) -> int:
    return len(avoiders_list(n, patterns))


def b_c_patterns() -> list[Pattern]:
    """The ten 5-permutations whose consecutive entries differ by 2 or 3 mod 5."""
    return [
        s
        for s in itertools.permutations(range(1, 6))
        if all((s[k] - s[k + 1]) % 5 in (2, 3) for k in range(4))
    ]


def parse_pattern(text: str) -> Pattern:
    """``"2413"`` or ``"2-4-1-3"`` to a tuple; digits only for k <= 9."""
    text = text.strip()
    parts = text.split("-") if "-" in text else list(text)
    p = tuple(int(x) for x in parts)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"{text!r} is not a permutation pattern")
    return p
