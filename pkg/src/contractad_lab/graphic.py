"""Graphic functions, the *-product over graph partitions, and identity sweeps."""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from ._backend import kernels
from .graph import (
    Graph,
    complement,
    contract_masks,
    enumerate_connected_graphs,
    induced,
    partition_masks,
    random_connected_graph,
    write_edge_list,
)
from .planeq import cyceq_count, planeq_count

MAX_STAR = 7


def _exact(x):
    # integral values stay plain ints: exact, and much cheaper than Fraction
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class GraphicFunction:
    """A function on connected graphs with exact rational values, memoised per labelled graph."""

    def __init__(self, name: str, evaluator: Callable[[Graph], object]):
        self.name = name
        self._eval = evaluator
        self._memo: dict = {}
        self._omega_of = None

    def __call__(self, g: Graph):
        v = self._memo.get(g)
        if v is None:
            v = _exact(self._eval(g))
            self._memo[g] = v
        return v

    def clear(self):
        self._memo.clear()

    def __repr__(self):
        return f"GraphicFunction({self.name})"


@lru_cache(maxsize=4096)
def partition_table(g: Graph):
    """``[(g/I, blocks)]`` for every graph partition I, plus the induced graph per tube."""
    rows = [contract_masks(g, blocks, check=False) for blocks in partition_masks(g)]
    pieces = {}
    for _, blocks in rows:
        for b in blocks:
            if b not in pieces:
                pieces[b] = induced(g, b)
    return rows, pieces


def star(f: GraphicFunction, h: GraphicFunction) -> GraphicFunction:
    """(f*h)(g) = sum over graph partitions I of f(g/I) * prod_{G in I} h(g|G)."""

    def ev(g):
        if g.n > MAX_STAR:
            raise ValueError(f"*-product limited to n <= {MAX_STAR}")
        rows, pieces = partition_table(g)
        hv = {b: h(sub) for b, sub in pieces.items()}
        total = 0
        for q, blocks in rows:
            fv = f(q)
            if not fv:
                continue
            prod = fv
            for b in blocks:
                prod *= hv[b]
                if not prod:
                    break
            total += prod
        return total

    return GraphicFunction(f"({f.name}*{h.name})", ev)


def omega(f: GraphicFunction) -> GraphicFunction:
    """Sign twist by (-1)^(n-1); applying it twice gives back ``f``."""
    if f._omega_of is not None:
        return f._omega_of
    w = GraphicFunction(f"w({f.name})", lambda g: (-1) ** (g.n - 1) * f(g))
    w._omega_of = f
    return w


def fsum(*fs: GraphicFunction) -> GraphicFunction:
    return GraphicFunction("+".join(f.name for f in fs), lambda g: sum(f(g) for f in fs))


def _hc_bar(g):
    if g.n == 1:
        return 0
    c = complement(g)
    return kernels.hc_count(c.n, c.adj)


def _hp_bar(g):
    c = complement(g)
    return kernels.hp_count(c.n, c.adj)


EPS = GraphicFunction("eps", lambda g: 1 if g.n == 1 else 0)
HP = GraphicFunction("HP", lambda g: kernels.hp_count(g.n, g.adj))
HC = GraphicFunction("HC", lambda g: kernels.hc_count(g.n, g.adj))
PE = GraphicFunction("PE", planeq_count)
CE = GraphicFunction("CE", cyceq_count)
P = GraphicFunction("P", lambda g: math.factorial(g.n))
C = GraphicFunction("C", lambda g: math.factorial(g.n - 1))
HP_BAR = GraphicFunction("HPbar", _hp_bar)
HC_BAR = GraphicFunction("HCbar", _hc_bar)

_BUILTINS = {
    "eps": EPS,
    "HP": HP,
    "HC": HC,
    "PE": PE,
    "CE": CE,
    "P": P,
    "C": C,
    "HPbar": HP_BAR,
    "HCbar": HC_BAR,
}


def builtin(name: str) -> GraphicFunction:
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown graphic function {name!r}; choose from {sorted(_BUILTINS)}") from None


# --- identities ----------------------------------------------------------------

def _identities():
    """name -> list of (label, lhs, rhs, applies(g))."""
    always = lambda g: True  # noqa: E731
    has_edge = lambda g: g.n >= 2  # noqa: E731  (connected, so n >= 2 means an edge)
    return {
        "hp-inverse": [
            ("w(PE)*HP = eps", star(omega(PE), HP), EPS, always),
            ("w(HP)*PE = eps", star(omega(HP), PE), EPS, always),
        ],
        "hc-inverse": [("HC = w(CE)*HP", HC, star(omega(CE), HP), always)],
        "perm": [("P = HPbar*PE", P, star(HP_BAR, PE), always)],
        "cycperm": [("C = CE + HCbar*PE", C, fsum(CE, star(HC_BAR, PE)), always)],
        "recurrences": [
            ("w(P)*HP = w(HPbar)", star(omega(P), HP), omega(HP_BAR), always),
            ("w(C)*HP = HC + w(HCbar)", star(omega(C), HP), fsum(HC, omega(HC_BAR)), has_edge),
        ],
    }


IDENTITY_NAMES = ("hp-inverse", "hc-inverse", "perm", "cycperm", "recurrences")


def _check_graphs(graphs, names):
    table = _identities()
    checks = [c for name in names for c in table[name]]
    stats = {label: [0, 0] for label, *_ in checks}  # checked, failed
    failures = []
    for g in graphs:
        for label, lhs, rhs, applies in checks:
            if not applies(g):
                continue
            a, b = lhs(g), rhs(g)
            stats[label][0] += 1
            if a != b:
                stats[label][1] += 1
                failures.append(
                    {
                        "identity": label,
                        "n": g.n,
                        "edge_list": write_edge_list(g),
                        "lhs": str(a),
                        "rhs": str(b),
                    }
                )
    return stats, failures


def _chunk_job(args):
    n, lo, hi, names = args
    graphs = itertools.islice(enumerate_connected_graphs(n), lo, hi)
    return _check_graphs(graphs, names)


def _sample_job(args):
    n, sample, seed, names = args
    rng = random.Random(seed)
    graphs = [random_connected_graph(n, rng) for _ in range(sample)]
    return _check_graphs(graphs, names)


CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


def verify_identities(
    max_n: int = 6,
    names=IDENTITY_NAMES,
    jobs: int = 1,
    sample_n7: int = 1000,
    seed: int = 0,
    full_n7: bool = False,
    chunk: int = 2000,
) -> dict:
    """Check the chosen identities on every connected graph up to ``max_n``.

    For ``max_n >= 7`` the n = 7 layer is a seeded random sample unless
    ``full_n7`` is set.  The report is independent of ``jobs``.
    """
    names = list(names)
    for name in names:
        if name not in IDENTITY_NAMES:
            raise ValueError(f"unknown identity {name!r}")
    if max_n > 7:
        raise ValueError("identity sweeps are limited to n <= 7")
    tasks = []
    for n in range(1, max_n + 1):
        if n == 7 and not full_n7:
            tasks.append((_sample_job, (7, sample_n7, seed, names)))
            continue
        total = CONNECTED_COUNTS[n]
        for lo in range(0, total, chunk):
            tasks.append((_chunk_job, (n, lo, min(total, lo + chunk), names)))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = [ex.submit(fn, a) for fn, a in tasks]
            results = [f.result() for f in futures]
    else:
        results = [fn(a) for fn, a in tasks]
    stats: dict[str, list[int]] = {}
    failures = []
    for s, f in results:
        for label, (c, bad) in s.items():
            acc = stats.setdefault(label, [0, 0])
            acc[0] += c
            acc[1] += bad
        failures.extend(f)
    return {
        "max_n": max_n,
        "identities": {label: {"checked": c, "failed": bad} for label, (c, bad) in stats.items()},
        "counterexamples": failures,
        "passed": not failures,
    }

