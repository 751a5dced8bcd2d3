import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from contractad_lab import planeq as Q
from contractad_lab.graph import (
    acyclic_orientation_count,
    complement,
    complete,
    contract_masks,
    cycle,
    enumerate_connected_graphs,
    induced,
    is_connected,
    members,
    path,
    random_connected_graph,
    tube_masks,
)


def test_is_planeq_examples():
    for s in itertools.permutations(range(4)):
        assert Q.is_planeq(complete(4), s)
    # path 1-2-3-4 relabelled 0..3; (3,1,4,2) becomes (2,0,3,1)
    assert not Q.is_planeq(path(4), (2, 0, 3, 1))
    assert not Q.is_planeq(path(4), (1, 3, 0, 2))
    assert Q.is_planeq(path(3), (1, 0, 2))
    assert len(Q.planeq_tuples(path(3))) == 6
    with pytest.raises(ValueError):
        Q.is_planeq(path(3), (0, 0, 1))


@pytest.mark.parametrize("n,count", list(enumerate([1, 2, 6, 22, 90, 394, 1806, 8558], start=1)))
def test_planeq_paths(n, count):
    assert Q.planeq_count(path(n)) == count


def test_planeq_cycle5():
    assert Q.planeq_count(cycle(5)) == 110
    assert 120 - Q.planeq_count(cycle(5)) == 10


def test_cyceq_examples():
    assert Q.cyceq_count(path(2)) == 1
    assert Q.cyceq_count(path(1)) == 1
    assert Q.cyceq_count(complete(4)) == 6


def test_membership_matches_tree_oracle(small_graphs):
    for g in small_graphs:
        if g.n > 4:
            break
        for s in itertools.permutations(range(g.n)):
            assert Q.is_planeq(g, s) == oracles.tree_realisable(g, list(s))


def test_cyclic_membership_matches_rotation_oracle(small_graphs):
    for g in small_graphs:
        if g.n > 4:
            break
        for r in itertools.permutations(range(1, g.n)):
            s = (0,) + r
            assert Q.is_cyceq(g, s) == oracles.rotation_cyclic(g, list(s))


def test_cyclic_membership_rotation_invariant(small_graphs):
    for g in small_graphs[::13]:
        for s in itertools.permutations(range(g.n)):
            rots = {Q.is_cyceq(g, s[i:] + s[:i]) for i in range(g.n)}
            assert len(rots) == 1


def test_greedy_rules_agree():
    rng = random.Random(7)
    for n in range(1, 7):
        graphs = list(enumerate_connected_graphs(n))
        if n == 6:
            graphs = rng.sample(graphs, 40)
        for g in graphs:
            for s in itertools.permutations(range(n)):
                assert Q.is_planeq(g, s, rule="any", rng=rng) == Q.is_planeq(g, s)


def test_dp_matches_filter():
    rng = random.Random(3)
    for n in range(1, 8):
        graphs = list(enumerate_connected_graphs(n)) if n <= 5 else [
            random_connected_graph(n, rng, p) for p in (0.3, 0.5, 0.7) for _ in range(4)
        ]
        for g in graphs:
            assert Q.planeq_count(g) == Q.planeq_count(g, method="filter")


def test_lower_bound(small_graphs):
    for g in small_graphs:
        pe, ac = Q.planeq_count(g), acyclic_orientation_count(g)
        assert pe >= ac
        assert (pe == ac) == (g == complete(g.n))


def test_closure_under_substitution():
    for n in range(2, 6):
        graphs = list(enumerate_connected_graphs(n))
        if n == 5:
            graphs = random.Random(5).sample(graphs, 25)
        for g in graphs:
            pe = set(Q.planeq_tuples(g))
            for G in tube_masks(g):
                blocks = [G] + [1 << v for v in range(g.n) if not G >> v & 1]
                q, order = contract_masks(g, blocks)
                verts = members(G)
                for outer in Q.planeq_tuples(q):
                    for inner in Q.planeq_tuples(induced(g, G)):
                        spliced = []
                        for b in outer:
                            spliced += [verts[i] for i in inner] if order[b] == G else members(order[b])
                        assert tuple(spliced) in pe


def test_separable_examples():
    assert not Q.is_separable((2, 4, 1, 3))
    assert not Q.is_separable((3, 1, 4, 2))
    assert Q.is_separable(tuple(range(1, 8)))
    sep4 = [s for s in itertools.permutations(range(1, 5)) if Q.is_separable(s)]
    assert len(sep4) == 22
    with pytest.raises(ValueError):
        Q.is_separable((1, 1))


def test_contains_pattern_examples():
    assert Q.contains_pattern((2, 4, 1, 3), (2, 4, 1, 3))
    assert not Q.contains_pattern((1, 2, 3), (2, 1))
    assert Q.contains_pattern((3, 5, 1, 4, 2), (3, 1, 4, 2))
    assert not Q.contains_pattern((1, 2), (1, 2, 3))


def test_avoiders_examples():
    assert Q.avoiders(4, Q.B_P) == 22
    assert Q.avoiders(1, [(2, 1), (1, 2, 3)]) == 1
    assert Q.avoiders(5, Q.b_c_patterns()) == 110 == 5 * Q.avoiders(4, Q.B_P)


def test_b_c_patterns():
    bc = Q.b_c_patterns()
    assert len(bc) == 10
    assert (1, 3, 5, 2, 4) in bc
    assert (1, 2, 3, 4, 5) not in bc
    assert all((s[k] - s[k + 1]) % 5 in (2, 3) for s in bc for k in range(4))


@pytest.mark.parametrize("n", range(1, 8))
def test_separable_equals_avoiders_equals_planeq_path(n):
    perms = itertools.permutations(range(1, n + 1))
    sep = {s for s in perms if Q.is_separable(s)}
    av = set(Q.avoiders_list(n, Q.B_P))
    pe = {tuple(v + 1 for v in s) for s in Q.planeq_tuples(path(n))}
    assert sep == av == pe


@pytest.mark.parametrize("n", range(1, 8))
def test_cycle_planeq_equals_bc_avoiders(n):
    pe = {tuple(v + 1 for v in s) for s in Q.planeq_tuples(cycle(n))}
    assert pe == set(Q.avoiders_list(n, Q.b_c_patterns()))
    if n <= 4:
        assert len(pe) == len(list(itertools.permutations(range(n))))


def test_parse_pattern():
    assert Q.parse_pattern("2413") == (2, 4, 1, 3)
    assert Q.parse_pattern("1-10-2-3-4-5-6-7-8-9")[1] == 10
    with pytest.raises(ValueError):
        Q.parse_pattern("2213")


@given(st.permutations(range(1, 8)))
def test_separable_iff_avoids(perm):
    assert Q.is_separable(perm) == Q.avoids(perm, Q.B_P)


@given(st.integers(2, 7), st.integers(0, 10**6))
def test_disconnected_graphs_count_zero(n, seed):
    c = complement(random_connected_graph(n, random.Random(seed)))
    if not is_connected(c):
        assert Q.planeq_count(c) == 0 and Q.cyceq_count(c) == 0
