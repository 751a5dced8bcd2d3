import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from contractad_lab.graph import (
    Graph,
    IntPolynomial,
    acyclic_orientation_count,
    chromatic_polynomial,
    complement,
    complete,
    complete_multipartite,
    contract,
    contract_masks,
    cycle,
    enumerate_connected_graphs,
    graph_partitions,
    induced,
    is_connected,
    mask_of,
    parse_graph_spec,
    partition_masks,
    path,
    random_connected_graph,
    read_edge_list,
    star,
    tube_masks,
    tubes,
    write_edge_list,
)


@st.composite
def connected_graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.3, 0.5, 0.8]))
    return random_connected_graph(n, random.Random(seed), p)


def test_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    assert Graph(0, ()) == Graph.from_edges(0, [])


def test_connectivity():
    assert is_connected(path(3))
    assert not is_connected(complement(path(3)))
    assert is_connected(complete_multipartite([2, 2]))
    assert not is_connected(Graph(0, ()))


def test_tubes_examples():
    assert sorted(map(sorted, tubes(path(3)))) == sorted([[0], [1], [2], [0, 1], [1, 2], [0, 1, 2]])
    assert len(tubes(complete(3))) == 7
    assert len(tubes(cycle(4))) == 13
    with pytest.raises(ValueError):
        tubes(complement(path(3)))


@pytest.mark.parametrize("n", range(1, 9))
def test_path_tube_and_partition_counts(n):
    assert len(tubes(path(n))) == n * (n + 1) // 2
    assert sum(1 for _ in graph_partitions(path(n))) == 2 ** (n - 1)


def test_tubes_match_networkx(small_graphs):
    for g in small_graphs[:200]:
        assert set(tubes(g)) == set(oracles.brute_tubes(g))


def test_induced():
    assert induced(cycle(4), {0, 1, 2}) == path(3)
    for s in itertools.combinations(range(4), 2):
        assert induced(complete(4), s) == complete(2)
    k = complete_multipartite([2, 2, 1])
    hub = [v for v in range(5) if k.adj[v] == k.full_mask & ~(1 << v)]
    assert len(hub) == 1
    rest = induced(k, set(range(5)) - set(hub))
    assert nx.is_isomorphic(oracles.to_nx(rest), oracles.to_nx(cycle(4)))
    with pytest.raises(ValueError):
        induced(path(3), set())


def test_contract_examples():
    assert contract(path(5), [{0, 1}, {2}, {3, 4}]) == path(3)
    g = cycle(6)
    assert contract(g, [{i} for i in range(6)]) == g
    assert contract(g, [{0, 4, 5}, {1}, {2}, {3}]) == cycle(4)
    with pytest.raises(ValueError):
        contract(path(3), [{0, 2}, {1}])  # not a tube
    with pytest.raises(ValueError):
        contract(path(3), [{0, 1}, {1, 2}])  # overlap
    with pytest.raises(ValueError):
        contract(path(3), [{0, 1}])  # misses a vertex


def test_graph_partition_examples():
    assert sum(1 for _ in graph_partitions(path(3))) == 4
    assert sum(1 for _ in graph_partitions(complete(3))) == 5
    assert sum(1 for _ in graph_partitions(cycle(4))) == 12
    with pytest.raises(ValueError):
        next(graph_partitions(path(11)))


def test_graph_partitions_match_bruteforce(small_graphs):
    for g in small_graphs[::7]:
        ours = sorted(sorted(sorted(b) for b in p) for p in graph_partitions(g))
        ref = sorted(sorted(sorted(b) for b in p) for p in oracles.brute_graph_partitions(g))
        assert ours == ref


def test_partitions_unique_and_ordered(small_graphs):
    for g in small_graphs[::5]:
        parts = list(partition_masks(g))
        assert len(parts) == len(set(parts))
        assert parts == list(partition_masks(g))  # deterministic
        for p in parts:
            assert list(p) == sorted(p, key=lambda b: b & -b)


def test_complement_examples():
    assert complement(complete(4)).num_edges() == 0
    assert sorted(complement(complete_multipartite([2, 2])).edges()) in ([(0, 1), (2, 3)], [(0, 2), (1, 3)])
    assert sorted(complement(path(4)).edges()) == [(0, 2), (0, 3), (1, 3)]


def test_chromatic_examples():
    q3 = chromatic_polynomial(complete(3))
    for q in range(-3, 6):
        assert q3(q) == q * (q - 1) * (q - 2)
        assert chromatic_polynomial(path(3))(q) == q * (q - 1) ** 2
        assert chromatic_polynomial(cycle(4))(q) == (q - 1) ** 4 + (q - 1)
    assert isinstance(q3, IntPolynomial)
    assert q3.degree() == 3


def test_acyclic_examples():
    assert acyclic_orientation_count(complete(3)) == 6
    assert acyclic_orientation_count(cycle(4)) == 14
    assert acyclic_orientation_count(path(3)) == 4


def test_acyclic_matches_orientation_enumeration(small_graphs):
    for g in small_graphs[::3]:
        assert acyclic_orientation_count(g) == oracles.brute_acyclic(g)


def test_families():
    assert complete_multipartite([1, 1, 1, 1]) == complete(4)
    assert nx.is_isomorphic(oracles.to_nx(complete_multipartite([3, 1])), oracles.to_nx(star(3)))
    assert cycle(1) == path(1) and cycle(2) == path(2)
    assert cycle(3) == complete(3)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)])
def test_enumerate_connected(n, count):
    graphs = list(enumerate_connected_graphs(n))
    assert len(graphs) == count
    assert len(set(graphs)) == count
    assert all(is_connected(g) for g in graphs)


def test_enumerate_three_vertices():
    gs = list(enumerate_connected_graphs(3))
    assert sum(g.num_edges() == 2 for g in gs) == 3
    assert sum(g == complete(3) for g in gs) == 1


def test_edge_list_roundtrip():
    g = cycle(5)
    assert read_edge_list(write_edge_list(g)) == g
    assert read_edge_list("3\n0 1\n# comment\n1 2\n") == path(3)
    with pytest.raises(ValueError):
        read_edge_list("3\n1 0\n")


def test_parse_graph_spec(tmp_path):
    assert parse_graph_spec("P5") == path(5)
    assert parse_graph_spec("C6") == cycle(6)
    assert parse_graph_spec("K4") == complete(4)
    assert parse_graph_spec("K2,2,1") == complete_multipartite([2, 2, 1])
    assert parse_graph_spec("~P4") == complement(path(4))
    f = tmp_path / "g.txt"
    f.write_text(write_edge_list(cycle(4)))
    assert parse_graph_spec(str(f)) == cycle(4)
    for bad in ["X3", "P", "Pfoo", "P3,3"]:
        with pytest.raises(ValueError):
            parse_graph_spec(bad)


@given(connected_graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(connected_graphs(), st.randoms(use_true_random=False))
def test_contraction_stays_connected(g, r):
    parts = list(partition_masks(g))
    blocks = r.choice(parts)
    q, _ = contract_masks(g, blocks)
    assert is_connected(q)
    assert q.n == len(blocks)


@given(connected_graphs(max_n=5), st.randoms(use_true_random=False))
def test_contract_then_induce_commutes(g, r):
    # for tubes G within H: (g|H) / G  ==  (g / G) | (image of H)
    ts = tube_masks(g)
    H = r.choice(ts)
    inner = [t for t in ts if t & ~H == 0]
    G = r.choice(inner)
    blocks = [G] + [1 << v for v in range(g.n) if not G >> v & 1]
    q, order = contract_masks(g, blocks)
    image = mask_of(i for i, b in enumerate(order) if b & H)
    lhs = induced(q, image)
    h = induced(g, H)
    pos = {v: i for i, v in enumerate(v for v in range(g.n) if H >> v & 1)}
    local = [mask_of(pos[v] for v in range(g.n) if b >> v & 1) for b in order if b & H]
    rhs, _ = contract_masks(h, local)
    assert lhs == rhs
