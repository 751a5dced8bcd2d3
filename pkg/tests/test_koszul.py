import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from contractad_lab import koszul as K
from contractad_lab.graph import complete, cycle, enumerate_connected_graphs, path
from contractad_lab.hamiltonian import hc


def _dense(c, d):
    rows, cols = len(c.bases[d - 1]), len(c.bases[d])
    m = sympy.zeros(rows, cols)
    for (r, col), x in c.diffs[d].items():
        m[r, col] = sympy.Rational(x.numerator, x.denominator)
    return m


def test_ham_path2():
    c = K.build_ham_koszul(path(2))
    assert c.bases[0] == [((0, 1),), ((1, 0),)]
    assert c.bases[1] == [((0,), (1,)), ((1,), (0,))]
    assert K.homology_ranks(c) == [0, 0]


def test_ham_path1():
    c = K.build_ham_koszul(path(1))
    assert c.dims() == [1]
    assert K.homology_ranks(c) == [1]


def test_ham_path3_basis():
    c = K.build_ham_koszul(path(3))
    assert c.dims() == [2, 8, 6]
    assert c.euler_characteristic() == 0
    assert K.homology_ranks(c) == [0, 0, 0]


def test_ham_merge_signs():
    c = K.build_ham_koszul(path(3))
    col = c.bases[2].index(((0,), (1,), (2,)))
    entries = {c.bases[1][r]: x for (r, cc), x in c.diffs[2].items() if cc == col}
    assert entries == {((0, 1), (2,)): 1, ((0,), (1, 2)): -1}


def test_cycham_path2():
    c = K.build_cycham_koszul(path(2))
    assert sorted(c.bases[0]) == [((0, 1),), ((1, 0),)]
    assert c.bases[1] == [((0,), (1,))]
    col = {c.bases[0][r]: x for (r, _), x in c.diffs[1].items()}
    assert col == {((0, 1),): 1, ((1, 0),): -1}
    assert K.homology_ranks(c) == [1, 0]


def test_cycham_examples():
    assert K.homology_ranks(K.build_cycham_koszul(complete(3))) == [2, 0, 0]
    assert K.homology_ranks(K.build_cycham_koszul(path(3))) == [0, 0, 0]
    assert K.homology_ranks(K.build_cycham_koszul(path(1))) == [1]


def test_canonical_blocks_sign():
    assert K.canonical_blocks(((1,), (0,))) == (((0,), (1,)), -1)
    assert K.canonical_blocks(((2,), (0,), (1,))) == (((0,), (1,), (2,)), 1)
    assert K.canonical_blocks(((0, 3), (1,), (2,))) == (((0, 3), (1,), (2,)), 1)


def test_zero_complex():
    c = K.RationalChainComplex([[("x",)]], {})
    assert K.homology_ranks(c) == [1]


def test_non_complex_rejected():
    c = K.RationalChainComplex([["a"], ["b"], ["c"]], {1: {(0, 0): K.Fraction(1)}, 2: {(0, 0): K.Fraction(1)}})
    assert not c.check_square_zero()
    with pytest.raises(ValueError):
        K.homology_ranks(c)


def test_size_limit():
    with pytest.raises(ValueError):
        K.build_ham_koszul(path(7))
    with pytest.raises(ValueError):
        K.build_ham_koszul(K.Graph.from_edges(2, []))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ranks_match_sympy(n):
    for g in enumerate_connected_graphs(n):
        for c in (K.build_ham_koszul(g), K.build_cycham_koszul(g)):
            for d in range(1, len(c.bases)):
                assert c.rank(d) == _dense(c, d).rank()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_koszul_small(n):
    for g in enumerate_connected_graphs(n):
        ham = K.build_ham_koszul(g)
        cyc = K.build_cycham_koszul(g)
        assert ham.check_square_zero() and cyc.check_square_zero()
        assert K.homology_ranks(ham) == ([1] if n == 1 else [0] * len(ham.bases))
        assert K.homology_ranks(cyc) == [hc(g)] + [0] * (len(cyc.bases) - 1)


def test_components_exact_and_euler():
    for g in enumerate_connected_graphs(4):
        for sigma, c in K.ham_koszul_components(g):
            assert c.euler_characteristic() == 0
            assert sum(K.homology_ranks(c)) == 0
        for tau, c in K.cycham_koszul_components(g):
            full = len(K.cyclic_adjacent_positions(g, tau)) == g.n
            assert c.euler_characteristic() == (1 if full else 0)


def test_cycham_sample_n6():
    rng = random.Random(2)
    g = rng.choice([h for h in enumerate_connected_graphs(6) if h.num_edges() <= 7])
    c = K.build_cycham_koszul(g)
    assert K.homology_ranks(c) == [hc(g)] + [0] * (len(c.bases) - 1)


def test_dump_format():
    text = K.build_ham_koszul(path(2)).dump()
    lines = text.splitlines()
    assert lines
    for ln in lines:
        d, r, c, x = ln.split()
        num, den = x.split("/")
        int(d), int(r), int(c), int(num), int(den)


matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=1, max_size=6)
)


@given(matrices)
def test_rank_routes_agree(rows):
    expect = sympy.Matrix(rows).rank()
    assert K.bareiss_rank([list(r) for r in rows]) == expect
    assert K.sparse_rank([{j: x for j, x in enumerate(r) if x} for r in rows]) == expect


@given(matrices, st.integers(1, 5))
def test_rank_with_fractions(rows, den):
    scaled = [[K.Fraction(x, den) for x in r] for r in rows]
    assert K.sparse_rank([dict(enumerate(r)) for r in scaled]) == sympy.Matrix(rows).rank()
