import random

import pytest

from distspec.enumeration import (
    all_connected_graphs,
    all_graphs,
    all_trees,
    canonical_form,
    canonical_graph,
    is_isomorphic,
)
from distspec.families import cycle, path, petersen, random_connected, star
from distspec.graph import Graph, GraphError, relabel

from oracles import brute_canonical, brute_connected_classes, connected_counts, otter_tree_counts, polya_graph_count

POLYA = [polya_graph_count(n) for n in range(1, 8)]
CONNECTED = connected_counts(7)
OTTER = otter_tree_counts(9)


def test_oracle_values_are_the_known_sequences():
    assert POLYA == [1, 2, 4, 11, 34, 156, 1044]
    assert CONNECTED == [1, 1, 2, 6, 21, 112, 853]
    assert OTTER == [1, 1, 1, 2, 3, 6, 11, 23, 47]


@pytest.mark.parametrize("n", range(1, 8))
def test_all_graph_counts(n):
    assert len(all_graphs(n)) == POLYA[n - 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_connected_counts(n):
    assert len(list(all_connected_graphs(n))) == CONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_connected_counts_brute_force(n):
    assert len(list(all_connected_graphs(n))) == brute_connected_classes(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_tree_counts(n):
    trees = list(all_trees(n))
    assert len(trees) == OTTER[n - 1]
    assert all(t.connected and t.m == n - 1 for t in trees)


@pytest.mark.parametrize("n", range(2, 8))
def test_bipartite_subset(n):
    bip = list(all_connected_graphs(n, bipartite=True))
    full = [g for g in all_connected_graphs(n) if g.bipartition is not None]
    assert {canonical_form(g) for g in bip} == {canonical_form(g) for g in full}


@pytest.mark.parametrize("n", range(1, 8))
def test_forms_pairwise_distinct(n):
    forms = [canonical_form(g) for g in all_graphs(n)]
    assert len(set(forms)) == len(forms)


def test_canonical_agrees_with_brute_force():
    for n in range(1, 6):
        for g in all_graphs(n):
            for seed in range(3):
                perm = list(range(n))
                random.Random(seed).shuffle(perm)
                h = relabel(g, perm)
                assert canonical_form(h) == canonical_form(g)
                assert brute_canonical(n, h.edges()) == brute_canonical(n, g.edges())


def test_canonical_invariant_under_relabelling_large():
    rng = random.Random(11)
    for g in [petersen(), random_connected(14, 0.3, seed=2), cycle(12)]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)
        assert is_isomorphic(relabel(g, perm), g)


def test_non_isomorphic():
    assert not is_isomorphic(path(4), star(4))
    assert not is_isomorphic(path(4), path(5))


def test_canonical_graph_is_fixed_point():
    g = petersen()
    c = canonical_graph(g)
    assert canonical_graph(c) == c


def test_order_limits():
    with pytest.raises(GraphError):
        all_graphs(9)
    with pytest.raises(GraphError):
        list(all_trees(13))
    with pytest.raises(GraphError):
        all_graphs(0)


def test_single_vertex():
    assert all_graphs(1) == (Graph(1, [0]),)


@pytest.mark.slow
def test_n8_counts():
    assert len(all_graphs(8)) == polya_graph_count(8) == 12346
    assert len(list(all_connected_graphs(8))) == connected_counts(8)[-1] == 11117
