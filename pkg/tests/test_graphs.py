"""Core graph type behavior, pinned against exhaustive hand enumeration."""

import pytest

from kinglab.graphs import (
    Digraph,
    GraphError,
    Tournament,
    random_tournament,
    rotation,
    rotation_is_automorphism,
)

# 5-vertex tournament where i beats j (i < j) iff i + j is odd
U5_EDGES = [
    (0, 1), (0, 3), (1, 2), (1, 4), (2, 0),
    (2, 3), (3, 1), (3, 4), (4, 0), (4, 2),
]


@pytest.fixture
def u5() -> Tournament:
    return Tournament.from_edges(5, U5_EDGES)


def cycle3() -> Tournament:
    return Tournament.from_edges(3, [(0, 1), (1, 2), (2, 0)])


def transitive3() -> Tournament:
    return Tournament.from_edges(3, [(0, 1), (0, 2), (1, 2)])


def test_construction_rejects_bad_input():
    with pytest.raises(GraphError):
        Digraph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Digraph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Digraph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Digraph.from_edges(3, [(0, 1), (0, 1)])
    with pytest.raises(GraphError):
        Digraph.from_edges(0, [])
    with pytest.raises(GraphError):
        Digraph(2, (0b10,))  # row count mismatch


def test_tournament_requires_completeness():
    with pytest.raises(GraphError):
        Tournament.from_edges(3, [(0, 1), (1, 2)])
    # and still rejects the digraph-level violations
    with pytest.raises(GraphError):
        Tournament.from_edges(2, [(0, 1), (1, 0)])


def test_edge_and_neighbor_queries(u5):
    assert u5.has_edge(2, 0)
    assert not u5.has_edge(0, 2)
    assert not u5.has_edge(0, 0)
    assert u5.out_neighbors(0) == {1, 3}
    assert u5.in_neighbors(0) == {2, 4}
    assert u5.out_degree(0) == 2
    assert u5.in_degree(0) == 2
    assert u5.edge_count == 10
    assert list(u5.edges()) == sorted(U5_EDGES)
    with pytest.raises(GraphError):
        u5.has_edge(0, 5)
    with pytest.raises(GraphError):
        u5.out_neighbors(-1)


def test_two_path_counts(u5):
    assert u5.count_two_paths(0, 2) == 1  # only 0 -> 1 -> 2
    assert u5.count_two_paths(2, 0) == 0
    with pytest.raises(GraphError):
        u5.count_two_paths(2, 2)


def test_kings(u5):
    assert u5.kings() == {0, 1, 2, 3, 4}
    assert u5.has_king()
    assert cycle3().kings() == {0, 1, 2}
    assert transitive3().kings() == {0}
    single = Tournament.from_edges(1, [])
    assert single.kings() == {0}
    assert single.is_king(0)


def test_strong_kings(u5):
    assert u5.strong_kings() == {0, 1, 2, 3, 4}
    assert cycle3().strong_kings() == {0, 1, 2}
    # 1 beats 2 but is not even a king, 0 has no dominators
    assert transitive3().strong_kings() == {0}
    assert not transitive3().is_strong_king(1)


def test_balanced_and_source(u5):
    assert u5.is_balanced()
    assert not transitive3().is_balanced()
    assert transitive3().is_source(0)
    assert not transitive3().is_source(1)
    assert not any(u5.is_source(v) for v in range(5))
    one = Tournament.from_edges(1, [])
    assert one.is_source(0)
    assert one.is_balanced()


def test_unique_king_iff_source():
    t = transitive3()
    assert t.kings() == {0} and t.is_source(0)
    for seed in range(30):
        t = random_tournament(7, seed)
        k = t.kings()
        sources = {v for v in range(7) if t.is_source(v)}
        assert (len(k) == 1) == (len(sources) == 1)
        if sources:
            assert k == sources


def test_dominating_sets():
    d5 = Tournament.from_edges(5, [
        (0, 1), (0, 3), (1, 2), (1, 3), (2, 0),
        (2, 3), (3, 4), (4, 0), (4, 1), (4, 2),
    ])
    assert d5.is_dominating_set([0, 4])
    assert not d5.is_dominating_set([0, 1])  # nobody beats 4
    assert not d5.is_dominating_set([3])
    assert d5.is_dominating_set(range(5))
    assert d5.dominating_pairs() == {(0, 4), (1, 4), (2, 4), (3, 4)}
    with pytest.raises(GraphError):
        d5.is_dominating_set([5])


def test_max_out_degree_vertex(u5):
    assert u5.max_out_degree_vertex() == 0  # regular, so smallest id wins
    assert cycle3().max_out_degree_vertex() == 0
    assert transitive3().max_out_degree_vertex() == 0
    t = Tournament.from_edges(3, [(1, 0), (1, 2), (2, 0)])
    assert t.max_out_degree_vertex() == 1


def test_flip_edge(u5):
    flipped = u5.flip_edge((2, 4))
    assert flipped.has_edge(2, 4) and not flipped.has_edge(4, 2)
    assert not flipped.is_strong_king(0)  # loses the two-path race against 2
    assert u5.flip_edge((0, 2)).is_strong_king(0)
    assert flipped.flip_edge((2, 4)) == u5
    assert u5.flip_edge((4, 2)) == flipped  # pair order does not matter
    with pytest.raises(GraphError):
        u5.flip_edge((1, 1))
    with pytest.raises(GraphError):
        u5.flip_edge((0, 7))


def test_destroying_edges(u5):
    # exhaustive flip sweep over all 10 pairs
    assert u5.destroying_edges(0) == {(0, 1), (0, 3), (1, 2), (1, 4), (2, 4), (3, 4)}
    assert all(len(u5.destroying_edges(v)) == 6 for v in range(5))
    # not currently a strong king -> empty by convention
    assert transitive3().destroying_edges(1) == frozenset()
    two = Tournament.from_edges(2, [(0, 1)])
    assert two.destroying_edges(0) == {(0, 1)}


def _destroying_by_full_predicate(t: Tournament, v: int):
    out = set()
    for a in range(t.n):
        for b in range(a + 1, t.n):
            if not t.flip_edge((a, b)).is_strong_king(v):
                out.add((a, b))
    return out


def _destroying_by_dominator_scan(t: Tournament, v: int):
    out = set()
    for a in range(t.n):
        for b in range(a + 1, t.n):
            f = t.flip_edge((a, b))
            ok = f.is_king(v) and all(
                f.count_two_paths(v, u) > f.count_two_paths(u, v)
                for u in f.in_neighbors(v)
            )
            if not ok:
                out.add((a, b))
    return out


def test_destroying_edges_routes_agree(u5):
    for t in (u5, random_tournament(7, 5), random_tournament(9, 8)):
        for v in range(t.n):
            if t.is_strong_king(v):
                expected = t.destroying_edges(v)
                assert _destroying_by_full_predicate(t, v) == expected
                assert _destroying_by_dominator_scan(t, v) == expected


def test_relabel(u5):
    assert u5.relabel(rotation(5, 3)) == u5
    swapped = u5.relabel((1, 0, 2, 3, 4))
    assert swapped.has_edge(1, 0) == u5.has_edge(0, 1)
    assert type(swapped) is Tournament
    with pytest.raises(GraphError):
        u5.relabel((0, 1, 2, 3))
    with pytest.raises(GraphError):
        u5.relabel((0, 0, 1, 2, 3))


def test_relabel_inverse(u5):
    perm = (3, 1, 4, 0, 2)
    inverse = [0] * 5
    for src, dst in enumerate(perm):
        inverse[dst] = src
    assert u5.relabel(perm).relabel(inverse) == u5


def test_rotation_automorphism(u5):
    assert all(rotation_is_automorphism(u5, i) for i in range(5))
    d5 = Tournament.from_edges(5, [
        (0, 1), (0, 3), (1, 2), (1, 3), (2, 0),
        (2, 3), (3, 4), (4, 0), (4, 1), (4, 2),
    ])
    assert not rotation_is_automorphism(d5, 1)
    with pytest.raises(GraphError):
        rotation(0, 1)


def test_random_tournament():
    a = random_tournament(16, 42)
    assert a == random_tournament(16, 42)
    assert a != random_tournament(16, 43)
    assert sum(a.out_degree(v) for v in range(16)) == 16 * 15 // 2
    assert random_tournament(1, 0).n == 1
    with pytest.raises(GraphError):
        random_tournament(0, 1)


def test_graphs_are_immutable(u5):
    with pytest.raises(Exception):
        u5.n = 7
    before = u5.rows
    u5.flip_edge((0, 1))
    assert u5.rows == before
