import itertools

import pytest

from clutterkit.clutter import Clutter, all_d_subsets


def test_complement_of_complete_is_empty():
    assert Clutter.complete(5, 2).complement() == Clutter.empty(5, 2)


def test_complement_recovers_tailed_triangle(tailed_triangle):
    given = Clutter.from_circuits(5, 2, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4)])
    assert given.complement() == tailed_triangle


def test_complement_is_involution(bipyramid):
    assert bipyramid.complement().complement() == bipyramid


def test_complement_counts():
    for n, d in [(4, 2), (5, 2), (5, 3), (6, 4)]:
        clutter = Clutter.from_circuits(n, d, list(all_d_subsets(n, d))[::2])
        comp = clutter.complement()
        assert len(clutter) + len(comp) == len(all_d_subsets(n, d))
        assert comp.complement() == clutter


def test_validation_rejects_bad_circuits():
    with pytest.raises(ValueError):
        Clutter(4, 2, ((1, 1),))
    with pytest.raises(ValueError):
        Clutter(4, 2, ((2, 1),))
    with pytest.raises(ValueError):
        Clutter(4, 2, ((1, 5),))
    with pytest.raises(ValueError):
        Clutter(4, 2, ((1, 2), (1, 2)))
    with pytest.raises(ValueError):
        Clutter(1, 2, ())
    with pytest.raises(ValueError):
        Clutter(80, 2, ())


def test_is_clique_complete_and_removed(bipyramid):
    assert Clutter.complete(5, 3).is_clique((1, 2, 3, 4, 5))
    assert not bipyramid.is_clique((1, 3, 4, 5))
    assert bipyramid.is_clique((2, 3, 4, 5))
    assert bipyramid.is_clique((1,))  # below circuit size
    with pytest.raises(ValueError):
        bipyramid.is_clique(())


def test_maximal_cliques_containing():
    k53 = Clutter.complete(5, 3)
    assert k53.maximal_cliques_containing((1, 2, 5)) == [(1, 2, 3, 4, 5)]

    c3 = k53.without((1, 2, 5)).without((1, 3, 5)).without((1, 4, 5))
    assert c3.maximal_cliques_containing((2, 3, 4)) == [(1, 2, 3, 4), (2, 3, 4, 5)]

    lonely = Clutter.from_circuits(5, 3, [(1, 4, 5)])
    assert lonely.maximal_cliques_containing((1, 4, 5)) == [(1, 4, 5)]

    with pytest.raises(ValueError):
        k53.maximal_cliques_containing((9, 9, 9))


def test_exposed_status_examples():
    partial = Clutter.complete(5, 3).without((1, 2, 5)).without((1, 3, 5))
    status = partial.exposed_status((1, 2, 3))
    assert status.exposed and status.clique == (1, 2, 3, 4) and status.proper

    c3 = partial.without((1, 4, 5))
    assert not c3.exposed_status((2, 3, 4)).exposed

    status = partial.exposed_status((1, 4, 5))
    assert status.exposed and status.clique == (1, 4, 5) and not status.proper


def test_exposed_matches_unique_maximal_clique_exhaustively():
    # optimized closure rule vs brute-force clique enumeration
    for n in range(2, 6):
        pairs = all_d_subsets(n, 2)
        for gmask in range(1 << len(pairs)):
            graph = Clutter(n, 2, tuple(pairs[i] for i in range(len(pairs)) if gmask >> i & 1))
            for e in graph.circuits:
                expect = len(graph.maximal_cliques_containing(e)) == 1
                assert graph.exposed_status(e).exposed == expect


def test_maximal_cliques_are_incomparable_and_contain_circuit(bipyramid):
    for e in bipyramid.circuits:
        cliques = bipyramid.maximal_cliques_containing(e)
        for k in cliques:
            assert set(e) <= set(k)
        for a, b in itertools.combinations(cliques, 2):
            assert not set(a) <= set(b) and not set(b) <= set(a)


def test_clique_complex_of_complete_clutter_is_simplex():
    complex_ = Clutter.complete(4, 3).clique_complex()
    assert complex_.facets == ((1, 2, 3, 4),)


def test_clique_complex_facets_of_graph(tailed_triangle):
    assert tailed_triangle.clique_complex().facets == ((1, 2), (2, 5), (3, 4, 5))


def test_clique_complex_has_full_low_skeleton():
    clutter = Clutter.from_circuits(5, 3, [(1, 2, 3)])
    complex_ = clutter.clique_complex()
    for pair in all_d_subsets(5, 2):
        assert complex_.has_face(pair)
    assert complex_.has_face((1, 2, 3))
    assert not complex_.has_face((1, 2, 4))


def test_degree_one_clutters():
    points = Clutter.from_circuits(4, 1, [(2,), (3,)])
    assert points.is_clique((2, 3))
    status = points.exposed_status((2,))
    assert status.exposed and status.clique == (2, 3) and status.proper
    empty = Clutter.empty(3, 1)
    assert empty.clique_complex().facets == ((),)


def test_induced_subclutter(bipyramid):
    sub = bipyramid.induced((2, 3, 4, 5))
    assert sub.circuits == ((2, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5))
