import random

import pytest

from latkit import (
    BinomialIdeal,
    PreconditionError,
    WeightedDigraph,
    WeightedGraph,
    laplacian,
    laplacian_digraph,
    laplacian_report,
    sandpile_group,
    spanning_tree_count,
    toppling_ideal,
)

from exampledata import (
    DIRECTED_DEMO_LAPLACIAN,
    WEIGHTED_DEMO_HULL_PAIRS,
    WEIGHTED_DEMO_LAPLACIAN,
    WEIGHTED_DEMO_SANDPILE_ORDER,
    binomials,
    complete_graph,
    demo_graph,
    directed_demo,
    path_graph,
)


def test_demo_laplacian_entries():
    assert laplacian(demo_graph()).to_rows() == WEIGHTED_DEMO_LAPLACIAN


def test_demo_sandpile_group():
    K = sandpile_group(demo_graph())
    assert K.invariant_factors == (WEIGHTED_DEMO_SANDPILE_ORDER,)
    assert K.order == WEIGHTED_DEMO_SANDPILE_ORDER == spanning_tree_count(demo_graph())


def test_demo_toppling_ideal_reduced_basis():
    top = toppling_ideal(demo_graph())
    assert top == BinomialIdeal(4, binomials(WEIGHTED_DEMO_HULL_PAIRS))
    # the reduced basis is exactly the six listed binomials
    assert set(top.reduced_groebner()) == set(binomials(WEIGHTED_DEMO_HULL_PAIRS))


def test_demo_laplacian_report():
    rep = laplacian_report(demo_graph())
    assert rep.vanishing_condition
    assert rep.laplacian_ideal_degree == 67
    assert rep.toppling_ideal_degree == 67
    assert rep.sandpile_order == 67
    assert rep.hull_equals_toppling
    assert not rep.is_lattice
    assert rep.column_support_sizes == (3, 4, 4, 3)
    assert not rep.support_hypothesis_applies  # two vertices have degree 2
    assert rep.aci_applies
    assert rep.minimal_generators == 4


def test_complete_graph_tree_counts():
    for s, want in ((3, 3), (4, 16), (5, 125)):
        assert spanning_tree_count(complete_graph(s)) == want
    assert sandpile_group(complete_graph(4)).invariant_factors == (4, 4)


def test_complete_graph_report():
    rep = laplacian_report(complete_graph(5))
    assert rep.support_hypothesis_applies
    assert not rep.is_lattice
    assert rep.laplacian_ideal_degree == 125


def test_tree_has_trivial_sandpile():
    p = path_graph(4)
    assert spanning_tree_count(p) == 1
    assert sandpile_group(p).invariant_factors == ()
    assert not laplacian_report(p).aci_applies  # leaf vertices


def test_single_weighted_edge():
    edge = WeightedGraph(2, [(0, 1, 3)])
    assert spanning_tree_count(edge) == 3
    assert laplacian_report(edge).is_lattice


def test_digraph_laplacian():
    dg = directed_demo()
    DL = laplacian_digraph(dg)
    assert DL.to_rows() == DIRECTED_DEMO_LAPLACIAN
    assert all(sum(DL.row(i)) == 0 for i in range(4))
    assert not dg.is_strongly_connected()


def test_digraph_sink_row_is_zero():
    sink = WeightedDigraph(3, [(0, 2, 1), (1, 2, 2)])
    assert laplacian_digraph(sink).row(2) == (0, 0, 0)


def test_digraph_cycle_strongly_connected():
    cyc = WeightedDigraph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    assert cyc.is_strongly_connected()


def test_digraph_loop_handling():
    with pytest.raises(ValueError):
        WeightedDigraph(2, [(0, 0, 1)])
    WeightedDigraph(2, [(0, 0, 1), (0, 1, 1)], allow_loops=True)


def test_graph_validation():
    with pytest.raises(ValueError):
        WeightedGraph(3, [(0, 0, 1)])  # loop
    with pytest.raises(ValueError):
        WeightedGraph(3, [(0, 1, 0)])  # zero weight
    with pytest.raises(ValueError):
        WeightedGraph(3, [(0, 1, 1), (1, 0, 2)])  # duplicate edge
    with pytest.raises(ValueError):
        WeightedGraph(2, [(0, 5, 1)])  # vertex out of range


def test_disconnected_graph_rejected():
    disc = WeightedGraph(4, [(0, 1, 1), (2, 3, 1)])
    assert not disc.is_connected()
    for f in (sandpile_group, spanning_tree_count, toppling_ideal, laplacian_report):
        with pytest.raises(PreconditionError):
            f(disc)


def _tree_count_oracle(n, weights):
    # weighted deletion-contraction; independent of the Laplacian code
    def rec(n, wmap):
        if n == 1:
            return 1
        items = sorted(wmap.items())
        if not items:
            return 0
        (a, b), w = items[0]
        rest = dict(items[1:])
        deleted = rec(n, rest)
        merged = {}
        for (i, j), u in rest.items():
            i2 = a if i == b else i
            j2 = a if j == b else j
            if i2 == j2:
                continue
            i2 = i2 - 1 if i2 > b else i2
            j2 = j2 - 1 if j2 > b else j2
            key = (min(i2, j2), max(i2, j2))
            merged[key] = merged.get(key, 0) + u
        return deleted + w * rec(n - 1, merged)

    return rec(n, dict(weights))


def test_spanning_trees_match_deletion_contraction():
    rng = random.Random(20240817)
    trials = 0
    for _ in range(40):
        n = rng.randint(2, 6)
        wmap = {}
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.6:
                    wmap[(i, j)] = rng.randint(1, 5)
        G = WeightedGraph(n, [(i, j, w) for (i, j), w in wmap.items()])
        if not G.is_connected():
            continue
        assert spanning_tree_count(G) == _tree_count_oracle(n, wmap)
        trials += 1
    assert trials >= 20


def test_sandpile_degree_matches_tree_count_random():
    # degree of the saturated toppling ideal = weighted tree count
    from latkit import affine_degree, matrix_ideal, saturate_variables

    rng = random.Random(31415)
    for _ in range(8):
        n = rng.randint(3, 4)
        W = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                W[i][j] = W[j][i] = rng.randint(0, 3)
        for i in range(n - 1):
            if W[i][i + 1] == 0:
                W[i][i + 1] = W[i + 1][i] = 1
        G = WeightedGraph(
            n, [(i, j, W[i][j]) for i in range(n) for j in range(i + 1, n) if W[i][j]]
        )
        dim, deg = affine_degree(saturate_variables(matrix_ideal(laplacian(G))))
        assert dim == 1
        assert deg == spanning_tree_count(G)
