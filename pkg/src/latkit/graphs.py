"""Weighted graphs, Laplacians, sandpile groups, toppling ideals."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .exactmat import IntMatrix, adjoint, minor_gcd
from .ideal import BinomialIdeal, matrix_ideal, saturate_variables, is_lattice_ideal, \
    affine_degree, vanishing_condition, minimal_generator_count
from .lattice import FiniteAbelianGroup, Lattice, critical_group

__all__ = [
    "WeightedGraph",
    "WeightedDigraph",
    "laplacian",
    "laplacian_digraph",
    "sandpile_group",
    "spanning_tree_count",
    "toppling_ideal",
    "laplacian_report",
    "LaplacianReport",
]


class WeightedGraph:
    """Simple undirected graph with positive integer edge weights."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count, edges):
        if vertex_count < 1:
            raise ValueError("need at least one vertex")
        norm = {}
        for i, j, w in edges:
            i, j, w = int(i), int(j), int(w)
            if i == j:
                raise ValueError("loops are not allowed")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError("vertex index out of range")
            if w < 1:
                raise ValueError("weights must be positive")
            key = (min(i, j), max(i, j))
            if key in norm:
                raise ValueError(f"duplicate edge {key}")
            norm[key] = w
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted((i, j, w) for (i, j), w in norm.items())))

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    def degree(self, v):
        """Number of incident edges (neighbor count, not weight sum)."""
        return sum(1 for i, j, _ in self.edges if v in (i, j))

    def is_connected(self):
        if self.vertex_count == 1:
            return True
        adj = {v: set() for v in range(self.vertex_count)}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.vertex_count


class WeightedDigraph:
    """Directed graph with positive integer arc weights.

    Loops are rejected by default; underlying digraphs of matrices may
    carry them (allow_loops=True).
    """

    __slots__ = ("vertex_count", "arcs", "allow_loops")

    def __init__(self, vertex_count, arcs, allow_loops=False):
        if vertex_count < 1:
            raise ValueError("need at least one vertex")
        norm = {}
        for i, j, w in arcs:
            i, j, w = int(i), int(j), int(w)
            if i == j and not allow_loops:
                raise ValueError("loops are not allowed")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise ValueError("vertex index out of range")
            if w < 1:
                raise ValueError("weights must be positive")
            if (i, j) in norm:
                raise ValueError(f"duplicate arc ({i}, {j})")
            norm[(i, j)] = w
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "arcs", tuple(sorted((i, j, w) for (i, j), w in norm.items())))
        object.__setattr__(self, "allow_loops", allow_loops)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedDigraph is immutable")

    def is_strongly_connected(self):
        n = self.vertex_count
        if n == 1:
            return True
        fwd = {v: set() for v in range(n)}
        rev = {v: set() for v in range(n)}
        for i, j, _ in self.arcs:
            if i != j:
                fwd[i].add(j)
                rev[j].add(i)

        def reach(adj):
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            return len(seen) == n

        return reach(fwd) and reach(rev)


def laplacian(G: WeightedGraph) -> IntMatrix:
    """Weighted degree matrix minus adjacency matrix; symmetric with
    zero row and column sums."""
    n = G.vertex_count
    a = [[0] * n for _ in range(n)]
    for i, j, w in G.edges:
        a[i][j] -= w
        a[j][i] -= w
        a[i][i] += w
        a[j][j] += w
    return IntMatrix(a)


def laplacian_digraph(G: WeightedDigraph) -> IntMatrix:
    """Out-degree matrix minus adjacency matrix; zero row sums."""
    n = G.vertex_count
    a = [[0] * n for _ in range(n)]
    for i, j, w in G.arcs:
        if i == j:
            continue
        a[i][j] -= w
        a[i][i] += w
    return IntMatrix(a)


def _column_lattice(mat: IntMatrix) -> Lattice:
    return Lattice(mat.rows, [mat.column(j) for j in range(mat.cols)])


def sandpile_group(G: WeightedGraph) -> FiniteAbelianGroup:
    """Torsion of Z^s modulo the Laplacian's column lattice."""
    if not G.is_connected():
        raise PreconditionError("graph is not connected")
    return critical_group(_column_lattice(laplacian(G)))


def spanning_tree_count(G: WeightedGraph) -> int:
    """Weighted spanning-tree count; every cofactor of the Laplacian."""
    if not G.is_connected():
        raise PreconditionError("graph is not connected")
    L = laplacian(G)
    if G.vertex_count == 1:
        return 1
    adj = adjoint(L)
    entries = {adj.entry(i, j) for i in range(adj.rows) for j in range(adj.cols)}
    assert len(entries) == 1, "adjoint entries of a graph Laplacian must agree"
    count = entries.pop()
    assert count == sandpile_group(G).order
    assert count == minor_gcd(L, G.vertex_count - 1)
    return count


def toppling_ideal(G: WeightedGraph) -> BinomialIdeal:
    """Lattice ideal of the Laplacian columns: the saturation of the
    Laplacian matrix ideal."""
    if not G.is_connected():
        raise PreconditionError("graph is not connected")
    return saturate_variables(matrix_ideal(laplacian(G)))


@dataclass(frozen=True)
class LaplacianReport:
    """Bundle of the structural facts about a connected graph's
    Laplacian ideal and toppling ideal."""

    vanishing_condition: bool
    laplacian_ideal_degree: int
    toppling_ideal_degree: int
    sandpile_order: int
    hull_equals_toppling: bool
    is_lattice: bool
    column_support_sizes: tuple
    support_hypothesis_applies: bool  # every column binomial support >= 4
    aci_applies: bool  # every vertex degree >= 2
    minimal_generators: int


def laplacian_report(G: WeightedGraph) -> LaplacianReport:
    if not G.is_connected():
        raise PreconditionError("graph is not connected")
    s = G.vertex_count
    if s < 2:
        raise PreconditionError("report needs at least one edge")
    L = laplacian(G)
    I = matrix_ideal(L)
    vc = vanishing_condition(I)
    assert vc, "a connected graph Laplacian ideal satisfies the vanishing condition"
    dim_i, deg_i = affine_degree(I)
    top = toppling_ideal(G)
    dim_t, deg_t = affine_degree(top)
    order = sandpile_group(G).order
    assert dim_i == 1 and dim_t == 1
    assert deg_i == deg_t == order
    hull = saturate_variables(I)
    lattice_flag = is_lattice_ideal(I)
    supports = tuple(
        sum(1 for x in I.generators[j].vector if x != 0) for j in range(s)
    )
    support_ok = all(sz >= 4 for sz in supports)
    # column support is 1 + vertex degree on simple graphs, so the
    # degree-based reading (every vertex in >= 3 edges) must agree
    assert support_ok == all(G.degree(v) >= 3 for v in range(s))
    if support_ok:
        assert not lattice_flag, "support hypothesis predicts a non-lattice ideal"
    aci = all(G.degree(v) >= 2 for v in range(s))
    mu = minimal_generator_count(I, (1,) * s)
    if aci:
        assert mu == s, "generator count must equal the vertex count"
    return LaplacianReport(
        vanishing_condition=vc,
        laplacian_ideal_degree=deg_i,
        toppling_ideal_degree=deg_t,
        sandpile_order=order,
        hull_equals_toppling=(hull == top),
        is_lattice=lattice_flag,
        column_support_sizes=supports,
        support_hypothesis_applies=support_ok,
        aci_applies=aci,
        minimal_generators=mu,
    )
