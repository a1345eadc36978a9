"""Exact normalized volumes of lattice polytopes.

The volume is computed in five steps: translate the points, pick a
saturated-lattice basis of the translated span, rewrite the points in
those coordinates (making the polytope full-dimensional over Z), build
an incremental triangulation, and sum determinants. All arithmetic is
integer or Fraction; nothing is approximated.

The returned quantity is the lattice-normalized volume: dim! times the
Euclidean volume in the chosen coordinates. A single point counts 1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .exactmat import IntMatrix, determinant, integer_kernel, rank
from .lattice import Lattice, saturation

__all__ = ["LatticePolytope", "normalized_volume"]


def _solve_exact(basis_rows, target):
    """Coefficients x with sum x_i basis_rows[i] = target, exact.

    Gaussian elimination over Fractions; raises if inconsistent.
    """
    r = len(basis_rows)
    m = len(target)
    aug = [[Fraction(basis_rows[i][j]) for i in range(r)] + [Fraction(target[j])] for j in range(m)]
    pivots = []
    row = 0
    for col in range(r):
        sel = None
        for k in range(row, m):
            if aug[k][col]:
                sel = k
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for k in range(m):
            if k != row and aug[k][col]:
                f = aug[k][col]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[row])]
        pivots.append(col)
        row += 1
    x = [Fraction(0)] * r
    for idx, col in enumerate(pivots):
        x[col] = aug[idx][r]
    for k in range(row, m):
        if aug[k][r]:
            raise PreconditionError("point outside the lattice span")
    return x


def _facet_normal(vertices, points, interior):
    """Primitive integer inward-violating normal (n, c) with n.x <= c
    inside, for the facet spanned by the given vertex indices."""
    vs = [points[i] for i in vertices]
    r = len(vs[0])
    base = vs[0]
    diffs = [tuple(v[j] - base[j] for j in range(r)) for v in vs[1:]]
    if diffs:
        kern = integer_kernel(IntMatrix(diffs))
        assert len(kern) == 1, "facet vertices do not span a hyperplane"
        n = tuple(kern[0])
    else:
        n = (1,)
    c = sum(a * b for a, b in zip(n, base))
    side = sum(a * b for a, b in zip(n, interior))
    assert side != c, "interior reference point lies on a facet plane"
    if side > c:
        n = tuple(-x for x in n)
        c = -c
    return n, c


def _simplex_volume(vertex_points, apex):
    r = len(apex)
    rows = [tuple(v[j] - apex[j] for j in range(r)) for v in vertex_points]
    return abs(determinant(IntMatrix(rows)))


def _incremental_volume(points):
    """Normalized volume of full-dimensional conv(points) in Z^r."""
    r = len(points[0])
    # greedy affinely independent starting simplex
    chosen = [0]
    for idx in range(1, len(points)):
        if len(chosen) == r + 1:
            break
        cand = chosen + [idx]
        base = points[cand[0]]
        diffs = [tuple(points[i][j] - base[j] for j in range(r)) for i in cand[1:]]
        if rank(IntMatrix(diffs)) == len(diffs):
            chosen.append(idx)
    assert len(chosen) == r + 1, "points are not full-dimensional"

    interior = tuple(
        sum(Fraction(points[i][j]) for i in chosen) / (r + 1) for j in range(r)
    )
    volume = _simplex_volume([points[i] for i in chosen[:-1]], points[chosen[-1]])
    assert volume > 0

    facets = []
    for drop in range(r + 1):
        verts = frozenset(chosen[:drop] + chosen[drop + 1:])
        n, c = _facet_normal(sorted(verts), points, interior)
        facets.append((verts, n, c))

    for idx in range(len(points)):
        if idx in chosen:
            continue
        p = points[idx]
        visible = []
        for f in facets:
            verts, n, c = f
            if sum(a * b for a, b in zip(n, p)) > c:
                visible.append(f)
        if not visible:
            continue
        for verts, _, _ in visible:
            volume += _simplex_volume([points[i] for i in sorted(verts)], p)
        # horizon ridges: (r-1)-subsets appearing in exactly one visible facet
        ridge_count = {}
        for verts, _, _ in visible:
            for drop in verts:
                ridge = verts - {drop}
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        visible_set = {f[0] for f in visible}
        facets = [f for f in facets if f[0] not in visible_set]
        for ridge, count in ridge_count.items():
            if count != 1:
                continue
            verts = ridge | {idx}
            n, c = _facet_normal(sorted(verts), points, interior)
            facets.append((verts, n, c))
    return volume


class LatticePolytope:
    """Convex hull of finitely many integer points, with exact volume."""

    __slots__ = ("points", "_volume")

    def __init__(self, points):
        pts = []
        seen = set()
        for p in points:
            t = tuple(int(x) for x in p)
            if t not in seen:
                seen.add(t)
                pts.append(t)
        if not pts:
            raise PreconditionError("a polytope needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise PreconditionError("points must share one ambient dimension")
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "_volume", None)

    def __setattr__(self, name, value):
        raise AttributeError("LatticePolytope is immutable")

    @property
    def ambient_dim(self):
        return len(self.points[0])

    def translated_coordinates(self):
        """Points rewritten in a saturated basis of their affine span.

        Returns (dimension, coordinate tuples); the originals are first
        translated by points[0]. Coordinates are integers because the
        basis lattice is saturated.
        """
        base = self.points[0]
        diffs = [tuple(a - b for a, b in zip(p, base)) for p in self.points[1:]]
        diffs = [d for d in diffs if any(d)]
        if not diffs:
            return 0, [()] * len(self.points)
        lat = saturation(Lattice(self.ambient_dim, diffs))
        basis = lat.basis()
        coords = [(0,) * lat.rank]
        for p in self.points[1:]:
            d = tuple(a - b for a, b in zip(p, base))
            x = _solve_exact(basis, d)
            assert all(v.denominator == 1 for v in x), "non-integral coordinate"
            coords.append(tuple(int(v) for v in x))
        return lat.rank, coords

    def normalized_volume(self):
        """dim! times the Euclidean volume in saturated-lattice
        coordinates; 1 for a single point."""
        if self._volume is not None:
            return self._volume
        dim, coords = self.translated_coordinates()
        if dim == 0:
            vol = 1
        elif dim == 1:
            values = [c[0] for c in coords]
            vol = max(values) - min(values)
        else:
            vol = _incremental_volume(coords)
        object.__setattr__(self, "_volume", vol)
        return vol


def normalized_volume(points):
    return LatticePolytope(points).normalized_volume()
