"""Closed-form degree computations for lattice and matrix ideals.

Each routine implements an exact arithmetic formula (group orders,
normalized volumes, gcds of minors); the Groebner-based
`ideal.affine_degree` serves as the independent oracle in the test
suite. Every division asserts exactness first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .exactmat import IntMatrix, determinant, minor_gcd, rank, smith_normal_form
from .ideal import matrix_ideal, vanishing_condition
from .lattice import Lattice, defining_matrix, grading_vector, torsion_order
from .volume import normalized_volume

__all__ = [
    "degree_toric",
    "degree_lattice",
    "degree_lattice_breakdown",
    "DegreeBreakdown",
    "degree_graded_dim1",
    "degree_dim1_from_basis",
    "Dim1BasisResult",
    "degree_matrix_ideal",
]


def _column_torsion(mat: IntMatrix) -> int:
    """|T(Z^rows / column lattice)|: product of the invariant factors."""
    out = 1
    for g in smith_normal_form(mat).gamma:
        out *= g
    return out


def degree_toric(V: IntMatrix) -> int:
    """Degree of the toric ideal of the point configuration given by the
    columns of V: normalized volume of conv(0, columns) divided by the
    torsion of the column group."""
    points = [(0,) * V.rows] + [V.column(j) for j in range(V.cols)]
    vol = normalized_volume(points)
    tor = _column_torsion(V)
    assert vol % tor == 0, "volume not divisible by column torsion"
    return vol // tor


@dataclass(frozen=True)
class DegreeBreakdown:
    """Degree of a lattice ideal together with the formula's factors.

    For a full-rank lattice the degree is the whole group order and the
    volume factors do not apply (None)."""

    degree: int
    torsion_order: int
    normalized_volume: int | None
    defining_torsion: int | None


def degree_lattice_breakdown(lat: Lattice) -> DegreeBreakdown:
    s = lat.ambient_dim
    r = lat.rank
    tor = torsion_order(lat)
    if r == s:
        return DegreeBreakdown(tor, tor, None, None)
    A = defining_matrix(lat)
    points = [(0,) * A.rows] + [A.column(j) for j in range(A.cols)]
    vol = normalized_volume(points)
    dtor = _column_torsion(A)
    assert (tor * vol) % dtor == 0, "defining torsion does not divide"
    return DegreeBreakdown(tor * vol // dtor, tor, vol, dtor)


def degree_lattice(lat: Lattice) -> int:
    return degree_lattice_breakdown(lat).degree


def degree_graded_dim1(lat: Lattice, d) -> int:
    """Degree of a graded dimension-1 lattice ideal:
    max(d) * torsion / gcd(d)."""
    d = tuple(int(x) for x in d)
    s = lat.ambient_dim
    if len(d) != s or any(x <= 0 for x in d):
        raise PreconditionError("grading must be a strictly positive vector")
    for g in lat.generators:
        if sum(a * b for a, b in zip(d, g)) != 0:
            raise PreconditionError("lattice is not homogeneous for the grading")
    if lat.rank != s - 1:
        raise PreconditionError(f"rank {lat.rank}, expected {s - 1}")
    num = max(d) * torsion_order(lat)
    den = gcd(*d)
    assert num % den == 0, "degree formula not integral"
    return num // den


@dataclass(frozen=True)
class Dim1BasisResult:
    """Signed maximal minors of a rank s-1 basis and the degree they
    determine: max over {v_i, 0} minus min over {v_i, 0}."""

    minors: tuple
    degree: int


def degree_dim1_from_basis(basis) -> Dim1BasisResult:
    vectors = [tuple(int(x) for x in v) for v in basis]
    if not vectors:
        raise PreconditionError("empty basis")
    s = len(vectors[0])
    if len(vectors) != s - 1 or any(len(v) != s for v in vectors):
        raise PreconditionError(f"need {s - 1} vectors of length {s}")
    cols = IntMatrix([[vectors[j][i] for j in range(s - 1)] for i in range(s)])
    if rank(cols) != s - 1:
        raise PreconditionError("basis is rank deficient")
    minors = []
    for i in range(s):
        sub = IntMatrix([cols.row(k) for k in range(s) if k != i])
        sign = -1 if i % 2 == 0 else 1
        minors.append(sign * determinant(sub))
    hi = max(max(minors), 0)
    lo = min(min(minors), 0)
    degree = hi - lo
    assert gcd(*minors) == torsion_order(Lattice(s, vectors)), (
        "minor gcd is not the torsion order"
    )
    return Dim1BasisResult(tuple(minors), degree)


def degree_matrix_ideal(L: IntMatrix) -> int:
    """Degree of a graded matrix ideal satisfying the vanishing
    condition: max(d) times the gcd of the (s-1)-minors."""
    if not L.is_square:
        raise PreconditionError("matrix ideal degree needs a square matrix")
    s = L.rows
    d = grading_vector(L)
    if d is None:
        raise PreconditionError("no positive grading for the columns")
    assert gcd(*d) == 1  # grading_vector returns a primitive vector
    if not vanishing_condition(matrix_ideal(L)):
        raise PreconditionError("vanishing condition fails")
    return max(d) * minor_gcd(L, s - 1)
