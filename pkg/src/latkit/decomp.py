"""Symbolic primary decomposition of graded dimension-1 lattice ideals.

Components are indexed by characters of the torsion group rather than
materialized over cyclotomic fields: each component is the kernel of
the monomial map t_i -> zeta_1^{lambda_1 p_1i} ... x^{d_i}, and the
residue tuple lambda determines it completely.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd, lcm

from .errors import PreconditionError
from .exactmat import smith_normal_form
from .lattice import Lattice, critical_group, grading_vector, p_saturation, torsion_order

__all__ = [
    "CharacterComponent",
    "GaloisOrbit",
    "GaloisOrbitReport",
    "symbolic_decomposition",
    "rational_orbit_report",
    "component_count",
]


@dataclass(frozen=True, eq=False)
class CharacterComponent:
    """One primary component of a graded dimension-1 lattice ideal.

    residues: (lambda_1 mod gamma_1, ..., lambda_{s-1} mod gamma_{s-1})
    character_rows: the first s-1 rows of the unimodular row transform
        of the Smith normal form; row k and residue k together give the
        root-of-unity exponent lambda_k * p_ki of the variable t_i
    grading: the positive primitive vector d orthogonal to the lattice

    Two components of the same decomposition are equal exactly when
    their residue tuples are equal.
    """

    residues: tuple
    torsion_factors: tuple
    character_rows: tuple
    grading: tuple

    def __eq__(self, other):
        if not isinstance(other, CharacterComponent):
            return NotImplemented
        return self.residues == other.residues

    def __hash__(self):
        return hash(self.residues)

    def monomial_image(self, i):
        """Exponent data of the image of t_i: a tuple of root-of-unity
        exponents (lambda_k p_ki mod gamma_k) and the power d_i."""
        roots = tuple(
            (self.residues[k] * self.character_rows[k][i]) % self.torsion_factors[k]
            for k in range(len(self.residues))
        )
        return roots, self.grading[i]

    @property
    def is_toric(self):
        """The trivial character cuts out the toric component."""
        return not any(self.residues)


def _snf_character_data(lat: Lattice):
    """Shared setup: invariant factors gamma_1..gamma_{s-1}, the first
    s-1 rows of P, and the positive grading read off the last row."""
    s = lat.ambient_dim
    if lat.rank != s - 1:
        raise PreconditionError(
            f"lattice rank is {lat.rank}, need {s - 1} for a dimension-1 decomposition"
        )
    dec = smith_normal_form(lat.generator_matrix())
    gammas = tuple(g for g in dec.gamma if g != 0)
    assert len(gammas) == s - 1
    rows = tuple(dec.P.row(k) for k in range(s - 1))
    last = dec.P.row(s - 1)
    if all(x > 0 for x in last):
        d = last
    elif all(x < 0 for x in last):
        d = tuple(-x for x in last)
    else:
        raise PreconditionError("lattice admits no positive grading")
    check = grading_vector(lat.generator_matrix())
    assert check == d, "grading must match the last transform row up to sign"
    return gammas, rows, d


def symbolic_decomposition(lat: Lattice):
    """All primary components of the lattice ideal, one per character
    of the torsion group; the count is exactly the torsion order."""
    gammas, rows, d = _snf_character_data(lat)
    comps = [
        CharacterComponent(
            residues=res,
            torsion_factors=gammas,
            character_rows=rows,
            grading=d,
        )
        for res in product(*(range(g) for g in gammas))
    ]
    assert len(comps) == critical_group(lat).order
    assert len(set(comps)) == len(comps)
    assert sum(1 for c in comps if c.is_toric) == 1
    return comps


@dataclass(frozen=True)
class GaloisOrbit:
    representative: tuple  # residue tuple of one member
    members: tuple         # all residue tuples, sorted
    size: int
    degree: int


@dataclass(frozen=True)
class GaloisOrbitReport:
    """Rational primary structure: conjugate components grouped into
    orbits of the unit-group action on the character group.

    Per-orbit degrees use orbit size times max(d)/gcd(d); that formula
    is derived from the examples and the total-degree identity, not
    stated in general, and reports carry that caveat.
    """

    torsion_order: int
    invariant_factors: tuple
    grading: tuple
    orbits: tuple
    degree_formula: str = field(default="derived", repr=False)

    @property
    def total_degree(self):
        return sum(o.degree for o in self.orbits)

    def to_report(self):
        """Plain-type report dict (JSON assembly happens at the CLI)."""
        return {
            "torsion_order": self.torsion_order,
            "invariant_factors": list(self.invariant_factors),
            "grading": list(self.grading),
            "component_count": self.torsion_order,
            "orbit_count": len(self.orbits),
            "total_degree": self.total_degree,
            "degree_formula": self.degree_formula,
            "orbits": [
                {
                    "representative": list(o.representative),
                    "size": o.size,
                    "degree": o.degree,
                }
                for o in self.orbits
            ],
        }


def rational_orbit_report(lat: Lattice) -> GaloisOrbitReport:
    """Group the symbolic components into Galois orbits: two characters
    are conjugate when a unit k mod lcm(gamma) rescales one to the
    other. Orbit degrees sum to the graded dimension-1 degree."""
    gammas, rows, d = _snf_character_data(lat)
    modulus = lcm(*gammas) if gammas else 1
    units = [k for k in range(1, modulus + 1) if gcd(k, modulus) == 1]

    per_comp = max(d) // gcd(*d)
    seen = set()
    orbits = []
    for res in product(*(range(g) for g in gammas)):
        if res in seen:
            continue
        orbit = sorted(
            {
                tuple((k * r) % g for r, g in zip(res, gammas))
                for k in units
            }
        )
        seen.update(orbit)
        orbits.append(
            GaloisOrbit(
                representative=orbit[0],
                members=tuple(orbit),
                size=len(orbit),
                degree=len(orbit) * per_comp,
            )
        )

    gamma = 1
    for g in gammas:
        gamma *= g
    assert sum(o.size for o in orbits) == gamma
    report = GaloisOrbitReport(
        torsion_order=gamma,
        invariant_factors=tuple(g for g in gammas if g > 1),
        grading=d,
        orbits=tuple(orbits),
    )
    assert report.total_degree == gamma * per_comp
    return report


def component_count(lat: Lattice, characteristic: int = 0) -> int:
    """Number of primary components over an algebraically closed field
    of the given characteristic. Positive characteristic removes the
    p-part of every invariant factor; no modular ideal arithmetic is
    involved."""
    if lat.rank != lat.ambient_dim - 1:
        raise PreconditionError("component count needs a corank-1 lattice")
    if characteristic == 0:
        return torsion_order(lat)
    return torsion_order(p_saturation(lat, characteristic))
