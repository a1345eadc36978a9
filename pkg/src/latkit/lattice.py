"""Integer lattices in Z^s and their finite quotient invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import PreconditionError
from .exactmat import (
    IntMatrix,
    adjoint,
    determinant,
    hermite_rows,
    integer_kernel,
    smith_normal_form,
)

__all__ = [
    "Lattice",
    "FiniteAbelianGroup",
    "critical_group",
    "torsion_order",
    "saturation",
    "defining_matrix",
    "grading_vector",
    "positive_lattice_vector",
    "homogenize_vector",
    "homogenize_lattice",
    "p_saturation",
]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant-factor form: each factor >= 2 and divides the next."""

    invariant_factors: tuple

    def __post_init__(self):
        f = self.invariant_factors
        if any(x < 2 for x in f):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(f, f[1:])):
            raise ValueError("factors must form a divisibility chain")

    @property
    def order(self) -> int:
        out = 1
        for x in self.invariant_factors:
            out *= x
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors


class Lattice:
    """Subgroup of Z^s given by a finite (possibly redundant) generator list."""

    __slots__ = ("ambient_dim", "generators", "_hnf", "_rank")

    def __init__(self, ambient_dim, generators):
        if ambient_dim < 1:
            raise ValueError("ambient dimension must be >= 1")
        gens = tuple(tuple(int(x) for x in g) for g in generators)
        if any(len(g) != ambient_dim for g in gens):
            raise ValueError("generator length must equal the ambient dimension")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_hnf", None)
        object.__setattr__(self, "_rank", None)

    def __setattr__(self, name, value):
        raise AttributeError("Lattice is immutable")

    def basis(self) -> tuple:
        """Hermite-form basis rows; canonical for the lattice."""
        if self._hnf is None:
            object.__setattr__(
                self, "_hnf", hermite_rows(self.generators, self.ambient_dim)
            )
        return self._hnf

    @property
    def rank(self) -> int:
        if self._rank is None:
            object.__setattr__(self, "_rank", len(self.basis()))
        return self._rank

    def generator_matrix(self) -> IntMatrix:
        """s x m matrix whose columns are the generators (needs m >= 1)."""
        if not self.generators:
            raise PreconditionError("lattice has no generators")
        return IntMatrix(
            [[g[i] for g in self.generators] for i in range(self.ambient_dim)]
        )

    def contains(self, vector) -> bool:
        v = list(vector)
        if len(v) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        for row in self.basis():
            j = next(t for t in range(self.ambient_dim) if row[t] != 0)
            if v[j] % row[j]:
                return False
            c = v[j] // row[j]
            if c:
                for t in range(j, self.ambient_dim):
                    v[t] -= c * row[t]
        return not any(v)

    def __eq__(self, other):
        return (
            isinstance(other, Lattice)
            and self.ambient_dim == other.ambient_dim
            and self.basis() == other.basis()
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis()))

    def __repr__(self):
        return f"Lattice(Z^{self.ambient_dim}, {len(self.generators)} generators, rank {self.rank})"


def critical_group(lat: Lattice) -> FiniteAbelianGroup:
    """Torsion subgroup of Z^s / lat in invariant-factor form."""
    if not lat.generators:
        return FiniteAbelianGroup(())
    dec = smith_normal_form(lat.generator_matrix())
    return FiniteAbelianGroup(tuple(g for g in dec.gamma if g > 1))


def torsion_order(lat: Lattice) -> int:
    return critical_group(lat).order


def defining_matrix(lat: Lattice) -> IntMatrix:
    """(s-r) x s matrix A of rank s-r with lat inside ker_Z(A).

    Construction: complete a lattice basis to a Q-basis of Q^s by
    greedily appending standard basis vectors, then take, for each
    appended vector, the primitive integer normal of the hyperplane
    spanned by the remaining s-1 basis vectors (sign fixed by making
    the first nonzero entry positive). The result depends only on the
    lattice, not on the generator list, since the greedy completion and
    each hyperplane are determined by the span. ker_Z(A) is exactly the
    saturation of lat. Requires rank(lat) < s.
    """
    s = lat.ambient_dim
    if lat.rank == s:
        raise PreconditionError("lattice has full rank; no defining matrix")
    base = [list(r) for r in lat.basis()]
    r = len(base)
    full = [row[:] for row in base]
    cur_rank = r
    for j in range(s):
        if cur_rank == s:
            break
        e = [0] * s
        e[j] = 1
        if len(hermite_rows(full + [e], s)) > cur_rank:
            full.append(e)
            cur_rank += 1
    out = []
    for idx in range(r, s):
        others = [full[t] for t in range(s) if t != idx]
        if not others:
            out.append([1])
            continue
        ker = integer_kernel(IntMatrix(others))
        assert len(ker) == 1
        w = list(ker[0])
        g = 0
        for x in w:
            g = gcd(g, x)
        w = [x // g for x in w]
        first = next(x for x in w if x != 0)
        if first < 0:
            w = [-x for x in w]
        out.append(w)
    return IntMatrix(out)


def saturation(lat: Lattice) -> Lattice:
    """Smallest saturated lattice containing lat (same rank, torsion-free
    quotient)."""
    s = lat.ambient_dim
    if lat.rank == s:
        return Lattice(s, [tuple(r) for r in IntMatrix.identity(s)])
    a = defining_matrix(lat)
    return Lattice(s, integer_kernel(a))


def positive_lattice_vector(basis, length):
    """Strictly positive integer vector in the span of `basis`, primitive,
    or None. Exact Fourier-Motzkin feasibility; intended for saturated
    spans (the basis of an integer kernel), where primitivity is safe.
    """
    basis = [tuple(b) for b in basis]
    if not basis:
        return None
    k = len(basis)
    if k == 1:
        v = basis[0]
        if all(x > 0 for x in v):
            pass
        elif all(x < 0 for x in v):
            v = tuple(-x for x in v)
        else:
            return None
        g = 0
        for x in v:
            g = gcd(g, x)
        return tuple(x // g for x in v)
    # constraints: sum_i basis_i[j] * z_i >= 1 for each coordinate j
    constraints = [
        (tuple(basis[i][j] for i in range(k)), 1) for j in range(length)
    ]
    stages = []
    for var in range(k):
        pos = [c for c in constraints if c[0][var] > 0]
        neg = [c for c in constraints if c[0][var] < 0]
        zero = [c for c in constraints if c[0][var] == 0]
        stages.append((var, pos, neg))
        nxt = list(zero)
        for pa, pb in pos:
            for na, nb in neg:
                f1, f2 = -na[var], pa[var]
                coeffs = tuple(f1 * a + f2 * b for a, b in zip(pa, na))
                nxt.append((coeffs, f1 * pb + f2 * nb))
        constraints = nxt
    if any(rhs > 0 for _, rhs in constraints):
        return None
    # back-substitute a rational point
    z = [Fraction(0)] * k
    for var, pos, neg in reversed(stages):
        lo, hi = None, None
        for coeffs, rhs in pos:
            rest = sum(Fraction(coeffs[i]) * z[i] for i in range(k) if i != var)
            bound = (Fraction(rhs) - rest) / coeffs[var]
            lo = bound if lo is None or bound > lo else lo
        for coeffs, rhs in neg:
            rest = sum(Fraction(coeffs[i]) * z[i] for i in range(k) if i != var)
            bound = (Fraction(rhs) - rest) / coeffs[var]
            hi = bound if hi is None or bound < hi else hi
        if lo is not None:
            z[var] = lo
        elif hi is not None:
            z[var] = hi
    scale = 1
    for q in z:
        scale = scale * q.denominator // gcd(scale, q.denominator)
    zi = [int(q * scale) for q in z]
    vec = [sum(zi[i] * basis[i][j] for i in range(k)) for j in range(length)]
    assert all(x > 0 for x in vec)
    g = 0
    for x in vec:
        g = gcd(g, x)
    return tuple(x // g for x in vec)


def grading_vector(mat: IntMatrix):
    """Primitive d in N_+^s with d*mat = 0, or None when no strictly
    positive left-kernel vector exists. Unique when rank(mat) = s-1."""
    left = integer_kernel(mat.transpose())
    return positive_lattice_vector(left, mat.rows)


def homogenize_vector(a):
    """Append a balancing coordinate so the total sum is zero.

    Vectors with negative coordinate sum are negated first, so the
    appended entry is always <= 0.
    """
    a = tuple(int(x) for x in a)
    total = sum(a)
    if total < 0:
        a = tuple(-x for x in a)
        total = -total
    return a + (-total,)


def homogenize_lattice(lat: Lattice) -> Lattice:
    return Lattice(
        lat.ambient_dim + 1, [homogenize_vector(g) for g in lat.generators]
    )


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def p_saturation(lat: Lattice, p: int) -> Lattice:
    """Lattice of all vectors with some p-power multiple in lat.

    Strips the p-part from every invariant factor; the index of lat in
    the result is a power of p.
    """
    if not _is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if not lat.generators:
        return lat
    s = lat.ambient_dim
    dec = smith_normal_form(lat.generator_matrix())
    pinv = adjoint(dec.P)
    if determinant(dec.P) < 0:
        pinv = IntMatrix([[-x for x in row] for row in pinv])
    gens = []
    for i, g in enumerate(dec.gamma):
        while g % p == 0:
            g //= p
        col = pinv.column(i)
        gens.append(tuple(g * x for x in col))
    return Lattice(s, gens)
