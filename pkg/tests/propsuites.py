"""Randomized property suites shared by the acceptance test.

Each suite draws its own seeded generator, checks at least `count`
instances and returns the number actually checked. All assertions are
exact; a failure raises AssertionError with the offending instance.
"""

import random
from math import gcd

from latkit import (
    Binomial,
    BinomialIdeal,
    IntMatrix,
    Lattice,
    affine_degree,
    cb_properties_check,
    cb_structure,
    check_transpose_theorems,
    classify,
    colon_saturation,
    degree_lattice,
    find_hull_gcb3,
    grading_vector,
    integer_kernel,
    is_lattice_ideal,
    matrix_ideal,
    minor_gcd,
    rank,
    saturate_variables,
    smith_normal_form,
    torsion_order,
    vanishing_condition,
)


def random_matrix(rng, rows, cols, bound=5):
    return IntMatrix(
        [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
    )


def random_gpcb(rng, s, max_mult=3):
    """Matrix with all entries nonzero, zero column sums against a
    positive kernel vector b chosen first."""
    b = [rng.randint(1, 4) for _ in range(s)]
    g = 0
    for x in b:
        g = gcd(g, x)
    b = [x // g for x in b]
    rows = []
    for i in range(s):
        m = [rng.randint(1, max_mult) if j != i else 0 for j in range(s)]
        diag = sum(m[j] * b[j] for j in range(s) if j != i)
        rows.append([-m[j] * b[i] if j != i else diag for j in range(s)])
    return IntMatrix(rows), tuple(b)


def random_cb3(rng):
    """3x3 zero-row-sum matrix, nonnegative couplings, every column
    attached to another variable, rank 2."""
    while True:
        mags = [[rng.randrange(0, 4) for _ in range(3)] for _ in range(3)]
        rows = []
        for i in range(3):
            row = [-mags[i][j] if j != i else 0 for j in range(3)]
            row[i] = sum(mags[i][j] for j in range(3) if j != i)
            rows.append(row)
        L = IntMatrix(rows)
        col_ok = all(any(mags[i][j] for i in range(3) if i != j) for j in range(3))
        if col_ok and all(rows[i][i] >= 1 for i in range(3)) and rank(L) == 2:
            return L


def suite_snf_invariants(seed=1201, count=100):
    """P*M*Q is the diagonal form, P and Q unimodular, invariant factors
    divide in sequence and equal quotients of minor gcds."""
    from latkit import determinant

    rng = random.Random(seed)
    checked = 0
    while checked < count:
        r = rng.randint(1, 4)
        c = rng.randint(1, 4)
        m = random_matrix(rng, r, c, bound=7)
        snf = smith_normal_form(m)
        assert determinant(snf.P) in (1, -1) and determinant(snf.Q) in (1, -1)
        prod = snf.P * m * snf.Q
        for i in range(r):
            for j in range(c):
                want = snf.gamma[i] if i == j and i < len(snf.gamma) else 0
                assert prod.entry(i, j) == want, m.to_rows()
        for a, b in zip(snf.gamma, snf.gamma[1:]):
            assert b % a == 0, snf.gamma
        assert snf.rank == rank(m) == len(snf.gamma)
        prev = 1
        for i, g in enumerate(snf.gamma, start=1):
            cur = minor_gcd(m, i)
            assert cur == prev * g, (m.to_rows(), snf.gamma)
            prev = cur
        checked += 1
    return checked


def suite_degree_oracle(seed=4242, count=100):
    """Closed-form lattice degree equals the degree read off a Groebner
    basis of the saturated binomial ideal."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        s = rng.randint(2, 5)
        k = rng.randint(1, s)
        gens = [tuple(rng.randint(-4, 4) for _ in range(s)) for _ in range(k)]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        lat = Lattice(s, gens)
        I = BinomialIdeal(s, [Binomial.from_vector(g) for g in gens])
        dim, deg = affine_degree(saturate_variables(I))
        assert dim == s - lat.rank, gens
        assert deg == degree_lattice(lat), gens
        checked += 1
    return checked


def suite_torsion_transpose(seed=606, count=100):
    """Row lattice and column lattice of a square matrix have the same
    torsion, with equal invariant factors."""
    from latkit import critical_group

    rng = random.Random(seed)
    checked = 0
    while checked < count:
        s = rng.randint(2, 5)
        m = random_matrix(rng, s, s, bound=6)
        if all(x == 0 for row in m.to_rows() for x in row):
            continue
        rows_lat = Lattice(s, m.to_rows())
        cols_lat = Lattice(s, [m.column(j) for j in range(s)])
        assert torsion_order(rows_lat) == torsion_order(cols_lat), m.to_rows()
        assert (
            critical_group(rows_lat).invariant_factors
            == critical_group(cols_lat).invariant_factors
        )
        checked += 1
    return checked


def suite_transpose_closure(seed=911, count=100):
    """The transpose of a full-support matrix with a positive kernel
    vector again has one, with witnesses swapping sides."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        s = rng.randint(2, 4)
        L, b = random_gpcb(rng, s)
        rep = classify(L)
        assert rep.generalized_positive, (L.to_rows(), b)
        assert rep.right_kernel_witness == b
        t = check_transpose_theorems(L)
        assert t.gpcb_transpose_holds, L.to_rows()
        assert t.transpose.generalized_positive
        assert t.transpose.right_kernel_witness == rep.left_kernel_witness
        checked += 1
    return checked


def suite_cyclic_syzygies(seed=77, count=100):
    """Both cyclic relations among the three column binomials of a
    zero-row-sum matrix vanish under symbolic expansion."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        L = random_cb3(rng)
        rep = cb_properties_check(L)
        assert rep.syzygies_hold, L.to_rows()
        checked += 1
    return checked


def suite_degree_torsion_bound(seed=300, count=100):
    """Graded corank-1 lattices: the degree is at least the torsion
    order (one orbit of positive degree per torsion character)."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        if checked % 2 == 0:
            s = rng.randint(3, 4)
            L, _ = random_gpcb(rng, s)
            if rank(L) != s - 1:
                continue
            lat = Lattice(s, [L.column(j) for j in range(s)])
        else:
            # rank-2 lattice orthogonal to a chosen positive grading
            d = tuple(rng.randint(1, 4) for _ in range(3))
            kernel = integer_kernel(IntMatrix([list(d)]))
            c = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(2)]
            gens = [
                tuple(
                    a * kernel[0][i] + b * kernel[1][i] for i in range(3)
                )
                for a, b in c
            ]
            gens = [g for g in gens if any(g)]
            lat = Lattice(3, gens)
            if lat.rank != 2:
                continue
        assert grading_vector(lat.generator_matrix()) is not None
        assert degree_lattice(lat) >= torsion_order(lat), lat.generators
        checked += 1
    return checked


def suite_regularity_equivalence(seed=515, count=100):
    """For graded binomial ideals whose zero set meets each coordinate
    hyperplane only at the origin, these are equivalent: being a lattice
    ideal; being saturated with respect to all variables; every variable
    being a nonzerodivisor; the first variable being a nonzerodivisor.
    The hull also equals the single-variable saturation."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        s = rng.randint(2, 3)
        L, _ = random_gpcb(rng, s, max_mult=2)
        I = matrix_ideal(L)
        if checked % 2 == 1:
            I = saturate_variables(I)  # exercise the positive branch too
        if checked % 5 == 0:
            assert vanishing_condition(I), L.to_rows()

        lattice_verdict = is_lattice_ideal(I)
        sat = saturate_variables(I)
        saturated_verdict = sat == I
        powers = []
        hulls = []
        for i in range(s):
            e = tuple(1 if k == i else 0 for k in range(s))
            h, a = colon_saturation(I, e)
            powers.append(a)
            hulls.append(h)
        each_regular = all(a == 0 for a in powers)
        first_regular = powers[0] == 0

        assert lattice_verdict == saturated_verdict == each_regular == first_regular, (
            L.to_rows(),
            lattice_verdict,
            saturated_verdict,
            powers,
        )
        # the hull is reached by saturating any single variable
        for h in hulls:
            assert h == sat, L.to_rows()
        checked += 1
    return checked


def suite_unmixed_trichotomy(seed=912, count=100):
    """Full-support matrices with positive kernel vector: with 4 or more
    variables the column ideal is never a lattice ideal; a positive
    kernel of all ones with at most 3 variables always gives one; 2x2 is
    decided by whether some witness entry is 1."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        s = rng.choice((2, 2, 3, 3, 3, 4))
        L, b = random_gpcb(rng, s, max_mult=2)
        rep = classify(L)
        latt = is_lattice_ideal(matrix_ideal(L))
        if s >= 4:
            assert not latt, L.to_rows()
        elif rep.positive_critical:
            assert latt, L.to_rows()
        if s == 2:
            assert latt == (min(b) == 1), (L.to_rows(), b)
        checked += 1
    return checked


def suite_cb3_round_trip(seed=20240817, count=100):
    """Random 3x3 zero-row-sum matrices: the structure theorem rebuilds
    a matrix with the same column lattice, the hull finder agrees with
    plain saturation, and the property report is consistent."""
    rng = random.Random(seed)
    checked = 0
    while checked < count:
        L = random_cb3(rng)
        lat = Lattice(3, [L.column(j) for j in range(3)])
        cbset, M = cb_structure(lat)
        assert Lattice(3, [M.column(j) for j in range(3)]) == lat, L.to_rows()
        assert cbset.case in ("a", "b")
        Mh, hull = find_hull_gcb3(L)
        assert hull == saturate_variables(matrix_ideal(L)), L.to_rows()
        rep = cb_properties_check(L)
        assert rep.minimal_generators in (2, 3)
        assert rep.complete_intersection == (rep.minimal_generators == 2)
        assert rep.unmixed == rep.lattice_ideal
        checked += 1
    return checked


ALL_SUITES = (
    suite_snf_invariants,
    suite_degree_oracle,
    suite_torsion_transpose,
    suite_transpose_closure,
    suite_cyclic_syzygies,
    suite_degree_torsion_bound,
    suite_regularity_equivalence,
    suite_unmixed_trichotomy,
    suite_cb3_round_trip,
)
