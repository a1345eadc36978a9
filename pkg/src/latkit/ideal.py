"""Binomial ideals over the rationals with exact Groebner machinery.

All ideal arithmetic stays inside the class of pure-difference
binomials t^a - t^b, optionally extended by plain monomials when a
computation adjoins one (radical membership tests do). Coefficients
never leave {1, -1}, so everything is exact integer arithmetic.

Internally an element is a pair (lead, tail) of exponent tuples with
lead != tail, oriented so lead is the larger monomial in the active
order; tail None encodes a bare monomial t^lead.
"""

from __future__ import annotations

import heapq
import threading

from .errors import PreconditionError
from .exactmat import IntMatrix

__all__ = [
    "Monomial",
    "Binomial",
    "BinomialIdeal",
    "MonomialOrder",
    "matrix_ideal",
    "groebner_basis",
    "saturate_variables",
    "is_lattice_ideal",
    "colon_saturation",
    "homogenize_ideal",
    "affine_degree",
    "vanishing_condition",
    "minimal_generator_count",
]


def format_monomial(exponents, names=None):
    if not any(exponents):
        return "1"
    parts = []
    for i, e in enumerate(exponents):
        if e == 0:
            continue
        name = names[i] if names else f"t{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class Monomial:
    """Monomial t^a with a in N^s."""

    __slots__ = ("exponents",)

    def __init__(self, exponents):
        exps = tuple(int(x) for x in exponents)
        if any(x < 0 for x in exps):
            raise ValueError("monomial exponents must be nonnegative")
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @property
    def degree(self):
        return sum(self.exponents)

    def __mul__(self, other):
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other):
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return format_monomial(self.exponents)


def _grevlex_cmp(a, b):
    """1 if t^a > t^b, -1 if smaller, 0 if equal."""
    da, db = sum(a), sum(b)
    if da != db:
        return 1 if da > db else -1
    for i in range(len(a) - 1, -1, -1):
        d = a[i] - b[i]
        if d:
            return 1 if d < 0 else -1
    return 0


class MonomialOrder:
    """Graded reverse lexicographic order, or an elimination block order
    (GRevLex inside each block, eliminated block compared first)."""

    __slots__ = ("num_vars", "eliminated", "_key", "compare")

    def __init__(self, num_vars, eliminated=()):
        elim = tuple(sorted(set(eliminated)))
        if any(i < 0 or i >= num_vars for i in elim):
            raise ValueError("eliminated index out of range")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "eliminated", elim)
        object.__setattr__(self, "_key", ("elim", num_vars, elim) if elim else ("grevlex", num_vars))
        if not elim:
            object.__setattr__(self, "compare", _grevlex_cmp)
        else:
            rest = tuple(i for i in range(num_vars) if i not in set(elim))

            def compare(a, b, _elim=elim, _rest=rest):
                da = sum(a[i] for i in _elim)
                db = sum(b[i] for i in _elim)
                if da != db:
                    return 1 if da > db else -1
                for i in reversed(_elim):
                    d = a[i] - b[i]
                    if d:
                        return 1 if d < 0 else -1
                da = sum(a[i] for i in _rest)
                db = sum(b[i] for i in _rest)
                if da != db:
                    return 1 if da > db else -1
                for i in reversed(_rest):
                    d = a[i] - b[i]
                    if d:
                        return 1 if d < 0 else -1
                return 0

            object.__setattr__(self, "compare", compare)

    def __setattr__(self, name, value):
        raise AttributeError("MonomialOrder is immutable")

    @classmethod
    def grevlex(cls, num_vars):
        return cls(num_vars)

    @classmethod
    def elimination(cls, num_vars, eliminated):
        return cls(num_vars, eliminated)

    @property
    def cache_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._key == other._key

    def __hash__(self):
        return hash(self._key)


class Binomial:
    """Pure difference of two monomials, t^plus - t^minus.

    The stored orientation is canonical: plus is the GRevLex-leading
    monomial. Built from a vector v in Z^s, plus and minus have
    disjoint supports (v+, v-).
    """

    __slots__ = ("plus", "minus")

    def __init__(self, plus, minus):
        p = tuple(int(x) for x in plus)
        m = tuple(int(x) for x in minus)
        if len(p) != len(m):
            raise ValueError("exponent length mismatch")
        if any(x < 0 for x in p + m):
            raise ValueError("exponents must be nonnegative")
        if p == m:
            raise ValueError("the two monomials of a binomial must differ")
        if _grevlex_cmp(p, m) < 0:
            p, m = m, p
        object.__setattr__(self, "plus", p)
        object.__setattr__(self, "minus", m)

    def __setattr__(self, name, value):
        raise AttributeError("Binomial is immutable")

    @classmethod
    def from_vector(cls, vector):
        v = tuple(int(x) for x in vector)
        if not any(v):
            raise ValueError("zero vector does not define a binomial")
        plus = tuple(x if x > 0 else 0 for x in v)
        minus = tuple(-x if x < 0 else 0 for x in v)
        return cls(plus, minus)

    @property
    def vector(self):
        return tuple(p - m for p, m in zip(self.plus, self.minus))

    @property
    def ambient_dim(self):
        return len(self.plus)

    def degree_under(self, weights):
        return sum(w * e for w, e in zip(weights, self.plus))

    def is_homogeneous(self, weights):
        return self.degree_under(weights) == sum(
            w * e for w, e in zip(weights, self.minus)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Binomial)
            and self.plus == other.plus
            and self.minus == other.minus
        )

    def __hash__(self):
        return hash((self.plus, self.minus))

    def __lt__(self, other):
        c = _grevlex_cmp(self.plus, other.plus)
        if c == 0:
            c = _grevlex_cmp(self.minus, other.minus)
        return c < 0

    def __repr__(self):
        return f"{format_monomial(self.plus)} - {format_monomial(self.minus)}"


# ---------------------------------------------------------------------------
# engine: elements are (lead, tail) tuples, tail None for monomials


def _orient(a, b, cmp):
    c = cmp(a, b)
    if c == 0:
        return None
    return (a, b) if c > 0 else (b, a)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce_element(elem, basis, cmp):
    """Full normal form of elem against basis; None when it reduces to 0."""
    lead, tail = elem
    while True:
        for lb, tb in basis:
            if _divides(lb, lead):
                if tb is None:
                    if tail is None:
                        return None
                    lead, tail = tail, None
                else:
                    new = tuple(l - a + b for l, a, b in zip(lead, lb, tb))
                    if tail is None:
                        lead = new
                    else:
                        pair = _orient(new, tail, cmp)
                        if pair is None:
                            return None
                        lead, tail = pair
                break
        else:
            break
    if tail is not None:
        while True:
            for lb, tb in basis:
                if _divides(lb, tail):
                    if tb is None:
                        tail = None
                    else:
                        tail = tuple(t - a + b for t, a, b in zip(tail, lb, tb))
                    break
            else:
                break
            if tail is None:
                break
    return (lead, tail)


def _spair(f, g, cmp):
    lf, tf = f
    lg, tg = g
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    a = None if tf is None else tuple(t + c - l for t, c, l in zip(tf, lcm, lf))
    b = None if tg is None else tuple(t + c - l for t, c, l in zip(tg, lcm, lg))
    if a is None and b is None:
        return None
    if a is None:
        return (b, None)
    if b is None:
        return (a, None)
    return _orient(b, a, cmp)


def _buchberger(gens, cmp):
    """Reduced Groebner basis of the given elements under cmp."""
    basis = []
    for e in gens:
        if e is None:
            continue
        lead, tail = e
        if tail is not None:
            pair = _orient(lead, tail, cmp)
            if pair is None:
                continue
            e = pair
        if e not in basis:
            basis.append(e)

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(basis[i][0], basis[j][0]))

    pairs = []
    treated = set()
    for i in range(len(basis)):
        for j in range(i):
            l = lcm_of(i, j)
            heapq.heappush(pairs, (sum(l), l, j, i))
    while pairs:
        _, lcm, i, j = heapq.heappop(pairs)
        treated.add((i, j))
        fi, fj = basis[i], basis[j]
        # product criterion: disjoint leading supports
        if lcm == tuple(a + b for a, b in zip(fi[0], fj[0])):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k][0], lcm):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in treated and p2 in treated:
                    skip = True
                    break
        if skip:
            continue
        s = _spair(fi, fj, cmp)
        if s is None:
            continue
        s = _reduce_element(s, basis, cmp)
        if s is None:
            continue
        basis.append(s)
        n = len(basis) - 1
        for k in range(n):
            l = tuple(max(a, b) for a, b in zip(basis[k][0], s[0]))
            heapq.heappush(pairs, (sum(l), l, k, n))

    # minimalize: drop elements whose lead is divisible by another kept lead
    keep = []
    for i, e in enumerate(basis):
        lead = e[0]
        redundant = False
        for j, other in enumerate(basis):
            if j == i:
                continue
            if _divides(other[0], lead) and (other[0] != lead or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(e)
    # tail-reduce against the kept set for the reduced form
    reduced = []
    for idx, e in enumerate(keep):
        others = [k for t, k in enumerate(keep) if t != idx]
        r = _reduce_element(e, others, cmp)
        assert r is not None and r[0] == e[0], "lead of a minimal element must survive"
        reduced.append(r)
    reduced.sort(key=_sort_key)
    return reduced


def _sort_key(elem):
    lead, tail = elem
    return (sum(lead), tuple(-x for x in reversed(lead)), tail is None, tail or ())


def _is_unit_basis(basis):
    return any(tail is None and not any(lead) for lead, tail in basis)


# ---------------------------------------------------------------------------
# public ideal type


class BinomialIdeal:
    """Ideal generated by pure-difference binomials in s variables.

    Reduced Groebner bases are cached per monomial order; the reduced
    GRevLex basis is the canonical form used for equality tests.
    """

    __slots__ = ("ambient_dim", "generators", "_cache", "_lock")

    def __init__(self, ambient_dim, generators):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, Binomial):
                raise TypeError("generators must be Binomial instances")
            if g.ambient_dim != ambient_dim:
                raise ValueError("generator ambient dimension mismatch")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_lock", threading.Lock())

    def __setattr__(self, name, value):
        raise AttributeError("BinomialIdeal is immutable")

    def _elements(self):
        return [(g.plus, g.minus) for g in self.generators]

    def _gb_elements(self, order: MonomialOrder):
        key = order.cache_key
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            return hit
        basis = _buchberger(self._elements(), order.compare)
        assert all(tail is not None for _, tail in basis), (
            "a pure-difference ideal cannot acquire monomial basis elements"
        )
        with self._lock:
            self._cache.setdefault(key, basis)
            return self._cache[key]

    def _prime_cache(self, order, basis):
        with self._lock:
            self._cache.setdefault(order.cache_key, basis)

    def reduced_groebner(self, order=None):
        if order is None:
            order = MonomialOrder.grevlex(self.ambient_dim)
        return tuple(Binomial(l, t) for l, t in self._gb_elements(order))

    def contains(self, binomial: Binomial) -> bool:
        order = MonomialOrder.grevlex(self.ambient_dim)
        basis = self._gb_elements(order)
        return _reduce_element((binomial.plus, binomial.minus), basis, order.compare) is None

    def __eq__(self, other):
        return (
            isinstance(other, BinomialIdeal)
            and self.ambient_dim == other.ambient_dim
            and self.reduced_groebner() == other.reduced_groebner()
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.reduced_groebner()))

    def __repr__(self):
        gens = ", ".join(repr(g) for g in self.generators)
        return f"BinomialIdeal(s={self.ambient_dim}; {gens})"


def matrix_ideal(mat: IntMatrix) -> BinomialIdeal:
    """Ideal generated by one binomial per matrix column (t^{c+} - t^{c-})."""
    gens = []
    for j in range(mat.cols):
        col = mat.column(j)
        if not any(col):
            raise PreconditionError(f"column {j + 1} is zero; no binomial")
        gens.append(Binomial.from_vector(col))
    return BinomialIdeal(mat.rows, gens)


def groebner_basis(ideal: BinomialIdeal, order: MonomialOrder | None = None):
    """Reduced Groebner basis, deterministic for a fixed order."""
    return ideal.reduced_groebner(order)


def _pad(t, extra):
    return t + (0,) * extra


def _eliminate_last(elements, s_total, keep):
    """Keep elements supported on the first `keep` variables, truncated."""
    out = []
    for lead, tail in elements:
        if any(lead[keep:]) or (tail is not None and any(tail[keep:])):
            continue
        out.append((lead[:keep], None if tail is None else tail[:keep]))
    return out


def saturate_variables(ideal: BinomialIdeal) -> BinomialIdeal:
    """(I : (t_1 ... t_s)^inf), the lattice ideal of the generators' vectors.

    Adjoins an inverse marker w with t_1...t_s w - 1 and eliminates it.
    Idempotent; the result equals the input iff the input is already a
    lattice ideal.
    """
    s = ideal.ambient_dim
    if not ideal.generators:
        return ideal
    n = s + 1
    elems = [(_pad(g.plus, 1), _pad(g.minus, 1)) for g in ideal.generators]
    elems.append(((1,) * n, (0,) * n))
    order = MonomialOrder.elimination(n, (s,))
    basis = _buchberger(elems, order.compare)
    kept = _eliminate_last(basis, n, s)
    assert all(tail is not None for _, tail in kept)
    out = BinomialIdeal(s, [Binomial(l, t) for l, t in kept])
    # the block order restricted to the surviving variables is GRevLex,
    # so the kept elements are already the reduced GRevLex basis
    out._prime_cache(MonomialOrder.grevlex(s), sorted(kept, key=_sort_key))
    return out


def is_lattice_ideal(ideal: BinomialIdeal) -> bool:
    return ideal.reduced_groebner() == saturate_variables(ideal).reduced_groebner()


def _colon_by_monomial(ideal: BinomialIdeal, exponent) -> BinomialIdeal:
    """(I : t^e) for a monomial divisor, via tag-variable intersection."""
    s = ideal.ambient_dim
    e = tuple(int(x) for x in exponent)
    if len(e) != s or any(x < 0 for x in e) or not any(e):
        raise PreconditionError("colon divisor must be a nonconstant monomial")
    if not ideal.generators:
        return ideal
    n = s + 1
    elems = [(g.plus + (1,), g.minus + (1,)) for g in ideal.generators]
    elems.append((e + (1,), e + (0,)))  # y t^e and t^e, i.e. (1 - y) t^e
    order = MonomialOrder.elimination(n, (s,))
    basis = _buchberger(elems, order.compare)
    kept = _eliminate_last(basis, n, s)
    gens = []
    for lead, tail in kept:
        assert tail is not None
        assert _divides(e, lead) and _divides(e, tail), "intersection not in (t^e)"
        gens.append(
            Binomial(
                tuple(a - b for a, b in zip(lead, e)),
                tuple(a - b for a, b in zip(tail, e)),
            )
        )
    return BinomialIdeal(s, gens)


def _saturate_by_monomial(ideal: BinomialIdeal, exponent) -> BinomialIdeal:
    """(I : (t^e)^inf) via an inverse marker variable."""
    s = ideal.ambient_dim
    e = tuple(int(x) for x in exponent)
    if len(e) != s or any(x < 0 for x in e) or not any(e):
        raise PreconditionError("saturation divisor must be a nonconstant monomial")
    if not ideal.generators:
        return ideal
    n = s + 1
    elems = [(_pad(g.plus, 1), _pad(g.minus, 1)) for g in ideal.generators]
    elems.append((e + (1,), (0,) * n))
    order = MonomialOrder.elimination(n, (s,))
    basis = _buchberger(elems, order.compare)
    kept = _eliminate_last(basis, n, s)
    out = BinomialIdeal(s, [Binomial(l, t) for l, t in kept])
    out._prime_cache(MonomialOrder.grevlex(s), sorted(kept, key=_sort_key))
    return out


def colon_saturation(ideal: BinomialIdeal, h_exponent, max_power=10000):
    """((I : h^inf), a) for a monomial h = t^e: the saturation together
    with the least a such that (I : h^a) equals it."""
    sat = _saturate_by_monomial(ideal, h_exponent)
    if ideal == sat:
        return sat, 0
    e = tuple(int(x) for x in h_exponent)
    for a in range(1, max_power + 1):
        power = tuple(a * x for x in e)
        if _colon_by_monomial(ideal, power) == sat:
            return sat, a
    raise PreconditionError("colon powers did not stabilize within the cap")


def homogenize_ideal(ideal: BinomialIdeal) -> BinomialIdeal:
    """Homogenization with one extra last variable, computed by
    homogenizing the reduced GRevLex basis (which stays a reduced basis)."""
    s = ideal.ambient_dim
    if not ideal.generators:
        return BinomialIdeal(s + 1, [])
    order = MonomialOrder.grevlex(s)
    basis = ideal._gb_elements(order)
    gens = []
    elems = []
    for lead, tail in basis:
        delta = sum(lead) - sum(tail)
        assert delta >= 0
        l2, t2 = lead + (0,), tail + (delta,)
        gens.append(Binomial(l2, t2))
        elems.append((l2, t2))
    out = BinomialIdeal(s + 1, gens)
    out._prime_cache(MonomialOrder.grevlex(s + 1), sorted(elems, key=_sort_key))
    return out


# ---------------------------------------------------------------------------
# Hilbert series of a monomial ideal, for the degree pipeline


def _poly_mul_shift(p, d):
    return {k + d: v for k, v in p.items()}


def _poly_sub(p, q):
    out = dict(p)
    for k, v in q.items():
        nv = out.get(k, 0) - v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


def _hilbert_numerator(gens, memo):
    """Numerator of the Hilbert series of S/(gens) over (1-t)^n."""
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    hit = memo.get(gens)
    if hit is not None:
        return hit
    # coprime supports multiply
    if len(gens) > 1:
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
        if all(
            not (supports[i] & supports[j])
            for i in range(len(gens))
            for j in range(i)
        ):
            out = {0: 1}
            for g in gens:
                out = _poly_sub(out, _poly_mul_shift(out, sum(g)))
            memo[gens] = out
            return out
    if len(gens) == 1:
        out = {0: 1, sum(gens[0]): -1}
        memo[gens] = out
        return out
    # split off the generator sharing support with the most others
    def overlap(g):
        sg = set(i for i, e in enumerate(g) if e)
        return sum(1 for h in gens if h is not g and sg & set(i for i, e in enumerate(h) if e))

    pivot = max(gens, key=lambda g: (overlap(g), sum(g)))
    rest = tuple(g for g in gens if g != pivot)
    colon = tuple(
        tuple(max(h[i] - pivot[i], 0) for i in range(len(h))) for h in rest
    )
    n_rest = _hilbert_numerator(rest, memo)
    n_colon = _hilbert_numerator(colon, memo)
    out = _poly_sub(n_rest, _poly_mul_shift(n_colon, sum(pivot)))
    memo[gens] = out
    return out


def affine_degree(ideal: BinomialIdeal):
    """(dimension, degree) of the quotient by the ideal, computed through
    the graded data of the homogenized initial ideal.

    The Hilbert series numerator of the initial ideal is divided by
    (1 - t) until it no longer vanishes at 1; what remains evaluates to
    the degree, and the number of cancellations fixes the dimension.
    This is the oracle the closed-form degree routines are checked
    against.
    """
    s = ideal.ambient_dim
    order = MonomialOrder.grevlex(s)
    basis = ideal._gb_elements(order)
    if _is_unit_basis(basis):
        raise PreconditionError("unit ideal has no degree")
    leads = tuple(lead for lead, _ in basis)
    num = _hilbert_numerator(leads, {})
    # divide by (1 - t) while the numerator vanishes at t = 1
    cancels = 0
    while num and sum(num.values()) == 0:
        num = _divide_one_minus_t(num)
        cancels += 1
    degree = sum(num.values())
    assert degree > 0
    # the homogenized ring has s + 1 variables; its Krull dimension is
    # s + 1 - cancels, and the affine dimension is one less
    return (s - cancels, degree)


def _divide_one_minus_t(num):
    """Exact division of a polynomial (dict degree -> coeff) by (1 - t)."""
    if not num:
        return {}
    deg = max(num)
    # p_d = q_d - q_{d-1} with q_deg = 0, so q_{d-1} = q_d - p_d
    q = {}
    qd = 0
    for d in range(deg, 0, -1):
        qd -= num.get(d, 0)
        if qd:
            q[d - 1] = qd
    assert qd == num.get(0, 0), "polynomial not divisible by (1 - t)"
    return q


def vanishing_condition(ideal: BinomialIdeal) -> bool:
    """True iff every variable vanishes on the zero set of I + (t_i) for
    every i, decided by radical membership through saturations."""
    s = ideal.ambient_dim
    base = [(g.plus, g.minus) for g in ideal.generators]
    for i in range(s):
        ei = tuple(1 if k == i else 0 for k in range(s))
        with_ti = base + [(ei, None)]
        for j in range(s):
            if j == i:
                continue
            n = s + 1
            elems = [
                (_pad(l, 1), None if t is None else _pad(t, 1)) for l, t in with_ti
            ]
            ej = tuple((1 if k == j else 0) for k in range(s)) + (1,)
            elems.append((ej, (0,) * n))
            order = MonomialOrder.elimination(n, (s,))
            basis = _buchberger(elems, order.compare)
            if not _is_unit_basis(basis):
                return False
    return True


def minimal_generator_count(ideal: BinomialIdeal, weights) -> int:
    """Number of minimal generators, for an ideal homogeneous under the
    given positive integer grading (degree-sorted greedy elimination)."""
    d = tuple(int(x) for x in weights)
    if len(d) != ideal.ambient_dim or any(x <= 0 for x in d):
        raise PreconditionError("grading must be strictly positive")
    for g in ideal.generators:
        if not g.is_homogeneous(d):
            raise PreconditionError("ideal is not homogeneous under the grading")
    survivors = sorted(ideal.generators, key=lambda g: (g.degree_under(d), g.plus, g.minus))
    changed = True
    while changed:
        changed = False
        for idx in range(len(survivors)):
            others = survivors[:idx] + survivors[idx + 1:]
            if not others:
                continue
            rest = BinomialIdeal(ideal.ambient_dim, others)
            if rest.contains(survivors[idx]):
                survivors.pop(idx)
                changed = True
                break
    return len(survivors)
