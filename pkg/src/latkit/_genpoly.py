"""Sparse multivariate polynomials with rational coefficients.

Supporting engine for the few operations that leave the binomial
world: colon by a polynomial divisor, intersections with non-binomial
ideals, and expanding syzygy identities. Polynomials are dicts mapping
exponent tuples to nonzero Fractions.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .ideal import Binomial, MonomialOrder

__all__ = [
    "poly_from_terms",
    "poly_from_binomial",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_scale",
    "reduced_basis",
    "normal_form",
    "ideals_equal",
    "intersect",
    "colon_by_poly",
    "exact_divide",
]


def poly_from_terms(terms):
    out = {}
    for coeff, exp in terms:
        c = Fraction(coeff)
        if not c:
            continue
        e = tuple(int(x) for x in exp)
        nc = out.get(e, Fraction(0)) + c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def poly_from_binomial(b: Binomial):
    return {b.plus: Fraction(1), b.minus: Fraction(-1)}


def poly_add(p, q):
    out = dict(p)
    for e, c in q.items():
        nc = out.get(e, Fraction(0)) + c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def poly_sub(p, q):
    out = dict(p)
    for e, c in q.items():
        nc = out.get(e, Fraction(0)) - c
        if nc:
            out[e] = nc
        else:
            out.pop(e, None)
    return out


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            nc = out.get(e, Fraction(0)) + c1 * c2
            if nc:
                out[e] = nc
            else:
                out.pop(e, None)
    return out


def poly_scale(p, c):
    c = Fraction(c)
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


def _leading(p, cmp):
    best = None
    for e in p:
        if best is None or cmp(e, best) > 0:
            best = e
    return best


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def normal_form(p, basis, order: MonomialOrder):
    """Full division remainder of p modulo the basis polynomials."""
    cmp = order.compare
    rem = {}
    work = dict(p)
    pairs = [(g, _leading(g, cmp)) for g in basis if g]
    while work:
        lt = _leading(work, cmp)
        lc = work[lt]
        for g, lg in pairs:
            if _divides(lg, lt):
                shift = tuple(a - b for a, b in zip(lt, lg))
                factor = lc / g[lg]
                for e, c in g.items():
                    e2 = tuple(a + b for a, b in zip(e, shift))
                    nc = work.get(e2, Fraction(0)) - factor * c
                    if nc:
                        work[e2] = nc
                    else:
                        work.pop(e2, None)
                break
        else:
            rem[lt] = lc
            del work[lt]
    return rem


def _spoly(f, g, cmp):
    lf, lg = _leading(f, cmp), _leading(g, cmp)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    cf = Fraction(1) / f[lf]
    for e, c in f.items():
        e2 = tuple(a + b for a, b in zip(e, sf))
        out[e2] = out.get(e2, Fraction(0)) + c * cf
    cg = Fraction(1) / g[lg]
    for e, c in g.items():
        e2 = tuple(a + b for a, b in zip(e, sg))
        nc = out.get(e2, Fraction(0)) - c * cg
        if nc:
            out[e2] = nc
        else:
            out.pop(e2, None)
    return out


def reduced_basis(gens, order: MonomialOrder):
    """Reduced (monic, auto-reduced) Groebner basis; deterministic."""
    cmp = order.compare
    basis = []
    for g in gens:
        if g:
            monic = poly_scale(g, Fraction(1) / g[_leading(g, cmp)])
            if monic not in basis:
                basis.append(monic)

    pairs = []
    treated = set()

    def push_pairs(n):
        ln = _leading(basis[n], cmp)
        for k in range(n):
            lk = _leading(basis[k], cmp)
            lcm = tuple(max(a, b) for a, b in zip(lk, ln))
            heapq.heappush(pairs, (sum(lcm), lcm, k, n))

    for n in range(len(basis)):
        push_pairs(n)
    while pairs:
        _, lcm, i, j = heapq.heappop(pairs)
        treated.add((i, j))
        li = _leading(basis[i], cmp)
        lj = _leading(basis[j], cmp)
        if lcm == tuple(a + b for a, b in zip(li, lj)):
            continue
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(_leading(basis[k], cmp), lcm):
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in treated and p2 in treated:
                    skip = True
                    break
        if skip:
            continue
        s = normal_form(_spoly(basis[i], basis[j], cmp), basis, order)
        if not s:
            continue
        s = poly_scale(s, Fraction(1) / s[_leading(s, cmp)])
        basis.append(s)
        push_pairs(len(basis) - 1)

    # minimalize and tail-reduce
    keep = []
    leads = [_leading(g, cmp) for g in basis]
    for i, g in enumerate(basis):
        redundant = False
        for j in range(len(basis)):
            if j == i:
                continue
            if _divides(leads[j], leads[i]) and (leads[j] != leads[i] or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order) if others else g
        assert r, "minimal basis element reduced to zero"
        r = poly_scale(r, Fraction(1) / r[_leading(r, cmp)])
        out.append(r)
    out.sort(key=_poly_key)
    return out


def _poly_key(p):
    return sorted(p.items())


def ideals_equal(gens_a, gens_b, num_vars):
    order = MonomialOrder.grevlex(num_vars)
    return reduced_basis(gens_a, order) == reduced_basis(gens_b, order)


def _tag_eliminate(tagged, num_vars):
    """Eliminate the last variable from the tagged system, return the
    y-free polynomials truncated back to num_vars variables."""
    order = MonomialOrder.elimination(num_vars + 1, (num_vars,))
    basis = reduced_basis(tagged, order)
    out = []
    for g in basis:
        if all(e[num_vars] == 0 for e in g):
            out.append({e[:num_vars]: c for e, c in g.items()})
    return out


def intersect(gens_a, gens_b, num_vars):
    """Generators of (gens_a) intersected with (gens_b), via a tag
    variable: y A + (1 - y) B, then eliminate y."""
    tagged = []
    y = (0,) * num_vars + (1,)
    for f in gens_a:
        tagged.append({e + (1,): c for e, c in f.items()})
    for g in gens_b:
        t = {e + (0,): c for e, c in g.items()}
        t = poly_sub(t, {e + (1,): c for e, c in g.items()})
        tagged.append(t)
    return _tag_eliminate(tagged, num_vars)


def exact_divide(f, g, order: MonomialOrder):
    """Quotient f / g when g divides f; raises if the division fails."""
    cmp = order.compare
    if not f:
        return {}
    q = {}
    work = dict(f)
    lg = _leading(g, cmp)
    cg = g[lg]
    while work:
        lt = _leading(work, cmp)
        if not _divides(lg, lt):
            raise ArithmeticError("polynomial division is not exact")
        shift = tuple(a - b for a, b in zip(lt, lg))
        factor = work[lt] / cg
        q[shift] = q.get(shift, Fraction(0)) + factor
        for e, c in g.items():
            e2 = tuple(a + b for a, b in zip(e, shift))
            nc = work.get(e2, Fraction(0)) - factor * c
            if nc:
                work[e2] = nc
            else:
                work.pop(e2, None)
    return {e: c for e, c in q.items() if c}


def colon_by_poly(gens, divisor, num_vars):
    """Generators of ((gens) : divisor) for a single polynomial divisor."""
    if not divisor:
        raise ValueError("colon by the zero polynomial")
    order = MonomialOrder.grevlex(num_vars)
    inter = intersect(gens, [divisor], num_vars)
    return [exact_divide(f, divisor, order) for f in inter]
