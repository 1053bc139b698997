"""Groebner basis engine: Buchberger with the Gebauer-Moller pair criteria,
normal forms, elimination, ideal intersection, saturation, Krull dimension
and vector-space dimension of Artinian quotients.

The engine works fraction-free: polynomials are dicts mapping exponent
tuples to ints, kept primitive (content 1, positive leading coefficient).
The public operations wrap these in :class:`exactpoly.Polynomial` values.

Saturation by a single variable uses the graded-reverse-lex trick (put the
variable last, compute a basis, divide out the variable), valid whenever the
generators are homogeneous for the ring's positive heft weights; everything
else falls back to the auxiliary-variable construction I + (1 - t*g).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import NotHomogeneous, NotZeroDimensional
from .exactpoly import (BlockOrder, GrevLex, Polynomial, RingContext,
                        multidegree_of)

# --- raw polynomial helpers (dict exponent-tuple -> int) -------------------

def _content(p):
    g = 0
    for c in p.values():
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _primitive(p, order):
    if not p:
        return p
    g = _content(p)
    if p[max(p, key=order.key)] < 0:
        g = -g
    if g == 1:
        return p
    return {m: c // g for m, c in p.items()}


def _monomial_lcm(a, b):
    return tuple(map(max, a, b))


def _monomial_divides(a, b):
    """Whether a divides b."""
    return all(x <= y for x, y in zip(a, b))


def _monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _shift(p, m):
    return {_monomial_mul(mm, m): c for mm, c in p.items()}


def _spoly(f, lf, g, lg, order):
    l = _monomial_lcm(lf, lg)
    cf, cg = f[lf], g[lg]
    d = gcd(cf, cg)
    a, b = cg // d, cf // d
    out = {}
    for m, c in _shift(f, tuple(x - y for x, y in zip(l, lf))).items():
        out[m] = a * c
    for m, c in _shift(g, tuple(x - y for x, y in zip(l, lg))).items():
        s = out.get(m, 0) - b * c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def _reduce(p, reducers, order, track=False):
    """Full normal form of p modulo the reducers.

    Returns a primitive dict; with ``track`` also the Fraction mult such
    that the exact (monic-basis) normal form equals result / mult.
    """
    num = dict(p)
    res = {}
    mult = Fraction(1)
    steps = 0
    key = order.key
    while num:
        m = max(num, key=key)
        c = num[m]
        hit = None
        for lm, q, lc in reducers:
            if _monomial_divides(lm, m):
                hit = (lm, q, lc)
                break
        if hit is None:
            del num[m]
            res[m] = c
            continue
        lm, q, lc = hit
        d = gcd(c, lc)
        a, b = lc // d, c // d
        if a != 1:
            for k in num:
                num[k] *= a
            for k in res:
                res[k] *= a
            mult *= a
        shift = tuple(x - y for x, y in zip(m, lm))
        for mm, cc in q.items():
            mm2 = _monomial_mul(mm, shift)
            s = num.get(mm2, 0) - b * cc
            if s:
                num[mm2] = s
            else:
                num.pop(mm2, None)
        steps += 1
        if steps % 16 == 0 and (num or res):
            g = 0
            for cc in num.values():
                g = gcd(g, abs(cc))
            for cc in res.values():
                g = gcd(g, abs(cc))
            if g > 1:
                num = {k: v // g for k, v in num.items()}
                res = {k: v // g for k, v in res.items()}
                mult /= g
    if track:
        g = _content(res)
        if g > 1:
            res = {k: v // g for k, v in res.items()}
            mult /= g
        return res, mult
    return _primitive(res, order)


def _buchberger(gens, order):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Classic Buchberger with the Gebauer-Moller update (criteria M, F and
    B_k) and normal pair selection, after Becker-Weispfenning.
    """
    key = order.key
    f = []
    seen = set()
    for p in gens:
        p = _primitive(dict(p), order)
        if p:
            fs = frozenset(p.items())
            if fs not in seen:
                seen.add(fs)
                f.append(p)
    if not f:
        return []
    f.sort(key=lambda p: key(max(p, key=key)), reverse=True)
    lms = [max(p, key=key) for p in f]

    def lcm_ij(i, j):
        return _monomial_lcm(lms[i], lms[j])

    def disjoint(i, j):
        return all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j]))

    def update(G, B, ih):
        # Gebauer-Moller: prune the new pairs {(ih, g)} and the old ones
        mh = lms[ih]
        C = {(ih, g) for g in G}
        D = set()
        while C:
            pair = C.pop()
            g = pair[1]
            lcm_hg = lcm_ij(ih, g)
            if disjoint(ih, g):
                D.add(pair)
                continue
            if not any(_monomial_divides(lcm_ij(ih, r[1]), lcm_hg)
                       for r in itertools.chain(C, D)):
                D.add(pair)
        E = {pair for pair in D if not disjoint(ih, pair[1])}
        B_new = set()
        for (i1, i2) in B:
            lcm12 = lcm_ij(i1, i2)
            if (not _monomial_divides(mh, lcm12)
                    or lcm_ij(i1, ih) == lcm12
                    or lcm_ij(i2, ih) == lcm12):
                B_new.add((i1, i2))
        B_new |= E
        G_new = {g for g in G if not _monomial_divides(mh, lms[g])}
        G_new.add(ih)
        return G_new, B_new

    G, B = set(), set()
    for i in range(len(f)):
        G, B = update(G, B, i)

    while B:
        i, j = min(B, key=lambda p: key(lcm_ij(p[0], p[1])))
        B.remove((i, j))
        s = _spoly(f[i], lms[i], f[j], lms[j], order)
        reducers = sorted(((lms[g], f[g], f[g][lms[g]]) for g in G),
                          key=lambda t: key(t[0]))
        h = _reduce(s, reducers, order)
        if h:
            f.append(h)
            lms.append(max(h, key=key))
            G, B = update(G, B, len(f) - 1)

    # tail-reduce to the unique reduced basis
    result = []
    for g in sorted(G, key=lambda g: key(lms[g])):
        reducers = sorted(
            ((lms[j], f[j], f[j][lms[j]]) for j in G if j != g
             and not _monomial_divides(lms[g], lms[j])),
            key=lambda t: key(t[0]))
        h = _reduce(f[g], reducers, order)
        if h:
            result.append(h)
    result.sort(key=lambda p: key(max(p, key=key)), reverse=True)
    return result


# --- public types ----------------------------------------------------------

@dataclass(frozen=True)
class MultigradedIdeal:
    """An ideal given by multihomogeneous generators in a graded ring.

    For an ungraded (affine chart) context the degrees are all the empty
    tuple and every nonzero polynomial counts as homogeneous.
    """

    generators: tuple
    ctx: RingContext
    degrees: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False,
                         hash=False)

    @classmethod
    def create(cls, gens, ctx, split=False):
        """Build an ideal, dropping zero generators.

        With ``split`` non-homogeneous generators are replaced by their
        multihomogeneous components (only valid when the ideal itself is
        known to be graded, e.g. output of a saturation); otherwise a
        non-homogeneous generator raises.
        """
        flat = []
        for g in gens:
            if g.is_zero():
                continue
            try:
                multidegree_of(g, ctx)
                flat.append(g)
            except NotHomogeneous:
                if not split:
                    raise
                parts = {}
                for m, c in g.coeffs.items():
                    d = tuple(sum(row[i] * m[i] for i in range(len(m)))
                              for row in ctx.grading)
                    parts.setdefault(d, {})[m] = c
                for sub in parts.values():
                    flat.append(Polynomial(ctx.nvars, sub))
        degs = tuple(multidegree_of(g, ctx) for g in flat)
        return cls(generators=tuple(flat), ctx=ctx, degrees=degs)

    def is_zero(self):
        return not self.generators

    def default_order(self):
        return GrevLex(self.ctx.weights)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis; elements are primitive integer polynomials
    with positive leading coefficients, sorted by decreasing lead."""

    elements: tuple
    order: object
    reduced: bool
    ctx: RingContext

    def lead_monomials(self):
        return tuple(max(g.coeffs, key=self.order.key) for g in self.elements)

    def is_unit_ideal(self):
        return any(max(m) == 0 for g in self.elements for m in [
            max(g.coeffs, key=self.order.key)])

    def raw(self):
        return [ {m: int(c) for m, c in g.coeffs.items()}
                 for g in self.elements ]


def _to_raw(f):
    """Clear denominators: returns (int dict, denominator)."""
    den = 1
    for c in f.coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in f.coeffs.items()}, den


def _from_raw(p, nvars):
    return Polynomial(nvars, {m: Fraction(c) for m, c in p.items()})


def groebner_basis(I, order=None):
    """Reduced Groebner basis of ``I`` for the given (default grevlex)
    monomial order."""
    if order is None:
        order = I.default_order()
    cache_key = repr(order)
    hit = I._cache.get(cache_key)
    if hit is not None:
        return hit
    raw = [_to_raw(g)[0] for g in I.generators]
    basis = _buchberger(raw, order)
    gb = GroebnerBasis(
        elements=tuple(_from_raw(p, I.ctx.nvars) for p in basis),
        order=order, reduced=True, ctx=I.ctx)
    I._cache[cache_key] = gb
    return gb


def normal_form(f, G):
    """Unique remainder of ``f`` on division by the reduced basis ``G``."""
    raw, den = _to_raw(f)
    order = G.order
    reducers = sorted(
        ((max(g.coeffs, key=order.key), {m: int(c) for m, c in g.coeffs.items()},
          int(g.coeffs[max(g.coeffs, key=order.key)])) for g in G.elements),
        key=lambda t: order.key(t[0]))
    res, mult = _reduce(raw, reducers, order, track=True)
    scale = Fraction(1) / (mult * den)
    return Polynomial(f.nvars, {m: c * scale for m, c in res.items()})


def in_ideal(f, G):
    return normal_form(f, G).is_zero()


def ideal_equal(I, J, order=None):
    """Ideal equality via the canonical reduced bases."""
    return groebner_basis(I, order).elements == groebner_basis(J, order).elements


def _ideal_from_raw(raw, ctx):
    gens = [_from_raw(p, ctx.nvars) for p in raw if p]
    return MultigradedIdeal.create(gens, ctx, split=bool(ctx.grading))


def _is_weight_homogeneous(raw, weights):
    for p in raw:
        degs = {sum(w * e for w, e in zip(weights, m)) for m in p}
        if len(degs) > 1:
            return False
    return True


# --- elimination, intersection, saturation ---------------------------------

def eliminate(I, vars_out):
    """Generators of I intersected with the subring omitting ``vars_out``."""
    vars_out = sorted(set(vars_out))
    if not vars_out:
        return I
    order = BlockOrder(vars_out, I.ctx.weights)
    raw = [_to_raw(g)[0] for g in I.generators]
    basis = _buchberger(raw, order)
    kept = [p for p in basis
            if all(all(m[v] == 0 for v in vars_out) for m in p)]
    return _ideal_from_raw(kept, I.ctx)


def _eliminate_extra_raw(raw, base_weights, n_extra):
    """Raw polynomials live in nvars+n_extra variables (extras trailing);
    eliminate the extras and project back to the base ring."""
    r = len(base_weights)
    weights = tuple(base_weights) + (1,) * n_extra
    order = BlockOrder(range(r, r + n_extra), weights)
    basis = _buchberger(raw, order)
    out = []
    for p in basis:
        if all(all(m[r + i] == 0 for i in range(n_extra)) for m in p):
            out.append({m[:r]: c for m, c in p.items()})
    return out


def _saturate_variable_raw(raw, var, weights):
    """(ideal : x_var^inf) via the reverse-lex trick; needs the generators
    homogeneous for the (positive) weights."""
    perm = [i for i in range(len(weights)) if i != var] + [var]
    order = GrevLex(weights, perm)
    basis = _buchberger(raw, order)
    out = []
    for p in basis:
        shift = min(m[var] for m in p)
        if shift:
            p = {m[:var] + (m[var] - shift,) + m[var + 1:]: c
                 for m, c in p.items()}
        out.append(p)
    return out


def _saturate_element_raw(raw, g_raw, weights):
    """(ideal : g^inf) on raw polynomials."""
    if len(g_raw) == 1 and _is_weight_homogeneous(raw, weights):
        (gm, _), = g_raw.items()
        current = raw
        for var, e in enumerate(gm):
            if e:
                current = _saturate_variable_raw(current, var, weights)
        return current
    r = len(weights)
    ext = [{m + (0,): c for m, c in p.items()} for p in raw]
    rab = {(0,) * (r + 1): 1}
    for m, c in g_raw.items():
        rab[m + (1,)] = rab.get(m + (1,), 0) - c
    ext.append(rab)
    return _eliminate_extra_raw(ext, weights, 1)


def _intersect_raw(a, b, weights):
    """Intersection of two ideals via a tag variable: (u*a + (1-u)*b) ^ S."""
    r = len(weights)
    ext = []
    for p in a:
        ext.append({m + (1,): c for m, c in p.items()})
    for p in b:
        q = {m + (0,): c for m, c in p.items()}
        for m, c in p.items():
            mm = m + (1,)
            q[mm] = q.get(mm, 0) - c
        ext.append(q)
    return _eliminate_extra_raw(ext, weights, 1)


def intersect(I, J):
    raw = _intersect_raw([_to_raw(g)[0] for g in I.generators],
                         [_to_raw(g)[0] for g in J.generators],
                         I.ctx.weights)
    return _ideal_from_raw(raw, I.ctx)


def saturate_element(I, g):
    """(I : g^inf), as an ideal of the same ring."""
    if g.is_zero():
        raise ValueError("cannot saturate by the zero polynomial")
    raw = [_to_raw(p)[0] for p in I.generators]
    g_raw, _ = _to_raw(g)
    if max(sum(m) for m in g_raw) == 0:
        return I  # unit: saturation is trivial
    out = _saturate_element_raw(raw, g_raw, I.ctx.weights)
    return _ideal_from_raw(out, I.ctx)


def _minimal_variable_covers(supports):
    """Minimal variable sets meeting every support set (minimal primes of a
    squarefree monomial ideal)."""
    used = sorted(set().union(*supports)) if supports else []
    covers = []
    for size in range(1, len(used) + 1):
        for combo in itertools.combinations(used, size):
            s = set(combo)
            if any(c <= s for c in covers):
                continue
            if all(s & sup for sup in supports):
                covers.append(s)
    return [sorted(c) for c in covers]


def saturate_ideal(I, J):
    """(I : J^inf).

    Depends only on the radical of J.  For a monomial J the radical is
    decomposed into its minimal variable primes and the saturations are
    iterated prime by prime; within a prime the element saturations are
    intersected.  For general J the element saturations of the generators
    are intersected directly.
    """
    if J.is_zero():
        raise ValueError("cannot saturate by the zero ideal")
    raws = [_to_raw(g)[0] for g in J.generators]
    if any(max(sum(m) for m in p) == 0 for p in raws):
        return I  # J is the unit ideal
    weights = I.ctx.weights
    current = [_to_raw(g)[0] for g in I.generators]
    if all(len(p) == 1 for p in raws):
        supports = [frozenset(i for i, e in enumerate(next(iter(p))) if e)
                    for p in raws]
        for prime in _minimal_variable_covers(supports):
            parts = []
            for var in prime:
                g_raw = {tuple(1 if i == var else 0
                               for i in range(len(weights))): 1}
                parts.append(_saturate_element_raw(current, g_raw, weights))
            acc = parts[0]
            for nxt in parts[1:]:
                acc = _intersect_raw(acc, nxt, weights)
            current = acc
    else:
        parts = [_saturate_element_raw(current, p, weights) for p in raws]
        acc = parts[0]
        for nxt in parts[1:]:
            acc = _intersect_raw(acc, nxt, weights)
        current = acc
    return _ideal_from_raw(current, I.ctx)


# --- dimensions ------------------------------------------------------------

def krull_dimension(I):
    """Krull dimension of the affine quotient ring, or None for the unit
    ideal.  Combinatorial: largest variable subset meeting no lead-term
    support."""
    G = groebner_basis(I)
    if not G.elements:
        return I.ctx.nvars
    lms = G.lead_monomials()
    if any(max(m) == 0 for m in lms):
        return None
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in lms]
    r = I.ctx.nvars
    best = 0
    for size in range(r, 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(range(r), size):
            s = set(combo)
            if not any(sup <= s for sup in supports):
                best = size
                break
    return best


def vector_space_dimension(I):
    """Number of standard monomials (length of the Artinian quotient)."""
    G = groebner_basis(I)
    lms = G.lead_monomials()
    if any(max(m) == 0 for m in lms):
        return 0
    r = I.ctx.nvars
    bounds = []
    for i in range(r):
        pure = [m[i] for m in lms
                if all(e == 0 for j, e in enumerate(m) if j != i)]
        if not pure:
            raise NotZeroDimensional(
                "variable %s is not nilpotent modulo the lead-term ideal"
                % I.ctx.names[i])
        bounds.append(min(pure))
    count = 0
    for m in itertools.product(*(range(b) for b in bounds)):
        if not any(_monomial_divides(lm, m) for lm in lms):
            count += 1
    return count
