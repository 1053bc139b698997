"""Integral Chow ring of a smooth complete toric variety.

Presented as Z[D_1..D_r] modulo the Stanley-Reisner ideal (one squarefree
monomial per minimal non-face of the fan) and the linear relations coming
from the ambient lattice.  Classes are kept as polynomials in normal form
with respect to a fixed Groebner basis; a per-codimension standard-monomial
basis is extracted and cross-checked against the combinatorial rank
formula, and the degree map is normalized so that every torus-fixed point
has degree one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import linalg
from .errors import (CodimOverflow, NoIntegerLift, NonIntegerCoefficient,
                     NormalizationInconsistent, NotHomogeneous, RankMismatch)
from .exactpoly import GrevLex, Polynomial, ungraded_context
from .groebner import MultigradedIdeal, groebner_basis, normal_form


def chow_ranks(fan):
    """Ranks of the graded pieces of the Chow ring from the face counts:
    h_i = sum_{j=i}^{k} (-1)^(j-i) C(j,i) d_{k-j} where d_m counts the
    m-dimensional cones."""
    k = fan.dim
    d = fan.face_counts()
    return tuple(sum((-1) ** (j - i) * comb(j, i) * d[k - j]
                     for j in range(i, k + 1))
                 for i in range(k + 1))


@dataclass(frozen=True)
class ChowRing:
    """Chow ring with a fixed normal-form presentation.

    ``bases[p]`` lists the standard monomials of codimension p; ``top`` is
    the unique codimension-k standard monomial and ``sign`` the common
    value of NF(product of the divisors of a maximal cone) / top, so that
    degree(c) = sign * coefficient of top in NF(c).
    """

    cox: object
    ctx: object
    gb: object
    bases: tuple
    top: tuple
    sign: int

    @property
    def dim(self):
        return self.cox.fan.dim

    @property
    def nvars(self):
        return self.ctx.nvars

    def zero(self):
        return Polynomial.zero(self.nvars)

    def one(self):
        return Polynomial.constant(self.nvars, 1)

    def divisor(self, i):
        """Class of the toric divisor of ray ``i``, in normal form."""
        return self.reduce(Polynomial.variable(self.nvars, i))

    def reduce(self, f):
        return normal_form(f, self.gb)

    def codim_of(self, c):
        """Common total degree of the terms of a class in normal form;
        0 for the zero class."""
        if c.is_zero():
            return 0
        degs = {sum(m) for m in c.coeffs}
        if len(degs) != 1:
            raise NotHomogeneous("class mixes codimensions %r" % sorted(degs))
        return degs.pop()

    def multiply(self, a, b):
        """Intersection product; raises if nonzero classes land above the
        ambient dimension."""
        if a.is_zero() or b.is_zero():
            return self.zero()
        ca, cb = self.codim_of(a), self.codim_of(b)
        if ca + cb > self.dim:
            raise CodimOverflow(
                "product of codimensions %d and %d exceeds dimension %d"
                % (ca, cb, self.dim))
        return self.reduce(a * b)

    def power(self, a, n):
        out = self.one()
        for _ in range(n):
            out = self.multiply(out, a)
        return out

    def degree(self, c):
        """Degree of a codimension-k class (integer)."""
        c = self.reduce(c)
        if c.is_zero():
            return 0
        if self.codim_of(c) != self.dim:
            raise CodimOverflow(
                "degree is defined for codimension-%d classes only" % self.dim)
        coeff = c.coeffs.get(self.top, Fraction(0))
        value = coeff * self.sign
        if value.denominator != 1:
            raise NonIntegerCoefficient("degree %s is not an integer" % value)
        return int(value)

    def pic_to_chow(self, delta):
        """Divisor class with the given Picard multidegree, via an integer
        lift through the grading matrix."""
        a = self.cox.ring.grading
        lift = linalg.solve_integer([list(row) for row in a], list(delta))
        if lift is None:
            raise NoIntegerLift("no integer divisor with degree %r"
                                % (tuple(delta),))
        out = self.zero()
        for i, c in enumerate(lift):
            if c:
                out = out + Polynomial.variable(self.nvars, i) * c
        return self.reduce(out)

    def coefficients_on_basis(self, c, p=None):
        """Coefficients of a normal-form class on the standard-monomial
        basis of its codimension."""
        c = self.reduce(c)
        if c.is_zero():
            if p is None:
                return ()
            return tuple(Fraction(0) for _ in self.bases[p])
        if p is None:
            p = self.codim_of(c)
        return tuple(c.coeffs.get(m, Fraction(0)) for m in self.bases[p])

    def class_from_coefficients(self, coeffs, p):
        out = {}
        for m, c in zip(self.bases[p], coeffs):
            if c:
                out[m] = Fraction(c)
        return Polynomial(self.nvars, out)

    def format_class(self, c, names=None):
        if names is None:
            names = self.ctx.names
        return self.reduce(c).format(names)


def build_chow_ring(cox):
    """Chow ring of the (validated) toric variety of ``cox``.

    The linear relations are solved for the divisors of a maximal cone
    (whose ray submatrix is unimodular, so the solved forms have unit
    pivots) and a Groebner basis is computed with those divisors greatest.
    Whether the surviving standard monomials form an integral basis depends
    on the tie-break order among the remaining divisors, so pivot cones and
    orders are tried until the rank check and the point-class normalization
    (every maximal cone reduces to +- the top monomial, with one common
    sign) both pass.
    """
    fan = cox.fan
    r, k = fan.nrays, fan.dim
    names = tuple("D%s" % n for n in cox.ring.names)
    ctx = ungraded_context(names)
    sr_gens = []
    for nf in fan.minimal_non_faces():
        e = [0] * r
        for i in nf:
            e[i] = 1
        sr_gens.append(Polynomial.from_monomial(tuple(e)))
    last_error = None
    for pivot_cone in fan.max_cones:
        gens = list(sr_gens)
        sub_t = [[fan.rays[pivot_cone[i]][j] for i in range(k)]
                 for j in range(k)]
        for jj in range(k):
            unit = [1 if i == jj else 0 for i in range(k)]
            s = linalg.solve_integer(
                [[sub_t[j][i] for j in range(k)] for i in range(k)], unit)
            lin = Polynomial.zero(r)
            for i in range(r):
                c = sum(int(si) * fan.rays[i][l] for l, si in enumerate(s))
                if c:
                    lin = lin + Polynomial.variable(r, i) * c
            gens.append(lin)
        ideal = MultigradedIdeal.create(gens, ctx)
        rest = tuple(i for i in range(r) if i not in pivot_cone)
        for rest_perm in itertools.permutations(rest):
            order = GrevLex((1,) * r, perm=tuple(pivot_cone) + rest_perm)
            try:
                return _assemble(cox, ctx, ideal, order, names)
            except (RankMismatch, NormalizationInconsistent) as exc:
                last_error = exc
    raise last_error


def _assemble(cox, ctx, ideal, order, names):
    fan = cox.fan
    r, k = fan.nrays, fan.dim
    gb = groebner_basis(ideal, order)
    leads = [g.terms(order)[0][0] for g in gb.elements]

    def is_standard(m):
        return not any(all(a >= b for a, b in zip(m, lead)) for lead in leads)

    bases = []
    for p in range(k + 2):
        basis = [m for m in _monomials_of_total_degree(r, p) if is_standard(m)]
        basis.sort()
        bases.append(tuple(basis))
    ranks = chow_ranks(fan)
    for p in range(k + 1):
        if len(bases[p]) != ranks[p]:
            raise RankMismatch(
                "codimension %d has %d standard monomials, expected %d"
                % (p, len(bases[p]), ranks[p]),
                codim=p, got=len(bases[p]), expected=ranks[p])
    if bases[k + 1]:
        raise RankMismatch("standard monomials above the ambient dimension",
                           codim=k + 1, got=len(bases[k + 1]), expected=0)
    top = bases[k][0]
    sign = None
    for cone in fan.max_cones:
        e = [0] * r
        for i in cone:
            e[i] = 1
        nf = normal_form(Polynomial.from_monomial(tuple(e)), gb)
        terms = {m: c for m, c in nf.coeffs.items()}
        lam = terms.get(top, Fraction(0))
        if set(terms) != {top} or lam not in (1, -1):
            raise NormalizationInconsistent(
                "point class of cone %r reduced to %s, not +-(top monomial)"
                % (cone, nf.format(names)), cone=cone)
        if sign is None:
            sign = int(lam)
        elif sign != int(lam):
            raise NormalizationInconsistent(
                "cone %r gives point class sign %d, earlier cones gave %d"
                % (cone, int(lam), sign), cone=cone)
    return ChowRing(cox=cox, ctx=ctx, gb=gb, bases=tuple(bases[:k + 1]),
                    top=top, sign=sign)


def _monomials_of_total_degree(nvars, d):
    for bars in itertools.combinations(range(d + nvars - 1), nvars - 1):
        prev = -1
        out = []
        for b in bars:
            out.append(b - prev - 1)
            prev = b
        out.append(d + nvars - 2 - prev)
        yield tuple(out)
