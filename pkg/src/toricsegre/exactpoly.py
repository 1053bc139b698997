"""Exact multivariate polynomial arithmetic over the rationals.

Monomials are exponent tuples, coefficients are ``fractions.Fraction``
(always stored reduced), and a ring context carries the multigrading:
an integer matrix with one column per variable plus a heft vector making
every variable weight positive.  All values are immutable; every operation
is a pure function, so shared read-only use from several threads is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EmptyDegree, NotHomogeneous, ZeroPolynomial

Monomial = tuple  # exponent vector, one entry per variable
MultiDegree = tuple  # vector in Pic coordinates, one entry per grading row


@dataclass(frozen=True)
class RingContext:
    """Variable names, grading matrix and heft vector of a polynomial ring.

    ``grading`` has one row per Picard coordinate and one column per
    variable; it may have zero rows, in which case the ring is treated as
    ungraded (all weights 1), which is how affine chart rings are modelled.
    """

    names: tuple
    grading: tuple  # rows, each a tuple of len(names) ints
    heft: tuple

    def __post_init__(self):
        r = len(self.names)
        for row in self.grading:
            if len(row) != r:
                raise ValueError("grading row length != variable count")
        if len(self.heft) != len(self.grading):
            raise ValueError("heft length != number of grading rows")
        for i in range(r):
            if self.grading and self.weight(i) <= 0:
                raise ValueError(
                    "variable %s has non-positive heft weight" % self.names[i])

    @property
    def nvars(self):
        return len(self.names)

    @property
    def pic_rank(self):
        return len(self.grading)

    def weight(self, i):
        """Heft weight of variable ``i`` (1 in the ungraded case)."""
        if not self.grading:
            return 1
        return sum(h * row[i] for h, row in zip(self.heft, self.grading))

    @property
    def weights(self):
        return tuple(self.weight(i) for i in range(self.nvars))

    def degree_of_variable(self, i):
        return tuple(row[i] for row in self.grading)

    def heft_of(self, delta):
        return sum(h * d for h, d in zip(self.heft, delta))


def ungraded_context(names):
    """Ring context for an affine (ungraded) polynomial ring."""
    return RingContext(names=tuple(names), grading=(), heft=())


# --- monomial orders -------------------------------------------------------

class GrevLex:
    """Graded reverse lexicographic order.

    Grades by the given weight vector; ties break reverse-lexicographically
    along ``perm`` (a variable sequence, last entry least significant... in
    the grevlex sense of being most penalized).  The default permutation is
    the natural variable order.
    """

    __slots__ = ("weights", "perm", "_rev")

    def __init__(self, weights, perm=None):
        self.weights = tuple(weights)
        self.perm = tuple(perm) if perm is not None else tuple(range(len(self.weights)))
        self._rev = tuple(reversed(self.perm))

    def key(self, e):
        w = self.weights
        return (sum(w[i] * e[i] for i in range(len(e))),
                tuple(-e[i] for i in self._rev))

    def weighted_degree(self, e):
        return sum(w * x for w, x in zip(self.weights, e))

    def __repr__(self):
        return "GrevLex(weights=%r, perm=%r)" % (self.weights, self.perm)


class BlockOrder:
    """Elimination order: grevlex on a front block, then grevlex on the rest.

    Any monomial containing a front-block variable beats every monomial
    without one, so a Groebner basis element free of front-block variables
    lies in the subring omitting them.
    """

    __slots__ = ("front", "rest", "weights")

    def __init__(self, front, weights):
        self.front = tuple(sorted(front))
        self.weights = tuple(weights)
        self.rest = tuple(i for i in range(len(self.weights)) if i not in set(self.front))

    def key(self, e):
        w = self.weights
        return (sum(w[i] * e[i] for i in self.front),
                tuple(-e[i] for i in reversed(self.front)),
                sum(w[i] * e[i] for i in self.rest),
                tuple(-e[i] for i in reversed(self.rest)))

    def __repr__(self):
        return "BlockOrder(front=%r)" % (self.front,)


# --- polynomials -----------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars, coeffs=None):
        object.__setattr__(self, "nvars", nvars)
        clean = {}
        if coeffs:
            for m, c in coeffs.items():
                if c:
                    clean[tuple(m)] = c if isinstance(c, Fraction) else Fraction(c)
        object.__setattr__(self, "coeffs", clean)

    # constructors
    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars, i, exp=1):
        e = [0] * nvars
        e[i] = exp
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def from_monomial(cls, m, c=1):
        return cls(len(m), {tuple(m): Fraction(c)})

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.nvars, out)

    def __neg__(self):
        return Polynomial(self.nvars, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars,
                              {m: c * other for m, c in self.coeffs.items()})
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        if other.nvars != self.nvars:
            raise ValueError("mixed variable counts")
        return other

    def terms(self, order):
        """Terms as (monomial, coefficient), sorted descending by ``order``."""
        return sorted(self.coeffs.items(), key=lambda t: order.key(t[0]),
                      reverse=True)

    def total_degree(self):
        return max((sum(m) for m in self.coeffs), default=0)

    def set_to_one(self, indices):
        """Substitute 1 for the given variables and drop them from the ring."""
        drop = set(indices)
        keep = [i for i in range(self.nvars) if i not in drop]
        out = {}
        for m, c in self.coeffs.items():
            mm = tuple(m[i] for i in keep)
            s = out.get(mm, 0) + c
            if s:
                out[mm] = s
            else:
                del out[mm]
        return Polynomial(len(keep), out)

    def extended(self, extra):
        """The same polynomial viewed in a ring with ``extra`` new trailing
        variables."""
        z = (0,) * extra
        return Polynomial(self.nvars + extra,
                          {m + z: c for m, c in self.coeffs.items()})

    def format(self, names):
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in sorted(self.coeffs.items(), reverse=True):
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append("%s^%d" % (names[i], e))
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%s*%s" % (c, body))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return "Polynomial(%d, %r)" % (self.nvars, self.coeffs)


# --- graded operations -----------------------------------------------------

def multidegree_of(f, ctx):
    """Common multidegree of all terms of ``f``; raises if f is zero or the
    terms disagree."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no multidegree")
    delta = None
    for m in f.coeffs:
        d = tuple(sum(row[i] * m[i] for i in range(len(m)))
                  for row in ctx.grading)
        if delta is None:
            delta = d
        elif d != delta:
            raise NotHomogeneous(
                "terms of degrees %r and %r" % (delta, d),
                degree_a=delta, degree_b=d)
    return delta


def is_multihomogeneous(f, ctx):
    try:
        multidegree_of(f, ctx)
    except NotHomogeneous:
        return False
    except ZeroPolynomial:
        return True
    return True


def monomials_of_degree(delta, ctx):
    """All exponent vectors e >= 0 with grading . e == delta, in lexicographic
    order.

    Finite because the heft weights are positive: each exponent is bounded by
    the heft of delta.  Backtracks variable by variable, pruning on both the
    residual heft and the residual degree.
    """
    delta = tuple(delta)
    r = ctx.nvars
    budget = ctx.heft_of(delta)
    if budget < 0:
        return []
    weights = ctx.weights
    cols = [ctx.degree_of_variable(i) for i in range(r)]
    out = []
    e = [0] * r

    def recurse(i, residual, budget):
        if i == r:
            if all(x == 0 for x in residual):
                out.append(tuple(e))
            return
        w = weights[i]
        col = cols[i]
        for exp in range(budget // w + 1):
            e[i] = exp
            recurse(i + 1,
                    tuple(x - exp * c for x, c in zip(residual, col)),
                    budget - exp * w)
        e[i] = 0

    recurse(0, delta, budget)
    return out


def random_homogeneous(delta, rng, bound, ctx):
    """Random multihomogeneous polynomial of degree ``delta``: every monomial
    of that degree appears, with a uniformly random nonzero integer
    coefficient in [-bound, bound]."""
    monomials = monomials_of_degree(delta, ctx)
    if not monomials:
        raise EmptyDegree("no monomials of degree %r" % (tuple(delta),))
    coeffs = {}
    for m in monomials:
        c = rng.randint(1, bound)
        if rng.random() < 0.5:
            c = -c
        coeffs[m] = Fraction(c)
    return Polynomial(ctx.nvars, coeffs)
