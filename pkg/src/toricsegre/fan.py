"""Fan data model and validation, Cox grading, irrelevant ideal and chart
dehomogenization.

A fan is given by its primitive ray generators and its maximal cones (index
sets).  Validation certifies smoothness (every maximal cone unimodular) and
completeness (facet pairing); the grading matrix is the cokernel projection
of the ray matrix, computed by Smith normal form and canonicalized by row
Hermite form, together with a heft vector found by exact linear
feasibility.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .errors import (InvalidFan, InvalidGrading, NoPositiveGrading,
                     NotComplete, NotSmooth)
from .exactpoly import Polynomial, RingContext, ungraded_context
from .groebner import MultigradedIdeal


def _det(rows):
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for i in range(col + 1, n):
            f = m[i][col] * inv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


@dataclass(frozen=True)
class Fan:
    """Rays (primitive integer vectors) and maximal cones (ray index sets)."""

    rays: tuple
    max_cones: tuple

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in v) for v in self.rays)
        cones = tuple(tuple(sorted(set(c))) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        if not rays:
            raise InvalidFan("fan has no rays")
        k = len(rays[0])
        if any(len(v) != k for v in rays):
            raise InvalidFan("rays of mixed dimension")
        for v in rays:
            g = 0
            for x in v:
                g = gcd(g, abs(x))
            if g != 1:
                raise InvalidFan("ray %r is not primitive" % (v,))
        if len(set(rays)) != len(rays):
            raise InvalidFan("duplicate rays")
        for c in cones:
            if any(i < 0 or i >= len(rays) for i in c):
                raise InvalidFan("cone %r has an out-of-range ray index" % (c,))
        for a, b in itertools.combinations(cones, 2):
            if set(a) <= set(b) or set(b) <= set(a):
                raise InvalidFan("maximal cones %r and %r are comparable" % (a, b))
        covered = set().union(*map(set, cones)) if cones else set()
        if covered != set(range(len(rays))):
            raise InvalidFan("some ray appears in no maximal cone")

    @property
    def dim(self):
        return len(self.rays[0])

    @property
    def nrays(self):
        return len(self.rays)

    def cone_complement(self, cone):
        return tuple(i for i in range(self.nrays) if i not in set(cone))

    def face_counts(self):
        """Number of p-dimensional cones for p = 0..k (simplicial fan:
        faces are the ray subsets of maximal cones)."""
        faces = set()
        for c in self.max_cones:
            for size in range(len(c) + 1):
                faces.update(itertools.combinations(c, size))
        counts = [0] * (self.dim + 1)
        for f in faces:
            counts[len(f)] += 1
        return tuple(counts)

    def minimal_non_faces(self):
        """Minimal ray subsets contained in no cone (primitive collections)."""
        cones = [set(c) for c in self.max_cones]
        out = []
        for size in range(1, self.nrays + 1):
            for combo in itertools.combinations(range(self.nrays), size):
                s = set(combo)
                if any(set(nf) <= s for nf in out):
                    continue
                if not any(s <= c for c in cones):
                    out.append(combo)
        return tuple(out)


def validate_smooth_complete(fan):
    """Certify that the fan is smooth (unimodular maximal cones) and
    complete (facet pairing with opposite sides).  Raises with the
    offending cone or facet otherwise."""
    k = fan.dim
    for cone in fan.max_cones:
        if len(cone) != k:
            raise NotSmooth("maximal cone %r does not have %d rays" % (cone, k),
                            cone=cone)
        d = _det([fan.rays[i] for i in cone])
        if abs(d) != 1:
            raise NotSmooth("cone %r has determinant %s" % (cone, d), cone=cone)
    # facet pairing: each facet of a maximal cone shared by exactly one other
    facet_map = {}
    for ci, cone in enumerate(fan.max_cones):
        for facet in itertools.combinations(cone, k - 1):
            extra = next(i for i in cone if i not in facet)
            facet_map.setdefault(facet, []).append((ci, extra))
    for facet, hits in facet_map.items():
        if len(hits) != 2:
            raise NotComplete(
                "facet %r belongs to %d maximal cones" % (facet, len(hits)),
                facet=facet)
        if k == 1:
            u, v = fan.rays[hits[0][1]], fan.rays[hits[1][1]]
            if u[0] * v[0] >= 0:
                raise NotComplete("rays on the same side", facet=facet)
            continue
        rows = [fan.rays[i] for i in facet]
        normal = _facet_normal(rows)
        s0 = sum(a * b for a, b in zip(normal, fan.rays[hits[0][1]]))
        s1 = sum(a * b for a, b in zip(normal, fan.rays[hits[1][1]]))
        if s0 == 0 or s1 == 0 or (s0 > 0) == (s1 > 0):
            raise NotComplete(
                "cones %r and %r do not lie on opposite sides of facet %r"
                % (fan.max_cones[hits[0][0]], fan.max_cones[hits[1][0]], facet),
                facet=facet)
    return True


def _facet_normal(rows):
    """A nonzero rational vector orthogonal to the span of the rows."""
    k = len(rows[0])
    m, pivots = linalg.rref(rows)
    free = [j for j in range(k) if j not in pivots]
    j = free[0]
    n = [Fraction(0)] * k
    n[j] = Fraction(1)
    for r, col in enumerate(pivots):
        n[col] = -m[r][j]
    return n


def grading_matrix(fan):
    """Canonical cokernel projection of the ray matrix plus a heft vector.

    Returns (A, heft): A is an (r-k) x r integer matrix with A . rays^T = 0,
    surjective onto Z^(r-k), in row Hermite normal form; heft satisfies
    heft . column_i > 0 for every variable.  Raises NoPositiveGrading if no
    heft exists.
    """
    r, k = fan.nrays, fan.dim
    ray_matrix = [list(v) for v in fan.rays]  # r x k, rows are rays
    d, u, _v = linalg.smith_normal_form(ray_matrix)
    for i in range(k):
        if d[i][i] != 1:
            raise NotSmooth(
                "ray matrix has invariant factor %d (torsion cokernel)"
                % d[i][i])
    a = [u[i] for i in range(k, r)]
    a, _ = linalg.row_hermite(a)
    a = tuple(tuple(row) for row in a)
    heft = find_heft(a)
    return a, heft


def find_heft(a):
    """Integer h with h . a_col_i >= 1 for every column, by exact linear
    feasibility, cleared of denominators."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    system = [(tuple(a[i][j] for i in range(rows)), Fraction(-1))
              for j in range(cols)]
    point = linalg.fm_feasible_point(system, rows)
    if point is None:
        raise NoPositiveGrading("no heft vector exists for this grading")
    mult = 1
    for x in point:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    return tuple(int(x * mult) for x in point)


def validate_degree_matrix(fan, degrees):
    """Check a user-supplied degree matrix: right shape, annihilates the
    rays, and generates the same integer row space as the canonical one."""
    r, k = fan.nrays, fan.dim
    a = tuple(tuple(int(x) for x in row) for row in degrees)
    if len(a) != r - k or any(len(row) != r for row in a):
        raise InvalidGrading("degree matrix must be %d x %d" % (r - k, r))
    for j in range(k):
        for row in a:
            if sum(row[i] * fan.rays[i][j] for i in range(r)) != 0:
                raise InvalidGrading(
                    "degree matrix does not annihilate the ray matrix")
    canonical, _ = grading_matrix(fan)
    if not all(linalg.in_integer_row_span(canonical, row) for row in a):
        raise InvalidGrading("degree rows are not integral Picard classes")
    if not all(linalg.in_integer_row_span(a, row) for row in canonical):
        raise InvalidGrading("degree rows do not span the Picard lattice")
    return a


@dataclass(frozen=True)
class CoxContext:
    """Ring context of the Cox ring together with the fan and the
    irrelevant ideal."""

    ring: RingContext
    fan: Fan
    irrelevant: MultigradedIdeal

    @property
    def nvars(self):
        return self.ring.nvars


def build_cox_context(fan, names=None, degrees=None):
    """Cox ring of the fan: grading (canonical or user-supplied after
    validation), heft, and the irrelevant ideal."""
    r = fan.nrays
    if names is None:
        names = tuple("z%d" % i for i in range(r))
    else:
        names = tuple(names)
        if len(names) != r:
            raise InvalidFan("need one variable name per ray")
        if len(set(names)) != r:
            raise InvalidFan("duplicate variable names")
    if degrees is None:
        a, heft = grading_matrix(fan)
    else:
        a = validate_degree_matrix(fan, degrees)
        heft = find_heft(a)
    ring = RingContext(names=names, grading=a, heft=heft)
    return CoxContext(ring=ring, fan=fan,
                      irrelevant=irrelevant_ideal(fan, ring))


def irrelevant_ideal(fan, ring):
    """The ideal with one squarefree generator per maximal cone: the
    product of the variables of the rays outside the cone."""
    gens = []
    for cone in fan.max_cones:
        e = [0] * fan.nrays
        for i in fan.cone_complement(cone):
            e[i] = 1
        gens.append(Polynomial.from_monomial(tuple(e)))
    return MultigradedIdeal.create(gens, ring)


def chart_context(cox, cone_index):
    """Affine (ungraded) ring context of the chart of a maximal cone;
    variables are the rays of the cone, in index order."""
    cone = cox.fan.max_cones[cone_index]
    return ungraded_context([cox.ring.names[i] for i in cone]), cone


def chart_dehomogenize(I, cox, cone_index):
    """Substitute 1 for every off-chart variable; returns the affine ideal
    in the chart ring (variables of the chosen maximal cone)."""
    cone = cox.fan.max_cones[cone_index]
    off = cox.fan.cone_complement(cone)
    ctx, _ = chart_context(cox, cone_index)
    gens = [g.set_to_one(off) for g in I.generators]
    return MultigradedIdeal.create([g for g in gens if not g.is_zero()],
                                   ctx)
