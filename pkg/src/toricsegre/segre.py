"""Push-forward Segre classes of subschemes of smooth projective toric
varieties, by residual intersection.

Given a multihomogeneous ideal I in the Cox ring, the subscheme is
Z = V(I : B^inf) with B the irrelevant ideal.  For each codimension d from
codim Z up to dim X the algorithm cuts with d random sections bounded by a
common class alpha, removes Z by an ideal quotient to obtain a residual
scheme R_d of pure dimension, recovers the class of R_d from point counts
against products of globally generated divisor classes, and assembles the
Segre class components by the inclusion-exclusion recursion

    s_i = alpha^(c+i) - [R_(c+i)] - sum_(j<i) C(c+i, i-j) alpha^(i-j) s_j

with c = codim Z.  All arithmetic is exact; randomness is drawn from named
deterministic streams so runs are reproducible per (seed, attempt).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from . import linalg
from .cones import curve_functionals, find_alpha
from .errors import (DimensionFailure, EmptySubscheme, InconsistentSystem,
                     NonIntegerSolution, NotZeroDimensional, RetriesExhausted,
                     WholeSpace)
from .exactpoly import Polynomial, random_homogeneous
from .fan import chart_dehomogenize
from .groebner import (MultigradedIdeal, groebner_basis, krull_dimension,
                       saturate_ideal, vector_space_dimension)

RETRYABLE = (DimensionFailure, InconsistentSystem, NonIntegerSolution,
             NotZeroDimensional)


@dataclass(frozen=True)
class SubschemeInput:
    """Preprocessed problem: validated geometry plus the saturated ideal."""

    cox: object
    chow: object
    ideal: object  # as given (sections and the bounding class come from it)
    saturated: object  # B-saturation of ``ideal``
    dim: int
    codim: int
    functionals: tuple


@dataclass(frozen=True)
class ResidualData:
    """One residual scheme: the section ideal J_d, the residual ideal,
    its dimension (None when empty), the Chow class, and the linear system
    that produced the class."""

    d: int
    sections_ideal: object
    ideal: object
    dimension: object
    chow_class: object
    beta_rows: tuple
    gammas: tuple


@dataclass(frozen=True)
class SegreResult:
    alpha: tuple
    dim: int
    ambient_dim: int
    components: tuple  # Chow classes s_0 .. s_n
    total: object
    residuals: tuple  # ResidualData per cut codimension
    seed: object
    attempt: int
    coeff_bound: int


def preprocess(cox, chow, generators):
    """Saturate the input ideal by the irrelevant ideal and classify the
    subscheme.  Raises WholeSpace / EmptySubscheme for the degenerate
    cases."""
    ideal = MultigradedIdeal.create(generators, cox.ring)
    if ideal.is_zero():
        raise WholeSpace("the ideal is zero")
    sat = saturate_ideal(ideal, cox.irrelevant)
    if sat.is_zero():
        raise WholeSpace("the ideal saturates to zero")
    cone_dim = krull_dimension(sat)
    if cone_dim is None:
        raise EmptySubscheme("the ideal saturates to the unit ideal")
    k = cox.fan.dim
    n = cone_dim - (cox.fan.nrays - k)
    if n >= k:
        raise WholeSpace("the subscheme has dimension %d in a %d-fold"
                         % (n, k))
    if n < 0:
        raise EmptySubscheme("the saturated ideal has empty vanishing locus")
    functionals = curve_functionals(cox)
    return SubschemeInput(cox=cox, chow=chow, ideal=ideal, saturated=sat,
                          dim=n, codim=k - n, functionals=functionals)


def pick_sections(problem, alpha, d, rng, coeff_bound):
    """d random sections of class alpha inside the ideal: each is a random
    homogeneous combination of the generators."""
    ring = problem.cox.ring
    out = []
    for _ in range(d):
        f = Polynomial.zero(ring.nvars)
        for g, delta in zip(problem.ideal.generators, problem.ideal.degrees):
            gap = tuple(a - x for a, x in zip(alpha, delta))
            f = f + g * random_homogeneous(gap, rng, coeff_bound, ring)
        out.append(f)
    return out


def residual_ideal(problem, sections):
    """Ideal of the residual scheme: saturate the section ideal by the
    irrelevant ideal, then quotient out the subscheme."""
    cox = problem.cox
    F = MultigradedIdeal.create(sections, cox.ring)
    J = saturate_ideal(F, cox.irrelevant)
    # quotienting by the input ideal equals quotienting by its saturation
    # once J is saturated, and the input has fewer generators
    return J, saturate_ideal(J, problem.ideal)


def _dimension_in_x(I, cox):
    """Dimension of V(I) in X for a B-saturated ideal, or None if empty."""
    cone_dim = krull_dimension(I)
    if cone_dim is None:
        return None
    return cone_dim - (cox.fan.nrays - cox.fan.dim)


def zero_dim_length(I, cox):
    """Length of a zero-dimensional subscheme of X, by a chart sweep.

    Chart t contributes the length of the part of V(I) supported away from
    all earlier charts: vsdim of the dehomogenized ideal minus vsdim of its
    saturation by the dehomogenized irrelevant monomials of earlier cones.
    Raises NotZeroDimensional when some chart ideal is not Artinian.
    """
    total = 0
    irr = cox.irrelevant.generators
    for t in range(len(cox.fan.max_cones)):
        J = chart_dehomogenize(I, cox, t)
        v = vector_space_dimension(J)
        if t == 0 or v == 0:
            total += v
            continue
        off = cox.fan.cone_complement(cox.fan.max_cones[t])
        earlier = [irr[s].set_to_one(off) for s in range(t)]
        M = MultigradedIdeal.create(earlier, J.ctx)
        away = saturate_ideal(J, M)
        total += v - vector_space_dimension(away)
    return total


def residual_class(problem, d, I_R, seed, attempt, coeff_bound):
    """Chow class of a nonempty residual scheme of codimension d.

    Unknown coefficients on the codimension-d standard basis are solved
    from degree equations indexed by exponent tuples p with sum k-d over
    the toric divisors: the pairing of each basis element with the product
    of the D_j^(p_j) (beta) must reproduce the counted length of the
    residual scheme cut by p_j random polynomials of each degree [D_j]
    (gamma).  Rows accumulate in lexicographic p order until the system
    has full rank plus one redundant consistency row.
    """
    chow = problem.chow
    cox = problem.cox
    k = cox.fan.dim
    r = cox.fan.nrays
    basis = chow.bases[d]
    h = len(basis)
    rows, gammas = [], []
    ptuples = sorted(_exponent_tuples(r, k - d))
    reached = None
    for pidx, p in enumerate(ptuples):
        prod = chow.reduce(Polynomial.from_monomial(p))
        row = [chow.degree(chow.multiply(Polynomial(chow.nvars, {m: 1}),
                                         prod)) if prod else 0
               for m in basis]
        rng = random.Random("%s:%d:%d:%d" % (seed, attempt, d, pidx))
        cuts = []
        for j, pj in enumerate(p):
            delta = cox.ring.degree_of_variable(j)
            for _ in range(pj):
                cuts.append(random_homogeneous(delta, rng, coeff_bound,
                                               cox.ring))
        cut_ideal = MultigradedIdeal.create(
            list(I_R.generators) + cuts, cox.ring)
        gamma = zero_dim_length(cut_ideal, cox)
        rows.append(row)
        gammas.append(gamma)
        if linalg.rational_rank(rows) == h:
            if reached is None:
                reached = len(rows)
            if len(rows) > reached:
                break
    if linalg.rational_rank(rows) < h:
        raise InconsistentSystem(
            "divisor products give a rank-deficient pairing in codim %d" % d)
    sol, consistent = linalg.solve_linear_system(rows, gammas)
    if sol is None or not consistent:
        raise InconsistentSystem(
            "degree equations for the codim-%d residual disagree" % d,
            rows=tuple(map(tuple, rows)), gammas=tuple(gammas))
    if any(x.denominator != 1 for x in sol):
        raise NonIntegerSolution(
            "residual class solved to %r" % (sol,))
    cls = chow.class_from_coefficients([int(x) for x in sol], d)
    return cls, tuple(map(tuple, rows)), tuple(gammas)


def _exponent_tuples(nvars, total):
    if nvars == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _exponent_tuples(nvars - 1, total - head):
            yield (head,) + rest


def _attempt(problem, alpha, seed, attempt, coeff_bound):
    cox, chow = problem.cox, problem.chow
    k, n, c = cox.fan.dim, problem.dim, problem.codim
    residuals = []
    classes = {}
    for d in range(c, k + 1):
        rng = random.Random("%s:%d:%d:sections" % (seed, attempt, d))
        sections = pick_sections(problem, alpha, d, rng, coeff_bound)
        J, I_R = residual_ideal(problem, sections)
        dim_r = _dimension_in_x(I_R, cox)
        if dim_r is None:
            residuals.append(ResidualData(d=d, sections_ideal=J, ideal=I_R,
                                          dimension=None,
                                          chow_class=chow.zero(),
                                          beta_rows=(), gammas=()))
            classes[d] = chow.zero()
            continue
        if dim_r != k - d:
            raise DimensionFailure(
                "residual of %d sections has dimension %d, expected %d"
                % (d, dim_r, k - d), d=d, got=dim_r, expected=k - d)
        cls, rows, gammas = residual_class(problem, d, I_R, seed, attempt,
                                           coeff_bound)
        residuals.append(ResidualData(d=d, sections_ideal=J, ideal=I_R,
                                      dimension=dim_r,
                                      chow_class=cls, beta_rows=rows,
                                      gammas=gammas))
        classes[d] = cls
    alpha_class = chow.pic_to_chow(alpha)
    components = []
    for i in range(n + 1):
        m = c + i
        val = chow.power(alpha_class, m) - classes[m]
        for j in range(i):
            term = chow.multiply(chow.power(alpha_class, i - j),
                                 components[j])
            val = val - term * comb(m, i - j)
        components.append(chow.reduce(val))
    total = chow.zero()
    for s in components:
        total = total + s
    return SegreResult(alpha=tuple(alpha), dim=n, ambient_dim=k,
                       components=tuple(components),
                       total=total, residuals=tuple(residuals), seed=seed,
                       attempt=attempt, coeff_bound=coeff_bound)


def segre_class(problem, seed=0, coeff_bound=100, retries=5):
    """Push-forward Segre class of the subscheme, retrying with fresh
    randomness when a draw is degenerate."""
    alpha = find_alpha(problem.ideal.degrees, problem.cox,
                       problem.functionals)
    failures = []
    for attempt in range(max(1, retries)):
        try:
            return _attempt(problem, alpha, seed, attempt, coeff_bound)
        except RETRYABLE as exc:
            failures.append("%s: %s" % (type(exc).__name__, exc))
    raise RetriesExhausted(
        "all %d attempts failed; last: %s" % (max(1, retries), failures[-1]),
        failures=tuple(failures))
