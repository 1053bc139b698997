"""Exact linear algebra helpers: rational elimination, Smith and Hermite
normal forms over the integers, and Fourier-Motzkin feasibility.

Everything here works on lists of tuples and stays exact (ints and
Fractions); the matrices involved are tiny (rays x dimension scale).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


# --- rational elimination --------------------------------------------------

def rref(rows):
    """Reduced row echelon form over Q.  Returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    row = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rational_rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def solve_rational(a_rows, b):
    """One rational solution x of A x = b, or None if inconsistent."""
    if not a_rows:
        return None if any(b) else ()
    n = len(a_rows[0])
    aug = [list(row) + [bb] for row, bb in zip(a_rows, b)]
    m, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = m[r][-1]
    return tuple(x)


def solve_linear_system(rows, rhs):
    """Solve the (possibly overdetermined) system rows . x = rhs exactly.

    Returns (solution, consistent): the solution uses a maximal independent
    subset of rows; ``consistent`` reports whether every row is satisfied.
    """
    x = solve_rational(rows, rhs)
    if x is None:
        return None, False
    for row, b in zip(rows, rhs):
        if sum(a * xi for a, xi in zip(row, x)) != b:
            return x, False
    return x, True


# --- integer normal forms --------------------------------------------------

def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(mat):
    """Smith normal form: returns (d, u, v) with u . mat . v = d, u and v
    unimodular and d diagonal with each invariant factor dividing the next."""
    m = [list(row) for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    u = _identity(nrows)
    v = _identity(ncols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        m[dst] = [a + q * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in m:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(nrows, ncols):
        # pivot: smallest nonzero entry in the remaining block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nrows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # enforce divisibility of the remaining block by the pivot
        fixed = False
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if m[i][j] % m[t][t]:
                    add_row(i, t, 1)
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return m, u, v


def row_hermite(mat):
    """Row-style Hermite normal form: returns (h, u) with u . mat = h,
    u unimodular, h in echelon form with positive pivots and reduced
    entries above each pivot."""
    m = [list(row) for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    u = _identity(nrows)

    def add_row(src, dst, q):
        m[dst] = [a + q * b for a, b in zip(m[dst], m[src])]
        u[dst] = [a + q * b for a, b in zip(u[dst], u[src])]

    row = 0
    for col in range(ncols):
        # gcd-reduce the column below `row`
        while True:
            candidates = [i for i in range(row, nrows) if m[i][col]]
            if not candidates:
                break
            pivot = min(candidates, key=lambda i: abs(m[i][col]))
            m[row], m[pivot] = m[pivot], m[row]
            u[row], u[pivot] = u[pivot], u[row]
            done = True
            for i in range(row + 1, nrows):
                if m[i][col]:
                    add_row(row, i, -(m[i][col] // m[row][col]))
                    if m[i][col]:
                        done = False
            if done:
                break
        if row < nrows and m[row][col]:
            if m[row][col] < 0:
                m[row] = [-x for x in m[row]]
                u[row] = [-x for x in u[row]]
            for i in range(row):
                q = m[i][col] // m[row][col]
                if q:
                    add_row(row, i, -q)
            row += 1
            if row == nrows:
                break
    return m, u


def solve_integer(a_rows, b):
    """One integer solution x of A x = b, or None.

    Uses the Smith form: with u A v = d, solve d y = u b and set x = v y.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if a_rows else 0
    d, u, v = smith_normal_form(a_rows)
    ub = [sum(u[i][j] * b[j] for j in range(nrows)) for i in range(nrows)]
    y = [0] * ncols
    for i in range(nrows):
        di = d[i][i] if i < ncols else 0
        if di:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
        elif ub[i]:
            return None
    return tuple(sum(v[i][j] * y[j] for j in range(ncols)) for i in range(ncols))


def in_integer_row_span(rows, target):
    """Whether ``target`` is an integer combination of ``rows``."""
    cols = [[row[j] for row in rows] for j in range(len(target))]
    return solve_integer(cols, list(target)) is not None


# --- Fourier-Motzkin -------------------------------------------------------

def _normalize_ineq(coeffs, const):
    denoms = [c.denominator for c in coeffs if isinstance(c, Fraction)]
    if isinstance(const, Fraction):
        denoms.append(const.denominator)
    mult = 1
    for d in denoms:
        mult = mult * d // gcd(mult, d)
    ic = [int(c * mult) for c in coeffs]
    k = int(const * mult)
    g = 0
    for c in ic:
        g = gcd(g, abs(c))
    g = gcd(g, abs(k))
    if g > 1:
        ic = [c // g for c in ic]
        k //= g
    return tuple(ic), k


def fm_eliminate(system, var):
    """Eliminate ``var`` from a system of inequalities sum(a.x) + c >= 0.

    Returns the reduced system (still over the full variable tuple, with the
    eliminated variable's coefficient zero everywhere).
    """
    pos = [iq for iq in system if iq[0][var] > 0]
    neg = [iq for iq in system if iq[0][var] < 0]
    free = [iq for iq in system if iq[0][var] == 0]
    out = list(free)
    seen = set(free)
    for (ap, cp) in pos:
        for (an, cn) in neg:
            f_p, f_n = -an[var], ap[var]
            coeffs = tuple(f_p * a + f_n * b for a, b in zip(ap, an))
            const = f_p * cp + f_n * cn
            iq = _normalize_ineq([Fraction(c) for c in coeffs], Fraction(const))
            if iq not in seen:
                seen.add(iq)
                out.append(iq)
    return out


def fm_feasible_point(system, nvars):
    """An exact rational point satisfying every inequality, or None.

    ``system`` is a list of (coefficient tuple of length nvars, constant)
    meaning sum(a_i x_i) + c >= 0.
    """
    system = [_normalize_ineq([Fraction(c) for c in a], Fraction(k))
              for a, k in system]
    stages = []
    current = system
    for var in range(nvars):
        stages.append(current)
        current = fm_eliminate(current, var)
    for coeffs, const in current:
        if const < 0:
            return None
    x = [Fraction(0)] * nvars
    for var in reversed(range(nvars)):
        lower, upper = None, None
        for coeffs, const in stages[var]:
            a = coeffs[var]
            if a == 0:
                continue
            rest = sum(Fraction(c) * x[j] for j, c in enumerate(coeffs)
                       if j != var) + const
            bound = Fraction(-rest, a)
            if a > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        if lower is not None:
            x[var] = lower
        elif upper is not None:
            x[var] = min(upper, Fraction(0))
        else:
            x[var] = Fraction(0)
    return tuple(x)


def fm_minimize(objective, system, nvars):
    """Exact LP: minimize objective . x subject to the system.

    Returns (value, point) or None if infeasible; value is None when the
    objective is unbounded below on the feasible set.
    """
    # extra variable t with constraint t - objective . x >= 0
    ext = [(tuple(a) + (0,), c) for a, c in system]
    ext.append((tuple(-Fraction(o) for o in objective) + (1,), Fraction(0)))
    ext = [_normalize_ineq([Fraction(c) for c in a], Fraction(k)) for a, k in ext]
    stages = []
    current = ext
    for var in range(nvars):
        stages.append(current)
        current = fm_eliminate(current, var)
    lower = None
    feasible = True
    for coeffs, const in current:
        a = coeffs[nvars]
        if a > 0:
            bound = Fraction(-const, a)
            lower = bound if lower is None else max(lower, bound)
        elif a < 0:
            continue  # upper bound on t, irrelevant for the minimum
        elif const < 0:
            feasible = False
    if not feasible:
        return None
    if lower is None:
        return (None, None)
    t = lower
    x = [Fraction(0)] * (nvars + 1)
    x[nvars] = t
    for var in reversed(range(nvars)):
        lo, hi = None, None
        for coeffs, const in stages[var]:
            a = coeffs[var]
            if a == 0:
                continue
            rest = sum(Fraction(c) * x[j] for j, c in enumerate(coeffs)
                       if j != var) + const
            bound = Fraction(-rest, a)
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None:
            x[var] = lo
        elif hi is not None:
            x[var] = min(hi, Fraction(0))
        else:
            x[var] = Fraction(0)
    return t, tuple(x[:nvars])
