"""Exact linear algebra: oracles against hand-computed values and
property tests against independent checks."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from toricsegre import linalg

small_int = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(small_int, min_size=c, max_size=c),
                min_size=r, max_size=r)))


def test_rref_identity():
    m, pivots = linalg.rref([[1, 0], [0, 1]])
    assert pivots == [0, 1]
    assert m == [[1, 0], [0, 1]]


def test_rank_oracle():
    assert linalg.rational_rank([[1, 2], [2, 4]]) == 1
    assert linalg.rational_rank([[1, 2], [3, 4]]) == 2
    assert linalg.rational_rank([[0, 0]]) == 0


def test_solve_rational_oracle():
    x = linalg.solve_rational([[2, 0], [0, 4]], [1, 1])
    assert list(x) == [Fraction(1, 2), Fraction(1, 4)]
    assert linalg.solve_rational([[1, 1], [1, 1]], [0, 1]) is None


def test_solve_linear_system_consistency_flag():
    sol, ok = linalg.solve_linear_system([[1, 0], [0, 1], [1, 1]], [2, 3, 5])
    assert ok and list(sol) == [2, 3]
    sol, ok = linalg.solve_linear_system([[1, 0], [0, 1], [1, 1]], [2, 3, 6])
    assert not ok


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_smith_form_properties(mat):
    d, u, v = linalg.smith_normal_form(mat)
    nr, nc = len(mat), len(mat[0])
    # u . mat . v == d
    um = [[sum(u[i][l] * mat[l][j] for l in range(nr)) for j in range(nc)]
          for i in range(nr)]
    umv = [[sum(um[i][l] * v[l][j] for l in range(nc)) for j in range(nc)]
           for i in range(nr)]
    assert umv == [list(row) for row in d]
    for i in range(nr):
        for j in range(nc):
            if i != j:
                assert d[i][j] == 0
    diag = [d[i][i] for i in range(min(nr, nc))]
    for a, b in zip(diag, diag[1:]):
        if a and b:
            assert b % a == 0
        if a == 0:
            assert b == 0
    # u, v unimodular
    assert abs(linalg.rational_rank(u)) == nr
    from toricsegre.fan import _det
    assert abs(_det(u)) == 1
    assert abs(_det(v)) == 1


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_row_hermite_properties(mat):
    h, u = linalg.row_hermite(mat)
    nr = len(mat)
    um = [[sum(u[i][l] * mat[l][j] for l in range(nr))
           for j in range(len(mat[0]))] for i in range(nr)]
    assert um == [list(row) for row in h]
    from toricsegre.fan import _det
    assert abs(_det(u)) == 1
    # echelon with positive pivots
    last = -1
    for row in h:
        nz = [j for j, x in enumerate(row) if x]
        if nz:
            assert nz[0] > last
            assert row[nz[0]] > 0
            last = nz[0]


@given(matrices(), st.lists(small_int, min_size=1, max_size=4))
@settings(max_examples=80, deadline=None)
def test_solve_integer_is_exact_solution(mat, x):
    x = x[:len(mat[0])] + [0] * (len(mat[0]) - len(x))
    b = [sum(r * xi for r, xi in zip(row, x)) for row in mat]
    sol = linalg.solve_integer(mat, b)
    assert sol is not None
    assert all(isinstance(s, int) or getattr(s, "denominator", 1) == 1
               for s in sol)
    assert [sum(r * s for r, s in zip(row, sol)) for row in mat] == b


def test_solve_integer_no_solution():
    # 2x = 1 has no integer solution
    assert linalg.solve_integer([[2]], [1]) is None


def test_in_integer_row_span():
    rows = [[1, 1, 0], [0, 2, 0]]
    assert linalg.in_integer_row_span(rows, (1, 3, 0))
    assert not linalg.in_integer_row_span(rows, (0, 1, 0))
    assert not linalg.in_integer_row_span(rows, (0, 0, 1))


def test_fm_feasible_point_simplex():
    # x >= 0, y >= 0, -x - y + 1 >= 0
    system = [((1, 0), 0), ((0, 1), 0), ((-1, -1), 1)]
    p = linalg.fm_feasible_point(system, 2)
    assert p is not None
    for a, c in system:
        assert sum(Fraction(ai) * pi for ai, pi in zip(a, p)) + c >= 0


def test_fm_infeasible():
    # x >= 1 and -x >= 0
    assert linalg.fm_feasible_point([((1,), -1), ((-1,), 0)], 1) is None


def test_fm_minimize_oracle():
    # minimize x + y over x >= 1, y >= 2
    value, point = linalg.fm_minimize(
        (1, 1), [((1, 0), -1), ((0, 1), -2)], 2)
    assert value == 3
    assert list(point) == [1, 2]


def test_fm_minimize_unbounded():
    value, _point = linalg.fm_minimize((1,), [((0,), 0)], 1)
    assert value is None
