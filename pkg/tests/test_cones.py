"""Wall curves, nef checks, and the bounding class alpha."""

from toricsegre.cones import (curve_functionals, find_alpha, find_ample,
                              is_nef, wall_relations)
from toricsegre.library import (hirzebruch, product_p1_cubed,
                                projective_space)
from toricsegre.library import test_library as fan_library


def test_wall_relations_annihilate_rays():
    for cox in fan_library().values():
        fan = cox.fan
        for c in wall_relations(fan):
            for j in range(fan.dim):
                assert sum(ci * fan.rays[i][j]
                           for i, ci in enumerate(c)) == 0


def test_nef_criterion_p2():
    cox = projective_space(2)
    w = curve_functionals(cox)
    assert is_nef((0,), w) and is_nef((3,), w)
    assert not is_nef((-1,), w)


def test_nef_criterion_hirzebruch():
    """(a, b) nef on F_e iff a >= e b, b >= 0 and a >= 0."""
    for e in range(4):
        cox = hirzebruch(e)
        w = curve_functionals(cox)
        for a in range(6):
            for b in range(6):
                expected = a >= e * b and b >= 0 and a >= 0
                assert is_nef((a, b), w) == expected, (e, a, b)
        assert not is_nef((-1, 0), w)
        assert not is_nef((0, -1), w)


def test_nef_criterion_p1_cubed():
    w = curve_functionals(product_p1_cubed())
    assert is_nef((1, 2, 3), w)
    assert not is_nef((1, -1, 0), w)


def test_find_ample_is_nef_and_positive():
    for name, cox in fan_library().items():
        w = curve_functionals(cox)
        ample = find_ample(cox, w)
        for f in w:
            assert sum(fi * ai for fi, ai in zip(f, ample)) >= 1, name


def test_alpha_hirzebruch_closed_form():
    """On F_e the least common nef bound of degrees (a_i, b_i) is
    (max(e b_i) - min(e b_i - a_i), max b_i)."""
    cases = [
        (1, [(4, 2), (3, 4)], (6, 4)),     # the worked example
        (0, [(1, 2), (2, 1)], (2, 2)),
        (2, [(1, 1), (3, 0)], None),       # computed from the formula
        (3, [(2, 2), (5, 1)], None),
    ]
    for e, degrees, expected in cases:
        if expected is None:
            mx = max(e * b for _a, b in degrees)
            expected = (mx - min(e * b - a for a, b in degrees),
                        max(b for _a, b in degrees))
        cox = hirzebruch(e)
        assert find_alpha(degrees, cox) == expected, (e, degrees)


def test_alpha_p1_cubed_is_coordinatewise_max():
    cox = product_p1_cubed()
    degrees = [(1, 0, 2), (0, 1, 1)]
    assert find_alpha(degrees, cox) == (1, 1, 2)


def test_alpha_single_degree_is_itself_when_nef():
    cox = hirzebruch(1)
    assert find_alpha([(3, 2)], cox) == (3, 2)


def test_alpha_dominates_all_degrees():
    for name, cox in fan_library().items():
        w = curve_functionals(cox)
        p = cox.ring.pic_rank
        degrees = [tuple(1 if i == j else 0 for i in range(p))
                   for j in range(p)] or [()]
        alpha = find_alpha(degrees, cox)
        for d in degrees:
            gap = tuple(a - x for a, x in zip(alpha, d))
            assert is_nef(gap, w), (name, alpha, d)
