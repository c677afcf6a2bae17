import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimers.matchings import (
    classify, convex_hull, enumerate_pms, has_interior_point, is_isolated,
    is_perfect_matching, lattice_points_in_hull, pm_homology, pm_polygon,
    point_in_hull, polygon_area_twice,
)

import known_data


def test_pm_counts(models):
    assert len(enumerate_pms(models["square4"].graph)) == 8
    assert len(enumerate_pms(models["conifold"].graph)) == 4
    assert len(enumerate_pms(models["octo8"].graph)) == 30
    assert len(enumerate_pms(models["hex7"].graph)) == 24


def test_every_enumerated_set_is_a_matching(fixture):
    g = fixture.graph
    for m in enumerate_pms(g):
        assert is_perfect_matching(g, m)


def test_aliases_are_matchings(fixture):
    for m in fixture.pm_aliases.values():
        assert is_perfect_matching(fixture.graph, m)


def test_conifold_matchings_are_singletons(models):
    pms = enumerate_pms(models["conifold"].graph)
    assert sorted(sorted(m) for m in pms) == [["a"], ["b"], ["c"], ["d"]]


def test_hex7_contains_the_six_distinguished_matchings(models):
    fx = models["hex7"]
    pms = set(enumerate_pms(fx.graph))
    for m in fx.pm_aliases.values():
        assert m in pms


def test_square4_homology_classes(models):
    fx = models["square4"]
    g = fx.graph
    d5 = fx.pm_aliases["D5"]
    for name, point in known_data.SQUARE4_POINTS.items():
        assert pm_homology(g, fx.pm_aliases[name], d5) == point


def test_homology_antisymmetry_and_self(fixture):
    g = fixture.graph
    pms = enumerate_pms(g)
    for m in pms:
        assert pm_homology(g, m, m) == (0, 0)
    a, b = pms[0], pms[-1]
    x, y = pm_homology(g, a, b)
    assert pm_homology(g, b, a) == (-x, -y)


def test_cocycle_identity(fixture):
    g = fixture.graph
    pms = enumerate_pms(g)
    for di, dj, dk in itertools.combinations(pms, 3):
        ij = pm_homology(g, di, dj)
        ik = pm_homology(g, di, dk)
        jk = pm_homology(g, dj, dk)
        assert ij == (ik[0] - jk[0], ik[1] - jk[1])


def test_square4_polygon(models):
    fx = models["square4"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert set(poly.hull) == known_data.SQUARE4_HULL
    for name in ("D1", "D2", "D3", "D4"):
        assert poly.classify(fx.pm_aliases[name]) == "corner"
    for name in ("D5", "D6", "D7", "D8"):
        assert poly.classify(fx.pm_aliases[name]) == "internal"


def test_octo8_polygon(models):
    fx = models["octo8"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert set(poly.hull) == known_data.OCTO8_HULL
    for name, point in known_data.OCTO8_POINTS.items():
        assert poly.point_of(fx.pm_aliases[name]) == point
    assert poly.classify(fx.pm_aliases["D6"]) == "boundary"
    assert poly.classify(fx.pm_aliases["D7"]) == "internal"
    assert poly.classify(fx.pm_aliases["D8"]) == "internal"


def test_hex7_polygon(models):
    fx = models["hex7"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert set(poly.hull) == known_data.HEX7_HULL
    assert set(poly.interior_lattice_points()) == known_data.HEX7_INTERIOR
    pts = {poly.point_of(fx.pm_aliases[n]) for n in ("D4", "D5", "D6")}
    assert pts == known_data.HEX7_INTERIOR
    for name, point in known_data.HEX7_POINTS.items():
        assert poly.point_of(fx.pm_aliases[name]) == point


def test_changing_reference_translates_rigidly(fixture):
    g = fixture.graph
    pms = enumerate_pms(g)
    p0 = pm_polygon(g, pms[0])
    p1 = pm_polygon(g, pms[-1])
    delta = pm_homology(g, pms[0], pms[-1])
    moved = {m: (x + delta[0], y + delta[1]) for m, (x, y) in p0.points.items()}
    assert moved == p1.points


def test_classification_is_reference_independent(fixture):
    g = fixture.graph
    pms = enumerate_pms(g)
    base = pm_polygon(g, pms[0])
    reference_classes = {m: base.classify(m) for m in pms}
    for ref in pms:
        poly = pm_polygon(g, ref)
        for m in pms:
            assert poly.classify(m) == reference_classes[m]


def test_default_reference_is_lexicographic_minimum(models):
    g = models["square4"].graph
    poly = pm_polygon(g)
    assert poly.reference == min(enumerate_pms(g), key=sorted)


def test_unique_corner_matchings(fixture):
    poly = pm_polygon(fixture.graph, fixture.reference_pm)
    for v in poly.hull:
        poly.corner_pm(v)          # raises if not unique


def test_square4_corner_lookup(models):
    fx = models["square4"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert poly.corner_pm((1, 0)) == fx.pm_aliases["D1"]


def test_octo8_corner_lookup(models):
    fx = models["octo8"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert poly.corner_pm((2, 0)) == fx.pm_aliases["D1"]


def test_hex7_corner_lookup(models):
    fx = models["hex7"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert poly.corner_pm((-1, 2)) == fx.pm_aliases["D1"]
    assert poly.corner_pm((-2, 0)) == fx.pm_aliases["D2"]
    assert poly.corner_pm((1, -1)) == fx.pm_aliases["D3"]


def test_unit_triangle_and_square_predicates():
    triangle = [(0, 0), (1, 0), (0, 1)]
    assert has_interior_point(triangle) is False
    assert is_isolated(triangle) is True
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert has_interior_point(square) is False
    assert is_isolated(square) is True


def test_octo8_polygon_predicates(models):
    fx = models["octo8"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert has_interior_point(poly) is True
    assert is_isolated(poly) is False   # the west side has a midpoint


def test_hex7_polygon_predicates(models):
    fx = models["hex7"]
    poly = pm_polygon(fx.graph, fx.reference_pm)
    assert has_interior_point(poly) is True
    assert is_isolated(poly) is True


def test_degenerate_polygons_rejected():
    with pytest.raises(ValueError):
        has_interior_point([(0, 0), (2, 0)])
    with pytest.raises(ValueError):
        is_isolated([(1, 1)])


def _interior_count_by_pick(hull):
    area2 = abs(polygon_area_twice(hull))
    boundary = len(
        __import__("dimers.matchings", fromlist=["boundary_segments"])
        .boundary_segments(hull))
    return (area2 - boundary + 2) // 2


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
                min_size=3, max_size=10))
def test_interior_count_matches_pick(points):
    hull = convex_hull(points)
    if len(hull) < 3:
        return
    direct = sum(1 for p in lattice_points_in_hull(hull)
                 if point_in_hull(p, hull) == "interior")
    assert direct == _interior_count_by_pick(hull)


def test_pick_on_fixtures(fixture):
    poly = pm_polygon(fixture.graph, fixture.reference_pm)
    direct = len(poly.interior_lattice_points())
    assert direct == _interior_count_by_pick(poly.hull)
