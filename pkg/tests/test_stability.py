import pytest
from dimers.matchings import enumerate_pms, pm_polygon, polygon_area_twice
from dimers.stability import (
    _closed_subsets, find_stabilizing_theta, is_theta_stable,
    pm_is_theta_stable, rep_from_cosupport, theta_stable_pms, triangulate,
)

import known_data


def test_matching_cosupports_are_compatible(models, quivers):
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            rep, bad = rep_from_cosupport(qp, m)
            assert rep is not None, bad


def test_empty_cosupport_is_compatible(quivers):
    for qp in quivers.values():
        rep, _ = rep_from_cosupport(qp, frozenset())
        assert rep is not None
        assert rep.support == frozenset(qp.arrows)


def test_union_compatibility_is_the_relation_check(models, quivers):
    fx = models["square4"]
    qp = quivers["square4"]
    union = fx.pm_aliases["D7"] | fx.pm_aliases["D8"]
    rep, bad = rep_from_cosupport(qp, union)
    # whatever the verdict, it must match evaluating all eight relations
    support = frozenset(qp.arrows) - union
    ok = all(
        all(x in support for x in rel.plus) == all(x in support for x in rel.minus)
        for rel in qp.relations().values())
    assert (rep is not None) == ok


def test_closed_subsets_grow_when_support_shrinks(quivers):
    qp = quivers["square4"]
    big = frozenset(qp.arrows)
    small = big - {"e1", "e2"}
    assert set(_closed_subsets(qp, small)) >= set(_closed_subsets(qp, big))


def test_singleton_witness_makes_unstable(models, quivers):
    # a successor-closed singleton with nonpositive weight is a witness
    fx = models["octo8"]
    qp = quivers["octo8"]
    rep, _ = rep_from_cosupport(qp, fx.pm_aliases["D7"])
    theta = {v: 0 for v in qp.vertices}
    theta[5] = -1   # 5 is a sink of the support quiver
    theta[0] = 1
    assert not is_theta_stable(qp, rep, theta)


def test_theta_must_sum_to_zero(quivers):
    qp = quivers["square4"]
    rep, _ = rep_from_cosupport(qp, frozenset())
    with pytest.raises(ValueError):
        is_theta_stable(qp, rep, {v: 1 for v in qp.vertices})


def test_octo8_stable_matchings(models, quivers):
    fx = models["octo8"]
    st = theta_stable_pms(fx.graph, quivers["octo8"], fx.theta, fx.reference_pm)
    assert st.bijective
    assert len(st.stable) == 8
    for name, point in known_data.OCTO8_POINTS.items():
        assert st.by_point[point] == fx.pm_aliases[name]


def test_hex7_stable_matchings(models, quivers):
    fx = models["hex7"]
    st = theta_stable_pms(fx.graph, quivers["hex7"], fx.theta, fx.reference_pm)
    assert st.bijective
    assert len(st.stable) == 6
    for name, point in known_data.HEX7_POINTS.items():
        assert st.by_point[point] == fx.pm_aliases[name]


def test_bottom_matching_stability(models, quivers):
    fx = models["octo8"]
    qp = quivers["octo8"]
    bottom = frozenset(known_data.OCTO8_BOTTOM_MATCHING)
    assert not pm_is_theta_stable(qp, bottom, fx.theta)
    assert pm_is_theta_stable(qp, bottom, known_data.OCTO8_THETA_PRIME)


def test_every_matching_admits_a_stabilizer(models, quivers):
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            theta = find_stabilizing_theta(qp, m)
            assert theta is not None
            assert sum(theta.values()) == 0
            assert pm_is_theta_stable(qp, m, theta)


def test_octo8_triangulation(models, quivers):
    fx = models["octo8"]
    tri = triangulate(fx.graph, quivers["octo8"], fx.theta, fx.reference_pm)
    assert tri.well_formed
    expected = {tuple(sorted(s)) for s in known_data.OCTO8_TRIANGULATION_SEGMENTS}
    assert set(map(tuple, tri.segments)) == expected
    assert len(tri.triangles) == 8


def test_hex7_triangulation(models, quivers):
    fx = models["hex7"]
    tri = triangulate(fx.graph, quivers["hex7"], fx.theta, fx.reference_pm)
    assert tri.well_formed
    expected = {tuple(sorted(s)) for s in known_data.HEX7_TRIANGULATION_SEGMENTS}
    assert set(map(tuple, tri.segments)) == expected
    assert len(tri.triangles) == 7


def test_triangles_are_unimodular_and_cover(models, quivers):
    for name in ("octo8", "hex7"):
        fx = models[name]
        tri = triangulate(fx.graph, quivers[name], fx.theta, fx.reference_pm)
        poly = pm_polygon(fx.graph, fx.reference_pm)
        area2 = abs(polygon_area_twice(poly.hull))
        assert len(tri.triangles) == area2
        for p, q, r in tri.triangles:
            det = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
            assert abs(det) == 1


def test_stable_internal_matchings_have_acyclic_subquiver(models, quivers):
    from dimers.algebra import is_acyclic
    for name in ("octo8", "hex7"):
        fx = models[name]
        qp = quivers[name]
        poly = pm_polygon(fx.graph, fx.reference_pm)
        st = theta_stable_pms(fx.graph, qp, fx.theta, fx.reference_pm)
        for p, m in st.by_point.items():
            if poly.classify(m) == "internal":
                assert is_acyclic(qp, m)


def test_non_generic_weight_is_flagged(models, quivers):
    fx = models["square4"]
    qp = quivers["square4"]
    zero = {v: 0 for v in qp.vertices}
    st = theta_stable_pms(fx.graph, qp, zero, fx.reference_pm)
    assert not st.bijective
