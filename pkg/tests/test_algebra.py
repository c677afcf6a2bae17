from dimers.algebra import (
    INFINITE, algebra_fingerprint, block_dimensions, dimension_without_vertex,
    is_acyclic, rewriting_dimension, strict_sources_sinks, truncated_dimension,
)
from dimers.matchings import enumerate_pms, pm_polygon


def test_acyclic_iff_internal(models, quivers):
    # the combinatorial half of the finite-dimensionality equivalence,
    # checked for every matching of every model
    for name, fx in models.items():
        qp = quivers[name]
        poly = pm_polygon(fx.graph, fx.reference_pm)
        for m in enumerate_pms(fx.graph):
            assert is_acyclic(qp, m) == (poly.classify(m) == "internal")


def test_finite_iff_acyclic(models, quivers):
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            dim = truncated_dimension(qp, m)
            assert (dim != INFINITE) == is_acyclic(qp, m)


def test_square4_dimensions(models, quivers):
    fx = models["square4"]
    qp = quivers["square4"]
    for name in ("D5", "D6", "D7", "D8"):
        assert truncated_dimension(qp, fx.pm_aliases[name]) == 24
    for name in ("D1", "D2", "D3", "D4"):
        assert truncated_dimension(qp, fx.pm_aliases[name]) == INFINITE


def test_conifold_matched_d_is_infinite(models, quivers):
    fx = models["conifold"]
    qp = quivers["conifold"]
    m = fx.pm_aliases["Dd"]
    assert not is_acyclic(qp, m)
    assert truncated_dimension(qp, m) == INFINITE


def test_conifold_drop_vertex_zero_is_finite(models, quivers):
    fx = models["conifold"]
    qp = quivers["conifold"]
    assert dimension_without_vertex(qp, fx.pm_aliases["Dd"], 0) == 1


def test_dimension_at_least_vertex_count(models, quivers):
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            dim = truncated_dimension(qp, m)
            if dim != INFINITE:
                assert dim >= len(qp.vertices)


def test_oracle_agreement(models, quivers):
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            if not is_acyclic(qp, m):
                assert rewriting_dimension(qp, m) == INFINITE
                continue
            assert truncated_dimension(qp, m) == rewriting_dimension(qp, m)


def test_oracle_agreement_without_vertex(models, quivers):
    fx = models["hex7"]
    qp = quivers["hex7"]
    m = fx.pm_aliases["D4"]
    for v in qp.vertices:
        assert (dimension_without_vertex(qp, m, v)
                == rewriting_dimension(qp, m, avoid_vertex=v))


def test_dropping_a_vertex_shrinks_dimension(models, quivers):
    for name in ("square4", "hex7"):
        fx = models[name]
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            dim = truncated_dimension(qp, m)
            if dim == INFINITE:
                continue
            sources, _ = strict_sources_sinks(qp, m)
            for v in sources:
                smaller = dimension_without_vertex(qp, m, v)
                assert smaller <= dim - 1


def test_hex7_drop_any_vertex_finite(models, quivers):
    # the polygon has primitive sides, so every one-vertex quotient of an
    # internal truncation stays finite
    fx = models["hex7"]
    qp = quivers["hex7"]
    m = fx.pm_aliases["D4"]
    for v in qp.vertices:
        assert dimension_without_vertex(qp, m, v) != INFINITE


def test_octo8_sources_and_sinks(models, quivers):
    fx = models["octo8"]
    qp = quivers["octo8"]
    assert strict_sources_sinks(qp, fx.pm_aliases["D7"]) == ([0], [5])
    sources8, sinks8 = strict_sources_sinks(qp, fx.pm_aliases["D8"])
    assert 6 in sinks8


def test_acyclic_truncations_have_sources_and_sinks(models, quivers):
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            if is_acyclic(qp, m):
                sources, sinks = strict_sources_sinks(qp, m)
                assert sources and sinks


def test_hex7_fingerprints_coincide(models, quivers):
    fx = models["hex7"]
    qp = quivers["hex7"]
    fps = {n: algebra_fingerprint(qp, fx.pm_aliases[n]) for n in ("D4", "D5", "D6")}
    assert fps["D4"] == fps["D5"] == fps["D6"]


def test_fingerprint_total_is_dimension(models, quivers):
    fx = models["hex7"]
    qp = quivers["hex7"]
    total, _ = algebra_fingerprint(qp, fx.pm_aliases["D4"])
    assert total == truncated_dimension(qp, fx.pm_aliases["D4"])


def test_fingerprint_invariant_under_relabelling(models, quivers):
    # permuting block rows/columns simultaneously leaves the canonical
    # matrix fixed
    from dimers.algebra import _canonical_matrix
    fx = models["square4"]
    qp = quivers["square4"]
    verts, dims = block_dimensions(qp, fx.pm_aliases["D5"])
    n = len(verts)
    perm = list(range(n))[::-1]
    permuted = [[dims[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    assert _canonical_matrix(dims) == _canonical_matrix(permuted)


def test_square4_fingerprints_comparison(models, quivers):
    # equality is allowed but not forced between distinct internal matchings
    fx = models["square4"]
    qp = quivers["square4"]
    f5 = algebra_fingerprint(qp, fx.pm_aliases["D5"])
    f7 = algebra_fingerprint(qp, fx.pm_aliases["D7"])
    assert f5[0] == f7[0] == 24


def test_block_dimensions_sum(models, quivers):
    fx = models["square4"]
    qp = quivers["square4"]
    verts, dims = block_dimensions(qp, fx.pm_aliases["D5"])
    assert sum(map(sum, dims)) == 24
    # trivial paths make every diagonal entry at least 1
    assert all(dims[i][i] >= 1 for i in range(len(verts)))
