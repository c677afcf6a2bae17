import pytest

from dimers import dualize, load_fixture
from dimers.quiver import OrientationError, cyclic_normal_form


def test_every_arrow_in_two_opposite_terms(quivers):
    for qp in quivers.values():
        for a in qp.arrows:
            signs = sorted(t.sign for t in qp.terms_containing(a))
            assert signs == [-1, 1]


def test_terms_concatenate_into_cycles(quivers):
    for qp in quivers.values():
        qp.check()


def test_sign_sum_counts_node_colours(models, quivers):
    for name, qp in quivers.items():
        g = models[name].graph
        whites = sum(1 for c in g.nodes.values() if c == "white")
        blacks = len(g.nodes) - whites
        assert sum(t.sign for t in qp.terms) == whites - blacks


def test_square4_counts():
    qp = dualize(load_fixture("square4").graph)
    assert len(qp.vertices) == 4
    assert len(qp.arrows) == 8
    assert len(qp.terms) == 4
    assert all(len(t) == 4 for t in qp.terms)


def test_conifold_quiver():
    fx = load_fixture("conifold")
    qp = dualize(fx.graph)
    assert len(qp.vertices) == 2
    assert sorted((qp.tail(a), qp.head(a)) for a in "abcd") == \
        [(0, 1), (0, 1), (1, 0), (1, 0)]
    assert {(qp.tail(a), qp.head(a)) for a in "ac"} == {(0, 1)}
    terms = {t.sign: t.arrows for t in qp.terms}
    assert terms[1] == cyclic_normal_form(("a", "b", "c", "d"))
    assert terms[-1] == cyclic_normal_form(("a", "d", "c", "b"))


def test_octo8_arrow_multiset():
    qp = dualize(load_fixture("octo8").graph)
    counts = qp.arrow_count_matrix()
    expected = {
        (0, 1): 1, (0, 4): 1, (1, 2): 1, (1, 7): 1, (2, 3): 1, (2, 6): 1,
        (3, 0): 1, (3, 5): 2, (4, 2): 1, (4, 3): 1, (5, 4): 1, (5, 7): 2,
        (6, 0): 1, (6, 1): 1, (6, 5): 1, (7, 3): 1, (7, 6): 2,
    }
    assert counts == expected


def test_relations_reproduce_small_cycles(quivers):
    for qp in quivers.values():
        for a, rel in qp.relations().items():
            plus = cyclic_normal_form((a,) + rel.plus)
            minus = cyclic_normal_form((a,) + rel.minus)
            term_arrows = {t.sign: cyclic_normal_form(t.arrows)
                           for t in qp.terms_containing(a)}
            assert plus == term_arrows[1]
            assert minus == term_arrows[-1]


def test_conifold_relations_have_length_three():
    qp = dualize(load_fixture("conifold").graph)
    rel = qp.relations()["a"]
    assert len(rel.plus) == len(rel.minus) == 3
    assert {rel.plus, rel.minus} == {("b", "c", "d"), ("d", "c", "b")}


def test_square4_relation_lengths():
    # small cycles have length four here, so both return paths have length 3
    qp = dualize(load_fixture("square4").graph)
    for rel in qp.relations().values():
        assert len(rel.plus) == 3 and len(rel.minus) == 3


def test_grading_of_matching(models, quivers):
    fx = models["conifold"]
    qp = quivers["conifold"]
    grading = qp.grading_of(fx.pm_aliases["Dd"])
    assert grading == {"a": 0, "b": 0, "c": 0, "d": 1}


def test_grading_total_degree_one_per_term(models, quivers):
    from dimers.matchings import enumerate_pms
    for name, fx in models.items():
        qp = quivers[name]
        for m in enumerate_pms(fx.graph):
            grading = qp.grading_of(m)
            for t in qp.terms:
                assert sum(grading[a] for a in t.arrows) == 1


def test_grading_rejects_non_matchings(quivers):
    qp = quivers["conifold"]
    with pytest.raises(ValueError):
        qp.grading_of(frozenset())
    with pytest.raises(ValueError):
        qp.grading_of({"a", "b"})


def test_square4_d5_grading():
    fx = load_fixture("square4")
    qp = dualize(fx.graph)
    grading = qp.grading_of(fx.pm_aliases["D5"])
    assert sum(grading.values()) == 2
    assert grading["e2"] == 1 and grading["e4"] == 1


def test_subquiver(models, quivers):
    fx = models["conifold"]
    qp = quivers["conifold"]
    sub = qp.degree_zero_arrows(fx.pm_aliases["Dd"])
    assert set(sub) == {"a", "b", "c"}


def test_dot_export(quivers):
    dot = quivers["square4"].to_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 8


def test_corrupted_orientation_detected():
    # swapping one rotation pair breaks the single-cycle duality
    fx = load_fixture("square4")
    g = fx.graph
    rotations = dict(g.rotations)
    rot = list(rotations["P1"])
    rot[0], rot[1] = rot[1], rot[0]
    rotations["P1"] = tuple(rot)
    from dimers.surface import TorusBipartiteGraph
    g2 = TorusBipartiteGraph(g.nodes, g.edges, rotations)
    bad = g2.violations()
    if not bad:
        with pytest.raises(OrientationError):
            dualize(g2)
