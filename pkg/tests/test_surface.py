import pytest

from dimers import (
    BLACK, WHITE, Edge, TorusBipartiteGraph, ValidationError, load_fixture,
    maps_isomorphic,
)
from dimers.surface import (
    WB, join_move, spider_move, split_move, split_move_traced,
)


def test_fixtures_validate(fixture):
    g = fixture.graph
    g.validate(forbid_two_valent=True)
    assert len(g.nodes) - len(g.edges) + len(g.faces) == 0


def test_square4_has_four_faces():
    g = load_fixture("square4").graph
    assert len(g.faces) == 4
    assert sorted(f.label for f in g.faces) == [0, 1, 2, 3]


def test_face_counts():
    assert len(load_fixture("octo8").graph.faces) == 8
    assert len(load_fixture("hex7").graph.faces) == 7


def test_every_dart_on_exactly_one_face(fixture):
    g = fixture.graph
    seen = {}
    for f in g.faces:
        for d in f.darts:
            assert d not in seen
            seen[d] = f.label
    assert len(seen) == 2 * len(g.edges)


def test_single_edge_pair_violates_euler():
    g = TorusBipartiteGraph(
        {"w": WHITE, "b": BLACK},
        {"e": Edge("w", "b", (0, 0))},
        {"w": ("e",), "b": ("e",)})
    kinds = [v.kind for v in g.violations()]
    assert "euler" in kinds


def test_perturbed_shift_breaks_face_sums():
    fx = load_fixture("square4")
    edges = dict(fx.graph.edges)
    e = edges["e1"]
    edges["e1"] = Edge(e.white, e.black, (e.shift[0] + 1, e.shift[1]))
    g = TorusBipartiteGraph(fx.graph.nodes, edges, fx.graph.rotations)
    kinds = [v.kind for v in g.violations()]
    assert "face-shift" in kinds
    with pytest.raises(ValidationError):
        g.validate()


def test_non_bipartite_edge_reported():
    g = TorusBipartiteGraph(
        {"w": WHITE, "b": BLACK},
        {"e": Edge("b", "w", (0, 0))},   # endpoints swapped
        {"w": ("e",), "b": ("e",)})
    assert any(v.kind == "non-bipartite" for v in g.violations())


def test_join_move_requires_two_valent():
    g = load_fixture("square4").graph
    with pytest.raises(ValueError):
        join_move(g, "P1")


@pytest.mark.parametrize("node,arc", [
    ("P1", ["e1", "e4"]),
    ("P3", ["e7", "e3"]),
    ("P2", ["e2", "e1"]),
])
def test_split_then_join_is_identity_up_to_relabelling(node, arc):
    g = load_fixture("square4").graph
    g2, rec = split_move_traced(g, node, arc)
    g2.validate()
    assert len(g2.nodes) == len(g.nodes) + 2
    assert len(g2.faces) == len(g.faces)
    g3 = join_move(g2, rec["middle"])
    g3.validate()
    assert maps_isomorphic(g, g3)


def test_split_rejects_non_contiguous_arc():
    g = load_fixture("square4").graph
    with pytest.raises(ValueError):
        split_move(g, "P1", ["e1", "e5"])   # e4 sits between them


def test_split_valences():
    g = load_fixture("square4").graph
    g2, rec = split_move_traced(g, "P1", ["e1", "e4"])
    n1, n2 = rec["halves"]
    assert g2.degree(n1) == 3 and g2.degree(n2) == 3
    assert g2.degree(rec["middle"]) == 2


def _three_valent_black_quadrangle(g):
    for f in g.faces:
        if len(f) != 4:
            continue
        blacks = {g.dart_head(d) if d[1] == WB else g.dart_tail(d) for d in f.darts}
        blacks = {n for n in blacks if g.color(n) == BLACK}
        if all(g.degree(b) == 3 for b in blacks):
            return f.label
    return None


def test_spider_move_involution():
    # prepare an octo8 face with 3-valent black corners by splitting
    from dimers.mutations import mutate_dimer
    g = load_fixture("octo8").graph
    mut = mutate_dimer(g, 0)
    face = _three_valent_black_quadrangle(mut.model)
    assert face is not None
    g1 = spider_move(mut.model, face)
    g1.validate()
    assert len(g1.nodes) == len(mut.model.nodes)
    assert len(g1.edges) == len(mut.model.edges)
    assert len(g1.faces) == len(mut.model.faces)
    g2 = spider_move(g1, face)
    assert maps_isomorphic(g2, mut.model)


def test_spider_move_rejects_bad_faces():
    g = load_fixture("octo8").graph
    with pytest.raises(ValueError):
        spider_move(g, 3)       # hexagonal face
    with pytest.raises(ValueError):
        spider_move(g, 0)       # quadrangle with 4-valent black corners


def test_surgeries_preserve_connectivity_and_bipartiteness():
    g = load_fixture("square4").graph
    g2, rec = split_move_traced(g, "P1", ["e1", "e4"])
    assert not g2.structural_violations()
    g3 = join_move(g2, rec["middle"])
    assert not g3.structural_violations()


def test_maps_isomorphic_detects_difference():
    g1 = load_fixture("square4").graph
    g2 = load_fixture("conifold").graph
    assert not maps_isomorphic(g1, g2)
    assert maps_isomorphic(g1, g1)
