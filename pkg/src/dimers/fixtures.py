r"""
Built-in dimer models.

Four small consistent models ship with the library, each encoded by hand
from its standard presentation:

* ``square4`` -- the square-lattice model with four faces whose matching
  polygon is the diamond ``conv{(1,0),(0,1),(-1,0),(0,-1)}`` (local
  ``P^1 x P^1``).
* ``conifold`` -- one white and one black node joined by four edges; the
  dual quiver is the Klebanov-Witten conifold quiver and the polygon is a
  unit square.
* ``octo8`` -- an eight-face model whose polygon is the pentagon
  ``conv{(2,0),(0,1),(-1,1),(-1,-1),(0,-1)}`` with two interior points.
* ``hex7`` -- the hexagonal model of the abelian quotient
  ``C^3 / (1/7)(1,2,4)``; the dual quiver is the McKay quiver on seven
  vertices and the polygon is a triangle with three interior points.

Every fixture pins a reference perfect matching (so lattice coordinates
are reproducible) and an alias table naming distinguished matchings
``D1, D2, ...`` in the conventional order for that model.
"""
from __future__ import annotations

from .surface import BLACK, BW, WB, WHITE, Edge, TorusBipartiteGraph


class Fixture:
    """A named model plus its pinned reference matching and aliases."""

    def __init__(self, graph, reference_pm=None, pm_aliases=None, theta=None):
        self.graph = graph.validate()
        self.reference_pm = frozenset(reference_pm) if reference_pm else None
        self.pm_aliases = {k: frozenset(v) for k, v in (pm_aliases or {}).items()}
        self.theta = dict(theta) if theta else None

    @property
    def name(self):
        return self.graph.name

    def alias_of(self, pm):
        pm = frozenset(pm)
        for name, edges in self.pm_aliases.items():
            if edges == pm:
                return name
        return None


def _square4():
    nodes = {"P1": BLACK, "P3": BLACK, "P2": WHITE, "P4": WHITE}
    # e1..e4 bound the inner square face; e5..e8 wrap around the torus
    edges = {
        "e1": Edge("P2", "P1", (0, 0)),
        "e2": Edge("P2", "P3", (0, 0)),
        "e3": Edge("P4", "P3", (0, 0)),
        "e4": Edge("P4", "P1", (0, 0)),
        "e5": Edge("P2", "P1", (1, 0)),
        "e6": Edge("P4", "P1", (0, 1)),
        "e7": Edge("P2", "P3", (0, -1)),
        "e8": Edge("P4", "P3", (-1, 0)),
    }
    rotations = {
        "P1": ("e1", "e4", "e5", "e6"),
        "P3": ("e8", "e7", "e3", "e2"),
        "P2": ("e5", "e2", "e1", "e7"),
        "P4": ("e3", "e6", "e8", "e4"),
    }
    face_label_darts = {
        0: ("e1", WB),   # inner square
        1: ("e2", WB),   # left/right face
        2: ("e5", WB),   # corner face
        3: ("e1", BW),   # top/bottom face
    }
    graph = TorusBipartiteGraph(nodes, edges, rotations, face_label_darts,
                                name="square4")
    aliases = {
        "D1": {"e3", "e5"}, "D2": {"e2", "e6"}, "D3": {"e1", "e8"},
        "D4": {"e4", "e7"}, "D5": {"e4", "e2"}, "D6": {"e1", "e3"},
        "D7": {"e6", "e7"}, "D8": {"e5", "e8"},
    }
    return Fixture(graph, reference_pm=aliases["D5"], pm_aliases=aliases)


def _conifold():
    nodes = {"B": BLACK, "W": WHITE}
    edges = {
        "a": Edge("W", "B", (0, 0)),
        "b": Edge("W", "B", (0, 1)),
        "c": Edge("W", "B", (1, 1)),
        "d": Edge("W", "B", (1, 0)),
    }
    rotations = {"W": ("d", "c", "b", "a"), "B": ("a", "d", "c", "b")}
    face_label_darts = {0: ("a", BW), 1: ("a", WB)}
    graph = TorusBipartiteGraph(nodes, edges, rotations, face_label_darts,
                                name="conifold")
    aliases = {"Da": {"a"}, "Db": {"b"}, "Dc": {"c"}, "Dd": {"d"}}
    return Fixture(graph, reference_pm={"d"}, pm_aliases=aliases)


def _octo8():
    nodes = {}
    for i in range(1, 7):
        nodes["B%d" % i] = BLACK
        nodes["W%d" % i] = WHITE
    edges = {
        "B1W1": Edge("W1", "B1", (0, 0)),
        "B1W3": Edge("W3", "B1", (0, 0)),
        "B2W2": Edge("W2", "B2", (0, 0)),
        "B2W3": Edge("W3", "B2", (0, 0)),
        "B2W4": Edge("W4", "B2", (0, 0)),
        "B3W3": Edge("W3", "B3", (0, 0)),
        "B3W5": Edge("W5", "B3", (0, 0)),
        "B4W3": Edge("W3", "B4", (0, 0)),
        "B4W4": Edge("W4", "B4", (0, 0)),
        "B4W5": Edge("W5", "B4", (0, 0)),
        "B4W6": Edge("W6", "B4", (0, 0)),
        "B5W5": Edge("W5", "B5", (0, 0)),
        "B6W6": Edge("W6", "B6", (0, 0)),
        "B5W1": Edge("W1", "B5", (0, -1)),
        "B6W1": Edge("W1", "B6", (0, -1)),
        "B1W2": Edge("W2", "B1", (1, 0)),
        "B6W2": Edge("W2", "B6", (0, -1)),
        "B3W4": Edge("W4", "B3", (1, 0)),
        "B3W6": Edge("W6", "B3", (1, 0)),
        "B5W6": Edge("W6", "B5", (1, 0)),
    }
    rotations = {
        "B1": ("B1W3", "B1W2", "B1W1"),
        "B2": ("B2W4", "B2W3", "B2W2"),
        "B3": ("B3W5", "B3W6", "B3W4", "B3W3"),
        "B4": ("B4W6", "B4W5", "B4W3", "B4W4"),
        "B5": ("B5W1", "B5W6", "B5W5"),
        "B6": ("B6W2", "B6W1", "B6W6"),
        "W1": ("B1W1", "B5W1", "B6W1"),
        "W2": ("B1W2", "B2W2", "B6W2"),
        "W3": ("B4W3", "B3W3", "B1W3", "B2W3"),
        "W4": ("B3W4", "B4W4", "B2W4"),
        "W5": ("B5W5", "B3W5", "B4W5"),
        "W6": ("B5W6", "B6W6", "B4W6", "B3W6"),
    }
    face_label_darts = {
        0: ("B4W3", BW),
        1: ("B4W3", WB),
        2: ("B4W4", WB),
        3: ("B4W5", BW),
        4: ("B3W5", WB),
        5: ("B1W2", WB),
        6: ("B3W3", BW),
        7: ("B2W3", WB),
    }
    graph = TorusBipartiteGraph(nodes, edges, rotations, face_label_darts,
                                name="octo8")
    aliases = {
        "D1": {"B6W1", "B2W3", "B4W5", "B1W2", "B3W4", "B5W6"},
        "D2": {"B1W1", "B2W2", "B4W3", "B5W5", "B6W6", "B3W4"},
        "D3": {"B1W1", "B2W2", "B3W3", "B4W4", "B5W5", "B6W6"},
        "D4": {"B1W3", "B2W4", "B3W5", "B4W6", "B5W1", "B6W2"},
        "D5": {"B1W3", "B2W4", "B4W5", "B3W6", "B5W1", "B6W2"},
        "D6": {"B1W1", "B2W4", "B3W3", "B4W6", "B5W5", "B6W2"},
        "D7": {"B1W1", "B2W4", "B3W3", "B4W5", "B6W2", "B5W6"},
        "D8": {"B6W1", "B2W4", "B3W3", "B4W5", "B1W2", "B5W6"},
    }
    theta = {0: -7, 1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1}
    return Fixture(graph, reference_pm=aliases["D7"], pm_aliases=aliases,
                   theta=theta)


# Hexagonal quotient models.  The cover has white nodes w_p and black
# nodes b_p for p in Z^2, with edges X_p (w_p - b_p), Y_p (w_p - b_{p+e1})
# and Z_p (w_p - b_{p+e2}); quotienting by the index-7 sublattice
# ker((m, n) -> 4m + 5n mod 7) leaves seven hexagonal faces and gives the
# McKay quiver of (1/7)(1,2,4).  Orientation and the homology basis below
# were calibrated once against the square4 conventions and frozen.

_HEX7_SUBLATTICE_BASIS = ((1, 2), (3, -1))      # basis of ker(4m + 5n mod 7)
_HEX7_UNIMODULAR = ((-1, -1), (1, 0))           # change of homology basis
_HEX7_MIRROR = True                             # reverse all rotations


def _hex7_label(p):
    return (4 * p[0] + 5 * p[1]) % 7


def _hex7_shift(p, q):
    """Lattice coordinates of q - rep(label(q)) in the sublattice basis."""
    j = _hex7_label(q)
    rep = (2 * j, 0)
    lam = (q[0] - rep[0], q[1] - rep[1])
    (a1, a2), (b1, b2) = _HEX7_SUBLATTICE_BASIS
    det = a1 * b2 - a2 * b1
    x = (lam[0] * b2 - lam[1] * b1)
    y = (a1 * lam[1] - a2 * lam[0])
    assert x % det == 0 and y % det == 0
    return (x // det, y // det)


def _hex7():
    nodes = {}
    for i in range(7):
        nodes["w%d" % i] = WHITE
        nodes["b%d" % i] = BLACK
    edges = {}
    rotations = {}
    (u11, u12), (u21, u22) = _HEX7_UNIMODULAR
    for i in range(7):
        p = (2 * i, 0)
        for kind, q in (("X", p), ("Y", (p[0] + 1, p[1])), ("Z", (p[0], p[1] + 1))):
            s = _hex7_shift(p, q)
            s = (u11 * s[0] + u12 * s[1], u21 * s[0] + u22 * s[1])
            edges["%s%d" % (kind, i)] = Edge("w%d" % i, "b%d" % _hex7_label(q), s)
    for i in range(7):
        white_rot = ["X%d" % i, "Y%d" % i, "Z%d" % i]
        # at the black node labelled i the incident edges are X_i and the
        # Y/Z edges whose black endpoint is i
        yk = (i - 4) % 7
        zk = (i - 5) % 7
        black_rot = ["X%d" % i, "Y%d" % yk, "Z%d" % zk]
        if _HEX7_MIRROR:
            white_rot.reverse()
            black_rot.reverse()
        rotations["w%d" % i] = tuple(white_rot)
        rotations["b%d" % i] = tuple(black_rot)
    face_label_darts = {}
    graph = TorusBipartiteGraph(nodes, edges, rotations, name="hex7")
    graph.validate()
    # label each hexagonal face by the quiver vertex the X-edge points at
    for i in range(7):
        face = graph.face_of(("X%d" % i, WB))
        face_label_darts[i] = ("X%d" % i, WB)
    graph = TorusBipartiteGraph(nodes, edges, rotations, face_label_darts,
                                name="hex7")
    # aliases follow the lattice-point labelling convention for this model:
    # D1/D2/D3 are the corner matchings at (-1,2), (-2,0), (1,-1) and
    # D4/D5/D6 the stable internal ones at (0,0), (-1,1), (-1,0)
    aliases = {
        "D1": {"Z%d" % i for i in range(7)},
        "D2": {"Y%d" % i for i in range(7)},
        "D3": {"X%d" % i for i in range(7)},
        "D4": {"X0", "X1", "X3", "X5", "Y2", "Z4", "Z6"},
        "D5": {"X0", "Y1", "Y2", "Z3", "Z4", "Z5", "Z6"},
        "D6": {"X0", "X3", "Y1", "Y2", "Y4", "Y5", "Z6"},
    }
    theta = {0: -6, 1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1}
    return Fixture(graph, reference_pm=aliases["D4"], pm_aliases=aliases,
                   theta=theta)


_BUILDERS = {
    "square4": _square4,
    "conifold": _conifold,
    "octo8": _octo8,
    "hex7": _hex7,
}


def fixture_names():
    return sorted(_BUILDERS)


def load_fixture(name):
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError("unknown fixture %r; available: %s"
                       % (name, ", ".join(fixture_names())))
