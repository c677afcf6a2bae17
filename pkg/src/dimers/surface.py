r"""
Bipartite graphs embedded on the two-torus.

A dimer model is stored purely combinatorially: a bipartite graph together
with a rotation system (the counterclockwise cyclic order of edges around
each node) and a ``Z^2``-valued shift on every edge recording how the edge
crosses the fundamental domain.  The shift of an edge is the translation
from the canonical universal-cover lift of its white endpoint to the lift
of its black endpoint used by that edge.

Faces are recovered by dart traversal.  A dart is a directed use of an
edge, either white-to-black (``"wb"``) or black-to-white (``"bw"``).  With
counterclockwise rotations, following the rotation successor at the head
of each dart walks around a face keeping it on the right of every dart, so
every dart lies on exactly one face boundary and ``V - E + F = 0`` on the
torus.

The module also implements the three elementary surgeries used by dimer
mutation: the join move (contract a 2-valent node), the split move (insert
one), and the spider move on a quadrangular face.
"""
from __future__ import annotations

from dataclasses import dataclass

WHITE = "white"
BLACK = "black"
WB = "wb"  # dart traversed from the white endpoint to the black one
BW = "bw"


@dataclass(frozen=True)
class Edge:
    white: str
    black: str
    shift: tuple[int, int]


@dataclass(frozen=True)
class Face:
    label: int
    darts: tuple[tuple[str, str], ...]

    @property
    def edges(self):
        return tuple(e for e, _ in self.darts)

    def __len__(self):
        return len(self.darts)


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: object
    message: str

    def __str__(self):
        return "%s: %s" % (self.kind, self.message)


class ValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def reverse(dart):
    edge, direction = dart
    return (edge, BW if direction == WB else WB)


class TorusBipartiteGraph:
    """
    A bipartite graph on the torus with rotation system and edge shifts.

    ``nodes`` maps node id to ``"white"`` or ``"black"``; ``edges`` maps
    edge id to :class:`Edge`; ``rotations`` maps node id to the
    counterclockwise cyclic tuple of incident edge ids.  Values are treated
    as immutable after construction: all surgeries return new graphs.

    ``face_label_darts`` optionally pins face labels, mapping a label to
    one dart on that face's boundary.  Unpinned faces get the smallest
    unused labels in a canonical order.
    """

    def __init__(self, nodes, edges, rotations, face_label_darts=None, name=None):
        self.name = name
        self.nodes = dict(nodes)
        self.edges = {}
        for eid, e in dict(edges).items():
            if not isinstance(e, Edge):
                w, b, shift = e
                e = Edge(w, b, (int(shift[0]), int(shift[1])))
            self.edges[eid] = e
        self.rotations = {n: tuple(r) for n, r in dict(rotations).items()}
        self._face_label_darts = dict(face_label_darts or {})
        self._faces = None
        self._face_of_dart = None

    # -- basic access -------------------------------------------------

    def color(self, node):
        return self.nodes[node]

    def endpoints(self, edge):
        e = self.edges[edge]
        return e.white, e.black

    def other_end(self, edge, node):
        e = self.edges[edge]
        return e.black if node == e.white else e.white

    def dart_tail(self, dart):
        e = self.edges[dart[0]]
        return e.white if dart[1] == WB else e.black

    def dart_head(self, dart):
        e = self.edges[dart[0]]
        return e.black if dart[1] == WB else e.white

    def dart_shift(self, dart):
        """Signed shift of a dart: +shift when traversed white-to-black."""
        sx, sy = self.edges[dart[0]].shift
        return (sx, sy) if dart[1] == WB else (-sx, -sy)

    def darts(self):
        for eid in self.edges:
            yield (eid, WB)
            yield (eid, BW)

    def degree(self, node):
        return len(self.rotations[node])

    # -- structural checks --------------------------------------------

    def structural_violations(self):
        """Problems that prevent face traversal from even being defined."""
        out = []
        for eid, e in self.edges.items():
            if e.white not in self.nodes or e.black not in self.nodes:
                out.append(Violation("dangling-edge", eid, "edge %r has a missing endpoint" % eid))
                continue
            if self.nodes[e.white] != WHITE or self.nodes[e.black] != BLACK:
                out.append(Violation("non-bipartite", eid,
                                     "edge %r must join a white node to a black node" % eid))
        if set(self.rotations) != set(self.nodes):
            missing = set(self.nodes) ^ set(self.rotations)
            out.append(Violation("rotation-mismatch", sorted(missing),
                                 "rotation system and node set disagree"))
            return out
        seen = {eid: 0 for eid in self.edges}
        for n, rot in self.rotations.items():
            for eid in rot:
                if eid not in self.edges:
                    out.append(Violation("unknown-edge", eid,
                                         "rotation of %r mentions unknown edge %r" % (n, eid)))
                    return out
                if n not in self.endpoints(eid):
                    out.append(Violation("rotation-mismatch", (n, eid),
                                         "edge %r is not incident to node %r" % (eid, n)))
                seen[eid] += 1
        for eid, count in seen.items():
            if count != 2:
                out.append(Violation("rotation-mismatch", eid,
                                     "edge %r appears %d times in rotations, expected 2" % (eid, count)))
        return out

    def violations(self, forbid_two_valent=False):
        """All violated embedding axioms, each with a witness."""
        out = self.structural_violations()
        if out:
            return out
        if not self._is_connected():
            out.append(Violation("disconnected", None, "the graph is not connected"))
            return out
        faces = self._compute_faces()
        euler = len(self.nodes) - len(self.edges) + len(faces)
        if euler != 0:
            out.append(Violation("euler", euler,
                                 "V - E + F = %d, expected 0 on the torus" % euler))
        for face in faces:
            total = (0, 0)
            for dart in face:
                s = self.dart_shift(dart)
                total = (total[0] + s[0], total[1] + s[1])
            if total != (0, 0):
                out.append(Violation("face-shift", (face, total),
                                     "face boundary has net shift %r, expected (0, 0)" % (total,)))
        if forbid_two_valent:
            for n in self.nodes:
                if self.degree(n) == 2:
                    out.append(Violation("two-valent", n, "node %r is 2-valent" % n))
        return out

    def _is_connected(self):
        if not self.nodes:
            return False
        start = next(iter(self.nodes))
        seen = {start}
        stack = [start]
        while stack:
            n = stack.pop()
            for eid in self.rotations.get(n, ()):
                m = self.other_end(eid, n)
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        return len(seen) == len(self.nodes)

    # -- faces ----------------------------------------------------------

    def next_dart_along_face(self, dart):
        """The dart following ``dart`` on the boundary of the face to its right."""
        head = self.dart_head(dart)
        rot = self.rotations[head]
        nxt = rot[(rot.index(dart[0]) + 1) % len(rot)]
        return (nxt, WB if self.nodes[head] == WHITE else BW)

    def _compute_faces(self):
        orbits = []
        todo = set(self.darts())
        while todo:
            start = min(todo)
            cycle = [start]
            todo.discard(start)
            d = self.next_dart_along_face(start)
            while d != start:
                cycle.append(d)
                todo.discard(d)
                d = self.next_dart_along_face(d)
            orbits.append(tuple(cycle))
        orbits.sort(key=lambda c: min(c))
        return orbits

    @property
    def faces(self):
        """Faces of the validated model, as :class:`Face` objects."""
        if self._faces is None:
            self.validate()
        return self._faces

    def face_of(self, dart):
        """The face whose boundary contains ``dart`` (the face on its right)."""
        if self._face_of_dart is None:
            self.validate()
        return self._face_of_dart[dart]

    def face(self, label):
        if self._faces is None:
            self.validate()
        for f in self._faces:
            if f.label == label:
                return f
        raise KeyError(label)

    def face_labels(self):
        return [f.label for f in self.faces]

    def validate(self, forbid_two_valent=False):
        """Check every embedding axiom and compute faces.

        Returns ``self`` with faces attached, or raises
        :class:`ValidationError` listing every violated invariant.
        """
        bad = self.violations(forbid_two_valent=forbid_two_valent)
        if bad:
            raise ValidationError(bad)
        orbits = self._compute_faces()
        labelled = {}
        if self._face_label_darts:
            dart_to_orbit = {}
            for i, orbit in enumerate(orbits):
                for d in orbit:
                    dart_to_orbit[d] = i
            for label, dart in self._face_label_darts.items():
                dart = (dart[0], dart[1])
                if dart not in dart_to_orbit:
                    raise ValidationError([Violation("face-label", dart,
                                                     "no face contains dart %r" % (dart,))])
                i = dart_to_orbit[dart]
                if i in labelled and labelled[i] != label:
                    raise ValidationError([Violation(
                        "face-label", (labelled[i], label),
                        "labels %r and %r pin the same face" % (labelled[i], label))])
                labelled[i] = label
        used = set(labelled.values())
        fresh = (i for i in range(len(orbits) + len(used)) if i not in used)
        faces = []
        for i, orbit in enumerate(orbits):
            label = labelled.get(i)
            if label is None:
                label = next(fresh)
            faces.append(Face(label, orbit))
        faces.sort(key=lambda f: f.label)
        self._faces = tuple(faces)
        self._face_of_dart = {}
        for f in faces:
            for d in f.darts:
                self._face_of_dart[d] = f
        return self

    # -- derived data ---------------------------------------------------

    def node_valence_multiset(self):
        return tuple(sorted(len(r) for r in self.rotations.values()))

    def with_name(self, name):
        g = TorusBipartiteGraph(self.nodes, self.edges, self.rotations,
                                self._face_label_darts, name=name)
        return g


def validate(graph, forbid_two_valent=False):
    """Module-level alias for :meth:`TorusBipartiteGraph.validate`."""
    return graph.validate(forbid_two_valent=forbid_two_valent)


def faces(graph):
    return graph.faces


def _fresh_id(taken, base):
    if base not in taken:
        return base
    k = 1
    while "%s_%d" % (base, k) in taken:
        k += 1
    return "%s_%d" % (base, k)


def _propagate_labels(new_graph, old_graph, fresh_label=None):
    """Relabel the faces of a surgery output by the surviving darts.

    Every face still holding a dart of the input inherits that dart's old
    label; at most one face may consist purely of fresh darts, and it gets
    ``fresh_label``.  Returns the relabelled, validated graph.
    """
    old_of_dart = {}
    for f in old_graph.faces:
        for d in f.darts:
            old_of_dart[d] = f.label
    new_graph.validate()
    label_darts = {}
    fresh = []
    for f in new_graph.faces:
        labels = {old_of_dart[d] for d in f.darts if d in old_of_dart}
        if len(labels) > 1:
            raise AssertionError("face tracking is ambiguous: %r"
                                 % sorted(labels, key=str))
        if labels:
            label_darts[labels.pop()] = f.darts[0]
        else:
            fresh.append(f)
    if fresh:
        if fresh_label is None or len(fresh) > 1:
            raise AssertionError("unexpected fresh face after surgery")
        label_darts[fresh_label] = fresh[0].darts[0]
    return with_face_labels(new_graph, label_darts).validate()


def _vec_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _vec_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


# ---------------------------------------------------------------------
# join / split
# ---------------------------------------------------------------------

def join_move_traced(graph, node):
    """Remove the 2-valent ``node``, merging its two distinct neighbours.

    Returns ``(new_graph, record)`` where the record carries the data the
    matching-transport code needs: the two deleted edges and the surviving
    node id.
    """
    if graph.degree(node) != 2:
        raise ValueError("join move needs a 2-valent node, %r has valence %d"
                         % (node, graph.degree(node)))
    g1, g2 = graph.rotations[node]
    u = graph.other_end(g1, node)
    v = graph.other_end(g2, node)
    if u == v:
        raise ValueError("join move at %r would merge a node with itself" % node)
    s1 = graph.edges[g1].shift
    s2 = graph.edges[g2].shift
    # Absorb v into u.  Re-lifting v to u's canonical copy adds
    # shift(g1) - shift(g2) to every edge of v, independent of colour.
    delta = _vec_sub(s1, s2)
    if graph.color(node) == BLACK:
        # shifts are white->black, so g's shift seen from the white side u
        # is the same formula with the roles worked out on the cover
        delta = _vec_sub(s1, s2)

    nodes = dict(graph.nodes)
    del nodes[node]
    del nodes[v]

    edges = {}
    for eid, e in graph.edges.items():
        if eid in (g1, g2):
            continue
        w, b, shift = e.white, e.black, e.shift
        if graph.color(v) == BLACK and b == v:
            b, shift = u, _vec_add(shift, delta)
        elif graph.color(v) == WHITE and w == v:
            w, shift = u, _vec_add(shift, delta)
        edges[eid] = Edge(w, b, shift)

    rotations = {}
    for n, rot in graph.rotations.items():
        if n in (node, u, v):
            continue
        rotations[n] = rot
    ru = list(graph.rotations[u])
    rv = list(graph.rotations[v])
    i = ru.index(g1)
    j = rv.index(g2)
    merged = ru[i + 1:] + ru[:i] + rv[j + 1:] + rv[:j]
    rotations[u] = tuple(merged)

    record = {"op": "join", "node": node, "deleted": (g1, g2), "kept": u, "absorbed": v}
    out = TorusBipartiteGraph(nodes, edges, rotations, name=graph.name)
    return _propagate_labels(out, graph.validate()), record


def join_move(graph, node):
    return join_move_traced(graph, node)[0]


def split_move_traced(graph, node, arc):
    """Split ``node`` along ``arc``, inserting a 2-valent node of the
    opposite colour between the two halves.

    ``arc`` must be a cyclically contiguous run of the node's rotation; the
    first new node keeps exactly the arc, the second the complement.
    """
    rot = list(graph.rotations[node])
    arc = list(arc)
    if not arc or len(arc) >= len(rot):
        raise ValueError("arc must be a nonempty proper part of the rotation")
    start = rot.index(arc[0])
    rotated = rot[start:] + rot[:start]
    if rotated[:len(arc)] != arc:
        raise ValueError("arc %r is not contiguous in the rotation of %r" % (arc, node))
    complement = rotated[len(arc):]

    taken_nodes = set(graph.nodes)
    n1 = _fresh_id(taken_nodes, "%s.a" % node)
    taken_nodes.add(n1)
    n2 = _fresh_id(taken_nodes, "%s.b" % node)
    taken_nodes.add(n2)
    mid = _fresh_id(taken_nodes, "%s.m" % node)
    taken_edges = set(graph.edges)
    h1 = _fresh_id(taken_edges, "%s.g1" % node)
    taken_edges.add(h1)
    h2 = _fresh_id(taken_edges, "%s.g2" % node)

    color = graph.color(node)
    mid_color = WHITE if color == BLACK else BLACK

    nodes = dict(graph.nodes)
    del nodes[node]
    nodes[n1] = color
    nodes[n2] = color
    nodes[mid] = mid_color

    edges = {}
    for eid, e in graph.edges.items():
        w, b = e.white, e.black
        if color == BLACK and b == node:
            b = n1 if eid in arc else n2
        elif color == WHITE and w == node:
            w = n1 if eid in arc else n2
        edges[eid] = Edge(w, b, e.shift)
    # The split is local and contractible: both halves and the middle node
    # keep the old canonical lift, so the two fresh edges carry shift 0.
    if color == BLACK:
        edges[h1] = Edge(mid, n1, (0, 0))
        edges[h2] = Edge(mid, n2, (0, 0))
    else:
        edges[h1] = Edge(n1, mid, (0, 0))
        edges[h2] = Edge(n2, mid, (0, 0))

    rotations = {n: rot_ for n, rot_ in graph.rotations.items() if n != node}
    rotations[n1] = tuple(arc + [h1])
    rotations[n2] = tuple(complement + [h2])
    rotations[mid] = (h1, h2)

    record = {"op": "split", "node": node, "arc": tuple(arc),
              "halves": (n1, n2), "middle": mid, "new_edges": (h1, h2)}
    out = TorusBipartiteGraph(nodes, edges, rotations, name=graph.name)
    return _propagate_labels(out, graph.validate()), record


def split_move(graph, node, arc):
    return split_move_traced(graph, node, arc)[0]


# ---------------------------------------------------------------------
# spider move
# ---------------------------------------------------------------------

def _quadrangle_corners(graph, face):
    """Corners of a quadrangular face as (w1, b1, w2, b2) in boundary order."""
    if len(face) != 4:
        raise ValueError("face %r has %d boundary darts, spider move needs 4"
                         % (face.label, len(face)))
    nodes = [graph.dart_tail(d) for d in face.darts]
    if graph.color(nodes[0]) != WHITE:
        nodes = nodes[1:] + nodes[:1]
        darts = face.darts[1:] + face.darts[:1]
    else:
        darts = face.darts
    w1, b1, w2, b2 = nodes
    if len({w1, b1, w2, b2}) != 4:
        raise ValueError("face %r is a degenerate quadrangle" % face.label)
    return (w1, b1, w2, b2), darts


def spider_move_traced(graph, face_label):
    """Apply the spider move to a quadrangular face with 3-valent black corners.

    The two black corners are replaced by two fresh black nodes: each fresh
    node pairs with one former white corner and picks up both outer white
    neighbours, and the face stays a quadrangle.  Returns ``(graph, record)``
    with enough bookkeeping to transport matchings and identify the dual
    arrows of the six fresh edges.
    """
    graph.validate()
    face = graph.face(face_label)
    (w1, b1, w2, b2), darts = _quadrangle_corners(graph, face)
    # boundary order is w1 -(eps1)- b1 -(eps2)- w2 -(eps3)- b2 -(eps4)- w1
    eps1, eps2, eps3, eps4 = [d[0] for d in darts]
    for b in (b1, b2):
        if graph.degree(b) != 3:
            raise ValueError("black corner %r of face %r is %d-valent, spider move needs 3"
                             % (b, face_label, graph.degree(b)))
    f1 = next(e for e in graph.rotations[b1] if e not in (eps1, eps2))
    f2 = next(e for e in graph.rotations[b2] if e not in (eps3, eps4))
    x1 = graph.edges[f1].white
    x2 = graph.edges[f2].white

    # local universal-cover lifts, anchored at w1
    lift = {w1: (0, 0)}
    lift[b1] = graph.edges[eps1].shift
    lift[w2] = _vec_sub(lift[b1], graph.edges[eps2].shift)
    lift[b2] = _vec_add(lift[w2], graph.edges[eps3].shift)
    lx1 = _vec_sub(lift[b1], graph.edges[f1].shift)
    lx2 = _vec_sub(lift[b2], graph.edges[f2].shift)

    taken_nodes = set(graph.nodes)
    c1 = _fresh_id(taken_nodes, "%s.c1" % face_label)
    taken_nodes.add(c1)
    c2 = _fresh_id(taken_nodes, "%s.c2" % face_label)
    taken_edges = set(graph.edges)

    def new_edge_id(base):
        eid = _fresh_id(taken_edges, base)
        taken_edges.add(eid)
        return eid

    e_w1c1 = new_edge_id("%s|%s" % (w1, c1))
    e_w2c2 = new_edge_id("%s|%s" % (w2, c2))
    e_x1c1 = new_edge_id("%s|%s" % (x1, c1))
    e_x2c1 = new_edge_id("%s|%s" % (x2, c1))
    e_x1c2 = new_edge_id("%s|%s" % (x1, c2))
    e_x2c2 = new_edge_id("%s|%s" % (x2, c2))

    nodes = dict(graph.nodes)
    del nodes[b1]
    del nodes[b2]
    nodes[c1] = BLACK
    nodes[c2] = BLACK

    removed = {eps1, eps2, eps3, eps4, f1, f2}
    edges = {eid: e for eid, e in graph.edges.items() if eid not in removed}
    # fresh blacks sit at the lifts of their paired white corners
    edges[e_w1c1] = Edge(w1, c1, (0, 0))
    edges[e_w2c2] = Edge(w2, c2, (0, 0))
    edges[e_x1c1] = Edge(x1, c1, _vec_sub(lift[w1], lx1))
    edges[e_x2c1] = Edge(x2, c1, _vec_sub(lift[w1], lx2))
    edges[e_x1c2] = Edge(x1, c2, _vec_sub(lift[w2], lx1))
    edges[e_x2c2] = Edge(x2, c2, _vec_sub(lift[w2], lx2))

    rotations = {n: list(r) for n, r in graph.rotations.items() if n not in (b1, b2)}
    rotations[c1] = [e_w1c1, e_x2c1, e_x1c1]
    rotations[c2] = [e_w2c2, e_x1c2, e_x2c2]

    def replace_pair(node, first, second, replacement):
        rot = rotations[node]
        i = rot.index(first)
        if rot[(i + 1) % len(rot)] != second:
            # the pair may sit in the other cyclic order
            i = rot.index(second)
            if rot[(i + 1) % len(rot)] != first:
                raise ValueError("face edges at %r are not adjacent in its rotation" % node)
        j = (i + 1) % len(rot)
        if j > i:
            rotations[node] = rot[:i] + [replacement] + rot[j + 1:]
        else:
            rotations[node] = rot[1:i] + [replacement]

    # at each former white corner the two face edges become one fresh edge
    replace_pair(w1, eps4, eps1, e_w1c1)
    replace_pair(w2, eps2, eps3, e_w2c2)

    def replace_one(node, old, replacement):
        rot = rotations[node]
        i = rot.index(old)
        rotations[node] = rot[:i] + list(replacement) + rot[i + 1:]

    if x1 == x2:
        replace_one(x1, f1, (e_x1c1, e_x1c2))
        replace_one(x1, f2, (e_x2c2, e_x2c1))
    else:
        replace_one(x1, f1, (e_x1c1, e_x1c2))
        replace_one(x2, f2, (e_x2c2, e_x2c1))

    rotations = {n: tuple(r) for n, r in rotations.items()}

    # Dual bookkeeping (before the move): eps1/eps3 are dual to the two
    # arrows into the face, eps2/eps4 to the two arrows out of it, paired
    # (eps1, eps2) at b1 and (eps3, eps4) at b2.  After the move:
    #   x-to-c edges are dual to the reversed arrows,
    #   the pairing edges are dual to the composite arrows.
    record = {
        "op": "spider", "face": face_label,
        "corners": (w1, b1, w2, b2), "outer": (x1, x2),
        "old_face_edges": (eps1, eps2, eps3, eps4),
        "old_outer_edges": (f1, f2),
        "new_blacks": (c1, c2),
        "pairing_edges": {w1: e_w1c1, w2: e_w2c2},
        "reversed_edges": {e_x1c1: ("in", eps1), e_x2c2: ("in", eps3),
                           e_x1c2: ("out", eps2), e_x2c1: ("out", eps4)},
    }
    g = TorusBipartiteGraph(nodes, edges, rotations, name=graph.name)
    return _propagate_labels(g, graph, fresh_label=face_label), record


def spider_move(graph, face_label):
    return spider_move_traced(graph, face_label)[0]


# ---------------------------------------------------------------------
# face tracking and isomorphism
# ---------------------------------------------------------------------

def relabel_faces_like(new_graph, old_graph):
    """Label the faces of ``new_graph`` by the old labels of surviving darts.

    Used after a surgery: every face of the surgery output that still
    contains a dart of the input inherits that dart's old face label; a
    face made only of fresh darts gets ``None`` here and must be labelled
    by the caller.  Returns ``{new_face_index: old_label_or_None}`` keyed
    by the labels new_graph.validate() would have assigned.
    """
    old_of_dart = {}
    for f in old_graph.faces:
        for d in f.darts:
            old_of_dart[d] = f.label
    new_graph.validate()
    mapping = {}
    for f in new_graph.faces:
        labels = {old_of_dart[d] for d in f.darts if d in old_of_dart}
        if len(labels) > 1:
            raise ValueError("face tracking is ambiguous: %r" % labels)
        mapping[f.label] = labels.pop() if labels else None
    return mapping


def with_face_labels(graph, label_of_dart):
    """A copy of ``graph`` whose faces are labelled per ``label_of_dart``
    (mapping label -> representative dart)."""
    return TorusBipartiteGraph(graph.nodes, graph.edges, graph.rotations,
                               face_label_darts=label_of_dart, name=graph.name)


def maps_isomorphic(g1, g2):
    """Whether two embedded graphs agree up to renaming nodes and edges
    and re-lifting nodes on the universal cover.

    The search matches rotation systems exactly; a complete matching is
    accepted when the edge shifts differ by a coboundary (a per-node
    offset), which is the gauge freedom of the shift encoding.
    """
    if len(g1.nodes) != len(g2.nodes) or len(g1.edges) != len(g2.edges):
        return False
    if g1.node_valence_multiset() != g2.node_valence_multiset():
        return False
    sig1 = _node_signatures(g1)
    sig2 = _node_signatures(g2)
    by_sig2 = {}
    for n in g2.nodes:
        by_sig2.setdefault(sig2[n], []).append(n)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    # most constrained first: rare signatures, then high valence
    sig_count = {}
    for s in sig1.values():
        sig_count[s] = sig_count.get(s, 0) + 1
    nodes1 = sorted(g1.nodes, key=lambda n: (sig_count[sig1[n]], -g1.degree(n), n))

    def extend(i, node_map, edge_map, used_nodes, used_edges):
        if i == len(nodes1):
            return _shift_coboundary_exists(g1, g2, edge_map)
        n = nodes1[i]
        for m in by_sig2.get(sig1[n], []):
            if m in used_nodes:
                continue
            for trial in _rotation_matchings(g1, g2, n, m, edge_map, used_edges):
                node_map[n] = m
                used_nodes.add(m)
                added = [e for e in trial if e not in edge_map]
                edge_map.update(trial)
                used_edges.update(trial[e] for e in added)
                if extend(i + 1, node_map, edge_map, used_nodes, used_edges):
                    return True
                for e in added:
                    used_edges.discard(edge_map.pop(e))
                used_nodes.discard(m)
                del node_map[n]
        return False

    return extend(0, {}, {}, set(), set())


def _node_signatures(graph, rounds=3):
    """Refined node invariants: colour and valence propagated around the
    rotation system a few times (a Weisfeiler-Lehman style refinement)."""
    sig = {n: (graph.color(n), graph.degree(n)) for n in graph.nodes}
    for _ in range(rounds):
        nxt = {}
        for n, rot in graph.rotations.items():
            ring = tuple(sig[graph.other_end(e, n)] for e in rot)
            best = min(ring[i:] + ring[:i] for i in range(len(ring)))
            nxt[n] = (sig[n], best)
        sig = nxt
    return sig


def _rotation_matchings(g1, g2, n, m, edge_map, used_edges):
    """Cyclic alignments of the rotations at ``n`` and ``m`` compatible
    with the partial edge map, yielded as {new edge assignments}."""
    rot1 = g1.rotations[n]
    rot2 = g2.rotations[m]
    if len(rot1) != len(rot2):
        return
    for r in range(len(rot2)):
        trial = {}
        ok = True
        for k, e1 in enumerate(rot1):
            e2 = rot2[(r + k) % len(rot2)]
            if e1 in edge_map:
                if edge_map[e1] != e2:
                    ok = False
                    break
            elif e2 in used_edges or e2 in trial.values():
                ok = False
                break
            else:
                trial[e1] = e2
        if ok:
            yield trial


def _shift_coboundary_exists(g1, g2, edge_map):
    """Whether shift2(phi(e)) - shift1(e) is a coboundary d(lambda)."""
    offsets = {}
    incident = {}
    for e1 in g1.edges:
        a = g1.edges[e1]
        incident.setdefault(a.white, []).append(e1)
        incident.setdefault(a.black, []).append(e1)
    for root in g1.nodes:
        if root in offsets:
            continue
        offsets[root] = (0, 0)
        stack = [root]
        while stack:
            node = stack.pop()
            for e1 in incident.get(node, ()):
                a = g1.edges[e1]
                b = g2.edges[edge_map[e1]]
                diff = _vec_sub(b.shift, a.shift)
                lw = offsets.get(a.white)
                lb = offsets.get(a.black)
                if lw is None:
                    offsets[a.white] = _vec_sub(lb, diff)
                    stack.append(a.white)
                elif lb is None:
                    offsets[a.black] = _vec_add(lw, diff)
                    stack.append(a.black)
                elif _vec_sub(lb, lw) != diff:
                    return False
    return True
