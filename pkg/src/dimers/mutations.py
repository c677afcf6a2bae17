r"""
Mutations of perfect matchings, dimer models, and quivers with potential.

Three levels of mutation live here:

* matching mutations ``lambda+/-`` at a strict source/sink of the
  degree-zero subquiver, and the exchange graph they generate;
* the dimer mutation at a quadrangular face: split the black corners down
  to valence three, apply the spider move, then join away any 2-valent
  nodes.  The graph surgery is the source of truth;
* the quiver-with-potential mutation at the dual vertex, implemented
  independently (add composite arrows, reverse the arrows at the vertex,
  rewrite the potential, reduce 2-cycles) and reconciled against the
  surgery by a vertex-fixing isomorphism check.

A matching grading is transported through the surgery by local rules at
every step; the left/right variants differ only when no arrow at the
mutated vertex is matched.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import surface
from .algebra import strict_sources_sinks
from .matchings import is_perfect_matching, pm_polygon
from .quiver import (Arrow, PotentialTerm, QuiverWithPotential,
                     cyclic_normal_form, dualize)
from .surface import TorusBipartiteGraph


# ---------------------------------------------------------------------
# matching mutations
# ---------------------------------------------------------------------

def mutate_pm_plus(qp, matching, k):
    """Flip the matching at a strict source: unmatch the arrows into ``k``
    and match the arrows out of it."""
    sources, _ = strict_sources_sinks(qp, matching)
    if k not in sources:
        raise ValueError("%r is not a strict source for this matching" % (k,))
    incoming = {a for a, ar in qp.arrows.items() if ar.head == k}
    outgoing = {a for a, ar in qp.arrows.items() if ar.tail == k}
    result = (frozenset(matching) - incoming) | outgoing
    qp.grading_of(result)        # postcondition: still a perfect matching
    return result


def mutate_pm_minus(qp, matching, k):
    """Flip the matching at a strict sink, inverse to :func:`mutate_pm_plus`."""
    _, sinks = strict_sources_sinks(qp, matching)
    if k not in sinks:
        raise ValueError("%r is not a strict sink for this matching" % (k,))
    incoming = {a for a, ar in qp.arrows.items() if ar.head == k}
    outgoing = {a for a, ar in qp.arrows.items() if ar.tail == k}
    result = (frozenset(matching) - outgoing) | incoming
    qp.grading_of(result)
    return result


def mutated_quiver_prediction(qp, matching, k):
    """Predicted degree-zero subquiver and relations after a plus-mutation.

    Keeps every unmatched arrow not starting at ``k`` and adds back the
    matched arrows into ``k``; the relation set drops the relations tailed
    at ``k`` and gains those of the arrows leaving ``k``.  Must equal the
    data computed directly from the mutated matching.
    """
    matching = frozenset(matching)
    sources, _ = strict_sources_sinks(qp, matching)
    if k not in sources:
        raise ValueError("%r is not a strict source for this matching" % (k,))
    old_arrows = qp.degree_zero_arrows(matching)
    arrows = {a for a in old_arrows if qp.tail(a) != k}
    arrows |= {a for a in matching if qp.head(a) == k}
    relations = {a for a in matching if qp.head(a) != k}
    relations |= {a for a in old_arrows if qp.tail(a) == k}
    return arrows, relations


@dataclass
class ExchangeGraph:
    start: frozenset
    nodes: list                    # matchings, sorted
    edges: list                    # (matching, matching, vertex), unordered pairs

    def degree(self, matching):
        matching = frozenset(matching)
        return sum(1 for a, b, _ in self.edges if matching in (a, b))

    def labelled_edge_set(self):
        return {(min(a, b, key=sorted), max(a, b, key=sorted), k)
                for a, b, k in self.edges}

    def to_dot(self, alias=None):
        alias = alias or {}

        def name(m):
            return alias.get(m) or "{%s}" % ",".join(sorted(m))

        lines = ["graph exchange {"]
        for m in self.nodes:
            lines.append('  "%s";' % name(m))
        for a, b, k in sorted(self.edges, key=lambda e: (sorted(e[0]), sorted(e[1]), str(e[2]))):
            lines.append('  "%s" -- "%s" [label="%s"];' % (name(a), name(b), k))
        lines.append("}")
        return "\n".join(lines)


def exchange_graph(qp, matching, polygon=None):
    """Closure of an internal matching under matching mutations.

    Mutating at a strict source and at a strict sink are inverse to each
    other, so edges are recorded once, labelled by the mutated vertex.
    """
    start = frozenset(matching)
    if polygon is not None and polygon.classify(start) != "internal":
        raise ValueError("exchange graphs are built from internal matchings")
    seen = {start}
    edges = set()
    queue = deque([start])
    while queue:
        m = queue.popleft()
        sources, sinks = strict_sources_sinks(qp, m)
        neighbours = [(k, mutate_pm_plus(qp, m, k)) for k in sources]
        neighbours += [(k, mutate_pm_minus(qp, m, k)) for k in sinks]
        for k, m2 in neighbours:
            key = (min(m, m2, key=sorted), max(m, m2, key=sorted), k)
            edges.add(key)
            if m2 not in seen:
                seen.add(m2)
                queue.append(m2)
    return ExchangeGraph(start, sorted(seen, key=sorted), sorted(edges, key=str))


# ---------------------------------------------------------------------
# mutable vertices and the dimer mutation
# ---------------------------------------------------------------------

def mutable_vertices(qp):
    """Vertices with exactly two arrows in and two out, no loops and no
    2-cycles; dually, the quadrangular faces of the dimer model."""
    out = []
    counts = qp.arrow_count_matrix()
    for v in qp.vertices:
        incoming = qp.arrows_at(v, "in")
        outgoing = qp.arrows_at(v, "out")
        if len(incoming) != 2 or len(outgoing) != 2:
            continue
        if any(qp.tail(a) == qp.head(a) for a in incoming):
            continue
        if any(counts.get((qp.head(b), v), 0) for b in outgoing):
            continue
        out.append(v)
    return sorted(out, key=str)


@dataclass
class DimerMutation:
    model: TorusBipartiteGraph     # the mutated model, faces labelled as before
    face: object
    trail: list                    # surgery records, in order


def _black_corners_to_split(graph, face_label):
    face = graph.face(face_label)
    (w1, b1, w2, b2), darts = surface._quadrangle_corners(graph, face)
    face_edges = {d[0] for d in darts}
    return [(b, tuple(e for e in graph.rotations[b] if e in face_edges))
            for b in (b1, b2) if graph.degree(b) != 3]


def mutate_dimer(model, face_label):
    """Mutation of a dimer model at a quadrangular face.

    Splits over-valent black corners so both are 3-valent with the two
    face edges on one side, applies the spider move, then removes every
    2-valent node by join moves.  Face labels survive the surgery.
    Returns a :class:`DimerMutation`.
    """
    model.validate()
    face = model.face(face_label)
    if len(face) != 4:
        raise ValueError("face %r is not a quadrangle" % (face_label,))
    trail = []
    g = model
    for node, face_pair in _black_corners_to_split(g, face_label):
        rot = g.rotations[node]
        i = rot.index(face_pair[0])
        # the two face edges are adjacent in the rotation; make them the arc
        if rot[(i + 1) % len(rot)] == face_pair[1]:
            arc = [face_pair[0], face_pair[1]]
        else:
            arc = [face_pair[1], face_pair[0]]
        g, rec = surface.split_move_traced(g, node, arc)
        trail.append(rec)

    g, rec = surface.spider_move_traced(g, face_label)
    trail.append(rec)

    while True:
        two_valent = sorted(n for n in g.nodes if g.degree(n) == 2)
        if not two_valent:
            break
        g, rec = surface.join_move_traced(g, two_valent[0])
        trail.append(rec)

    g.validate()
    return DimerMutation(g.with_name(model.name and "mu%s(%s)" % (face_label, model.name)),
                         face_label, trail)


# ---------------------------------------------------------------------
# transporting a matching through the surgery
# ---------------------------------------------------------------------

def transport_pm(model, matching, face_label, side="L"):
    """Transport a perfect matching through the dimer mutation.

    The grading rules fix the transported matching uniquely except when
    the face carries no matched dual arrow, where ``side`` picks the left
    or right variant.  Returns ``(mutation, new_matching)``.
    """
    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    if not is_perfect_matching(model, matching):
        raise ValueError("not a perfect matching of this model")
    mutation = mutate_dimer(model, face_label)
    current = set(matching)
    for rec in mutation.trail:
        if rec["op"] == "split":
            arc = set(rec["arc"])
            h1, h2 = rec["new_edges"]
            if current & arc:
                current.add(h2)
            else:
                current.add(h1)
        elif rec["op"] == "join":
            g1, g2 = rec["deleted"]
            matched = current & {g1, g2}
            if len(matched) != 1:
                raise AssertionError("join transport expected one matched edge")
            current -= matched
        else:
            current = _spider_transport(rec, current, side)
    result = frozenset(current)
    if not is_perfect_matching(mutation.model, result):
        raise AssertionError("transported edge set is not a perfect matching")
    return mutation, result


def _spider_transport(rec, current, side):
    eps1, eps2, eps3, eps4 = rec["old_face_edges"]
    f1, f2 = rec["old_outer_edges"]
    w1, b1, w2, b2 = rec["corners"]
    pairing = rec["pairing_edges"]
    reversed_edges = {info[1]: eid for eid, info in rec["reversed_edges"].items()}
    # eps1/eps3 are dual to the arrows into the face, eps2/eps4 out of it
    a_in = {eps1: eps1 in current, eps3: eps3 in current}
    b_out = {eps2: eps2 in current, eps4: eps4 in current}
    if any(a_in.values()) and any(b_out.values()):
        raise AssertionError("matched arrows both into and out of the face")
    if any(a_in.values()):
        chosen = "L"
    elif any(b_out.values()):
        chosen = "R"
    else:
        chosen = side
    if chosen != side:
        raise ValueError(
            "the matching forces the %s rule at this face, not %s"
            % (chosen, side))
    new = current - {eps1, eps2, eps3, eps4, f1, f2}
    if chosen == "L":
        if a_in[eps1]:
            new.add(pairing[w1])
        else:
            new.add(reversed_edges[eps1])
        if a_in[eps3]:
            new.add(pairing[w2])
        else:
            new.add(reversed_edges[eps3])
    else:
        if b_out[eps4]:
            new.add(pairing[w1])
        else:
            new.add(reversed_edges[eps4])
        if b_out[eps2]:
            new.add(pairing[w2])
        else:
            new.add(reversed_edges[eps2])
    return new


# ---------------------------------------------------------------------
# quiver-with-potential mutation
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class _Term:
    sign: int
    arrows: tuple


def mutate_qp(qp, k, grading=None, side="L"):
    """Mutation of a dimer quiver with potential at a mutable vertex.

    Adds the composite arrows ``[a_i b_j]``, reverses the four arrows at
    ``k``, rewrites the potential, and cancels every length-2 term the way
    the splitting of a trivial direct summand prescribes.  With a matching
    grading the left (or right) degree rules transport the grading; the
    mutated grading is returned alongside.

    Returns ``(qp', grading')`` where ``grading'`` is ``None`` when no
    grading was supplied.
    """
    if k not in mutable_vertices(qp):
        raise ValueError("%r is not a mutable vertex" % (k,))
    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    incoming = sorted(qp.arrows_at(k, "in"))
    outgoing = sorted(qp.arrows_at(k, "out"))
    # pair each incoming arrow with its successor inside its negative
    # (anticlockwise) small cycle
    pair = {}
    for a in incoming:
        term = next(t for t in qp.terms_containing(a) if t.sign == -1)
        i = term.arrows.index(a)
        b = term.arrows[(i + 1) % len(term.arrows)]
        if qp.tail(b) != k:
            raise AssertionError("potential is not of dimer type at %r" % (k,))
        pair[a] = b
    a1, a2 = incoming
    if pair[a1] == pair[a2]:
        raise AssertionError("anticlockwise pairing at %r is degenerate" % (k,))

    deg = dict(grading) if grading is not None else None
    if deg is not None:
        matched_in = [a for a in incoming if deg[a] == 1]
        matched_out = [b for b in outgoing if deg[b] == 1]
        if matched_in and matched_out:
            raise AssertionError("grading matches arrows both into and out of %r" % (k,))
        if matched_in:
            chosen = "L"
        elif matched_out:
            chosen = "R"
        else:
            chosen = side
        if chosen != side:
            raise ValueError(
                "the grading forces the %s rule at %r, not %s" % (chosen, k, side))

    composite = {}
    star = {}
    arrows = {x: ar for x, ar in qp.arrows.items()
              if x not in incoming and x not in outgoing}
    new_deg = {}
    for x in arrows:
        if deg is not None:
            new_deg[x] = deg[x]
    for a in incoming:
        for b in outgoing:
            name = "[%s|%s]" % (a, b)
            composite[(a, b)] = name
            arrows[name] = Arrow(qp.tail(a), qp.head(b), None)
            if deg is not None:
                new_deg[name] = deg[a] + deg[b]
    for a in incoming:
        name = "%s*" % a
        star[a] = name
        arrows[name] = Arrow(k, qp.tail(a), None)
        if deg is not None:
            new_deg[name] = (1 - deg[a]) if chosen == "L" else -deg[a]
    for b in outgoing:
        name = "%s*" % b
        star[b] = name
        arrows[name] = Arrow(qp.head(b), k, None)
        if deg is not None:
            new_deg[name] = -deg[b] if chosen == "L" else (1 - deg[b])
    if deg is not None and any(v not in (0, 1) for v in new_deg.values()):
        raise ValueError("side %s is not allowed for this grading at %r"
                         % (chosen, k))

    # substitute composites into the old terms
    incoming_set, outgoing_set = set(incoming), set(outgoing)
    terms = []
    for t in qp.terms:
        arrs = list(t.arrows)
        # rotate so no in/out pair wraps around the starting point
        for _ in range(len(arrs)):
            if arrs and arrs[-1] in incoming_set and arrs[0] in outgoing_set:
                arrs = arrs[1:] + arrs[:1]
            else:
                break
        out = []
        i = 0
        while i < len(arrs):
            x = arrs[i]
            if x in incoming_set:
                if i + 1 >= len(arrs) or arrs[i + 1] not in outgoing_set:
                    raise AssertionError(
                        "potential is not of dimer type at %r" % (k,))
                out.append(composite[(x, arrs[i + 1])])
                i += 2
            else:
                out.append(x)
                i += 1
        terms.append(_Term(t.sign, tuple(out)))
    # the four new cyclic terms around k
    b1, b2 = pair[a1], pair[a2]
    terms.append(_Term(1, (star[a1], composite[(a1, b1)], star[b1])))
    terms.append(_Term(-1, (star[a1], composite[(a1, b2)], star[b2])))
    terms.append(_Term(1, (star[a2], composite[(a2, b2)], star[b2])))
    terms.append(_Term(-1, (star[a2], composite[(a2, b1)], star[b1])))

    terms, arrows, new_deg = _reduce_qp(terms, arrows, new_deg if deg is not None else None)

    qp2 = QuiverWithPotential(
        tuple(qp.vertices), arrows,
        tuple(PotentialTerm(t.sign, cyclic_normal_form(t.arrows), "n%d" % i)
              for i, t in enumerate(terms)),
        small_cycles=None)
    qp2.check()
    return qp2, (new_deg if deg is not None else None)


def _reduce_qp(terms, arrows, deg):
    """Cancel length-2 potential terms by the trivial-summand reduction."""
    terms = list(terms)
    guard = 0
    while True:
        guard += 1
        if guard > 1000:
            raise RuntimeError("potential reduction did not terminate")
        short = next((t for t in terms if len(t.arrows) == 2), None)
        if short is None:
            break
        u, v = short.arrows
        # use the newer composite arrow as the rule side when present
        if not u.startswith("["):
            u, v = v, u
        others_u = [t for t in terms if t is not short and u in t.arrows]
        others_v = [t for t in terms if t is not short and v in t.arrows]
        if len(others_u) != 1 or len(others_v) != 1:
            raise AssertionError("potential is not of dimer type during reduction")
        t_u = others_u[0]
        t_v = others_v[0]
        if t_u is t_v:
            raise AssertionError("degenerate reduction: shared term")
        iu = t_u.arrows.index(u)
        replacement = t_u.arrows[iu + 1:] + t_u.arrows[:iu]
        if deg is not None:
            want = sum(deg[x] for x in replacement)
            if deg[v] != want:
                raise AssertionError("grading broke during reduction")
        iv = t_v.arrows.index(v)
        merged = t_v.arrows[:iv] + replacement + t_v.arrows[iv + 1:]
        terms = [t for t in terms if t not in (short, t_u, t_v)]
        terms.append(_Term(t_v.sign, merged))
        del arrows[u]
        del arrows[v]
        if deg is not None:
            del deg[u]
            del deg[v]
    return terms, arrows, deg


# ---------------------------------------------------------------------
# comparison up to vertex-fixing isomorphism
# ---------------------------------------------------------------------

def qp_isomorphic_vertex_fixing(qp_a, qp_b):
    """An arrow bijection fixing every vertex and matching the potentials
    up to cyclic rotation of the terms, or ``None``."""
    if set(qp_a.vertices) != set(qp_b.vertices):
        return None
    if qp_a.arrow_count_matrix() != qp_b.arrow_count_matrix():
        return None
    groups = {}
    for x, ar in qp_b.arrows.items():
        groups.setdefault((ar.tail, ar.head), []).append(x)
    arrows_a = sorted(qp_a.arrows)
    terms_b = {}
    for t in qp_b.terms:
        key = (t.sign, cyclic_normal_form(t.arrows))
        terms_b[key] = terms_b.get(key, 0) + 1

    def check(mapping):
        counts = dict(terms_b)
        for t in qp_a.terms:
            key = (t.sign, cyclic_normal_form(tuple(mapping[x] for x in t.arrows)))
            if not counts.get(key):
                return False
            counts[key] -= 1
        return all(v == 0 for v in counts.values())

    def extend(i, mapping, used):
        if i == len(arrows_a):
            return dict(mapping) if check(mapping) else None
        x = arrows_a[i]
        ar = qp_a.arrows[x]
        for y in groups.get((ar.tail, ar.head), []):
            if y in used:
                continue
            mapping[x] = y
            used.add(y)
            found = extend(i + 1, mapping, used)
            if found:
                return found
            used.discard(y)
            del mapping[x]
        return None

    return extend(0, {}, set())


def model_fingerprint(model):
    """An isomorphism-insensitive fingerprint of a dimer model: node
    valences, the normalized matching polygon, and the canonical
    arrow-count matrix of the dual quiver."""
    qp = dualize(model)
    poly = pm_polygon(model)
    counts = qp.arrow_count_matrix()
    verts = sorted(qp.vertices, key=str)
    vi = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    mat = [[0] * n for _ in range(n)]
    for (t, h), c in counts.items():
        mat[vi[t]][vi[h]] = c
    from .algebra import _canonical_matrix
    return (model.node_valence_multiset(), poly.normalized(),
            _canonical_matrix(mat))
