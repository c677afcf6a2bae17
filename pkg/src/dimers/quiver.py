r"""
Quivers with potential dual to dimer models.

Dualizing a validated model puts one quiver vertex on each face and one
arrow across each edge, oriented so that the white endpoint sits on the
right of the arrow: the head of the arrow dual to an edge is the face
whose boundary contains the white-to-black dart of that edge, the tail
the face containing the black-to-white dart.

The potential is the signed sum of small cycles, one per node: going
around a black node in rotation order (and a white node in reversed
order) the dual arrows concatenate into a single directed cycle, counted
with sign ``+1`` for white nodes and ``-1`` for black ones.  Every arrow
then lies in exactly two terms of opposite sign, and cutting those two
cycles open at the arrow yields its relation ``p+ - p-``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .surface import BW, WB, BLACK, WHITE


@dataclass(frozen=True)
class Arrow:
    tail: object
    head: object
    edge: str


@dataclass(frozen=True)
class PotentialTerm:
    sign: int
    arrows: tuple[str, ...]
    node: str

    def __len__(self):
        return len(self.arrows)


@dataclass(frozen=True)
class Relation:
    arrow: str
    plus: tuple[str, ...]
    minus: tuple[str, ...]


def cyclic_normal_form(arrows):
    """Lexicographically minimal rotation of a cyclic arrow sequence."""
    arrows = tuple(arrows)
    if not arrows:
        return arrows
    best = arrows
    for r in range(1, len(arrows)):
        cand = arrows[r:] + arrows[:r]
        if cand < best:
            best = cand
    return best


class OrientationError(ValueError):
    pass


class QuiverWithPotential:
    """Dual quiver of a dimer model with its cycle potential.

    ``arrows`` maps arrow id to :class:`Arrow`; for quivers obtained by
    :func:`dualize` the arrow ids are the dimer edge ids.  ``terms`` is
    the tuple of potential terms (cyclically normalized) and
    ``small_cycles`` maps each dimer node to its term.
    """

    def __init__(self, vertices, arrows, terms, small_cycles=None, model=None):
        self.vertices = tuple(vertices)
        self.arrows = dict(arrows)
        self.terms = tuple(terms)
        self.small_cycles = dict(small_cycles or {})
        self.model = model
        self._relations = None

    def tail(self, a):
        return self.arrows[a].tail

    def head(self, a):
        return self.arrows[a].head

    def arrows_at(self, vertex, direction):
        """Arrow ids with head (``direction='in'``) or tail (``'out'``) at vertex."""
        if direction == "in":
            return [a for a, ar in self.arrows.items() if ar.head == vertex]
        return [a for a, ar in self.arrows.items() if ar.tail == vertex]

    def arrow_count_matrix(self):
        counts = {}
        for ar in self.arrows.values():
            counts[(ar.tail, ar.head)] = counts.get((ar.tail, ar.head), 0) + 1
        return counts

    def terms_containing(self, arrow):
        return [t for t in self.terms if arrow in t.arrows]

    # -- invariants ----------------------------------------------------

    def check(self):
        """Raise ``OrientationError`` if the potential is not of dimer type."""
        for a in self.arrows:
            signs = sorted(t.sign for t in self.terms_containing(a))
            if signs != [-1, 1]:
                raise OrientationError(
                    "arrow %r lies in terms with signs %r, expected one of each" % (a, signs))
        for t in self.terms:
            arrs = t.arrows
            for i, a in enumerate(arrs):
                b = arrs[(i + 1) % len(arrs)]
                if self.head(a) != self.tail(b):
                    raise OrientationError(
                        "term %r does not concatenate at %r -> %r" % (t, a, b))
        return self

    # -- relations and gradings -----------------------------------------

    def relations(self):
        """The relation ``p+ - p-`` of every arrow, from its two small cycles."""
        if self._relations is None:
            rels = {}
            for a in self.arrows:
                plus = minus = None
                for t in self.terms_containing(a):
                    i = t.arrows.index(a)
                    path = t.arrows[i + 1:] + t.arrows[:i]
                    if t.sign == 1:
                        plus = path
                    else:
                        minus = path
                if plus is None or minus is None:
                    raise OrientationError("arrow %r is not in two opposite terms" % a)
                rels[a] = Relation(a, plus, minus)
            self._relations = rels
        return self._relations

    def grading_of(self, matching):
        """The 0/1 arrow grading induced by a perfect matching (as arrows)."""
        matching = frozenset(matching)
        unknown = matching - set(self.arrows)
        if unknown:
            raise ValueError("not arrows of this quiver: %r" % sorted(unknown))
        grading = {a: (1 if a in matching else 0) for a in self.arrows}
        for t in self.terms:
            if sum(grading[a] for a in t.arrows) != 1:
                raise ValueError(
                    "arrow set is not a perfect matching: term %r has degree != 1"
                    % (t.arrows,))
        return grading

    def degree_zero_arrows(self, matching):
        """Arrows of the subquiver with the matching removed."""
        matching = frozenset(matching)
        return {a: ar for a, ar in self.arrows.items() if a not in matching}

    def to_dot(self, grading=None, name=None):
        lines = ["digraph %s {" % (name or self.model.name if self.model else "quiver")]
        for v in sorted(self.vertices, key=str):
            lines.append('  "%s";' % v)
        for a in sorted(self.arrows):
            ar = self.arrows[a]
            label = a if grading is None else "%s deg=%d" % (a, grading[a])
            lines.append('  "%s" -> "%s" [label="%s"];' % (ar.tail, ar.head, label))
        lines.append("}")
        return "\n".join(lines)


def dualize(model):
    """The quiver with potential dual to a validated dimer model."""
    model.validate()
    arrows = {}
    for eid in model.edges:
        head = model.face_of((eid, WB)).label
        tail = model.face_of((eid, BW)).label
        arrows[eid] = Arrow(tail, head, eid)

    terms = []
    small_cycles = {}
    for n, rot in model.rotations.items():
        order = rot if model.color(n) == BLACK else tuple(reversed(rot))
        # rotate so the arrows chain head-to-tail; dual orientation
        # correctness means any starting point works, which check() verifies
        term = PotentialTerm(
            sign=1 if model.color(n) == WHITE else -1,
            arrows=cyclic_normal_form(order),
            node=n,
        )
        terms.append(term)
        small_cycles[n] = term
    vertices = tuple(f.label for f in model.faces)
    qp = QuiverWithPotential(vertices, arrows, tuple(terms), small_cycles, model=model)
    return qp.check()


def relations(qp):
    return qp.relations()


def grading_of(qp, matching):
    return qp.grading_of(matching)


def subquiver(qp, matching):
    """The degree-zero subquiver: same vertices, arrows off the matching."""
    return qp.degree_zero_arrows(matching)
