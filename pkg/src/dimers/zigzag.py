r"""
Zigzag paths, slopes, and the consistency condition.

A zigzag path turns maximally right at every white node and maximally
left at every black node.  With counterclockwise rotation lists this
means: arriving at a white node, leave along the rotation successor of
the arrival edge; at a black node, along the rotation predecessor.  (The
convention was calibrated once on the square4 model, where the four
zigzag slopes must reproduce the counterclockwise side vectors of the
diamond, and is frozen here.)

A model is consistent when every zigzag slope is nonzero and primitive
and no zigzag path revisits an edge of the universal cover within a
period.  Consistency is also equivalent to the existence of a positive
R-charge: edge weights that sum to 2 around every node and make every
face's boundary weights ``1 - R`` sum to 2.  The R-charge check is an
exact rational linear program and serves as an independent
cross-validation of the zigzag criterion.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import rationallp
from .surface import WB, WHITE
from .matchings import pm_polygon


@dataclass(frozen=True)
class ZigzagPath:
    darts: tuple          # one period, cyclically normalized
    slope: tuple

    def __len__(self):
        return len(self.darts)

    @property
    def edges(self):
        return tuple(e for e, _ in self.darts)


def _normalize_cycle(darts):
    darts = tuple(darts)
    best = darts
    for r in range(1, len(darts)):
        cand = darts[r:] + darts[:r]
        if cand < best:
            best = cand
    return best


def next_zigzag_dart(model, dart):
    head = model.dart_head(dart)
    rot = model.rotations[head]
    i = rot.index(dart[0])
    if model.color(head) == WHITE:
        nxt = rot[(i + 1) % len(rot)]
    else:
        nxt = rot[(i - 1) % len(rot)]
    return (nxt, WB if model.color(head) == WHITE else BW)


def zigzag_paths(model):
    """All zigzag paths; every dart of the model lies on exactly one."""
    model.validate()
    todo = set(model.darts())
    paths = []
    while todo:
        start = min(todo)
        cycle = [start]
        todo.discard(start)
        d = next_zigzag_dart(model, start)
        while d != start:
            cycle.append(d)
            todo.discard(d)
            d = next_zigzag_dart(model, d)
        slope = (0, 0)
        for d in cycle:
            s = model.dart_shift(d)
            slope = (slope[0] + s[0], slope[1] + s[1])
        paths.append(ZigzagPath(_normalize_cycle(cycle), slope))
    paths.sort(key=lambda z: z.darts)
    return paths


def _is_primitive(v):
    return gcd(abs(v[0]), abs(v[1])) == 1


def _multiple_of(v, slope):
    """Whether ``v`` is an integer multiple of ``slope``."""
    if slope == (0, 0):
        return v == (0, 0)
    if v == (0, 0):
        return True
    if v[0] * slope[1] != v[1] * slope[0]:
        return False
    if slope[0] != 0:
        return v[0] % slope[0] == 0
    return v[1] % slope[1] == 0


def _cover_intersections(model, path):
    """Repeated edges and nodes of one period on the universal cover.

    Positions are tracked by the cumulative shift; two uses of the same
    edge (node) collide when their positions differ by a multiple of the
    slope, since a lift of the closed path repeats with that period.
    """
    edge_uses = {}
    node_uses = {}
    pos = (0, 0)
    for d in path.darts:
        eid, direction = d
        e = model.edges[eid]
        if direction == WB:
            white_pos = pos
        else:
            white_pos = (pos[0] - e.shift[0], pos[1] - e.shift[1])
        edge_uses.setdefault(eid, []).append(white_pos)
        node = model.dart_tail(d)
        node_uses.setdefault(node, []).append(pos)
        s = model.dart_shift(d)
        pos = (pos[0] + s[0], pos[1] + s[1])
    edge_repeats = []
    for eid, uses in edge_uses.items():
        for i in range(len(uses)):
            for j in range(i + 1, len(uses)):
                diff = (uses[i][0] - uses[j][0], uses[i][1] - uses[j][1])
                if _multiple_of(diff, path.slope):
                    edge_repeats.append(eid)
    node_repeats = []
    for node, uses in node_uses.items():
        for i in range(len(uses)):
            for j in range(i + 1, len(uses)):
                diff = (uses[i][0] - uses[j][0], uses[i][1] - uses[j][1])
                if _multiple_of(diff, path.slope):
                    node_repeats.append(node)
    return sorted(set(edge_repeats)), sorted(set(node_repeats))


@dataclass
class ConsistencyVerdict:
    consistent: bool
    reasons: list
    node_repeats: list      # reported separately, not failures

    def __bool__(self):
        return self.consistent


def is_consistent(model):
    """The zigzag consistency criterion, with witnesses for failures."""
    reasons = []
    node_repeats = []
    for z in zigzag_paths(model):
        if z.slope == (0, 0):
            reasons.append(("trivial-slope", z))
            continue
        if not _is_primitive(z.slope):
            reasons.append(("imprimitive-slope", z))
        edge_rep, node_rep = _cover_intersections(model, z)
        if edge_rep:
            reasons.append(("self-intersection", z, edge_rep))
        if node_rep:
            node_repeats.append((z, node_rep))
    return ConsistencyVerdict(not reasons, reasons, node_repeats)


def rcharge_feasible(model):
    """An exact positive R-charge, or ``None`` with a certificate.

    Solves max ``eps`` s.t. ``R(e) >= eps``, node sums equal 2 and face
    sums of ``1 - R`` equal 2; feasible iff the optimum is positive.
    Returns ``(assignment, eps)`` on success, ``(None, certificate)``
    otherwise.
    """
    model.validate()
    edge_ids = sorted(model.edges)
    col = {e: i for i, e in enumerate(edge_ids)}
    n = len(edge_ids)
    # variables: s_e = R(e) - eps >= 0 for each edge, then eps >= 0
    a_eq, b_eq = [], []
    for node in sorted(model.nodes):
        row = [0] * (n + 1)
        for e in model.rotations[node]:
            row[col[e]] += 1
            row[n] += 1
        a_eq.append(row)
        b_eq.append(2)
    for face in model.faces:
        row = [0] * (n + 1)
        for e, _ in face.darts:
            row[col[e]] += 1
            row[n] += 1
        a_eq.append(row)
        b_eq.append(len(face) - 2)
    c = [0] * n + [1]
    try:
        eps, x = rationallp.simplex_max(c, a_eq, b_eq)
    except rationallp.Infeasible:
        return None, "equality system infeasible"
    if eps <= 0:
        return None, eps
    assignment = {e: x[col[e]] + eps for e in edge_ids}
    return assignment, eps


def check_rcharge(model, assignment):
    """Verify both R-charge conditions for an explicit assignment."""
    for node in model.nodes:
        if sum(assignment[e] for e in model.rotations[node]) != 2:
            return False
    for face in model.faces:
        if sum(1 - assignment[e] for e, _ in face.darts) != 2:
            return False
    return all(v > 0 for v in assignment.values())


def slope_side_check(model, reference=None):
    """Compare zigzag slopes with the polygon's counterclockwise side vectors.

    Returns ``(equal, slopes, sides)`` as sorted multisets.  The identity
    correspondence is the frozen calibration: no extra rotation is applied.
    """
    slopes = sorted(z.slope for z in zigzag_paths(model))
    poly = pm_polygon(model, reference)
    sides = poly.side_vectors()
    return slopes == sides, slopes, sides
