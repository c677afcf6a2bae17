r"""
Perfect matchings, their homology classes, and the matching polygon.

A perfect matching is an edge subset covering every node exactly once.
Orienting matched edges white-to-black, the difference of two matchings
is a 1-cycle on the torus, so each matching ``D`` gets a lattice point
``[D - D0]`` relative to a reference matching ``D0``; the matching polygon
is the convex hull of these points.  Matchings are classified by where
their point sits: on a hull vertex (corner), elsewhere on the boundary,
or in the interior.

Enumeration is exhaustive backtracking over nodes in a fixed order; all
geometry is exact integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def enumerate_pms(model):
    """All perfect matchings, as a duplicate-free sorted list of frozensets."""
    model.validate()
    nodes = sorted(model.nodes)
    incident = {n: [] for n in nodes}
    for eid, e in model.edges.items():
        incident[e.white].append(eid)
        incident[e.black].append(eid)
    order = sorted(nodes, key=lambda n: len(incident[n]))
    found = []

    def extend(i, used, covered):
        while i < len(order) and order[i] in covered:
            i += 1
        if i == len(order):
            found.append(frozenset(used))
            return
        n = order[i]
        for eid in incident[n]:
            w, b = model.endpoints(eid)
            other = b if n == w else w
            if other in covered:
                continue
            used.append(eid)
            covered.add(n)
            covered.add(other)
            extend(i + 1, used, covered)
            used.pop()
            covered.discard(n)
            covered.discard(other)

    extend(0, [], set())
    found = sorted(set(found), key=sorted)
    return found


def is_perfect_matching(model, edges):
    edges = frozenset(edges)
    covered = []
    for eid in edges:
        if eid not in model.edges:
            return False
        covered.extend(model.endpoints(eid))
    return sorted(covered) == sorted(model.nodes)


def pm_total_shift(model, matching):
    x = y = 0
    for eid in matching:
        sx, sy = model.edges[eid].shift
        x += sx
        y += sy
    return (x, y)


def pm_homology(model, matching, reference):
    """The class ``[D - D0]`` in ``H_1`` of the torus, as an integer pair."""
    for m in (matching, reference):
        if not is_perfect_matching(model, m):
            raise ValueError("not a perfect matching of this model: %r" % sorted(m))
    a = pm_total_shift(model, matching)
    b = pm_total_shift(model, reference)
    return (a[0] - b[0], a[1] - b[1])


# ---------------------------------------------------------------------
# integer polygon geometry
# ---------------------------------------------------------------------

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Vertices of the convex hull, counterclockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def polygon_area_twice(hull):
    s = 0
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        s += p[0] * q[1] - p[1] * q[0]
    return s


def point_in_hull(point, hull):
    """'interior', 'boundary', or 'outside'."""
    n = len(hull)
    if n == 0:
        return "outside"
    if n == 1:
        return "boundary" if point == hull[0] else "outside"
    if n == 2:
        a, b = hull
        if _cross(a, b, point) != 0:
            return "outside"
        lo = (min(a[0], b[0]), min(a[1], b[1]))
        hi = (max(a[0], b[0]), max(a[1], b[1]))
        ok = lo[0] <= point[0] <= hi[0] and lo[1] <= point[1] <= hi[1]
        return "boundary" if ok else "outside"
    on_edge = False
    for i in range(n):
        c = _cross(hull[i], hull[(i + 1) % n], point)
        if c < 0:
            return "outside"
        if c == 0:
            on_edge = True
    return "boundary" if on_edge else "interior"


def lattice_points_in_hull(hull):
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    out = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if point_in_hull((x, y), hull) != "outside":
                out.append((x, y))
    return out


def boundary_segments(hull):
    """Primitive lattice segments of the hull boundary, counterclockwise."""
    segs = []
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        dx, dy = q[0] - p[0], q[1] - p[1]
        g = gcd(abs(dx), abs(dy))
        step = (dx // g, dy // g)
        for k in range(g):
            a = (p[0] + k * step[0], p[1] + k * step[1])
            segs.append((a, (a[0] + step[0], a[1] + step[1])))
    return segs


@dataclass
class LatticePolygon:
    """The matching polygon of a model with the point of every matching."""

    reference: frozenset
    points: dict            # frozenset -> (x, y)
    hull: tuple             # CCW vertex tuple

    def point_of(self, matching):
        return self.points[frozenset(matching)]

    def matchings_at(self, point):
        return sorted((m for m, p in self.points.items() if p == point), key=sorted)

    def classify(self, matching):
        p = self.point_of(matching)
        if p in self.hull:
            return "corner"
        where = point_in_hull(p, self.hull)
        if where == "boundary":
            return "boundary"
        if where == "interior":
            return "internal"
        raise AssertionError("matching point %r escaped its own hull" % (p,))

    def corner_pm(self, vertex):
        """The unique matching at a hull vertex; non-uniqueness means the
        model is not consistent."""
        if vertex not in self.hull:
            raise ValueError("%r is not a hull vertex" % (vertex,))
        at = self.matchings_at(vertex)
        if len(at) != 1:
            raise ValueError("expected a unique matching at %r, found %d"
                             % (vertex, len(at)))
        return at[0]

    def lattice_points(self):
        return lattice_points_in_hull(self.hull)

    def interior_lattice_points(self):
        return [p for p in self.lattice_points()
                if point_in_hull(p, self.hull) == "interior"]

    def is_two_dimensional(self):
        return len(self.hull) >= 3

    def boundary_segments(self):
        return boundary_segments(self.hull)

    def side_vectors(self):
        """Primitive boundary segment vectors, counterclockwise, with multiplicity."""
        return sorted((b[0] - a[0], b[1] - a[1]) for a, b in self.boundary_segments())

    def normalized(self):
        """Hull and points translated so the smallest hull vertex is the origin."""
        ox, oy = min(self.hull)
        hull = tuple(sorted((x - ox, y - oy) for x, y in self.hull))
        pts = sorted((x - ox, y - oy) for x, y in self.points.values())
        return hull, tuple(pts)


def pm_polygon(model, reference=None):
    """The matching polygon; the reference defaults to the lexicographically
    smallest matching unless the caller pins one."""
    pms = enumerate_pms(model)
    if not pms:
        raise ValueError("model has no perfect matching")
    if reference is None:
        reference = min(pms, key=sorted)
    reference = frozenset(reference)
    if reference not in set(pms):
        raise ValueError("reference is not a perfect matching of this model")
    ref_shift = pm_total_shift(model, reference)
    points = {}
    for m in pms:
        s = pm_total_shift(model, m)
        points[m] = (s[0] - ref_shift[0], s[1] - ref_shift[1])
    hull = convex_hull(points.values())
    return LatticePolygon(reference=reference, points=points, hull=hull)


def classify(matching, polygon):
    return polygon.classify(matching)


def _as_hull(polygon):
    if isinstance(polygon, LatticePolygon):
        return polygon.hull
    return convex_hull(polygon)


def has_interior_point(polygon):
    """Whether the polygon contains an interior lattice point."""
    hull = _as_hull(polygon)
    if len(hull) < 3:
        raise ValueError("polygon is degenerate (a point or segment)")
    return any(point_in_hull(p, hull) == "interior"
               for p in lattice_points_in_hull(hull))


def is_isolated(polygon):
    """Whether every hull edge is a primitive vector (no lattice point in
    the relative interior of any side)."""
    hull = _as_hull(polygon)
    if len(hull) < 3:
        raise ValueError("polygon is degenerate (a point or segment)")
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        if gcd(abs(q[0] - p[0]), abs(q[1] - p[1])) != 1:
            return False
    return True
