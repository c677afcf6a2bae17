r"""
King stability for the dimension-(1,...,1) representations attached to
arrow subsets, and the induced polygon triangulation.

A support representation puts the one-dimensional space at every vertex,
the identity on a support set of arrows and zero elsewhere; it satisfies
the relations exactly when, for every arrow, both return paths of its
relation survive or die together.  Its subrepresentations are the vertex
subsets closed under the support arrows, so stability of a weight
``theta`` (summing to zero) is checked by exhausting closed subsets.

For a generic weight the stable matchings biject with the lattice points
of the matching polygon, and connecting two stable matchings whenever
their union is the cosupport of a stable representation cuts the polygon
into unimodular triangles.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .matchings import enumerate_pms, pm_polygon, polygon_area_twice

MAX_VERTICES = 20


@dataclass(frozen=True)
class SupportRep:
    """A 0/1 representation given by its support arrow set."""
    support: frozenset
    vertices: tuple


def rep_from_cosupport(qp, cosupport):
    """The support representation with the given cosupport, or ``None``
    with the violating arrow if it breaks a relation."""
    cosupport = frozenset(cosupport)
    unknown = cosupport - set(qp.arrows)
    if unknown:
        raise ValueError("not arrows of the quiver: %r" % sorted(unknown))
    support = frozenset(qp.arrows) - cosupport
    for a, rel in qp.relations().items():
        plus_alive = all(x in support for x in rel.plus)
        minus_alive = all(x in support for x in rel.minus)
        if plus_alive != minus_alive:
            return None, a
    return SupportRep(support, tuple(qp.vertices)), None


def _closed_subsets(qp, support):
    """Bitmask iterator over successor-closed vertex subsets of the support."""
    verts = sorted(qp.vertices, key=str)
    n = len(verts)
    if n > MAX_VERTICES:
        raise ValueError("vertex count %d exceeds the exhaustive-search limit %d"
                         % (n, MAX_VERTICES))
    index = {v: i for i, v in enumerate(verts)}
    succ = [0] * n
    for a in support:
        succ[index[qp.tail(a)]] |= 1 << index[qp.head(a)]
    for mask in range(1 << n):
        closed = True
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            if succ[i] & ~mask:
                closed = False
                break
            m &= m - 1
        if closed:
            yield mask


def is_theta_stable(qp, rep, theta):
    """King stability: every nonzero proper closed subset has positive weight."""
    verts = sorted(qp.vertices, key=str)
    if sum(theta[v] for v in verts) != 0:
        raise ValueError("stability weights must sum to zero")
    weights = [theta[v] for v in verts]
    full = (1 << len(verts)) - 1
    for mask in _closed_subsets(qp, rep.support):
        if mask == 0 or mask == full:
            continue
        total = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            total += weights[i]
            m &= m - 1
        if total <= 0:
            return False
    return True


def pm_is_theta_stable(qp, matching, theta):
    rep, _ = rep_from_cosupport(qp, matching)
    if rep is None:
        return False
    return is_theta_stable(qp, rep, theta)


def find_stabilizing_theta(qp, matching):
    """An integer weight making the matching stable, or ``None``.

    The stability region is the open cone cut out by one inequality per
    proper nonzero closed subset of the support quiver; an exact rational
    LP finds an interior point of it (or certifies emptiness), which is
    then cleared to integers.
    """
    from . import rationallp

    rep, _ = rep_from_cosupport(qp, matching)
    if rep is None:
        return None
    verts = sorted(qp.vertices, key=str)
    n = len(verts)
    full = (1 << n) - 1
    masks = [m for m in _closed_subsets(qp, rep.support) if m not in (0, full)]
    # variables: theta_v = u_v - u'_v (free), one slack per inequality
    nvars = 2 * n + len(masks)
    a_eq, b_eq = [], []
    row = [0] * nvars
    for i in range(n):
        row[i] = 1
        row[n + i] = -1
    a_eq.append(row)
    b_eq.append(0)
    for j, mask in enumerate(masks):
        row = [0] * nvars
        for i in range(n):
            if mask >> i & 1:
                row[i] = 1
                row[n + i] = -1
        row[2 * n + j] = -1
        a_eq.append(row)
        b_eq.append(1)
    try:
        _, x = rationallp.simplex_max([0] * nvars, a_eq, b_eq)
    except rationallp.Infeasible:
        return None
    values = [x[i] - x[n + i] for i in range(n)]
    scale = 1
    for v in values:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    theta = {verts[i]: int(values[i] * scale) for i in range(n)}
    assert is_theta_stable(qp, rep, theta)
    return theta


@dataclass
class StableMatchings:
    theta: dict
    by_point: dict          # lattice point -> matching
    stable: list            # all stable matchings
    lattice_points: list
    issues: list

    @property
    def bijective(self):
        return not self.issues


def theta_stable_pms(model, qp, theta, reference=None):
    """Stable matchings of the model, mapped to lattice points.

    A generic weight is certified a posteriori: exactly one stable
    matching per lattice point of the polygon.  Failures are reported in
    ``issues`` rather than raised.
    """
    poly = pm_polygon(model, reference)
    stable = [m for m in enumerate_pms(model) if pm_is_theta_stable(qp, m, theta)]
    points = poly.lattice_points()
    by_point = {}
    issues = []
    for m in stable:
        p = poly.point_of(m)
        if p in by_point:
            issues.append(("multiple-stable-at-point", p))
        by_point[p] = m
    for p in points:
        if p not in by_point:
            issues.append(("no-stable-at-point", p))
    return StableMatchings(dict(theta), by_point, stable, points, issues)


@dataclass
class Triangulation:
    segments: list          # sorted ((p, q)) with p < q
    triangles: list         # sorted  (p, q, r)
    issues: list

    @property
    def well_formed(self):
        return not self.issues


def _triangle_area_twice(p, q, r):
    return abs((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def triangulate(model, qp, theta, reference=None):
    """The polygon triangulation induced by a generic weight.

    Joins the points of two stable matchings whenever the union of the two
    matchings is the cosupport of a stable representation; the resulting
    segments must cut the polygon into triangles of normalized area one.
    """
    assignment = theta_stable_pms(model, qp, theta, reference)
    issues = list(assignment.issues)
    pts = assignment.by_point
    segments = []
    keys = sorted(pts)
    for i, p in enumerate(keys):
        for q in keys[i + 1:]:
            union = pts[p] | pts[q]
            rep, _ = rep_from_cosupport(qp, union)
            if rep is not None and is_theta_stable(qp, rep, theta):
                segments.append((p, q))
    adjacency = {p: set() for p in keys}
    for p, q in segments:
        adjacency[p].add(q)
        adjacency[q].add(p)
    triangles = []
    for i, p in enumerate(keys):
        for q in sorted(adjacency[p]):
            if q <= p:
                continue
            for r in sorted(adjacency[p] & adjacency[q]):
                if r <= q:
                    continue
                if _triangle_area_twice(p, q, r) == 1:
                    triangles.append((p, q, r))
    poly = pm_polygon(model, reference)
    expected = abs(polygon_area_twice(poly.hull))
    if len(triangles) != expected:
        issues.append(("triangle-count", len(triangles), expected))
    if sum(_triangle_area_twice(*t) for t in triangles) != expected:
        issues.append(("area-mismatch",))
    return Triangulation(sorted(segments), sorted(triangles), issues)
