"""Stability and the induced triangulation on the eight-face model.

With the weight (-7, 1, ..., 1) exactly one matching is stable per lattice
point of the pentagon, and joining stable matchings whose union is the
cosupport of a stable representation cuts the pentagon into eight
unimodular triangles.
"""
from dimers import dualize, load_fixture, pm_polygon
from dimers.modelio import polygon_svg
from dimers.stability import theta_stable_pms, triangulate

fx = load_fixture("octo8")
qp = dualize(fx.graph)
print("model:", fx.name, "   weight:", fx.theta)

st = theta_stable_pms(fx.graph, qp, fx.theta, fx.reference_pm)
print("\nstable matchings (one per lattice point, bijective=%s):" % st.bijective)
for point in sorted(st.by_point):
    m = st.by_point[point]
    print("  %-9s %s" % (point, fx.alias_of(m) or sorted(m)))

tri = triangulate(fx.graph, qp, fx.theta, fx.reference_pm)
print("\ntriangulation: %d segments, %d unimodular triangles, well-formed=%s"
      % (len(tri.segments), len(tri.triangles), tri.well_formed))
for t in tri.triangles:
    print("  triangle", t)

poly = pm_polygon(fx.graph, fx.reference_pm)
labels = {tuple(poly.point_of(m)): name for name, m in fx.pm_aliases.items()}
svg = polygon_svg(poly, labels=labels, segments=tri.segments)
with open("octo8_triangulation.svg", "w") as fh:
    fh.write(svg + "\n")
print("\nwrote octo8_triangulation.svg")

# A different generic weight picks a different stable matching over the
# origin: the weight below stabilizes a matching that the first one rejects.
from dimers.stability import pm_is_theta_stable
other = {0: 1, 1: 1, 2: 1, 3: -7, 4: 1, 5: 1, 6: 1, 7: 1}
bottom = frozenset({"B3W3", "B5W5", "B2W4", "B4W6", "B6W1", "B1W2"})
print("\nalternative matching over the origin:")
print("  stable for the default weight:", pm_is_theta_stable(qp, bottom, fx.theta))
print("  stable for", other, ":", pm_is_theta_stable(qp, bottom, other))
