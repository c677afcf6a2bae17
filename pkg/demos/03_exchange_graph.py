"""The exchange graph of matching mutations.

An internal matching can be flipped at any strict source or sink of its
degree-zero subquiver; the flip keeps the lattice point, and repeating it
in all directions enumerates the whole fiber of that point.  On the
eight-face model the origin carries fourteen matchings joined by twenty
labelled mutation edges.
"""
from dimers import dualize, enumerate_pms, load_fixture, pm_polygon
from dimers.algebra import strict_sources_sinks
from dimers.mutations import exchange_graph, mutate_pm_minus, mutate_pm_plus

fx = load_fixture("octo8")
qp = dualize(fx.graph)
d7 = fx.pm_aliases["D7"]

sources, sinks = strict_sources_sinks(qp, d7)
print("D7 has strict sources %s and strict sinks %s" % (sources, sinks))
print("flip at 0:", sorted(mutate_pm_plus(qp, d7, 0)))
print("flip at 5:", sorted(mutate_pm_minus(qp, d7, 5)))

eg = exchange_graph(qp, d7)
print("\nexchange graph: %d matchings, %d edges" % (len(eg.nodes), len(eg.edges)))

# the closure equals the full fiber of the origin
poly = pm_polygon(fx.graph, fx.reference_pm)
fiber = [m for m in enumerate_pms(fx.graph) if poly.point_of(m) == (0, 0)]
print("matchings at the origin by direct enumeration:", len(fiber))
assert set(eg.nodes) == set(fiber)

alias = {edges: name for name, edges in fx.pm_aliases.items()}
with open("octo8_exchange.dot", "w") as fh:
    fh.write(eg.to_dot(alias) + "\n")
print("wrote octo8_exchange.dot")

# the three interior points of the hexagonal model have disjoint fibers
fx7 = load_fixture("hex7")
qp7 = dualize(fx7.graph)
for name in ("D4", "D5", "D6"):
    nodes = exchange_graph(qp7, fx7.pm_aliases[name]).nodes
    others = {n for n in ("D4", "D5", "D6") if n != name}
    assert all(fx7.pm_aliases[o] not in nodes for o in others)
    print("hex7 fiber of %s: %d matchings" % (name, len(nodes)))
