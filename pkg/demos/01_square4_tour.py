"""A first tour: the square-lattice model with four faces.

Loads the model, dualizes it to its quiver with potential, enumerates the
eight perfect matchings, and reads off the matching polygon -- the diamond
with a single interior lattice point carrying four matchings.
"""
from dimers import dualize, enumerate_pms, load_fixture, pm_polygon
from dimers.zigzag import is_consistent, rcharge_feasible, zigzag_paths

fx = load_fixture("square4")
g = fx.graph
print("model:", g.name)
print("nodes: %d  edges: %d  faces: %d" % (len(g.nodes), len(g.edges), len(g.faces)))

# The dual quiver puts a vertex on every face and an arrow across every
# edge; the potential collects one small cycle per node, white cycles with
# sign +1 and black with -1.
qp = dualize(g)
print("\nquiver: %d vertices, %d arrows, %d potential terms"
      % (len(qp.vertices), len(qp.arrows), len(qp.terms)))
for t in qp.terms:
    print("  %+d %s  (around %s)" % (t.sign, " ".join(t.arrows), t.node))

# Every arrow sits in exactly two terms of opposite sign; cutting them open
# at the arrow gives its relation p+ = p-.
rel = qp.relations()["e1"]
print("\nrelation of e1:  %s  =  %s" % (" ".join(rel.plus), " ".join(rel.minus)))

# Eight perfect matchings; with the conventional reference the four corner
# matchings land on the diamond's vertices and the other four on the origin.
pms = enumerate_pms(g)
poly = pm_polygon(g, fx.reference_pm)
print("\nmatchings and lattice points:")
for m in pms:
    print("  %-4s %-18s -> %s  (%s)"
          % (fx.alias_of(m), sorted(m), poly.point_of(m), poly.classify(m)))
print("hull:", poly.hull)

# Four zigzag paths, one per side of the diamond; the model passes both
# consistency checks (the zigzag criterion and the exact R-charge program).
print("\nzigzag slopes:", sorted(z.slope for z in zigzag_paths(g)))
print("consistent:", bool(is_consistent(g)))
assignment, eps = rcharge_feasible(g)
print("R-charge slack:", eps)
