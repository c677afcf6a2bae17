"""Mutating the model itself.

At a quadrangular face the dimer model mutates by graph surgery (split the
black corners to valence three, spider move, join the 2-valent leftovers);
the dual quiver with potential mutates by an independent algebraic recipe.
The two constructions agree up to a vertex-fixing isomorphism, the
matching polygon never changes, and mutating twice restores the model.

A matching rides along through the surgery; transporting the distinguished
internal matching of the eight-face model yields the distinguished internal
matching of the mutated model at the same lattice point.
"""
from dimers import dualize, load_fixture, pm_polygon
from dimers.algebra import algebra_fingerprint, truncated_dimension
from dimers.mutations import (
    model_fingerprint, mutable_vertices, mutate_dimer, mutate_qp,
    qp_isomorphic_vertex_fixing, transport_pm,
)
from dimers.zigzag import is_consistent

fx = load_fixture("octo8")
g = fx.graph
qp = dualize(g)
print("mutable vertices of %s: %s" % (fx.name, mutable_vertices(qp)))

mut = mutate_dimer(g, 0)
g2 = mut.model
print("\nafter mutating at face 0: %d nodes, %d edges, %d faces, consistent=%s"
      % (len(g2.nodes), len(g2.edges), len(g2.faces), bool(is_consistent(g2))))
print("surgery steps:", [rec["op"] for rec in mut.trail])

print("polygon before:", pm_polygon(g).normalized()[0])
print("polygon after: ", pm_polygon(g2).normalized()[0])

qp_algebraic, _ = mutate_qp(qp, 0)
qp_surgery = dualize(g2)
iso = qp_isomorphic_vertex_fixing(qp_algebraic, qp_surgery)
print("algebraic and surgical mutation agree:", iso is not None)

twice = mutate_dimer(g2, 0).model
print("mutating twice restores the model:",
      model_fingerprint(twice) == model_fingerprint(g))

# transport the internal matching D7 through the mutation
d7 = fx.pm_aliases["D7"]
mut, moved = transport_pm(g, d7, 0, side="L")
poly_before = pm_polygon(g, d7)
poly_after = pm_polygon(mut.model, moved)
print("\nD7 sits at the origin of", sorted(poly_before.hull))
print("its transport sits at the origin of", sorted(poly_after.hull))
qp2 = dualize(mut.model)
print("transported matching as dual arrows:",
      sorted((qp2.tail(e), qp2.head(e)) for e in moved))
print("truncation dimensions: before %s, after %s"
      % (truncated_dimension(qp, d7), truncated_dimension(qp2, moved)))

# the three internal truncations of the hexagonal model share a fingerprint
fx7 = load_fixture("hex7")
qp7 = dualize(fx7.graph)
prints = {n: algebra_fingerprint(qp7, fx7.pm_aliases[n]) for n in ("D4", "D5", "D6")}
print("\nhex7 internal fingerprints all equal:",
      prints["D4"] == prints["D5"] == prints["D6"])
print("common dimension:", prints["D4"][0])
