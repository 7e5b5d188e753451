"""Build a bound quiver algebra and poke at it.

A presentation is a quiver, a field, and a list of relations; the algebra
comes with a monomial basis, structure constants and the primitive
idempotents.  Run me with:  python3 demos/01_quivers_and_algebras.py
"""

from hochschild import (
    Presentation, Quiver, build_algebra, center_basis, is_triangular,
    parse_relation, system_of_relations,
)

# a three-vertex quiver: 1 --alpha--> 2 --beta--> 3 with a shortcut gamma,
# bound by the zero relation alpha*beta
quiver = Quiver(
    ["1", "2", "3"],
    [("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "1", "3")],
)
pres = Presentation(quiver, relations=[parse_relation("alpha*beta", quiver)])
C = build_algebra(pres)

print("dimension:", C.dim)
print("basis:", C.labels)
print("nilpotency bound:", C.nilpotency)
print("triangular (acyclic quiver):", is_triangular(C))

# multiplication through the structure constants
alpha = C.element_from_path(quiver.path("alpha"))
beta = C.element_from_path(quiver.path("beta"))
gamma = C.element_from_path(quiver.path("gamma"))
print("alpha * beta =", alpha * beta)        # the relation kills it
print("gamma stays:", gamma)

# the centre is one-dimensional: this is hh^0
print("centre dimension:", len(center_basis(C)))

# a minimal system of relations recovers the single generator
for rel in system_of_relations(pres):
    print("relation:", rel.label())
