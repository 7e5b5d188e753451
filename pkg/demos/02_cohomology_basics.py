"""Hochschild cohomology two ways: the bar complex and derivations.

hh^n(A, M) is computed from the cochain complex Hom(A^(x)n, M).  In
degree one the same space is normalized derivations modulo inner ones,
and the two routes are independent implementations that must agree.
"""

from hochschild import (
    bar_differential, bracket1, build_algebra, cup,
    derivation_from_arrow_values, dual_bimodule, hh, hh1_via_derivations,
    load_bundled, regular_bimodule,
)

_, pres = load_bundled("ex3_5_B")
B = build_algebra(pres)
reg = regular_bimodule(B)

print("algebra dimension:", B.dim)
for n in range(3):
    print(f"dim hh^{n}(B) =", hh(B, reg, n).dim)

# the derivation route gives the same degree-one answer
der = hh1_via_derivations(B, reg)
print("dim via derivations:", der.dim)

# the complex property, checked on actual matrices
b1 = bar_differential(B, reg, 0)
b2 = bar_differential(B, reg, 1)
print("b^2 o b^1 = 0:", b2.matmul(b1).is_zero())

# coefficients in the dual bimodule work the same way
dc = dual_bimodule(B)
print("dim hh^1(B, DB) =", hh(B, dc, 1).dim)

# a hand-made derivation: scale the two clockwise arrows
q = B.presentation.quiver
u0 = derivation_from_arrow_values(B, {
    "a0": B.element_from_path(q.path("a0")),
    "a1": B.element_from_path(q.path("a1")),
})
space = hh(B, reg, 1)
print("class coordinates of u0:", space.class_coords(u0))

# cup products land in degree two; squares of odd classes die over Q
square = cup(u0, u0)
print("u0 cup u0 is a coboundary:", hh(B, reg, 2).class_is_zero(square))

# the degree-one bracket is the commutator of derivations
v0 = derivation_from_arrow_values(B, {
    "a0": B.element_from_path(q.path("abar1")),
    "a1": B.element_from_path(q.path("abar0")).scaled(-1),
})
print("[u0, v0] = -v0:", bracket1(u0, v0) == v0.scaled(-1))
