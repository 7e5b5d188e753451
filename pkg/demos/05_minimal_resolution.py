"""A bar-free route to hh^0..hh^2 for monomial algebras.

The partial minimal projective bimodule resolution is indexed by
vertices, arrows, relations and their overlaps; applying Hom(-, A) gives
a complex whose cohomology must match the bar-complex engine.
"""

from hochschild import (
    build_partial_resolution, chain_paths, hh, hh_via_resolution,
    load_bundled, regular_bimodule, relation_extension_algebra,
)

# the relation extension of the bundled triangle is monomial
_, pres = load_bundled("ex5_9_C")
_, B = relation_extension_algebra(pres)

chains = chain_paths(B)
print("relations:", [p.label() for p in chains.relations])
print("overlaps:")
for p in chains.overlaps:
    print("   ", p.label())

res = build_partial_resolution(B)   # certifies d o d = 0 and exactness
print("projective summands over degree:",
      {n: res.summands[n] for n in range(4)})

reg = regular_bimodule(B)
for n in (0, 1, 2):
    via_res = hh_via_resolution(B, n, res).dim
    via_bar = hh(B, reg, n).dim
    marker = "==" if via_res == via_bar else "!="
    print(f"hh^{n}: resolution {via_res} {marker} bar {via_bar}")
