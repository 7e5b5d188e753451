"""Split extensions and the projection morphisms hh^n(B) -> hh^n(C).

B = C (+) E with (c,e)(c',e') = (cc', ce' + ec' + ee'); the class of f
maps to the class of p o f o q^(x)n.  The map is an algebra morphism for
the cup product; surjectivity is decided by its rank.
"""

from hochschild import (
    build_algebra, check_cup_compatibility, check_kernel_sequence,
    dual_bimodule, ext_dual_bimodule, load_bundled, projection_morphism,
    trivial_extension, zero_pairing_morphisms,
)

_, pres = load_bundled("ex3_5_C")
C = build_algebra(pres)

# the trivial extension by the dual bimodule: dimension doubles
ext = trivial_extension(C, dual_bimodule(C))
print("dim B =", ext.B.dim)

for n in range(3):
    phi = projection_morphism(ext, n)
    print(f"phi^{n}: rank {phi.rank}, "
          f"{phi.source.dim} -> {phi.target.dim}, "
          f"surjective: {phi.surjective}")

# the kernel of phi^1 decomposes as hh^1(B, E) (+) the zero-pairing space
print("zero-pairing dimension:", len(zero_pairing_morphisms(ext.E)))
seq = check_kernel_sequence(ext)
for chk in seq["checks"]:
    print(chk["name"], "->", chk["dims"], "pass" if chk["pass"] else "FAIL")

# phi respects cup products classwise
report = check_cup_compatibility(ext, 2)
print("cup compatibility through degree 2:",
      report["holds"], f"({report['pairs']} class pairs)")

# coefficients in Ext^m(DC, C) always make phi^1 surjective
_, pres59 = load_bundled("ex5_9_C")
C59 = build_algebra(pres59)
e2 = ext_dual_bimodule(C59, 2)
phi1 = projection_morphism(trivial_extension(C59, e2), 1)
print("relation-extension phi^1 surjective:", phi1.surjective)
