"""
The mirror family in every rank
===============================

The mirror of LG(n+1) is a hypersurface with a rational potential.  The
pencil ``[f : g]`` has fibres over 0 and infinity whose components give
the generators ``F(z0), ..., F(zn)`` and, through the mirror map, the
vanishing cycles.
"""

from lgmirror.mirror import dsg_generators, fibre_report, hom_sheaves, mirror_equation, mirror_map

M = mirror_equation(3)
print(M.equation_text())
print("f =", M.pencil_f)
print("g =", M.pencil_g)

for which in ("zero", "infinity"):
    r = fibre_report(M, which)
    print(which, [str(c.label) for c in r.components], "classes",
          [[str(l) for l in cls] for cls in r.symmetry_classes])

print("generators:", [str(g) for g in dsg_generators(3)])
print("mirror map:", ", ".join(f"{a} <-> {b}" for a, b in mirror_map(3).pairs))
print("Hom(F(z1), F(z2)) =", hom_sheaves(3, 1, 2).text())
