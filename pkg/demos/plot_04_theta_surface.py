"""
From theta functions to the rank-one mirror
===========================================

Eliminating ``theta3`` from the two theta relations leaves one equation.
Setting the coefficients to 1 and projectivising ``theta4 = u/v`` gives the
surface ``uy = v(x + 1 + 1/x)`` whose fibre over 0 has three components.
"""

from lgmirror.mirror import lg2_surface, surface_from_mir, theta_eliminate, theta_equations

T = theta_equations()
print("\n".join(T.as_text()))
E = theta_eliminate(T)
print("cleared:", E.cleared)
print(E.laurent_text())

S = surface_from_mir(1, 1, 1)
print("surface:", S)

L = lg2_surface()
for c in L.components:
    print(f"  {c.label}: {c.note}")
print("double points:", [str(g) for g in L.double_points.groebner])
print("objects after identifying D1 ~ D2:", [str(o) for o in L.objects])
