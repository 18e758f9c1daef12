"""
Periodic resolutions and Ext
============================

Over ``S = k[z1..z4]/(z1 z2 z3 z4)`` the module ``S/(z1)`` has a resolution
alternating ``z1`` and ``z2 z3 z4`` forever.  Exactness is checked in each
degree up to a bound, and the Hom complex into ``(z2)S`` gives the Ext
table.
"""

from lgmirror.homology import (
    build_odp_resolution,
    build_periodic_resolution,
    ext_groups,
    format_resolution,
    truncated_homology_dim,
)

C = build_periodic_resolution(4, 1, 5, module="quotient")
print(format_resolution(C))
print("interior homology (D=6):", [truncated_homology_dim(C, k, 6) for k in range(1, 5)])

for d in ext_groups(4, 1, 2, kmax=4, D=7, check_degree=4):
    print(f"Ext^{d.k}(J1, J2) = {d.closed_form_text:16s} dims {d.hilbert}  verified={d.verified}")

# the double point y^2 = xw: a two-periodic resolution from a matrix factorization
O = build_odp_resolution(3)
print(format_resolution(O))
print("interior homology (D=5):", [truncated_homology_dim(O, k, 5) for k in range(1, 3)])
