"""
Singular locus of the LG(3) mirror
==================================

The Jacobian ideal of ``p`` (with ``t1``, ``t2`` kept symbolic) vanishes
on both claimed components.  Random points of ``V(p)`` over Z/101 away
from the components are smooth, which is the probabilistic converse.
"""

from lgmirror.ideal import jacobian_ideal
from lgmirror.mirror import lg3_polynomial, lg3_singular_report

p = lg3_polynomial()
print("p =", p)
for g in jacobian_ideal(p, ("x1", "x2", "x3", "x4", "y1")).generators[1:]:
    print("  partial:", g)

report = lg3_singular_report(trials=100, seed=0)
print(report.to_text())
