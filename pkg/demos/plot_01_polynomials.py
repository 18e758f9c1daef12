"""
Exact polynomials, parsing and printing
=======================================

Polynomials live in a ring with a fixed list of variables and a
coefficient field.  Printing follows grevlex, and anything printed
parses back to the same polynomial.
"""

from lgmirror import GF, QQ, PolynomialRing, homogenize, substitute

R = PolynomialRing("x1 x2 y1 z w", QQ)
p = R.parse("(y1+z)*(y1+w) - x1*x2*y1*z*w")
print("p        =", p)
print("dp/dy1   =", p.diff("y1"))

# the same text over Z/101 prints coefficients in the symmetric range
F = PolynomialRing("x y", GF(101))
q = F.parse("100*x + 50*x*y")
print("over GF(101):", q, "| round trip:", F.parse(str(q)) == q)

# homogenising a chart of the pencil adds y2
S = PolynomialRing("y1 z1 z2", QQ)
print("homogenised:", homogenize(S.parse("y1 + z1*z2"), "y2"))

# the blow-up chart kills the module relation beta0*y - beta1*x
M = PolynomialRing("x y beta0 beta1", QQ)
T = PolynomialRing("u z", QQ)
u, z = T.gens
rel = M.parse("beta0*y - beta1*x")
print("lifted relation:", substitute(rel, {"x": u, "y": z * u, "beta0": u**2, "beta1": z * u**2}, target=T))
