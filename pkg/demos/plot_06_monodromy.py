"""
Monodromy around the critical values
====================================

Two Dehn twists and their inverse product.  The third matrix has trace 3,
so it fixes no nonzero vector.  The symbolic candidate fixed vector leaves
a residual that is reported rather than declared zero.
"""

from lgmirror.monodromy import candidate_fixed_check, concrete_triple, fixed_space, symbolic_T3

T1, T2, T3 = concrete_triple()
print("T3 =", T3, "  T3 T2 T1 = I:", (T3 @ T2 @ T1).is_scalar_identity())
for name, T in (("T1", T1), ("T2", T2), ("T3", T3)):
    print(f"fixed space of {name}:", fixed_space(T).to_json())

S = symbolic_T3()
print("symbolic T3 =", S)
x1, x2 = S.ring.var("x1"), S.ring.var("x2")
r1, r2 = candidate_fixed_check(S, [x1 * x2, 1 - x2])
print("residuals:", r1, "|", r2)
