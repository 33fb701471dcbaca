"""Characters: Weyl formula, Freudenthal weights, exterior invariants.

Run:  python demos/03_characters.py
"""

from spinchar import (WeightSystem, build_root_system, decompose,
                      freudenthal_weights, invariant_poincare,
                      irreducible_character, weyl_dimension)

# The Weyl character formula is evaluated by exact division in the group
# algebra of the weight lattice; the division must leave no remainder and
# the coefficient sum must reproduce the dimension formula.
rs = build_root_system("B2")
lam = rs.weight(1, 3)
ch = irreducible_character(rs, lam)
print(f"B2, lambda = (1,3): dim {ch.dimension()}"
      f" (Weyl formula: {weyl_dimension(rs, lam)})")

# Freudenthal's recursion gives the same module weight by weight.
ws = freudenthal_weights(rs, lam)
assert ws.character() == ch
print(f"Freudenthal agrees: {len(ws.nonzero)} nonzero weights,"
      f" m(0) = {ws.zero_mult}")

# Tensor products decompose greedily from the top.
a1 = build_root_system("A1")
R = lambda d: irreducible_character(a1, a1.weight(d))
print(f"R2 x R3 = {decompose(R(2) * R(3))}")

# Graded invariants of the exterior algebra. For the adjoint module the
# answer is the classical product over the exponents.
for desc in ["A2", "B2", "G2"]:
    g = build_root_system(desc)
    gp = invariant_poincare(WeightSystem.adjoint(g))
    print(f"exterior invariants of the adjoint of {desc}: {gp}")

# so5 acting on its 14-dimensional Cartan square:
gp = invariant_poincare(freudenthal_weights(rs, rs.weight(2, 0)))
print(f"so5 on the Cartan square of the vector module: {gp}")

# ... and the 26-dimensional f4 module, the priciest row (a few seconds).
f4 = build_root_system("F4")
ws = freudenthal_weights(f4, f4.weight(1, 0, 0, 0))
print(f"f4 on its 26-dimensional module: {invariant_poincare(ws)}")
