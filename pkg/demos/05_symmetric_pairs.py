"""Symmetric pairs: Spin of the isotropy module, identity, Casimir.

Run:  python demos/05_symmetric_pairs.py     (the e6 part takes ~15 s)
"""

from spinchar import (build_root_system, casimir_check, equal_rank_pair,
                      inner_grading, kac_marks, outer_grading, spin_g1,
                      verify_tau_identity)

# Inner gradings come from coefficient parity at a pivot simple root.
f4 = build_root_system("F4")
print(f"marks of F4: {kac_marks(f4)} (pivots of mark 1 or 2 give involutions)")
grading = inner_grading(f4, 1)
print(f"f4 > so9: even part {grading.g0.descriptor()},"
      f" isotropy dimension {grading.delta1.dimension()}")
spin = spin_g1(grading)
for s in spin.summands:
    fw = tuple(int(c) for c in grading.g0.fw_coefficients(s.lam))
    print(f"  V_{fw}  dim {s.dimension}")
print(f"total {spin.total_dimension()} = 2^{spin.total_dimension().bit_length()-1};"
      f" Casimir eigenvalue {casimir_check(grading, spin)}")

# The same engine proves the twisted denominator identity, term by term.
d1p = [w for w, _ in grading.delta1.canonical_half()]
print(f"twisted identity over 1152 group elements:"
      f" {verify_tau_identity(f4, grading.sub, d1p)}")

print()

# Outer pairs are driven by their restricted root systems. The e6 > sp8
# pair lives in the f4 coordinates; its Spin has three big summands.
grading = outer_grading("e6_sp8")
spin = spin_g1(grading)
print("e6 > sp8:")
for s in spin.summands:
    fw = tuple(int(c) for c in grading.g0.fw_coefficients(s.lam))
    print(f"  V_{fw}  dim {s.dimension}")
print(f"total {spin.total_dimension()} = 2^20;"
      f" Casimir eigenvalue {casimir_check(grading, spin)}")

print()

# Equal-rank pairs that are *not* symmetric fail the symmetric-pair
# equivalences; the Casimir still acts scalarly on the extreme part.
g2 = build_root_system("G2")
longs = [r for r in g2.positive_roots if g2.inner(r, r) == 2]
report = equal_rank_pair(g2, longs)
print(f"g2 > a2 (long roots): #W^h = {report['n_wh']},"
      f" dim exterior invariants = {report['invariant_total']}")
print(f"  symmetric-pair conditions (ii)/(iii)/(iv):"
      f" {report['condition_ii']}/{report['condition_iii']}/{report['condition_iv']}")
print(f"  Casimir scalar on the extreme part: {report['casimir_scalar_on_dg']}")
