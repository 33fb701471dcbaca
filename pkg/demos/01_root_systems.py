"""Build root systems and look at their distinguished elements.

Run:  python demos/01_root_systems.py
"""

from spinchar import build_root_system, dual_root_system, special_elements

# Systems are built from descriptors; Lie-algebra aliases work too.
for desc in ["B2", "so7", "sp6", "G2", "F4", "A1xA1"]:
    rs = build_root_system(desc)
    print(f"{desc:7s} -> {rs.descriptor():7s} rank {rs.rank},"
          f" {len(rs.positive_roots)} positive roots")

print()

# Distinguished weights of the two-length types. F4 is numbered with the
# short simple roots first, which is why theta is the *fourth* fundamental
# weight there.
for desc in ["B3", "C3", "G2", "F4"]:
    rs = build_root_system(desc)
    se = special_elements(rs)
    print(f"{desc}: theta = {rs.format_weight(se.theta)},"
          f" theta_s = {rs.format_weight(se.theta_s)},"
          f" rho_s = {rs.format_weight(se.rho_s)},"
          f" Coxeter number {se.coxeter_number}")

print()

# The dual system keeps the long roots and stretches the short ones.
# Its Weyl vector is the original rho shifted by rho_s (twice rho_s for G2).
for desc in ["B3", "G2"]:
    rs = build_root_system(desc)
    se = special_elements(rs)
    dual, mapping = dual_root_system(rs)
    print(f"dual of {desc} is {dual.descriptor()};"
          f" rho~ - rho = {(dual.rho - rs.rho)}"
          f" (rho_s = {se.rho_s})")
