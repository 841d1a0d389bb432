"""Derivatives of the Hurwitz zeta function at negative integers.

Compares the shift-based evaluator with its large-z expansion and with the
relation to the multiple gamma functions.
"""

import math

from multigamma import (
    hurwitz_deriv_from_gammas,
    kth_deriv_asymptotic,
    log_barnes_g,
    prop1_expansion,
    riemann_zeta_deriv_neg,
    zeta_sderiv_neg,
)

for lam in (0, 1, 2):
    exp = prop1_expansion(lam, 6)
    print(f"zeta'({-lam}, z) large-z expansion:")
    print("  ", exp.format())
    for z in (5.0, 20.0, 80.0):
        v = zeta_sderiv_neg(lam, z)
        print(f"   z = {z:>5}: value {v: .15g}  expansion error {abs(v - exp.evaluate(z)):.1e}")
    print()

print("zeta'(-1, z) - zeta'(-1) through the multiple gamma functions")
for z in (0.5, 1.5, 3.0):
    direct = zeta_sderiv_neg(1, z) - riemann_zeta_deriv_neg(1)
    print(f"  z = {z}: direct {direct: .15g}  via gammas {hurwitz_deriv_from_gammas(1, z): .15g}")
print(f"  log G(1/2) = {log_barnes_g(0.5):.15g}")
print()

print("k-th derivative at s = 0, leading growth")
for k in (1, 2, 3):
    exp = kth_deriv_asymptotic(k, 3)
    print(f"  k = {k}: {exp.format()}")
print("  log sqrt(2 pi) =", math.log(2 * math.pi) / 2)
