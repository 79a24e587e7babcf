"""Eta quotients, their formal roots, and the two classic controls.

zeta = (eta(z)/eta(13z))^2 is a Hauptmodul whose m-th roots pick up
denominators immediately; G5 = (eta(z/11)/eta(z))^12 has an honest
integer-coefficient 12th root but certifiably unbounded 7th roots.
"""

from fractions import Fraction

from ubd.qseries import EtaQuotient, eta_quotient_expand, nth_root_normalized
from ubd.ubdetect import detect, growth_profile
from ubd.x011 import g5_family

zeta = eta_quotient_expand(EtaQuotient([(1, 2), (13, -2)]), 1, 40)
print("zeta =", " + ".join(f"{c}q^{k}" for k, c in
                           zip(range(-1, 5), zeta.coefficients(-1, 5))), "+ ...")
unit, _, _ = zeta.unit_normalized()
root = nth_root_normalized(unit, 3)
print("cube root unit part:", root.coefficients(0, 5))
print("detect(zeta, root 3, prime 3):", detect(zeta, 3, 3, 40))
print()

g5, closed = g5_family(12, 40)
print("G5 =", " + ".join(f"{c}w^{k}" for k, c in
                         zip(range(-5, 1), g5.coefficients(-5, 1))), "+ ...")
unit, lead, _ = g5.unit_normalized()
root12 = nth_root_normalized(unit, 12)
print("unit part of G5^(1/12):", root12.coefficients(0, 6))
print("closed-form eta quotient unit:", closed.unit.coefficients(0, 6))
print("agree to truncation:", root12.agrees_with(closed.unit))
print("(the stripped prefactor w^(-5/12) lives at width 132, not 11)")
print()

for p in (7, 11, 13):
    print(f"detect(G5, root {p}, prime {p}):", detect(g5, p, p, 40).status)
print("detect(G5, root 12, prime 11):", detect(g5, 12, 11, 40).status)

prof = growth_profile(zeta, 3, 3, 40)
print("\ngrowth of -ord_3(b_m/b_0) for zeta^(1/3):",
      [prof.value_at(m) for m in (1, 5, 10, 20, 40)])
