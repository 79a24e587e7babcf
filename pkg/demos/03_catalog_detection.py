"""Build the index-2 and index-5 character-group catalogs and certify the
unbounded-denominator property of the roots of their generator functions.

Index 5 has six cyclic extensions: one for each order-5 subgroup of the
torsion of the curve.  The subgroup generated by the rational point [5,5]
gives f_P; the five others come from the point Q with x-coordinate
-1/2 + (11/10)sqrt(5), flattened into a single quartic field.  Exactly one
entry (fQ, the congruence one) survives the scan with bounded denominators.
"""

from ubd.exactnum import min_poly, qp_trim
from ubd.ubdetect import analyze_catalog
from ubd.x011 import QPointData, build_catalog, x11_curve

qd = QPointData(x11_curve())
print("flattened field of Q:", qd.field)
s = (10 * qd.x_q + 5) / 11
th = (10 * qd.y_q + 5) / 11
print("nested-radical check: S^2 =", s * s, ", TH^2 + 25 + 2S =",
      th * th + 25 + 2 * s)
print()

for index in (2, 5):
    entries = build_catalog(index)
    print(f"index-{index} catalog: {[e.label for e in entries]}")
    for e in entries:
        if e.coefficient_field is not None and e.label.startswith("fQ+"):
            mp = qp_trim(min_poly(e.point.x))
            print(f"  {e.label}: x-coordinate minimal polynomial "
                  f"{[int(c) for c in mp]}")
    rep = analyze_catalog(entries, T=120, prime_p=2 if index == 2 else None)
    for line in rep.lines():
        print("  " + line)
    print(f"  certified {rep.certified}, bounded {rep.bounded}, "
          f"inconclusive {rep.inconclusive}; "
          f"hypothesis confirmed: {rep.hypothesis_confirmed}")
    print()
