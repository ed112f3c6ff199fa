"""
Quasidihedral groups and their classes
======================================

QD_{2^k} = <a, x | a^{2^{k-1}} = x^2 = 1, x a x = a^{2^{k-2}-1}>.
"""
from groupalg import conjugacy_classes, qd_group, symmetric_group
from groupalg import grp

for k in (4, 5):
    G = qd_group(k)
    print(f"QD_{G.size}: exponent {grp.exponent(G)}, order statistics {dict(grp.order_statistics(G))}")
    for cls in conjugacy_classes(G):
        print("   ", [G.name(g) for g in cls])
    print("    centre:", [G.name(g) for g in grp.center(G).members])
    print("    derived subgroup order:", grp.derived_subgroup(G).order)
    print("    lower central series:", [H.order for H in grp.lower_central_series(G)])

S3 = symmetric_group(3)
print("S_3 classes:", [len(c) for c in conjugacy_classes(S3)])
