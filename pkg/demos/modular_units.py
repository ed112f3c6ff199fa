"""
The unit group of F_2[QD_16]
============================

In characteristic 2 the radical J is the augmentation ideal, and the
units split as V x F_2^* with V = 1 + J of order 2^15.
"""
from groupalg import GroupAlgebra, jacobson_radical, make_field, modular_report, qd_group
from groupalg.algebra import ideal_powers

A = GroupAlgebra(make_field(2), qd_group(4))
J = jacobson_radical(A)
print("dim J =", J.rank)
print("dims of J, J^2, ...:", [P.rank for P in ideal_powers(J)])

rep = modular_report(A, seed=1)
print("|V| =", rep.order_V)
print(rep.exponent_certificate.describe())
print("witness:", rep.exponent_certificate.witness)
print("exponent of the enumerated V:", rep.enumerated_exponent)
print("nilpotency class of V:", rep.nilpotency_class)
print("V' central in the algebra:", rep.derived_in_center)
print("V'' central (centrally metabelian):", rep.second_derived_central)
print("U/V:", rep.quotient_structure)
