"""
Wedderburn decomposition in the semisimple case
===============================================

For odd q, F_q[QD_16] is semisimple. Its central idempotents are found by
splitting the centre with minimal polynomials; the shape depends only on
q mod 8.
"""
from groupalg import (
    GroupAlgebra,
    central_idempotents,
    f_conjugacy,
    field_of_order,
    l_value,
    qd_group,
    semisimple_unit_structure,
)

G = qd_group(4)
for q in (3, 5, 7, 9, 17):
    A = GroupAlgebra(field_of_order(q), G)
    dec = central_idempotents(A)
    rep = semisimple_unit_structure(A)
    c = f_conjugacy(G, A.field.p, q).c
    print(f"q={q:2d} (q mod 8 = {q % 8}): {len(dec)} idempotents, c={c}, l={l_value(q, 8)}")
    print(f"      F_q[QD_16] = {rep.shape}")
    print(f"      U = {rep.structure}, |U| = {rep.order}")
