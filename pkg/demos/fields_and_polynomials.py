"""
Finite fields and polynomial factorization
==========================================

Field elements are small integer codes; arrays of codes go through the
field's vectorized add/mul. Polynomials store codes lowest degree first.
"""
import numpy as np

from groupalg import Polynomial, factor, make_field

F9 = make_field(3, 2)
print(F9)
print("modulus (low degree first):", F9.modulus)

g = F9.primitive_element()
print("primitive element:", g, " order", 8)
print("powers:", [str(g**i) for i in range(8)])

# arrays of codes
a = np.arange(9)
print("a * a      =", F9.mul(a, a))
print("frobenius  =", F9.frobenius(a))
print("a^9 == a ? ", np.array_equal(F9.pow(a, 9), a))

###############################################################################
# Factoring x^8 - 1 over F_3 and F_9
# ----------------------------------
# Over F_3 the cyclotomic pieces split by the orbits of multiplication by 3
# modulo 8; over F_9 everything is linear.

for F in (make_field(3), F9):
    f = Polynomial(F, [F(-1).value] + [0] * 7 + [1])  # x^8 - 1
    parts = factor(f)
    print(f"over F_{F.q}:", " * ".join(f"({h})" + (f"^{m}" if m > 1 else "") for h, m in parts))

# a repeated factor survives the squarefree step
F2 = make_field(2)
x = Polynomial.x(F2)
f = (x**2 + x + 1) ** 3 * (x + 1)
print("over F_2:", factor(f))
