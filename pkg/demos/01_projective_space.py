#!/usr/bin/env python3
"""Real projective 4-space: torsion in cohomology, more torsion in K-theory.

RP^4 has H^2 = H^4 = Z/2 with the square of the degree-2 generator hitting
the degree-4 generator.  Reduced cohomology is all 2-torsion, yet the reduced
K-group comes out cyclic of order 4 - the twisting by the cup form glues the
two Z/2's into a Z/4.
"""

from kfour import (
    full_k_structure,
    line_class,
    parse_ring,
    reduced_k_structure,
    reduced_part,
)

SOURCE = """\
# RP^4: both even cohomology groups are Z/2, and x^2 = y
H2 free 0 torsion 2
H4 free 0 torsion 2
cup 1 1 = 1
"""

ring = parse_ring(SOURCE)
print("input ring:", ring)
print("reduced K-group:", reduced_k_structure(ring))
print("full K-group:   ", full_k_structure(ring))
print()

# The generator of that Z/4: subtract the trivial line from the twisted one.
L = line_class(ring, (1,))
u = reduced_part(L)  # u = L - 1, a class of rank 0
print("u = L - 1 =", u)
for n in range(1, 5):
    print(f"{n}*u =", n * u)
print()

# Multiplicatively u is almost nilpotent: u^2 = -2u, so u^3 = -2u^2 = 4u = 0.
print("u^2  =", u**2)
print("-2u  =", -2 * u)
print("u^2 == -2u:", u**2 == -2 * u)
print("u^3  =", u**3)
