#!/usr/bin/env python3
"""The 4-sphere: no degree-2 classes, so all reduced products vanish.

With H^2 = 0 and H^4 = Z there is nothing for the cup form to do.  The
reduced K-group is a copy of Z detected by c2, and the product of any two
rank-0 classes is zero: the K-ring is Z[t]/t^2 in disguise.
"""

from kfour import (
    KClass,
    k_mul,
    parse_ring,
    rank2_class,
    reduced_k_structure,
    reduced_part,
)

ring = parse_ring("H2 free 0 torsion\nH4 free 1 torsion\n")

print("reduced K-group:", reduced_k_structure(ring))

t = reduced_part(rank2_class(ring, (1,)))
print("generator t = V - 2 =", t)
print("t * t =", k_mul(ring, t, t))
print()

# every product of reduced classes vanishes, not just t^2
print("products of rank-0 classes (c2 coordinates -3..3):")
for y in range(-3, 4):
    row = []
    for y2 in range(-3, 4):
        a = KClass(ring, 0, (), (y,))
        b = KClass(ring, 0, (), (y2,))
        row.append(k_mul(ring, a, b) == KClass(ring, 0, (), (0,)))
    print(f"  y={y:+d}:", "all zero" if all(row) else "NONZERO PRODUCT?!")
