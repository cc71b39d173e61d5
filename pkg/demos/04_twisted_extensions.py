#!/usr/bin/env python3
"""How the cup form twists the additive structure of the K-group.

The rank-0 classes always form the set H^2 x H^4, but under the addition

    (x, y) + (x', y') = (x + x', y + y' + x x')

so the same pair of groups can assemble into different extensions depending
on the squares of the H^2 generators.  With both groups Z/2 the two possible
squares give Z/2 + Z/2 (untwisted) versus Z/4 (RP^4).  With both groups Z/4
the twist only reaches "half way": n*e = T(n)*e^2 with T(4) = 6, and 6 = 2
mod 4, so the extension is Z/2 + Z/8 rather than Z/16.
"""

from itertools import product

from kfour import FgGroup, CohomologyRing, CupForm, reduced_k_structure


def ring_with_square(order, square):
    h2 = FgGroup(0, (order,))
    h4 = FgGroup(0, (order,))
    return CohomologyRing(h2, h4, CupForm.from_pairs(h2, h4, {(0, 0): (square,)}))


print("H2 = H4 = Z/2:")
for square in (0, 1):
    ring = ring_with_square(2, square)
    print(f"  x^2 = {square}*y  ->  reduced K-group {reduced_k_structure(ring)}")

print()
print("H2 = H4 = Z/4:")
for square in range(4):
    ring = ring_with_square(4, square)
    print(f"  x^2 = {square}*y  ->  reduced K-group {reduced_k_structure(ring)}")

# Two generators of order 2 with all squares nonzero: the twist can only
# produce 4-torsion one generator at a time.
print()
h2 = FgGroup(0, (2, 2))
h4 = FgGroup(0, (2,))
print("H2 = Z/2 + Z/2, H4 = Z/2, varying the diagonal squares:")
for s1, s2 in product((0, 1), repeat=2):
    cup = CupForm.from_pairs(h2, h4, {(0, 0): (s1,), (1, 1): (s2,), (0, 1): (0,)})
    ring = CohomologyRing(h2, h4, cup)
    print(f"  squares ({s1}, {s2})  ->  {reduced_k_structure(ring)}")
