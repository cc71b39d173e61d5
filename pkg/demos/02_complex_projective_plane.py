#!/usr/bin/env python3
"""The complex projective plane: free cohomology, truncated polynomial K-ring.

H^2 and H^4 are both infinite cyclic with h * h = h^2 generating H^4.  The
K-group is free of rank 3, and u = L(h) - 1 generates the reduced part
together with u^2; everything above u^2 dies for dimension reasons.
"""

from kfour import eval_expr, full_k_structure, parse_ring, reduced_k_structure

ring = parse_ring(
    """
    H2 free 1 torsion
    H4 free 1 torsion
    cup 1 1 = 1
    """
)

print("reduced K-group:", reduced_k_structure(ring))
print("full K-group:   ", full_k_structure(ring))
print()

# powers of the reduced hyperplane class
for n in range(4):
    value = eval_expr(ring, f"(L([1]) - 1)^{n}")
    print(f"u^{n} =", value)

# u^2 is (up to sign) the rank-2 generator attached to h^2 ...
print()
print("u^2       =", eval_expr(ring, "(L([1]) - 1)^2"))
print("2 - V([1]) =", eval_expr(ring, "2 - V([1])"))

# ... and the three classes 1, u, u^2 really are independent: their
# coordinate triples (rank, c1, c2) are echelon.
print()
for expr in ("1", "L([1]) - 1", "(L([1]) - 1)^2"):
    print(f"{expr:18} ->", eval_expr(ring, expr))
