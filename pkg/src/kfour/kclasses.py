"""Arithmetic of stable complex vector bundle classes on a 4-complex.

On a 4-dimensional complex a stable class is pinned down by three Chern
coordinates: the virtual rank, c1 in H^2 and c2 in H^4.  Two families of
bundles realize every coordinate: line bundles L(x) = (1, x, 0) and rank-2
bundles V(y) = (2, 0, y).  All arithmetic happens directly on the triples:

    addition        (Whitney)   c2 picks up the cross term  c1(a) c1(b)
    scaling by n                n*c2 + T(n) * c1^2,  T(n) = n(n-1)/2
    multiplication  rank(ab)  = rank(a) rank(b)
                    c1(ab)    = rank(b) c1(a) + rank(a) c1(b)
                    c2(ab)    = rank(a) c2(b) + rank(b) c2(a)
                              + (rank(a) rank(b) - 1) * c1(a) c1(b)
                              + T(rank(b)) * c1(a)^2 + T(rank(a)) * c1(b)^2

T(n) is an exact integer for every integer n (T(-1) = 1), so no rational
intermediates appear even when H^4 has torsion.  The multiplication formula
extends the products of the L and V generators to all virtual classes; the
oracle module re-derives those generator products independently and checks
the formula against them.

Classes remember their ring, and every binary operation refuses operands
from different rings.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import Element
from .cohomology import CohomologyRing

__all__ = [
    "KClass",
    "MixedRingError",
    "choose2",
    "decompose",
    "integer_class",
    "k_add",
    "k_mul",
    "k_neg",
    "k_pow",
    "k_scale",
    "line_class",
    "rank2_class",
    "reduced_part",
]


class MixedRingError(ValueError):
    """Operands of a K-class operation live over different cohomology rings."""


def choose2(n: int) -> int:
    """n(n-1)/2 as an exact integer for any integer n, e.g. choose2(-1) == 1."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class KClass:
    """A stable class in Chern coordinates (rank, c1, c2); rank may be negative."""

    ring: CohomologyRing
    rank: int
    c1: Element
    c2: Element

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", self.ring.h2.canonical(self.c1))
        object.__setattr__(self, "c2", self.ring.h4.canonical(self.c2))

    def __str__(self) -> str:
        return f"({self.rank}, {list(self.c1)}, {list(self.c2)})"

    def __repr__(self) -> str:
        return f"KClass(rank={self.rank}, c1={self.c1}, c2={self.c2})"

    def _coerce(self, other: KClass | int) -> KClass:
        if isinstance(other, KClass):
            return other
        if isinstance(other, int):
            return integer_class(self.ring, other)
        return NotImplemented

    def __add__(self, other: KClass | int) -> KClass:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return k_add(self.ring, self, other)

    __radd__ = __add__

    def __neg__(self) -> KClass:
        return k_neg(self.ring, self)

    def __sub__(self, other: KClass | int) -> KClass:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return k_add(self.ring, self, k_neg(self.ring, other))

    def __rsub__(self, other: KClass | int) -> KClass:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return k_add(self.ring, other, k_neg(self.ring, self))

    def __mul__(self, other: KClass | int) -> KClass:
        if isinstance(other, int):
            return k_scale(self.ring, other, self)
        if isinstance(other, KClass):
            return k_mul(self.ring, self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> KClass:
        return k_pow(self.ring, self, exponent)


def _check_ring(ring: CohomologyRing, *classes: KClass) -> None:
    for c in classes:
        if c.ring != ring:
            raise MixedRingError(
                "K-classes from different cohomology rings cannot be combined"
            )


def integer_class(ring: CohomologyRing, n: int) -> KClass:
    """n copies of the trivial line bundle: the class (n, 0, 0)."""
    ring.require_valid()
    return KClass(ring, n, ring.h2.zero, ring.h4.zero)


def line_class(ring: CohomologyRing, x) -> KClass:
    """The line bundle with first Chern class x: the class (1, x, 0)."""
    ring.require_valid()
    return KClass(ring, 1, ring.h2.canonical(x), ring.h4.zero)


def rank2_class(ring: CohomologyRing, y) -> KClass:
    """The rank-2 bundle with c1 = 0 and c2 = y: the class (2, 0, y)."""
    ring.require_valid()
    return KClass(ring, 2, ring.h2.zero, ring.h4.canonical(y))


def k_add(ring: CohomologyRing, a: KClass, b: KClass) -> KClass:
    """Whitney sum: ranks and c1 add, c2 adds plus the cup cross term."""
    ring.require_valid()
    _check_ring(ring, a, b)
    c2 = ring.h4.add(ring.h4.add(a.c2, b.c2), ring.cup(a.c1, b.c1))
    return KClass(ring, a.rank + b.rank, ring.h2.add(a.c1, b.c1), c2)


def k_neg(ring: CohomologyRing, a: KClass) -> KClass:
    """Additive inverse: (-rank, -c1, c1^2 - c2)."""
    ring.require_valid()
    _check_ring(ring, a)
    h4 = ring.h4
    c2 = h4.add(ring.cup_square(a.c1), h4.negate(a.c2))
    return KClass(ring, -a.rank, ring.h2.negate(a.c1), c2)


def k_scale(ring: CohomologyRing, n: int, a: KClass) -> KClass:
    """n-fold sum: (n rank, n c1, n c2 + T(n) c1^2)."""
    ring.require_valid()
    _check_ring(ring, a)
    h4 = ring.h4
    c2 = h4.add(h4.scale(n, a.c2), h4.scale(choose2(n), ring.cup_square(a.c1)))
    return KClass(ring, n * a.rank, ring.h2.scale(n, a.c1), c2)


def k_mul(ring: CohomologyRing, a: KClass, b: KClass) -> KClass:
    """Tensor product of stable classes, in closed Chern-coordinate form."""
    ring.require_valid()
    _check_ring(ring, a, b)
    h2, h4 = ring.h2, ring.h4
    ra, rb = a.rank, b.rank
    c1 = h2.add(h2.scale(rb, a.c1), h2.scale(ra, b.c1))
    c2 = h4.add(h4.scale(ra, b.c2), h4.scale(rb, a.c2))
    c2 = h4.add(c2, h4.scale(ra * rb - 1, ring.cup(a.c1, b.c1)))
    c2 = h4.add(c2, h4.scale(choose2(rb), ring.cup_square(a.c1)))
    c2 = h4.add(c2, h4.scale(choose2(ra), ring.cup_square(b.c1)))
    return KClass(ring, ra * rb, c1, c2)


def k_pow(ring: CohomologyRing, a: KClass, exponent: int) -> KClass:
    """Non-negative integer power by repeated squaring."""
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    ring.require_valid()
    _check_ring(ring, a)
    result = integer_class(ring, 1)
    base = a
    n = exponent
    while n:
        if n & 1:
            result = k_mul(ring, result, base)
        n >>= 1
        if n:
            base = k_mul(ring, base, base)
    return result


def decompose(ring: CohomologyRing, a: KClass) -> tuple[int, Element, Element]:
    """Write a as n*1 + L(x) + V(y): returns (rank - 3, c1, c2).

    Recombining through k_scale/k_add reproduces the class exactly.
    """
    ring.require_valid()
    _check_ring(ring, a)
    return a.rank - 3, a.c1, a.c2


def reduced_part(a: KClass) -> KClass:
    """Project onto the kernel of the rank map: a - rank(a) * 1."""
    return k_add(a.ring, a, integer_class(a.ring, -a.rank))
