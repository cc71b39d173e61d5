"""Shared fixtures: the battery of finite test rings and common examples.

The battery covers |H^2|, |H^4| in {1, 2, 3, 4, 8, 9}.  For the order-2
cases every valid symmetric cup form is included; larger cases carry five
deterministically sampled valid forms (or all of them when fewer exist).
Sizes 8 and 9 are paired with small partners so that exhaustive ternary
axiom checks stay tractable.
"""

import itertools
import math
import random

import pytest

from kfour.abelian import FgGroup
from kfour.cohomology import CohomologyRing, CupForm

BATTERY_SEED = 20240809
SAMPLE_FORMS = 5

# (H2 torsion orders, H4 torsion orders); all battery groups are finite
BATTERY_SHAPES = [
    ((), ()),
    ((2,), (2,)),
    ((2,), (4,)),
    ((2,), (3,)),
    ((2,), (2, 2)),
    ((4,), (2,)),
    ((4,), (4,)),
    ((2, 2), (2,)),
    ((2, 2), (2, 2)),
    ((3,), (3,)),
    ((3,), (9,)),
    ((9,), (3,)),
    ((9,), ()),
    ((), (9,)),
    ((8,), (2,)),
    ((2,), (8,)),
    ((8,), ()),
    ((), (8,)),
    ((), (2,)),
    ((2,), ()),
    ((3,), (2,)),
    ((4,), (2, 2)),
    ((2, 2), (4,)),
]

# malformed ring sources with the expected diagnostic position
MALFORMED_RING_SOURCES = [
    ("H2 complicated\nH4 free 0 torsion\n", 1, 4),
    ("H2 free x torsion\nH4 free 0 torsion\n", 1, 9),
    ("H2 free 0 torsion 1\nH4 free 0 torsion\n", 1, 19),
    ("H2 free 0 torsion\nH2 free 0 torsion\n", 2, 1),
    ("H2 free 0 torsion 2\nH4 free 0 torsion\ncup 2 1 =\n", 3, 5),
    ("cup 1 1 = 1\nH2 free 0 torsion 2\nH4 free 0 torsion 2\n", 1, 1),
    ("H2 free 0 torsion 2\nH4 free 0 torsion 2\ncup 1 1 = 1 7\n", 3, 13),
    ("H2 free 0 torsion 2\nH4 free 0 torsion 2\ncup 1 1 =\n", 3, 10),
    ("H2 free 0 torsion 2\nH4 free 1 torsion\ncup 1 1 = 1\n", 3, 1),
    ("H2 free 0 torsion 2 2\nH4 free 0 torsion 2\ncup 1 2 = 1\ncup 2 1 = 0\n", 4, 1),
    ("format 9\nH2 free 0 torsion\nH4 free 0 torsion\n", 1, 8),
    ("", 1, 1),
]


def make_ring(h2, h4, pairs=None):
    return CohomologyRing(h2, h4, CupForm.from_pairs(h2, h4, pairs))


def cup_entry_choices(h2, h4, i, j):
    """All H^4 values the cup of generators i, j may take (finite groups)."""
    orders = [
        h2.torsion_orders[idx - h2.free_rank] for idx in (i, j) if idx >= h2.free_rank
    ]
    if not orders:
        return list(h4.elements())
    g = math.gcd(*orders)
    per_coord = []
    for m in h4.torsion_orders:
        step = m // math.gcd(g, m)
        per_coord.append([t * step for t in range(math.gcd(g, m))])
    return [tuple(v) for v in itertools.product(*per_coord)]


def all_valid_forms(h2, h4):
    """Every symmetric, torsion-compatible cup form on the given groups."""
    pairs = [(i, j) for i in range(h2.ngens) for j in range(i, h2.ngens)]
    choices = [cup_entry_choices(h2, h4, i, j) for i, j in pairs]
    for combo in itertools.product(*choices):
        yield dict(zip(pairs, combo))


def build_battery():
    rng = random.Random(BATTERY_SEED)
    rings = []
    for t2, t4 in BATTERY_SHAPES:
        h2, h4 = FgGroup(0, t2), FgGroup(0, t4)
        forms = list(all_valid_forms(h2, h4))
        exhaustive = h2.order == 2 or len(forms) <= SAMPLE_FORMS
        chosen = forms if exhaustive else rng.sample(forms, SAMPLE_FORMS)
        for form in chosen:
            ring = make_ring(h2, h4, form)
            assert ring.validate().ok
            rings.append(ring)
    return rings


@pytest.fixture(scope="session")
def battery():
    return build_battery()


@pytest.fixture(scope="session")
def rp4_ring():
    return make_ring(FgGroup(0, (2,)), FgGroup(0, (2,)), {(0, 0): (1,)})


@pytest.fixture(scope="session")
def cp2_ring():
    return make_ring(FgGroup(1), FgGroup(1), {(0, 0): (1,)})


@pytest.fixture(scope="session")
def s4_ring():
    return make_ring(FgGroup(), FgGroup(1))
