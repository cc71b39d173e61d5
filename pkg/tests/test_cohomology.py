import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kfour.abelian import FgGroup
from kfour.cohomology import (
    CohomologyRing,
    CupForm,
    InvalidRingError,
    validate_ring,
)


def rp4():
    h2 = FgGroup(0, (2,))
    h4 = FgGroup(0, (2,))
    return CohomologyRing(h2, h4, CupForm.from_pairs(h2, h4, {(0, 0): (1,)}))


def cp2():
    h2 = FgGroup(1)
    h4 = FgGroup(1)
    return CohomologyRing(h2, h4, CupForm.from_pairs(h2, h4, {(0, 0): (1,)}))


def s4():
    return CohomologyRing(FgGroup(), FgGroup(1), CupForm.from_pairs(FgGroup(), FgGroup(1)))


class TestValidation:
    def test_rp4_valid(self):
        assert validate_ring(rp4()).ok

    def test_torsion_violation(self):
        h2 = FgGroup(0, (2,))
        h4 = FgGroup(1)
        ring = CohomologyRing(h2, h4, CupForm.from_pairs(h2, h4, {(0, 0): (1,)}))
        report = validate_ring(ring)
        assert not report.ok
        assert [issue.kind for issue in report.issues] == ["torsion"]
        assert (report.issues[0].i, report.issues[0].j) == (0, 0)
        with pytest.raises(InvalidRingError):
            ring.require_valid()

    def test_symmetry_violation(self):
        h2 = FgGroup(0, (2, 2))
        h4 = FgGroup(0, (2,))
        table = CupForm((((0,), (1,)), ((0,), (0,))))
        report = validate_ring(CohomologyRing(h2, h4, table))
        assert [issue.kind for issue in report.issues] == ["symmetry"]

    def test_from_pairs_rejects_conflicts(self):
        h2 = FgGroup(0, (2, 2))
        h4 = FgGroup(0, (2,))
        with pytest.raises(ValueError):
            CupForm.from_pairs(h2, h4, {(0, 1): (1,), (1, 0): (0,)})

    def test_from_pairs_fills_symmetric_entry(self):
        h2 = FgGroup(0, (2, 2))
        h4 = FgGroup(0, (2,))
        form = CupForm.from_pairs(h2, h4, {(0, 1): (1,)})
        assert form.entry(1, 0) == (1,)
        assert form.entry(0, 0) == (0,)

    def test_table_size_checked(self):
        with pytest.raises(ValueError):
            CohomologyRing(FgGroup(0, (2,)), FgGroup(0, (2,)), CupForm(()))

    def test_entry_length_rejected_at_construction(self):
        with pytest.raises(ValueError):
            CohomologyRing(FgGroup(0, (2,)), FgGroup(0, (2, 2)), CupForm((((1,),),)))


class TestCup:
    def test_rp4_square(self):
        ring = rp4()
        assert ring.cup((1,), (1,)) == (1,)
        assert ring.cup_square((1,)) == (1,)

    def test_zero_absorbs(self):
        for ring in [rp4(), cp2()]:
            b = ring.h2.canonical([1] * ring.h2.ngens)
            assert ring.cup(ring.h2.zero, b) == ring.h4.zero

    def test_bilinear_scaling_by_repeated_addition(self):
        # independent oracle: 2h * 3h must equal the generator square summed 6 times
        ring = cp2()
        expected = ring.h4.zero
        for _ in range(6):
            expected = ring.h4.add(expected, ring.cup_form.entry(0, 0))
        assert ring.cup((2,), (3,)) == expected == (6,)

    def test_square_of_multiple(self):
        assert cp2().cup_square((2,)) == (4,)

    def test_bilinearity_exhaustive_on_finite(self):
        h2 = FgGroup(0, (2, 4))
        h4 = FgGroup(0, (4,))
        ring = CohomologyRing(
            h2, h4, CupForm.from_pairs(h2, h4, {(0, 0): (2,), (0, 1): (2,), (1, 1): (1,)})
        )
        assert validate_ring(ring).ok
        elems = list(h2.elements())
        for a, a2, b in itertools.product(elems, repeat=3):
            left = ring.cup(h2.add(a, a2), b)
            right = h4.add(ring.cup(a, b), ring.cup(a2, b))
            assert left == right
        for a, b in itertools.product(elems, repeat=2):
            assert ring.cup(a, b) == ring.cup(b, a)

    @given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
    def test_bilinearity_random_on_free(self, a, a2, b):
        ring = cp2()
        left = ring.cup((a + a2,), (b,))
        right = ring.h4.add(ring.cup((a,), (b,)), ring.cup((a2,), (b,)))
        assert left == right
        assert ring.cup((a,), (b,)) == ring.cup((b,), (a,))

    def test_scaling_small_multipliers(self):
        ring = rp4()
        h2, h4 = ring.h2, ring.h4
        for n in range(-8, 9):
            for a, b in itertools.product(h2.elements(), repeat=2):
                assert ring.cup(h2.scale(n, a), b) == h4.scale(n, ring.cup(a, b))

    def test_torsion_well_defined(self):
        # order-2 generator: cup(2e, b) must vanish however 2e is written
        ring = rp4()
        for b in ring.h2.elements():
            assert ring.cup(ring.h2.scale(2, (1,)), b) == ring.h4.zero
            assert ring.cup((0,), b) == ring.h4.zero

    def test_trivial_ring(self):
        ring = CohomologyRing(FgGroup(), FgGroup(), CupForm.from_pairs(FgGroup(), FgGroup()))
        assert validate_ring(ring).ok
        assert ring.cup((), ()) == ()
        assert ring.is_finite

    def test_s4_ring(self):
        ring = s4()
        assert validate_ring(ring).ok
        assert not ring.is_finite
        assert ring.cup((), ()) == (0,)
