import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfour.abelian import (
    FgGroup,
    GroupStructureReport,
    InfiniteGroupError,
    IntMatrix,
    group_from_relations,
    smith_normal_form,
)

Z2 = FgGroup(0, (2,))
Z3 = FgGroup(0, (3,))
Z4 = FgGroup(0, (4,))
Z = FgGroup(1)
Z_Z3 = FgGroup(1, (3,))
Z2_Z2 = FgGroup(0, (2, 2))
Z2_Z3 = FgGroup(0, (2, 3))

SAMPLE_FINITE = [FgGroup(), Z2, Z3, Z4, Z2_Z2, Z2_Z3, FgGroup(0, (4, 2, 3))]


def brute_force_order(g, a):
    """Independent oracle: repeated addition until the sum returns to zero."""
    a = g.canonical(a)
    total = a
    for n in range(1, 1000):
        if total == g.zero:
            return n
        total = g.add(total, a)
    return None


class TestElements:
    def test_add_order_two_cancels(self):
        assert Z2.add((1,), (1,)) == (0,)

    def test_add_mixed_free_torsion(self):
        assert Z_Z3.add((2, 2), (-1, 2)) == (1, 1)

    def test_add_identity(self):
        for g in SAMPLE_FINITE + [Z_Z3]:
            for a in [g.zero, g.canonical(range(g.ngens))]:
                assert g.add(a, g.zero) == a

    def test_add_length_mismatch(self):
        with pytest.raises(ValueError):
            Z2.add((1, 0), (1,))
        with pytest.raises(ValueError):
            Z2.add((1,), (1, 0))

    def test_negate(self):
        assert Z2.negate((1,)) == (1,)
        assert Z.negate((5,)) == (-5,)
        assert Z4.negate((1,)) == (3,)

    def test_scale(self):
        assert Z2.scale(2, (1,)) == (0,)
        assert Z.scale(3, (2,)) == (6,)
        assert Z4.scale(-1, (1,)) == Z4.negate((1,))

    def test_order_examples(self):
        assert Z2.element_order((1,)) == 2
        assert Z.element_order((1,)) is None
        assert Z2_Z3.element_order((1, 1)) == 6

    def test_order_against_brute_force(self):
        for g in SAMPLE_FINITE:
            for a in g.elements():
                assert g.element_order(a) == brute_force_order(g, a)

    def test_order_of_zero(self):
        for g in SAMPLE_FINITE + [Z, Z_Z3]:
            assert g.element_order(g.zero) == 1

    def test_canonical_reduces_torsion_only(self):
        assert Z_Z3.canonical((-7, 7)) == (-7, 1)

    def test_group_axioms_exhaustive(self):
        for g in [Z2, Z4, Z2_Z2, Z2_Z3]:
            elems = list(g.elements())
            for a, b in itertools.product(elems, repeat=2):
                assert g.add(a, b) == g.add(b, a)
                assert g.add(a, g.negate(a)) == g.zero
            for a, b, c in itertools.product(elems, repeat=3):
                assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))

    @given(st.lists(st.integers(-50, 50), min_size=2, max_size=2),
           st.lists(st.integers(-50, 50), min_size=2, max_size=2),
           st.lists(st.integers(-50, 50), min_size=2, max_size=2))
    def test_group_axioms_random_infinite(self, a, b, c):
        g = FgGroup(1, (6,))
        a, b, c = g.canonical(a), g.canonical(b), g.canonical(c)
        assert g.add(a, b) == g.add(b, a)
        assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
        assert g.add(a, g.negate(a)) == g.zero

    def test_scale_is_repeated_addition(self):
        for g in [Z4, Z2_Z3, Z_Z3]:
            samples = list(g.elements()) if g.is_finite else list(g.bounded_elements(2))
            for a in samples:
                total = g.zero
                for n in range(9):
                    assert g.scale(n, a) == total
                    total = g.add(total, a)

    def test_scale_negative_matches_negated_repeat(self):
        g = Z2_Z3
        for a in g.elements():
            for n in range(9):
                assert g.scale(-n, a) == g.negate(g.scale(n, a))


class TestEnumeration:
    def test_counts(self):
        assert len(list(Z2_Z2.elements())) == 4
        assert list(FgGroup().elements()) == [()]
        assert list(Z3.elements()) == [(0,), (1,), (2,)]

    def test_distinct_and_canonical(self):
        g = FgGroup(0, (4, 2, 3))
        elems = list(g.elements())
        assert len(elems) == len(set(elems)) == g.order == 24
        assert all(g.canonical(a) == a for a in elems)

    def test_infinite_enumeration_rejected(self):
        with pytest.raises(InfiniteGroupError):
            Z.elements()

    def test_bounded_elements(self):
        assert list(Z.bounded_elements(2)) == [(-2,), (-1,), (0,), (1,), (2,)]
        assert sorted(Z2.bounded_elements(5)) == [(0,), (1,)]
        assert len(list(FgGroup(1, (7,)).bounded_elements(1))) == 3 * 3


class TestIntMatrix:
    def test_matmul(self):
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b).entries == ((2, 1), (4, 3))

    def test_matmul_empty(self):
        a = IntMatrix.zeros(2, 0)
        b = IntMatrix.zeros(0, 3)
        assert (a @ b) == IntMatrix.zeros(2, 3)

    def test_det(self):
        assert IntMatrix.identity(3).det() == 1
        assert IntMatrix.from_rows([[2, -1], [0, 2]]).det() == 4
        assert IntMatrix.from_rows([[1, 2], [2, 4]]).det() == 0
        assert IntMatrix.identity(0).det() == 1

    def test_det_against_permutation_expansion(self):
        rng = random.Random(7)
        for _ in range(25):
            n = rng.randint(1, 4)
            m = IntMatrix.from_rows(
                [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            )
            expected = sum(
                _perm_sign(p) * math.prod(m.entries[i][p[i]] for i in range(n))
                for p in itertools.permutations(range(n))
            )
            assert m.det() == expected

    def test_transpose(self):
        m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert m.transpose().entries == ((1, 4), (2, 5), (3, 6))
        assert IntMatrix.zeros(0, 3).transpose() == IntMatrix.zeros(3, 0)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            IntMatrix(2, 2, ((1, 2),))
        with pytest.raises(ValueError):
            IntMatrix(1, 2, ((1, 2, 3),))


def _perm_sign(p):
    sign = 1
    for i, j in itertools.combinations(range(len(p)), 2):
        if p[i] > p[j]:
            sign = -sign
    return sign


def assert_valid_snf(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    assert d.is_diagonal()
    diag = d.diagonal_entries()
    assert all(e >= 0 for e in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    return diag


class TestSmithNormalForm:
    def test_identity(self):
        _, d, _ = smith_normal_form(IntMatrix.identity(3))
        assert d == IntMatrix.identity(3)

    def test_derived_example(self):
        m = IntMatrix.from_rows([[2, -1], [0, 2]])
        diag = assert_valid_snf(m)
        assert diag == (1, 4)

    def test_zero_matrix(self):
        m = IntMatrix.zeros(2, 3)
        _, d, _ = smith_normal_form(m)
        assert d == m

    def test_empty_matrices(self):
        for m in [IntMatrix.zeros(0, 3), IntMatrix.zeros(3, 0), IntMatrix.zeros(0, 0)]:
            assert_valid_snf(m)

    def test_random_matrices(self):
        rng = random.Random(2024)
        for _ in range(60):
            rows = rng.randint(1, 6)
            cols = rng.randint(1, 6)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            )
            assert_valid_snf(m)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4), st.integers(1, 4), st.data())
    def test_snf_contract_hypothesis(self, rows, cols, data):
        entries = [
            [data.draw(st.integers(-20, 20)) for _ in range(cols)] for _ in range(rows)
        ]
        assert_valid_snf(IntMatrix.from_rows(entries))


class TestGroupFromRelations:
    def test_single_relation(self):
        rep = group_from_relations(1, IntMatrix.from_rows([[2]]))
        assert rep == GroupStructureReport(0, (2,))

    def test_derived_presentation(self):
        # 2a = b and 2b = 0 force a to generate a cyclic group of order 4
        rep = group_from_relations(2, IntMatrix.from_rows([[2, -1], [0, 2]]))
        assert rep == GroupStructureReport(0, (4,))
        assert rep.order == 4

    def test_free(self):
        rep = group_from_relations(1, IntMatrix.zeros(0, 1))
        assert rep == GroupStructureReport(1, ())

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            group_from_relations(3, IntMatrix.from_rows([[2, 0]]))

    def test_diagonal_presentations_match_crt_oracle(self):
        rng = random.Random(11)
        for _ in range(40):
            orders = [rng.randint(0, 12) for _ in range(rng.randint(0, 4))]
            rep = group_from_relations(
                len(orders), IntMatrix.diagonal(orders)
            )
            free, factors = _invariant_factors_by_crt(orders)
            assert rep.free_rank == free
            assert rep.invariant_factors == factors

    def test_order_matches_det(self):
        rng = random.Random(3)
        for _ in range(30):
            n = rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            )
            rep = group_from_relations(n, m)
            det = m.det()
            if det:
                assert rep.order == abs(det)
            else:
                assert rep.free_rank > 0


def _invariant_factors_by_crt(orders):
    """Independent oracle: split into prime powers, recombine largest-first."""
    free = sum(1 for n in orders if n == 0)
    primes = {}
    for n in orders:
        if n <= 1:
            continue
        for p in range(2, n + 1):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                primes.setdefault(p, []).append(e)
    chains = [sorted(v, reverse=True) for v in primes.values()]
    width = max((len(c) for c in chains), default=0)
    factors = []
    for i in range(width):
        f = 1
        for p, exps in zip(primes, chains):
            if i < len(exps):
                f *= p ** exps[i]
        factors.append(f)
    return free, tuple(sorted(factors))


class TestGroupStructureReport:
    def test_validation(self):
        with pytest.raises(ValueError):
            GroupStructureReport(0, (1,))
        with pytest.raises(ValueError):
            GroupStructureReport(0, (4, 2))
        with pytest.raises(ValueError):
            GroupStructureReport(-1)

    def test_describe(self):
        assert GroupStructureReport(0, ()).describe() == "0"
        assert GroupStructureReport(1, (4,)).describe() == "Z ⊕ Z/4"
        assert GroupStructureReport(3, ()).describe() == "Z^3"
        assert str(GroupStructureReport(0, (2, 2))) == "Z/2 ⊕ Z/2"
