"""Brute-force cross-validation of the K-class engine.

Three independent checks live here:

* :func:`verify_relations` evaluates both sides of the seven defining
  relations of the line/rank-2 generator presentation through the coordinate
  engine, for every choice of generators (exhaustively on finite cohomology,
  over a coordinate box otherwise).

* :func:`verify_ring_axioms` grinds through commutativity, associativity,
  distributivity, unit and inverse laws on a whole block of classes.

* :func:`oracle_reduced_group` rebuilds the reduced K-group a second way:
  as the free abelian group on one formal symbol per line bundle, rank-2
  bundle and unit, modulo the additive relations, solved by Smith normal
  form.  :func:`oracle_compare` checks this against the twisted-extension
  presentation and confirms that the multiplicative relations are consistent
  with the quotient.

Nothing in this module trusts the closed multiplication formula; that is the
point.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .abelian import (
    Element,
    FgGroup,
    GroupStructureReport,
    InfiniteGroupError,
    IntMatrix,
    group_from_relations,
)
from .cohomology import CohomologyRing
from .kclasses import (
    KClass,
    integer_class,
    k_add,
    k_mul,
    k_neg,
    k_scale,
    line_class,
    rank2_class,
)
from .structure import reduced_k_structure

__all__ = [
    "Counterexample",
    "OracleComparison",
    "RelationCheck",
    "VerificationReport",
    "oracle_compare",
    "oracle_reduced_group",
    "verify_relations",
    "verify_ring_axioms",
]

MAX_COUNTEREXAMPLES = 10
DEFAULT_BOUND = 2


@dataclass(frozen=True)
class Counterexample:
    inputs: tuple[tuple[str, object], ...]
    lhs: object
    rhs: object

    def __str__(self) -> str:
        args = ", ".join(f"{name}={value}" for name, value in self.inputs)
        return f"[{args}] lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class RelationCheck:
    name: str
    description: str
    instances: int
    failures: int
    counterexamples: tuple[Counterexample, ...] = ()

    @property
    def ok(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def total_instances(self) -> int:
        return sum(check.instances for check in self.checks)

    @property
    def total_failures(self) -> int:
        return sum(check.failures for check in self.checks)

    def check(self, name: str) -> RelationCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


# The seven defining relations.  Each entry: (name, description, variable
# kinds drawn from {"x": H^2, "y": H^4}, lhs, rhs) where lhs/rhs map
# (ring, *elements) to a KClass, evaluated through the coordinate engine.
def _r1_lhs(r):
    return (line_class(r, r.h2.zero), rank2_class(r, r.h4.zero))


def _r1_rhs(r):
    return (integer_class(r, 1), integer_class(r, 2))


RELATIONS: tuple[tuple[str, str, str, Callable, Callable], ...] = (
    ("1", "trivial bundles have ranks 1 and 2", "", _r1_lhs, _r1_rhs),
    (
        "2",
        "product of line classes adds first Chern classes",
        "xx",
        lambda r, x, x2: k_mul(r, line_class(r, x), line_class(r, x2)),
        lambda r, x, x2: line_class(r, r.h2.add(x, x2)),
    ),
    (
        "3",
        "a line class plus its conjugate is a rank-2 class",
        "x",
        lambda r, x: k_add(r, line_class(r, x), line_class(r, r.h2.negate(x))),
        lambda r, x: rank2_class(r, r.h4.negate(r.cup_square(x))),
    ),
    (
        "4",
        "sum of rank-2 classes",
        "yy",
        lambda r, y, y2: k_add(r, rank2_class(r, y), rank2_class(r, y2)),
        lambda r, y, y2: k_add(
            r, integer_class(r, 2), rank2_class(r, r.h4.add(y, y2))
        ),
    ),
    (
        "5",
        "product of rank-2 classes",
        "yy",
        lambda r, y, y2: k_mul(r, rank2_class(r, y), rank2_class(r, y2)),
        lambda r, y, y2: k_add(
            r,
            integer_class(r, 2),
            rank2_class(r, r.h4.add(r.h4.scale(2, y), r.h4.scale(2, y2))),
        ),
    ),
    (
        "6",
        "line class times rank-2 class",
        "xy",
        lambda r, x, y: k_mul(r, line_class(r, x), rank2_class(r, y)),
        lambda r, x, y: k_add(
            r,
            k_add(
                r,
                line_class(r, r.h2.scale(2, x)),
                rank2_class(r, r.h4.add(r.cup_square(x), y)),
            ),
            integer_class(r, -1),
        ),
    ),
    (
        "7",
        "sum of line classes",
        "xx",
        lambda r, x, x2: k_add(r, line_class(r, x), line_class(r, x2)),
        lambda r, x, x2: k_add(
            r,
            k_add(
                r,
                line_class(r, r.h2.add(x, x2)),
                rank2_class(r, r.cup(x, x2)),
            ),
            integer_class(r, -1),
        ),
    ),
)


def _domain(group: FgGroup, bound: int) -> list[Element]:
    if group.is_finite:
        return list(group.elements())
    return list(group.bounded_elements(bound))


def _run_relation(
    ring: CohomologyRing,
    name: str,
    description: str,
    kinds: str,
    lhs: Callable,
    rhs: Callable,
    xs: list[Element],
    ys: list[Element],
) -> RelationCheck:
    domains = [xs if kind == "x" else ys for kind in kinds]
    var_names = []
    seen: dict[str, int] = {}
    for kind in kinds:
        seen[kind] = seen.get(kind, 0) + 1
        var_names.append(kind if seen[kind] == 1 else f"{kind}{seen[kind]}")
    instances = 0
    failures = 0
    examples: list[Counterexample] = []
    for combo in itertools.product(*domains):
        instances += 1
        left = lhs(ring, *combo)
        right = rhs(ring, *combo)
        if left != right:
            failures += 1
            if len(examples) < MAX_COUNTEREXAMPLES:
                examples.append(
                    Counterexample(tuple(zip(var_names, combo)), left, right)
                )
    return RelationCheck(name, description, instances, failures, tuple(examples))


def verify_relations(
    ring: CohomologyRing, bound: int = DEFAULT_BOUND, only: Iterable[str] | None = None
) -> VerificationReport:
    """Evaluate both sides of each defining relation for every input choice.

    Exhaustive when H^2 and H^4 are finite; otherwise all elements with
    coordinates in [-bound, bound].  A correct engine reports zero failures
    on every valid ring.
    """
    ring.require_valid()
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    wanted = None if only is None else set(only)
    xs = _domain(ring.h2, bound)
    ys = _domain(ring.h4, bound)
    checks = [
        _run_relation(ring, name, description, kinds, lhs, rhs, xs, ys)
        for name, description, kinds, lhs, rhs in RELATIONS
        if wanted is None or name in wanted
    ]
    return VerificationReport(tuple(checks))


class _ClassTable:
    """Interned classes with memoized sums and products.

    Results escape the initial rank window, so the table grows as needed;
    every value is produced by the real engine exactly once per operand pair.
    """

    def __init__(self, ring: CohomologyRing, classes: list[KClass]):
        self.ring = ring
        self.classes = list(classes)
        self.index = {(c.rank, c.c1, c.c2): i for i, c in enumerate(self.classes)}
        self._add: dict[tuple[int, int], int] = {}
        self._mul: dict[tuple[int, int], int] = {}
        self._neg: dict[int, int] = {}

    def intern(self, c: KClass) -> int:
        key = (c.rank, c.c1, c.c2)
        i = self.index.get(key)
        if i is None:
            i = len(self.classes)
            self.classes.append(c)
            self.index[key] = i
        return i

    def add(self, i: int, j: int) -> int:
        key = (i, j)
        k = self._add.get(key)
        if k is None:
            k = self.intern(k_add(self.ring, self.classes[i], self.classes[j]))
            self._add[key] = k
        return k

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        k = self._mul.get(key)
        if k is None:
            k = self.intern(k_mul(self.ring, self.classes[i], self.classes[j]))
            self._mul[key] = k
        return k

    def neg(self, i: int) -> int:
        k = self._neg.get(i)
        if k is None:
            k = self.intern(k_neg(self.ring, self.classes[i]))
            self._neg[i] = k
        return k


def _axiom_checks(table: _ClassTable, n: int) -> list[RelationCheck]:
    ring = table.ring
    zero = table.intern(integer_class(ring, 0))
    one = table.intern(integer_class(ring, 1))
    add, mul, neg = table.add, table.mul, table.neg
    cls = table.classes

    def run(name, description, instances_failures_examples):
        instances, failures, examples = instances_failures_examples
        return RelationCheck(name, description, instances, failures, tuple(examples))

    def binary(law, pairs):
        instances = failures = 0
        examples = []
        for i, j in pairs:
            instances += 1
            left, right = law(i, j)
            if left != right:
                failures += 1
                if len(examples) < MAX_COUNTEREXAMPLES:
                    examples.append(
                        Counterexample(
                            (("a", cls[i]), ("b", cls[j])), cls[left], cls[right]
                        )
                    )
        return instances, failures, examples

    def ternary(law):
        instances = failures = 0
        examples = []
        rng = range(n)
        for i in rng:
            for j in rng:
                for k in rng:
                    left, right = law(i, j, k)
                    if left != right:
                        failures += 1
                        if len(examples) < MAX_COUNTEREXAMPLES:
                            examples.append(
                                Counterexample(
                                    (("a", cls[i]), ("b", cls[j]), ("c", cls[k])),
                                    cls[left],
                                    cls[right],
                                )
                            )
        instances = n * n * n
        return instances, failures, examples

    def unary(law):
        instances = failures = 0
        examples = []
        for i in range(n):
            instances += 1
            left, right = law(i)
            if left != right:
                failures += 1
                if len(examples) < MAX_COUNTEREXAMPLES:
                    examples.append(
                        Counterexample((("a", cls[i]),), cls[left], cls[right])
                    )
        return instances, failures, examples

    upper_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [
        run("add_commutative", "a + b = b + a",
            binary(lambda i, j: (add(i, j), add(j, i)), upper_pairs)),
        run("add_identity", "a + 0 = a",
            unary(lambda i: (add(i, zero), i))),
        run("add_inverse", "a + (-a) = 0",
            unary(lambda i: (add(i, neg(i)), zero))),
        run("mul_commutative", "a b = b a",
            binary(lambda i, j: (mul(i, j), mul(j, i)), upper_pairs)),
        run("mul_identity", "a * 1 = a",
            unary(lambda i: (mul(i, one), i))),
        run("add_associative", "(a + b) + c = a + (b + c)",
            ternary(lambda i, j, k: (add(add(i, j), k), add(i, add(j, k))))),
        run("mul_associative", "(a b) c = a (b c)",
            ternary(lambda i, j, k: (mul(mul(i, j), k), mul(i, mul(j, k))))),
        run("distributive", "a (b + c) = a b + a c",
            ternary(lambda i, j, k: (mul(i, add(j, k)), add(mul(i, j), mul(i, k))))),
    ]


def verify_ring_axioms(
    ring: CohomologyRing,
    rank_range: tuple[int, int] = (-2, 2),
    samples: int | None = None,
    bound: int = 3,
    seed: int = 0,
) -> VerificationReport:
    """Check the abelian-ring laws on a block of classes.

    With ``samples=None`` the block is every class whose rank lies in
    ``rank_range`` (H^2 and H^4 must then be finite) and the ternary laws run
    over all triples.  With ``samples=k``, k random triples of classes with
    coordinates in [-bound, bound] are drawn instead, which also works over
    infinite cohomology.
    """
    ring.require_valid()
    lo, hi = rank_range
    if samples is None:
        classes = [
            KClass(ring, rank, x, y)
            for rank in range(lo, hi + 1)
            for x in ring.h2.elements()
            for y in ring.h4.elements()
        ]
        table = _ClassTable(ring, classes)
        return VerificationReport(tuple(_axiom_checks(table, len(classes))))

    rng = random.Random(seed)

    def random_element(group: FgGroup) -> Element:
        return group.canonical(
            rng.randint(-bound, bound) for _ in range(group.ngens)
        )

    def random_class() -> KClass:
        return KClass(
            ring, rng.randint(lo, hi), random_element(ring.h2), random_element(ring.h4)
        )

    zero = integer_class(ring, 0)
    one = integer_class(ring, 1)
    laws: dict[str, tuple[str, Callable]] = {
        "add_commutative": ("a + b = b + a",
            lambda a, b, c: (k_add(ring, a, b), k_add(ring, b, a))),
        "add_identity": ("a + 0 = a", lambda a, b, c: (k_add(ring, a, zero), a)),
        "add_inverse": ("a + (-a) = 0",
            lambda a, b, c: (k_add(ring, a, k_neg(ring, a)), zero)),
        "mul_commutative": ("a b = b a",
            lambda a, b, c: (k_mul(ring, a, b), k_mul(ring, b, a))),
        "mul_identity": ("a * 1 = a", lambda a, b, c: (k_mul(ring, a, one), a)),
        "add_associative": ("(a + b) + c = a + (b + c)",
            lambda a, b, c: (
                k_add(ring, k_add(ring, a, b), c), k_add(ring, a, k_add(ring, b, c)))),
        "mul_associative": ("(a b) c = a (b c)",
            lambda a, b, c: (
                k_mul(ring, k_mul(ring, a, b), c), k_mul(ring, a, k_mul(ring, b, c)))),
        "distributive": ("a (b + c) = a b + a c",
            lambda a, b, c: (
                k_mul(ring, a, k_add(ring, b, c)),
                k_add(ring, k_mul(ring, a, b), k_mul(ring, a, c)))),
    }
    counts = {name: [0, 0, []] for name in laws}
    for _ in range(samples):
        a, b, c = random_class(), random_class(), random_class()
        for name, (_, law) in laws.items():
            left, right = law(a, b, c)
            record = counts[name]
            record[0] += 1
            if left != right:
                record[1] += 1
                if len(record[2]) < MAX_COUNTEREXAMPLES:
                    record[2].append(
                        Counterexample((("a", a), ("b", b), ("c", c)), left, right)
                    )
    checks = tuple(
        RelationCheck(name, laws[name][0], *counts[name][:2], tuple(counts[name][2]))
        for name in laws
    )
    return VerificationReport(checks)


def oracle_reduced_group(ring: CohomologyRing) -> GroupStructureReport:
    """Rebuild the reduced K-group from formal generators and relations.

    Free abelian group on {unit} + {one symbol per line bundle} + {one symbol
    per rank-2 bundle}, modulo the additive relations; the reduced part is
    the quotient by the unit, which splits off as the image of the rank map.
    Requires finite cohomology.
    """
    ring.require_valid()
    if not ring.is_finite:
        raise InfiniteGroupError(
            "the formal-generator oracle needs finite H^2 and H^4"
        )
    h2, h4 = ring.h2, ring.h4
    xs = list(h2.elements())
    ys = list(h4.elements())
    unit = 0
    line_index = {x: 1 + i for i, x in enumerate(xs)}
    v_index = {y: 1 + len(xs) + i for i, y in enumerate(ys)}
    width = 1 + len(xs) + len(ys)

    rows: list[list[int]] = []

    def relation(*terms: tuple[int, int]) -> None:
        row = [0] * width
        for index, coeff in terms:
            row[index] += coeff
        rows.append(row)

    # trivial bundles: L(0) = 1 and V(0) = 2
    relation((line_index[h2.zero], 1), (unit, -1))
    relation((v_index[h4.zero], 1), (unit, -2))
    # L(x) + L(-x) = V(-x^2)
    for x in xs:
        relation(
            (line_index[x], 1),
            (line_index[h2.negate(x)], 1),
            (v_index[h4.negate(ring.cup_square(x))], -1),
        )
    # V(y) + V(y') = 2 + V(y + y')
    for y, y2 in itertools.product(ys, repeat=2):
        relation(
            (v_index[y], 1),
            (v_index[y2], 1),
            (unit, -2),
            (v_index[h4.add(y, y2)], -1),
        )
    # L(x) + L(x') = L(x + x') + V(x x') - 1
    for x, x2 in itertools.product(xs, repeat=2):
        relation(
            (line_index[x], 1),
            (line_index[x2], 1),
            (line_index[h2.add(x, x2)], -1),
            (v_index[ring.cup(x, x2)], -1),
            (unit, 1),
        )
    # reduced part: kill the unit (the rank map splits off that copy of Z)
    relation((unit, 1))
    return group_from_relations(width, IntMatrix.from_rows(rows, cols=width))


@dataclass(frozen=True)
class OracleComparison:
    """Side-by-side result of the two reduced-group constructions."""

    engine_structure: GroupStructureReport
    oracle_structure: GroupStructureReport
    additive: VerificationReport
    multiplicative: VerificationReport
    generator_images_ok: bool

    @property
    def structures_match(self) -> bool:
        return self.engine_structure == self.oracle_structure

    @property
    def ok(self) -> bool:
        return (
            self.structures_match
            and self.additive.ok
            and self.multiplicative.ok
            and self.generator_images_ok
        )


def oracle_compare(ring: CohomologyRing) -> OracleComparison:
    """Cross-validate the coordinate engine against the formal quotient.

    Checks that both reduced-group constructions agree, that the coordinate
    engine kills every additive relation (so mapping formal symbols to
    engine classes is well defined on the quotient), and that the
    multiplicative relations also hold under the coordinate product.
    """
    ring.require_valid()
    engine = reduced_k_structure(ring)
    oracle = oracle_reduced_group(ring)
    additive = verify_relations(ring, only=("1", "3", "4", "7"))
    multiplicative = verify_relations(ring, only=("2", "5", "6"))
    images_ok = all(
        line_class(ring, x) == KClass(ring, 1, x, ring.h4.zero)
        for x in ring.h2.elements()
    ) and all(
        rank2_class(ring, y) == KClass(ring, 2, ring.h2.zero, y)
        for y in ring.h4.elements()
    )
    return OracleComparison(engine, oracle, additive, multiplicative, images_ok)
