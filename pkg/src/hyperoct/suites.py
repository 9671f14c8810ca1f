"""Named verification suites: one per headline claim, run by the CLI.

Each suite produces a SuiteReport with one entry per check; a failing
check carries a serialized counterexample in its witness.  All checks are
exact (Fraction arithmetic end to end), deterministic, and honor the
persistent cache for character tables and rewrite tables.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, lcm

from . import chambers as chmod
from . import equivariant as eqmod
from .algebra import (
    AlgebraElement,
    eulerian_idempotents_typeA,
    g_k,
    right_ideal_character,
    tau_map,
    vazirani_idempotent,
)
from .characters import (
    ClassFunction,
    character_table,
    coset_permutation_character,
    coxeter_element,
    cyclic_subgroup,
    decompose,
    induce_character,
    inner_product,
    regular_character,
    rho_character,
)
from .cyclotomic import Cyclotomic
from .permutations import (
    all_signed_perms,
    centralizer_order,
    compose,
    group_order,
    identity,
    longest_element,
    signed_partition_to_str,
    signed_partitions,
)
from .ringreps import (
    bigraded_dimensions,
    graded_character,
    type_character,
    type_dimension,
    type_shape,
)
from .rings import get_ring, hilbert_coefficients

SUITE_BOUNDS = {
    "idempotents": (1, 4),
    "tau": (1, 4),
    "characters": (1, 4),
    "tables-b2": (2, 2),
    "hilbert": (1, 5),
    "main-iso": (1, 4),
    "recursion": (2, 4),
    "ungraded": (1, 4),
    "gn1": (2, 5),
    "bigrading": (1, 5),
    "equivariant": (1, 4),
    "chambers": (1, 4),
}

SUITE_ORDER = list(SUITE_BOUNDS) + ["all"]


class SuiteUsageError(ValueError):
    """Unknown suite name or rank outside the suite's documented bound."""


@dataclass
class Check:
    id: str
    anchor: str
    status: str  # "pass" | "fail"
    witness: str


@dataclass
class SuiteReport:
    suite: str
    n: int
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "n": self.n,
                "checks": [
                    {
                        "id": c.id,
                        "anchor": c.anchor,
                        "status": c.status,
                        "witness": c.witness,
                    }
                    for c in self.checks
                ],
                "elapsed_ms": self.elapsed_ms,
            },
            indent=2,
            sort_keys=True,
        )

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (n={self.n})"]
        for c in self.checks:
            lines.append(f"  [{c.status.upper():4s}] {c.id}: {c.witness}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"{verdict}: {sum(c.status == 'pass' for c in self.checks)}"
            f"/{len(self.checks)} checks, {self.elapsed_ms} ms"
        )
        return "\n".join(lines)


class _Recorder:
    def __init__(self):
        self.checks: list[Check] = []

    def record(self, check_id: str, anchor: str, ok: bool, witness: str):
        self.checks.append(
            Check(check_id, anchor, "pass" if ok else "fail", witness)
        )


def _cf_str(chi: ClassFunction) -> str:
    return (
        "["
        + ", ".join(
            f"{signed_partition_to_str(lam)}:{v}"
            for lam, v in zip(signed_partitions(chi.n), chi.values)
        )
        + "]"
    )


def _decomp_str(mults: dict) -> str:
    return " + ".join(
        (f"{m}*" if m > 1 else "") + "chi^" + signed_partition_to_str(lam)
        for lam, m in sorted(mults.items())
    )


# ---------------------------------------------------------------------------
# individual suites


def _suite_idempotents(n: int, rec: _Recorder):
    lams = signed_partitions(n)
    gs = {lam: vazirani_idempotent(lam) for lam in lams}

    bad = [lam for lam, e in gs.items() if not e.is_idempotent()]
    rec.record(
        "signed-partition-idempotents-square",
        "orthogonal-idempotent-family-signed-partitions",
        not bad,
        f"{len(lams)} elements satisfy e*e = e"
        if not bad
        else f"failures at {[signed_partition_to_str(l) for l in bad]}",
    )

    bad = [
        (a, b)
        for a, b in itertools.combinations(lams, 2)
        if not (gs[a] * gs[b]).is_zero() or not (gs[b] * gs[a]).is_zero()
    ]
    rec.record(
        "signed-partition-idempotents-orthogonal",
        "orthogonal-idempotent-family-signed-partitions",
        not bad,
        f"all {len(lams) * (len(lams) - 1)} ordered products vanish"
        if not bad
        else f"nonzero product at {bad[0]}",
    )

    total = AlgebraElement.zero(n)
    for e in gs.values():
        total = total + e
    ok = total == AlgebraElement.unit(n)
    rec.record(
        "signed-partition-idempotents-complete",
        "orthogonal-idempotent-family-signed-partitions",
        ok,
        "sum over all signed partitions is the identity"
        if ok
        else f"sum has {total.support_size()} terms",
    )

    gks = [g_k(n, k) for k in range(n + 1)]
    ok = all(e.is_idempotent() for e in gks)
    ok = ok and all(
        (gks[a] * gks[b]).is_zero()
        for a in range(n + 1)
        for b in range(n + 1)
        if a != b
    )
    total = AlgebraElement.zero(n)
    for e in gks:
        total = total + e
    ok = ok and total == AlgebraElement.unit(n)
    rec.record(
        "positive-part-count-idempotents",
        "orthogonal-idempotent-family-by-positive-part-count",
        ok,
        f"{n + 1} idempotents indexed by positive part count: orthogonal, complete",
    )


def _suite_tau(n: int, rec: _Recorder):
    e_by_lam, e_ks = eulerian_idempotents_typeA(n)
    bad = []
    for lam in signed_partitions(n):
        image = tau_map(vazirani_idempotent(lam))
        if lam[1] == ():
            if image != e_by_lam[lam[0]]:
                bad.append(lam)
        elif not image.is_zero():
            bad.append(lam)
    rec.record(
        "sign-forgetting-on-partition-idempotents",
        "sign-forgetting-projection-of-idempotents",
        not bad,
        "positive-type idempotents map onto the classical partition idempotents, "
        "all others to zero"
        if not bad
        else f"failure at {signed_partition_to_str(bad[0])}",
    )

    ok = tau_map(g_k(n, 0)).is_zero()
    details = []
    for k in range(1, n + 1):
        got = tau_map(g_k(n, k))
        if got != e_ks[k - 1]:
            ok = False
            details.append(k)
    rec.record(
        "sign-forgetting-on-count-idempotents",
        "sign-forgetting-projection-shifts-eulerian-index",
        ok,
        "g_0 maps to zero and g_k to the (k-1)-th eulerian idempotent"
        if ok
        else f"mismatch at k={details}",
    )


def _suite_characters(n: int, rec: _Recorder):
    table = character_table(n)
    lams = list(table)
    bad = [
        (a, b)
        for a in lams
        for b in lams
        if inner_product(table[a], table[b]) != (1 if a == b else 0)
    ]
    rec.record(
        "row-orthonormality",
        "irreducible-character-orthonormality",
        not bad,
        f"{len(lams)}^2 inner products are delta"
        if not bad
        else f"failure at {bad[0]}",
    )

    classes = signed_partitions(n)
    bad = []
    for c in classes:
        for d in classes:
            s = sum(table[l][c] * table[l][d] for l in lams)
            expect = centralizer_order(c) if c == d else 0
            if s != expect:
                bad.append((c, d))
    rec.record(
        "column-orthogonality",
        "irreducible-character-column-orthogonality",
        not bad,
        "columns orthogonal with centralizer-order norms"
        if not bad
        else f"failure at {bad[0]}",
    )

    total = sum(table[l].degree ** 2 for l in lams)
    ok = total == group_order(n)
    rec.record(
        "burnside-degree-sum",
        "sum-of-squared-degrees-is-group-order",
        ok,
        f"sum of squared degrees = {total} = 2^{n} {n}!"
        if ok
        else f"sum of squared degrees = {total} != {group_order(n)}",
    )

    ok = all(v.denominator == 1 for l in lams for v in table[l].values)
    rec.record(
        "integrality",
        "character-values-are-integers",
        ok,
        "all table entries are integers",
    )


_B1_TABLE = {
    ((1,), ()): {((1,), ()): 1, ((), (1,)): 1},
    ((), (1,)): {((1,), ()): 1, ((), (1,)): -1},
}

_B2_CLASS_ORDER = [
    ((1, 1), ()),
    ((2,), ()),
    ((1,), (1,)),
    ((), (2,)),
    ((), (1, 1)),
]

_B2_TABLE = {
    ((2,), ()): (1, 1, 1, 1, 1),
    ((), (1, 1)): (1, -1, -1, 1, 1),
    ((1, 1), ()): (1, -1, 1, -1, 1),
    ((), (2,)): (1, 1, -1, -1, 1),
    ((1,), (1,)): (2, 0, 0, 0, -2),
}


def _expected_action_table(ring):
    """Expected images of the rank-2 basis under s1, t2, s1 t2, w0.

    Two published cells break the group-action axiom (and the published
    total-degree traces); the values below are the unique ones consistent
    with the remaining thirty cells, and are what the engine must produce.
    """
    z1, z2 = ring.generator((1,)), ring.generator((2,))
    zp, zm = ring.generator((1, 2, 1)), ring.generator((1, 2, -1))
    one = ring.one()
    rows = {
        "1": one,
        "z1": z1,
        "z2": z2,
        "z12": zp,
        "z1~2": zm,
        "z1*z2": z1 * z2,
        "z1*z12": z1 * zp,
        "z1*z1~2": z1 * zm,
    }
    expected = {
        "1": (one, one, one, one),
        "z1": (z2, z1, z2, -1 * z1),
        "z2": (z1, -1 * z2, -1 * z1, -1 * z2),
        "z12": (
            -1 * zp,
            zm,
            -1 * (zm + z1 + z2),
            zp + z1 - 1 * z2,
        ),
        "z1~2": (
            -1 * (zm + z1 + z2),
            zp,
            -1 * zp,
            zm + z1 + z2,
        ),
        "z1*z2": (z1 * z2, -1 * (z1 * z2), -1 * (z1 * z2), z1 * z2),
        "z1*z12": (
            -1 * (z1 * zp) + z1 * z2,
            z1 * zm,
            z1 * zm,
            -1 * (z1 * zp) + z1 * z2,
        ),
        "z1*z1~2": (
            z1 * zm,
            z1 * zp,
            -1 * (z1 * zp) + z1 * z2,
            -1 * (z1 * zm) - 1 * (z1 * z2),
        ),
    }
    return rows, expected


def _suite_tables_b2(n: int, rec: _Recorder):
    for rank, frozen, label in ((1, _B1_TABLE, "b1"), (2, None, "b2")):
        table = character_table(rank)
        if rank == 1:
            ok = all(
                table[lam][c] == v
                for lam, row in frozen.items()
                for c, v in row.items()
            )
        else:
            ok = all(
                tuple(int(table[lam][c]) for c in _B2_CLASS_ORDER) == exp
                for lam, exp in _B2_TABLE.items()
            )
        rec.record(
            f"character-table-{label}",
            f"character-table-rank-{rank}",
            ok,
            f"all {len(table) ** 2} entries match the published table",
        )

    ring = get_ring("Z3", 2)
    s1, t2 = (2, 1), (1, -2)
    s1t2 = compose(s1, t2)
    w0 = compose(s1t2, s1t2)
    cols = (s1, t2, s1t2, w0)
    rows, expected = _expected_action_table(ring)
    bad = []
    for name, x in rows.items():
        for sigma, want in zip(cols, expected[name]):
            if ring.act(sigma, x) != want:
                bad.append((name, sigma))
    rec.record(
        "action-table-b2",
        "rank-2-action-on-basis",
        not bad,
        "all 32 cells match (two published cells corrected to satisfy the "
        "group-action axiom and the degree-4 trace)"
        if not bad
        else f"mismatch at {bad[0]}",
    )

    z1, z2 = ring.generator((1,)), ring.generator((2,))
    zp, zm = ring.generator((1, 2, 1)), ring.generator((1, 2, -1))
    v_plus = zp + zm + z1
    v_minus = zp - 1 * zm - 1 * z2
    v_top = z1 * z2
    ok = (
        ring.act(w0, v_plus) == v_plus
        and ring.act(w0, v_top) == v_top
        and ring.act(t2, v_minus) == -1 * v_minus
        and ring.act(s1, v_plus) == -1 * v_plus
        and ring.act(t2, v_plus) == v_plus
        and ring.act(s1, v_minus) == -1 * v_minus
        and ring.act(w0, v_minus) == v_minus
        and ring.act(s1, v_top) == v_top
        and ring.act(t2, v_top) == -1 * v_top
    )
    rec.record(
        "one-dimensional-eigenvectors",
        "linear-character-eigenvectors-in-rank-2",
        ok,
        "the three nontrivial eigenvectors transform by their linear characters",
    )


def _suite_hilbert(n: int, rec: _Recorder):
    coeffs = hilbert_coefficients(n)
    for space in ("Z3", "Z1"):
        ring = get_ring(space, n)
        counts = [len(ring.nbc_basis(degree=d)) for d in range(n + 1)]
        ok = counts == coeffs
        rec.record(
            f"basis-counts-{space.lower()}",
            "hilbert-series-product-of-odd-factors",
            ok,
            f"degree counts {counts} match prod(1+(2i-1)t)"
            if ok
            else f"{counts} != {coeffs}",
        )
    ok = sum(coeffs) == group_order(n)
    rec.record(
        "total-dimension",
        "total-dimension-is-group-order",
        ok,
        f"series at t=1 gives {sum(coeffs)} = 2^{n} {n}!",
    )
    if n == 2:
        ok = coeffs == [1, 4, 3]
        rec.record(
            "rank-2-series",
            "hilbert-series-rank-2",
            ok,
            "series is 1 + 4t^2 + 3t^4 in cohomological degrees",
        )


def _suite_main_iso(n: int, rec: _Recorder):
    z3 = graded_character(n, "Z3")
    z1 = graded_character(n, "Z1")
    bad = []
    for k in range(n + 1):
        ideal = right_ideal_character(g_k(n, n - k))
        if not (ideal == z3[k] == z1[k]):
            bad.append(k)
    rec.record(
        "count-idempotent-ideals-match-graded-pieces",
        "main-isomorphism-ideals-vs-cohomology",
        not bad,
        f"for every k the ideal of g_(n-k) matches cohomological degree 2k "
        f"and the degree-k graded piece of the function ring"
        if not bad
        else f"mismatch at degrees {bad}",
    )

    bad = []
    for lam in signed_partitions(n):
        a = right_ideal_character(vazirani_idempotent(lam))
        b = type_character(lam)
        _, vals = rho_character(lam)
        c = induce_character(vals, n)
        if not (a == b == c):
            bad.append(lam)
    rec.record(
        "partition-idempotent-ideals-match-type-pieces",
        "refined-isomorphism-by-signed-partition",
        not bad,
        "ideal character = type-component character = induced centralizer character "
        "for every signed partition"
        if not bad
        else f"mismatch at {signed_partition_to_str(bad[0])}",
    )

    if n == 2:
        expected = [
            {((2,), ()): 1},
            {((1, 1), ()): 1, ((), (1, 1)): 1, ((1,), (1,)): 1},
            {((), (2,)): 1, ((1,), (1,)): 1},
        ]
        got = [decompose(z3[k]) for k in range(3)]
        ok = got == expected
        rec.record(
            "rank-2-graded-decomposition",
            "rank-2-graded-pieces-into-irreducibles",
            ok,
            "; ".join(
                f"deg {2 * k}: {_decomp_str(d)}" for k, d in enumerate(got)
            ),
        )


def _suite_recursion(n: int, rec: _Recorder):
    from .characters import bn_irreducible

    z = graded_character(n, "Z3")
    y = graded_character(n - 1, "Y3")
    v = bn_irreducible(((n - 1, 1), ())) + bn_irreducible(((n - 1,), (1,)))
    bad = []
    for j in range(n + 1):
        term1 = y[j] if j <= n - 1 else 0 * z[0]
        term2 = y[j - 1] * v if j >= 1 else 0 * z[0]
        if z[j] != term1 + term2:
            bad.append(j)
    rec.record(
        "fiber-recursion",
        "lifted-space-fiber-recursion",
        not bad,
        "each degree splits as the lifted piece plus the previous lifted piece "
        "tensor the puncture representation"
        if not bad
        else f"mismatch at degrees {bad}",
    )


def _suite_ungraded(n: int, rec: _Recorder):
    z = graded_character(n, "Z3")
    total = z[0]
    for k in range(1, n + 1):
        total = total + z[k]
    ok = total == regular_character(n)
    rec.record(
        "total-is-regular",
        "ungraded-total-is-regular-representation",
        ok,
        "sum over degrees carries the regular representation"
        if ok
        else _cf_str(total),
    )

    if n <= 3:
        y = graded_character(n, "Y3")
        total = y[0]
        for k in range(1, n + 1):
            total = total + y[k]
        cox = coxeter_element(n + 1)
        chi = coset_permutation_character(n + 1, cyclic_subgroup(cox))
        ok = total == chi
        rec.record(
            "lifted-total-is-coset-representation",
            "lifted-ungraded-total-is-coxeter-coset-module",
            ok,
            "lifted sum equals the permutation character on cosets of a "
            "coxeter cyclic subgroup"
            if ok
            else _cf_str(total),
        )


def _suite_gn1(n: int, rec: _Recorder):
    lam = ((), (n,))
    dim = type_dimension(lam)
    expected = 2 ** (n - 1) * factorial(n - 1)
    rec.record(
        "top-negative-type-dimension",
        "coxeter-type-component-dimension",
        dim == expected,
        f"dim = {dim} = 2^{n - 1} ({n - 1})!"
        if dim == expected
        else f"dim = {dim}, expected {expected}",
    )
    if n > 4:
        return
    tchar = type_character(lam)
    _, vals = rho_character(lam)
    ind1 = induce_character(vals, n)
    eta = tuple(list(range(2, n + 1)) + [1])
    w0 = longest_element(n)
    ambient = lcm(n, 2)
    vals2 = {}
    g = identity(n)
    for a in range(n):
        vals2[g] = Cyclotomic.root_of_unity(ambient, n, a)
        vals2[compose(g, w0)] = Cyclotomic.root_of_unity(ambient, n, a) * Fraction(-1)
        g = compose(g, eta)
    ind2 = induce_character(vals2, n)
    ok = tchar == ind1 == ind2
    rec.record(
        "top-negative-type-character",
        "coxeter-type-component-as-induced-character",
        ok,
        "type character equals induction from the coxeter centralizer and from "
        "the unsigned-cycle-with-central-sign subgroup"
        if ok
        else _cf_str(tchar),
    )


def _suite_bigrading(n: int, rec: _Recorder):
    dims = bigraded_dimensions(n)
    coeffs = hilbert_coefficients(n)
    by_k = {}
    for (k, l), d in dims.items():
        by_k[k] = by_k.get(k, 0) + d
    ok = all(by_k.get(k, 0) == coeffs[k] for k in range(n + 1))
    rec.record(
        "bidegree-partition",
        "loop-degree-refines-the-grading",
        ok,
        f"bidegree dimensions {sorted(dims.items())} sum to the degree counts",
    )

    ring = get_ring("Z3", n)
    bad = []
    shape_counts: dict = {}
    for m in ring.nbc_basis():
        shape = type_shape(m, n)
        shape_counts[shape] = shape_counts.get(shape, 0) + 1
        k = len(m)
        loops = sum(1 for g in m if len(g) == 1)
        if len(shape[0]) != n - k or len(shape[1]) != loops:
            bad.append(m)
    rec.record(
        "type-refines-bidegree",
        "type-components-partition-the-bigrading",
        not bad,
        "every basis monomial of bidegree (k, l) has n-k positive and l negative "
        "type blocks"
        if not bad
        else f"violation at {bad[0]}",
    )

    ok = True
    for (k, l), d in dims.items():
        total = sum(
            c
            for shape, c in shape_counts.items()
            if len(shape[0]) == n - k and len(shape[1]) == l
        )
        if total != d:
            ok = False
    rec.record(
        "bidegree-from-type-sums",
        "bidegree-dimensions-from-type-components",
        ok,
        "each bidegree dimension is the sum of its type-component dimensions",
    )


def _suite_equivariant(n: int, rec: _Recorder):
    relset = eqmod.equivariant_relations(n)
    graded = get_ring("Z3", n)
    unhomog = get_ring("Z1", n)
    bad0 = sum(
        1 for p in eqmod.specialize(relset, 0) if not graded.reduce_raw(p).is_zero()
    )
    rec.record(
        "specialize-to-graded",
        "equivariant-ideal-specializes-at-zero",
        bad0 == 0,
        f"all {len(relset)} orbit relations vanish in the graded ring at u=0"
        if bad0 == 0
        else f"{bad0} relations fail",
    )
    bad1 = sum(
        1 for p in eqmod.specialize(relset, 1) if not unhomog.reduce_raw(p).is_zero()
    )
    rec.record(
        "specialize-to-function-ring",
        "equivariant-ideal-specializes-at-one",
        bad1 == 0,
        f"all {len(relset)} orbit relations vanish in the function ring at u=1"
        if bad1 == 0
        else f"{bad1} relations fail",
    )


def _cyclic_relation_sweep(n: int) -> int:
    """Evaluate the five cyclic-indicator relations on every chamber for
    every letter choice; returns the number of (relation, labels) instances."""
    letters = [chmod.ZERO, chmod.NEG_ZERO]
    for i in range(1, n + 1):
        letters += [chmod.letter(i), chmod.letter(-i)]
    chams = chmod.all_chambers(n)
    count = 0

    def y(i, j, k, ch):
        return chmod.evaluate_y(i, j, k, ch)

    for i, j, k in itertools.permutations(letters, 3):
        antipode_ok = -i not in (j, k) and i not in (-j, -k)
        for ch in chams:
            a = y(i, j, k, ch)
            if a * (1 - a) != 0:
                raise AssertionError(f"indicator not 0/1 at {(i, j, k)}")
            if a != 1 - y(i, k, j, ch):
                raise AssertionError(f"reversal relation fails at {(i, j, k)}")
            if antipode_ok and y(-i, j, k, ch) != y(i, -j, -k, ch):
                raise AssertionError(f"antipode relation fails at {(i, j, k)}")
        count += 3 if antipode_ok else 2
    for i, j, k, l in itertools.permutations(letters, 4):
        for ch in chams:
            a, b = y(i, j, k, ch), y(i, j, l, ch)
            c, d = y(i, k, l, ch), y(j, k, l, ch)
            if a - b + c - d != 0:
                raise AssertionError(f"four-letter relation fails at {(i, j, k, l)}")
            if a * c * (1 - b) + (1 - a) * (1 - c) * b != 0:
                raise AssertionError(f"support relation fails at {(i, j, k, l)}")
        count += 2
    return count


def _function_ring_relation_sweep(n: int) -> int:
    """Evaluate the seven d=1 function-ring relations pointwise via the
    indicator model, over all signed index labels."""
    chams = chmod.all_chambers(n)
    idx = [s * i for i in range(1, n + 1) for s in (1, -1)]
    count = 0

    def z2(a, b, ch):
        return chmod.evaluate_z((a, b), ch)

    def z1v(a, ch):
        return chmod.evaluate_z((a,), ch)

    for a in idx:
        for ch in chams:
            va = z1v(a, ch)
            if va * (1 - va) != 0:
                raise AssertionError("loop indicator not 0/1")
            if z1v(-a, ch) != 1 - va:
                raise AssertionError("loop negation relation fails")
        count += 2
    for a, b in itertools.permutations(idx, 2):
        if abs(a) == abs(b):
            continue
        for ch in chams:
            vab = z2(a, b, ch)
            if vab * (1 - vab) != 0:
                raise AssertionError("pair indicator not 0/1")
            if z1v(a, ch) - z1v(b, ch) + vab - z2(-a, -b, ch) != 0:
                raise AssertionError(f"pair negation relation fails at {(a, b)}")
            va, vb = z1v(a, ch), z1v(b, ch)
            if vab * va * (1 - vb) + (1 - vab) * (1 - va) * vb != 0:
                raise AssertionError(f"pair-loop relation fails at {(a, b)}")
            vmb = z2(a, -b, ch)
            if vb * vmb * (1 - vab) + (1 - vb) * (1 - vmb) * vab != 0:
                raise AssertionError(f"mixed-pair relation fails at {(a, b)}")
        count += 4
    for a, b, c in itertools.permutations(idx, 3):
        if len({abs(a), abs(b), abs(c)}) != 3:
            continue
        for ch in chams:
            vab, vbc, vac = z2(a, b, ch), z2(b, c, ch), z2(a, c, ch)
            if vab * vbc * (1 - vac) + (1 - vab) * (1 - vbc) * vac != 0:
                raise AssertionError(f"transitivity relation fails at {(a, b, c)}")
        count += 1
    return count


def _suite_chambers(n: int, rec: _Recorder):
    chams = chmod.all_chambers(n)
    ok = len(chams) == group_order(n)
    rec.record(
        "chamber-count",
        "component-count-is-group-order",
        ok,
        f"{len(chams)} chambers = 2^{n} {n}!",
    )

    if n == 2:
        table_rows = {
            "(0,1,2,-0,-1,-2)": (0, 0, 1, 1, 0, 1),
            "(0,2,1,-0,-2,-1)": (0, 0, 0, 1, 0, 0),
            "(0,-1,2,-0,1,-2)": (1, 0, 0, 1, 1, 1),
            "(0,2,-1,-0,-2,1)": (1, 0, 0, 0, 0, 1),
            "(0,1,-2,-0,-1,2)": (0, 1, 1, 1, 1, 0),
            "(0,-2,1,-0,2,-1)": (0, 1, 1, 0, 0, 0),
            "(0,-1,-2,-0,1,2)": (1, 1, 1, 0, 1, 1),
            "(0,-2,-1,-0,2,1)": (1, 1, 0, 0, 1, 0),
        }
        cols = [
            (chmod.ZERO, chmod.NEG_ZERO, chmod.letter(1)),
            (chmod.ZERO, chmod.NEG_ZERO, chmod.letter(2)),
            (chmod.ZERO, chmod.letter(1), chmod.letter(2)),
            (chmod.ZERO, chmod.letter(1), chmod.letter(-2)),
            (chmod.ZERO, chmod.letter(-1), chmod.letter(2)),
            (chmod.ZERO, chmod.letter(-1), chmod.letter(-2)),
        ]
        ok = True
        for word, expected in table_rows.items():
            ch = chmod.chamber_from_str(word)
            if tuple(chmod.evaluate_y(*c, ch) for c in cols) != expected:
                ok = False
        rec.record(
            "indicator-table",
            "published-indicator-values-on-rank-2-chambers",
            ok,
            "the 8 x 6 table of indicator values reproduces exactly",
        )

    if n <= 3:
        count = _cyclic_relation_sweep(n)
        rec.record(
            "cyclic-relations-pointwise",
            "cyclic-indicator-relations-vanish-pointwise",
            True,
            f"{count} relation instances vanish on all {len(chams)} chambers",
        )
        count = _function_ring_relation_sweep(n)
        rec.record(
            "function-ring-relations-pointwise",
            "function-ring-relations-vanish-pointwise",
            True,
            f"{count} relation instances vanish on all {len(chams)} chambers",
        )

    _, rank = chmod.evaluation_matrix(n)
    ok = rank == group_order(n)
    rec.record(
        "evaluation-matrix-rank",
        "basis-monomials-evaluate-to-full-rank",
        ok,
        f"rank {rank} of the {len(chams)} x {rank} evaluation matrix is full",
    )

    base = chmod.base_chamber(n)
    stab = set(chmod.chamber_stabilizer(n, base))
    cyc = set(cyclic_subgroup(chmod.base_chamber_cycler(n)))
    ok = stab == cyc and len(stab) == 2 * (n + 1)
    rec.record(
        "base-chamber-stabilizer",
        "stabilizer-is-coxeter-cyclic-group",
        ok,
        f"stabilizer of the base chamber is the order-{2 * (n + 1)} cyclic group "
        "of the letter cycle",
    )

    group = list(all_signed_perms(n))
    orbit = {}
    for s in group:
        lifted = tuple([1] + [x + 1 if x > 0 else x - 1 for x in s])
        img = chmod.chamber_action(lifted, base)
        orbit[img] = orbit.get(img, 0) + 1
    ok = len(orbit) == group_order(n) and all(v == 1 for v in orbit.values())
    rec.record(
        "marked-point-action-simply-transitive",
        "subgroup-fixing-marked-point-acts-simply-transitively",
        ok,
        "the subgroup fixing the marked letter acts simply transitively on chambers",
    )


_SUITE_FUNCS = {
    "idempotents": _suite_idempotents,
    "tau": _suite_tau,
    "characters": _suite_characters,
    "tables-b2": _suite_tables_b2,
    "hilbert": _suite_hilbert,
    "main-iso": _suite_main_iso,
    "recursion": _suite_recursion,
    "ungraded": _suite_ungraded,
    "gn1": _suite_gn1,
    "bigrading": _suite_bigrading,
    "equivariant": _suite_equivariant,
    "chambers": _suite_chambers,
}


def run_suite(suite: str, n: int) -> SuiteReport:
    """Run one named suite at rank n.  Raises ValueError for an unknown
    suite and a RangeError-style ValueError when n is out of bounds."""
    if suite == "all":
        start = time.perf_counter()
        report = SuiteReport("all", n)
        for name in SUITE_BOUNDS:
            lo, hi = SUITE_BOUNDS[name]
            bounded = min(max(n, lo), hi)
            sub = run_suite(name, bounded)
            for c in sub.checks:
                report.checks.append(
                    Check(f"{name}/{c.id}", c.anchor, c.status, c.witness)
                )
        report.elapsed_ms = int((time.perf_counter() - start) * 1000)
        return report
    if suite not in _SUITE_FUNCS:
        raise SuiteUsageError(f"unknown suite {suite!r}")
    lo, hi = SUITE_BOUNDS[suite]
    if not lo <= n <= hi:
        raise SuiteUsageError(
            f"suite {suite!r} supports n in {lo}..{hi}; refusing n={n}"
        )
    start = time.perf_counter()
    rec = _Recorder()
    _SUITE_FUNCS[suite](n, rec)
    report = SuiteReport(suite, n, rec.checks)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report
