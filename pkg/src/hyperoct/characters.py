"""Character theory of the hyperoctahedral group, over exact scalars.

Irreducible characters are indexed by signed partitions and built by the
standard recipe: pull back a symmetric-group character along the
sign-forgetting map for the all-positive labels, twist by the
negative-count sign character for the all-negative labels, and combine the
two sides with an induction product computed by class fusion.

Symmetric-group values come from the Murnaghan-Nakayama recursion on
beta-sets.  Induction from explicitly enumerated subgroups is done by a
full conjugation sweep over the ambient group, which is cheap at desk
scale and sidesteps fusion bookkeeping for irregular subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import cache
from .cyclotomic import Cyclotomic
from .groupdata import get_group
from .permutations import (
    SignedPartition,
    SignedPerm,
    centralizer_generators_labeled,
    class_size,
    compose,
    group_order,
    perm_sign,
    signed_partition_from_str,
    signed_partition_to_str,
    signed_partitions,
    standard_representative,
)

# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama)


def _beta_set(lam: tuple[int, ...]) -> tuple[int, ...]:
    length = len(lam)
    return tuple(lam[i] + (length - 1 - i) for i in range(length))


def _beta_to_partition(beta: tuple[int, ...]) -> tuple[int, ...]:
    beta = tuple(sorted(beta, reverse=True))
    lam = tuple(
        b - (len(beta) - 1 - i) for i, b in enumerate(beta) if b - (len(beta) - 1 - i) > 0
    )
    return lam


@lru_cache(maxsize=None)
def sn_character_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi^lam evaluated on the S_n class of cycle type mu (|lam| = |mu|)."""
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    beta_set = set(beta)
    total = 0
    for b in beta:
        if b >= k and (b - k) not in beta_set:
            height = sum(1 for c in beta if b - k < c < b)
            new_beta = tuple(c for c in beta if c != b) + (b - k,)
            total += (-1) ** height * sn_character_value(
                _beta_to_partition(new_beta), rest
            )
    return total


def underlying_type(lam: SignedPartition) -> tuple[int, ...]:
    """Cycle type of the sign-forgotten permutation: all parts pooled."""
    return tuple(sorted(lam[0] + lam[1], reverse=True))


# ---------------------------------------------------------------------------
# class functions


@dataclass(frozen=True)
class ClassFunction:
    """A function on the conjugacy classes of B_n with Fraction values."""

    n: int
    values: tuple[Fraction, ...]  # indexed like signed_partitions(n)

    @staticmethod
    def from_dict(n: int, mapping) -> "ClassFunction":
        return ClassFunction(
            n, tuple(Fraction(mapping[lam]) for lam in signed_partitions(n))
        )

    def __getitem__(self, lam: SignedPartition) -> Fraction:
        return self.values[_class_position(self.n, lam)]

    @property
    def degree(self) -> Fraction:
        return self[((1,) * self.n, ())]

    def _binop(self, other, op) -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return ClassFunction(
            self.n, tuple(op(a, b) for a, b in zip(self.values, other.values))
        )

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return self._binop(other, lambda a, b: a * b)
        return ClassFunction(self.n, tuple(a * Fraction(other) for a in self.values))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.values)


@lru_cache(maxsize=None)
def _class_positions(n: int) -> dict[SignedPartition, int]:
    return {lam: i for i, lam in enumerate(signed_partitions(n))}


def _class_position(n: int, lam: SignedPartition) -> int:
    return _class_positions(n)[lam]


def zero_class_function(n: int) -> ClassFunction:
    return ClassFunction(n, (Fraction(0),) * len(signed_partitions(n)))


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Fraction:
    """(1/|B_n|) sum over classes of |C| chi(C) psi(C); values here are real."""
    if chi.n != psi.n:
        raise ValueError("rank mismatch")
    n = chi.n
    total = sum(
        class_size(n, lam) * a * b
        for lam, a, b in zip(signed_partitions(n), chi.values, psi.values)
    )
    return Fraction(total, group_order(n))


# ---------------------------------------------------------------------------
# irreducible characters of B_n


def pullback_character(lam: tuple[int, ...], n: int) -> ClassFunction:
    """chi^{lam, empty}: the S_n character evaluated on the sign-forgotten type."""
    if sum(lam) != n:
        raise ValueError("lam must be a partition of n")
    vals = [
        Fraction(sn_character_value(lam, underlying_type(mu)))
        for mu in signed_partitions(n)
    ]
    return ClassFunction(n, tuple(vals))


def negative_count_sign(n: int) -> ClassFunction:
    """chi^{empty,(n)}: sign of the number of negative one-line entries."""
    vals = []
    for mu in signed_partitions(n):
        rep = standard_representative(mu)
        vals.append(Fraction((-1) ** sum(1 for x in rep if x < 0)))
    return ClassFunction(n, tuple(vals))


def unsigned_sign_character(n: int) -> ClassFunction:
    """chi^{(1^n), empty}: sign of the sign-forgotten permutation."""
    vals = [
        Fraction(perm_sign(standard_representative(mu)))
        for mu in signed_partitions(n)
    ]
    return ClassFunction(n, tuple(vals))


def linear_characters(n: int) -> tuple[ClassFunction, ClassFunction, ClassFunction, ClassFunction]:
    """The four one-dimensional characters, as rows:
    chi^{(n),0}, chi^{0,(n)}, chi^{(1^n),0}, chi^{0,(1^n)}.
    """
    trivial = ClassFunction(n, (Fraction(1),) * len(signed_partitions(n)))
    delta_t = negative_count_sign(n)
    delta_s = unsigned_sign_character(n)
    return trivial, delta_t, delta_s, delta_t * delta_s


def _fuse(a: SignedPartition, b: SignedPartition) -> SignedPartition:
    pos = tuple(sorted(a[0] + b[0], reverse=True))
    neg = tuple(sorted(a[1] + b[1], reverse=True))
    return pos, neg


def induction_product(chi_a: ClassFunction, chi_b: ClassFunction) -> ClassFunction:
    """Induce chi_a x chi_b from B_a x B_b to B_{a+b} via class fusion."""
    a, b = chi_a.n, chi_b.n
    n = a + b
    sums: dict[SignedPartition, Fraction] = {
        lam: Fraction(0) for lam in signed_partitions(n)
    }
    for da in signed_partitions(a):
        wa = class_size(a, da) * chi_a[da]
        if not wa:
            continue
        for db in signed_partitions(b):
            wb = class_size(b, db) * chi_b[db]
            if wb:
                sums[_fuse(da, db)] += wa * wb
    order_n, order_h = group_order(n), group_order(a) * group_order(b)
    vals = []
    for lam in signed_partitions(n):
        v = sums[lam] * Fraction(order_n, class_size(n, lam) * order_h)
        vals.append(v)
    return ClassFunction(n, tuple(vals))


def bn_irreducible(lam: SignedPartition) -> ClassFunction:
    """The irreducible character indexed by the signed partition lam."""
    pos, neg = lam
    n = sum(pos) + sum(neg)
    if not neg:
        return pullback_character(pos, n)
    if not pos:
        return pullback_character(neg, n) * negative_count_sign(n)
    return induction_product(
        bn_irreducible((pos, ())), bn_irreducible(((), neg))
    )


_CACHE_SCHEMA = 1


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[SignedPartition, ClassFunction]:
    """All irreducible characters of B_n, keyed by signed partition.

    Backed by the persistent JSON cache when HYPEROCT_CACHE is set; corrupt
    or mismatched entries are recomputed and rewritten.
    """
    key = f"chartable-v{_CACHE_SCHEMA}-n{n}"
    classes = signed_partitions(n)
    stored = cache.load(key)
    if stored is not None:
        try:
            if stored["classes"] != [signed_partition_to_str(c) for c in classes]:
                raise ValueError("class labels changed")
            table = {}
            for label, row in stored["rows"].items():
                lam = signed_partition_from_str(label)
                vals = tuple(Fraction(v) for v in row)
                if len(vals) != len(classes):
                    raise ValueError("row length mismatch")
                table[lam] = ClassFunction(n, vals)
            if set(table) != set(classes):
                raise ValueError("irrep labels changed")
            return table
        except (KeyError, ValueError, TypeError, ZeroDivisionError):
            pass
    table = {lam: bn_irreducible(lam) for lam in classes}
    cache.store(
        key,
        {
            "classes": [signed_partition_to_str(c) for c in classes],
            "rows": {
                signed_partition_to_str(lam): [str(v) for v in chi.values]
                for lam, chi in table.items()
            },
        },
    )
    return table


def decompose(chi: ClassFunction) -> dict[SignedPartition, int]:
    """Multiplicities of chi in the irreducible basis; rejects non-characters."""
    table = character_table(chi.n)
    mults: dict[SignedPartition, int] = {}
    residual = chi
    for lam, irr in table.items():
        m = inner_product(chi, irr)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"non-integral or negative multiplicity {m} at {lam}")
        if m:
            mults[lam] = int(m)
            residual = residual - int(m) * irr
    if not residual.is_zero():
        raise ValueError("residual after decomposition is nonzero")
    return mults


def regular_character(n: int) -> ClassFunction:
    vals = [Fraction(0)] * len(signed_partitions(n))
    vals[_class_position(n, ((1,) * n, ()))] = Fraction(group_order(n))
    return ClassFunction(n, tuple(vals))


# ---------------------------------------------------------------------------
# induced characters from explicit subgroups


def rho_character(
    lam: SignedPartition,
) -> tuple[list[SignedPerm], dict[SignedPerm, Cyclotomic]]:
    """The centralizer of the standard representative with its root-of-unity
    character: block cycles map to primitive roots (order of the cycle),
    block sign-flips and block swaps to 1.

    The value table is built by multiplicative closure; conflicting word
    values would raise, certifying well-definedness on every run.
    """
    n = sum(lam[0]) + sum(lam[1])
    ambient = lcm(1, *[s for s in lam[0]], *[2 * s for s in lam[1]])
    gens: list[tuple[SignedPerm, Cyclotomic]] = []
    for kind, size, g in centralizer_generators_labeled(lam):
        if kind == "cycle+":
            val = Cyclotomic.root_of_unity(ambient, size)
        elif kind == "cycle-":
            val = Cyclotomic.root_of_unity(ambient, 2 * size)
        else:
            val = Cyclotomic.rational(ambient, 1)
        gens.append((g, val))
    ident = tuple(range(1, n + 1))
    values: dict[SignedPerm, Cyclotomic] = {ident: Cyclotomic.rational(ambient, 1)}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            vg = values[g]
            for h, vh in gens:
                gh = compose(g, h)
                vgh = vg * vh
                known = values.get(gh)
                if known is None:
                    values[gh] = vgh
                    nxt.append(gh)
                elif known != vgh:
                    raise ArithmeticError(
                        f"inconsistent character value on {gh}; not a homomorphism"
                    )
        frontier = nxt
    return sorted(values), values


def induce_character(subgroup_values, n: int) -> ClassFunction:
    """Induce a 1-dimensional character given by {element: value} up to B_n.

    chi_up(g) = (1/|H|) sum over x in B_n with x g x^{-1} in H of
    chi(x g x^{-1}).  Values may be cyclotomic; the result must reduce to
    rationals, which is asserted.
    """
    group = get_group(n)
    h_by_index: dict[int, object] = {}
    for g, v in dict(subgroup_values).items():
        h_by_index[group.index[g]] = v
    order_h = len(h_by_index)
    vals = []
    for lam in signed_partitions(n):
        gi = group.index[standard_representative(lam)]
        conj = group.conjugates(gi)
        total = None
        for x in range(group.order):
            v = h_by_index.get(int(conj[x]))
            if v is not None:
                total = v if total is None else total + v
        if total is None:
            vals.append(Fraction(0))
            continue
        if isinstance(total, Cyclotomic):
            value = total.rational_value()  # raises if irrational: induction bug
        else:
            value = Fraction(total)
        vals.append(value / order_h)
    return ClassFunction(n, tuple(vals))


def coxeter_element(n: int) -> SignedPerm:
    """The standard negative n-cycle; any Coxeter element is conjugate to it."""
    return standard_representative(((), (n,)))


def cyclic_subgroup(g: SignedPerm) -> list[SignedPerm]:
    n = len(g)
    out, cur = [], tuple(range(1, n + 1))
    while True:
        out.append(cur)
        cur = compose(cur, g)
        if cur == out[0]:
            return out


def coset_permutation_character(n: int, subgroup) -> ClassFunction:
    """Character of B_n permuting the left cosets of ``subgroup``.

    Counted directly as fixed cosets under left translation (independent of
    the induction-formula route, so the two can cross-check each other).
    """
    group = get_group(n)
    h_idx = sorted(group.index[g] for g in subgroup)
    coset_of = [-1] * group.order
    n_cosets = 0
    for x in range(group.order):
        if coset_of[x] >= 0:
            continue
        for h in h_idx:
            coset_of[int(group.table[x, h])] = n_cosets
        n_cosets += 1
    vals = []
    for lam in signed_partitions(n):
        gi = group.index[standard_representative(lam)]
        reps = {}
        for x in range(group.order):
            reps.setdefault(coset_of[x], x)
        fixed = sum(
            1
            for c, x in reps.items()
            if coset_of[int(group.table[gi, x])] == c
        )
        vals.append(Fraction(fixed))
    return ClassFunction(n, tuple(vals))
