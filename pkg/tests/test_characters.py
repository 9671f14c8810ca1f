from fractions import Fraction
from math import factorial

import pytest

from hyperoct.characters import (
    ClassFunction,
    bn_irreducible,
    character_table,
    coset_permutation_character,
    coxeter_element,
    cyclic_subgroup,
    decompose,
    induce_character,
    induction_product,
    inner_product,
    linear_characters,
    pullback_character,
    regular_character,
    rho_character,
    sn_character_value,
    underlying_type,
)
from hyperoct.cyclotomic import Cyclotomic, cyclotomic_polynomial
from hyperoct.permutations import (
    centralizer_order,
    group_order,
    partitions,
    signed_partitions,
)

# ---------------------------------------------------------------------------
# oracle: symmetric group characters from permutation modules (Young's rule)


def _sn_class_size(mu):
    n = sum(mu)
    z = 1
    for length in set(mu):
        m = mu.count(length)
        z *= length**m * factorial(m)
    return factorial(n) // z


def _perm_module_character(lam, mu):
    """Fixed ordered set partitions of shape lam under a permutation of
    cycle type mu: assignments of cycles to blocks filling each exactly."""
    blocks = list(lam)
    cycles = list(mu)

    def count(i, remaining):
        if i == len(cycles):
            return 1 if all(r == 0 for r in remaining) else 0
        total = 0
        for b, room in enumerate(remaining):
            if room >= cycles[i]:
                remaining[b] -= cycles[i]
                total += count(i + 1, remaining)
                remaining[b] += cycles[i]
        return total

    return count(0, blocks)


def _sn_table_oracle(n):
    lams = list(partitions(n))  # reverse-lex refines dominance
    mus = lams
    phi = {
        lam: {mu: _perm_module_character(lam, mu) for mu in mus} for lam in lams
    }

    def ip(a, b):
        return Fraction(
            sum(_sn_class_size(mu) * a[mu] * b[mu] for mu in mus), factorial(n)
        )

    table = {}
    for lam in lams:
        row = dict(phi[lam])
        for prev in table:
            m = ip(row, table[prev])
            if m:
                row = {mu: row[mu] - m * table[prev][mu] for mu in mus}
        assert ip(row, row) == 1
        table[lam] = row
    return table


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_murnaghan_nakayama_against_young_oracle(n):
    oracle = _sn_table_oracle(n)
    for lam in partitions(n):
        for mu in partitions(n):
            assert sn_character_value(lam, mu) == oracle[lam][mu], (lam, mu)


def test_sn_character_values():
    assert sn_character_value((3,), (2, 1)) == 1
    assert sn_character_value((1, 1, 1), (2, 1)) == -1
    assert sn_character_value((2, 1), (1, 1, 1)) == 2


# ---------------------------------------------------------------------------
# linear characters and tables


def test_linear_characters_on_rank_two_classes():
    trivial, delta_t, delta_s, product = linear_characters(2)
    order = [((1, 1), ()), ((2,), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))]
    assert [trivial[c] for c in order] == [1, 1, 1, 1, 1]
    assert [delta_t[c] for c in order] == [1, 1, -1, -1, 1]
    assert [delta_s[c] for c in order] == [1, -1, 1, -1, 1]
    assert [product[c] for c in order] == [1, -1, -1, 1, 1]
    for chi in (trivial, delta_t, delta_s, product):
        assert chi.degree == 1


def test_rank_one_table():
    table = character_table(1)
    assert table[((1,), ())].values == (Fraction(1), Fraction(1))
    assert table[((), (1,))].values == (Fraction(1), Fraction(-1))


def test_rank_two_table_matches_published_values():
    expected = {
        ((2,), ()): (1, 1, 1, 1, 1),
        ((), (1, 1)): (1, -1, -1, 1, 1),
        ((1, 1), ()): (1, -1, 1, -1, 1),
        ((), (2,)): (1, 1, -1, -1, 1),
        ((1,), (1,)): (2, 0, 0, 0, -2),
    }
    order = [((1, 1), ()), ((2,), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))]
    table = character_table(2)
    for lam, row in expected.items():
        assert tuple(int(table[lam][c]) for c in order) == row


def test_induction_product_builds_the_mixed_character():
    chi = induction_product(
        bn_irreducible(((1,), ())), bn_irreducible(((), (1,)))
    )
    assert chi == character_table(2)[((1,), (1,))]
    assert chi.degree == 2


def test_induction_product_degree_multiplies():
    a = bn_irreducible(((2,), ()))
    b = bn_irreducible(((1,), ()))
    chi = induction_product(a, b)
    assert chi.degree == 3 * a.degree * b.degree  # binomial(3,2) = 3


@pytest.mark.parametrize("n", [1, 2, 3])
def test_orthonormality_and_burnside(n):
    table = character_table(n)
    for a in table:
        for b in table:
            assert inner_product(table[a], table[b]) == (1 if a == b else 0)
    assert sum(chi.degree**2 for chi in table.values()) == group_order(n)


def test_pullback_compatibility():
    n = 3
    for lam in partitions(n):
        chi = pullback_character(lam, n)
        for mu in signed_partitions(n):
            assert chi[mu] == sn_character_value(lam, underlying_type(mu))


def test_regular_character_pairing():
    n = 2
    reg = regular_character(n)
    table = character_table(n)
    for lam, chi in table.items():
        assert inner_product(reg, chi) == chi.degree


# ---------------------------------------------------------------------------
# induced characters


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rho_closure_sizes(n):
    for lam in signed_partitions(n):
        elems, values = rho_character(lam)
        assert len(elems) == centralizer_order(lam)
        assert len(values) == len(elems)


def test_rho_trivial_on_all_singleton_positive_type():
    n = 3
    elems, values = rho_character(((1,) * n, ()))
    assert all(values[g] == 1 for g in elems)


def test_rho_on_coxeter_centralizer_is_faithful_root():
    n = 3
    elems, values = rho_character(((), (n,)))

    def value_order(c):
        acc, k = c, 1
        while acc != 1:
            acc, k = acc * c, k + 1
        return k

    assert max(value_order(values[g]) for g in elems) == 2 * n


def test_induce_from_trivial_subgroup_is_regular():
    n = 2
    chi = induce_character({(1, 2): Fraction(1)}, n)
    assert chi == regular_character(n)


def test_induce_index_one():
    elems, values = rho_character(((), (1,)))
    chi = induce_character(values, 1)
    assert chi == character_table(1)[((), (1,))]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_induced_coxeter_character_degree(n):
    _, values = rho_character(((), (n,)))
    chi = induce_character(values, n)
    assert chi.degree == 2 ** (n - 1) * factorial(n - 1)


@pytest.mark.parametrize("n", [2, 3])
def test_induced_characters_decompose_integrally(n):
    for lam in signed_partitions(n):
        _, values = rho_character(lam)
        chi = induce_character(values, n)
        mults = decompose(chi)
        assert all(m > 0 for m in mults.values())


def test_decompose_parabolic_permutation_character():
    chi = induction_product(
        bn_irreducible(((1,), ())), bn_irreducible(((1,), ()))
    )
    assert decompose(chi) == {((2,), ()): 1, ((1, 1), ()): 1}


def test_decompose_rejects_non_character():
    n = 1
    bad = ClassFunction(n, (Fraction(1, 2), Fraction(0)))
    with pytest.raises(ValueError):
        decompose(bad)


def test_coset_character_against_induction_formula():
    for n in (2, 3):
        sub = cyclic_subgroup(coxeter_element(n))
        direct = coset_permutation_character(n, sub)
        induced = induce_character({g: Fraction(1) for g in sub}, n)
        assert direct == induced
        assert direct.degree == group_order(n) // (2 * n)
        assert inner_product(direct, character_table(n)[((n,), ())]) == 1


def test_coset_character_rank_two_decomposition():
    chi = coset_permutation_character(2, cyclic_subgroup(coxeter_element(2)))
    assert decompose(chi) == {((2,), ()): 1, ((), (1, 1)): 1}


# ---------------------------------------------------------------------------
# cyclotomic arithmetic


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_root_of_unity_relations():
    w = Cyclotomic.root_of_unity(8, 8)
    acc = w
    for _ in range(7):
        acc = acc * w
    assert acc == 1
    partial = Cyclotomic.rational(8, 0)
    acc = Cyclotomic.rational(8, 1)
    for _ in range(8):
        partial = partial + acc
        acc = acc * w
    assert partial.is_zero()
    assert Cyclotomic.root_of_unity(8, 2) == Cyclotomic.rational(8, -1)


def test_conjugate_and_rationality():
    w = Cyclotomic.root_of_unity(5, 5)
    real_part_sum = w + w.conjugate()
    assert not real_part_sum.is_rational()
    with pytest.raises(ValueError):
        real_part_sum.rational_value()
    assert w * w.conjugate() == 1
