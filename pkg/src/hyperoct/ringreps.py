"""Characters carried by the presented rings.

Everything reduces to one computation: for a class representative sigma
and each normal-form basis monomial m, the coefficient of m in
act(sigma, m).  Degree is preserved exactly and the loop filtration can
only increase under straightening, so summing these diagonal entries over
a bucket of monomials (a degree, a bidegree, or a type-shape class) is
the trace of sigma on the corresponding graded piece.  For the
non-homogeneous d = 1 ring the same diagonal entries compute the traces
on the associated graded pieces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .characters import ClassFunction
from .permutations import (
    SignedPartition,
    set_partition_shape,
    signed_partitions,
    standard_representative,
)
from .rings import Monomial, get_ring, type_of


def acting_rank(space: str, rank: int) -> int:
    return rank + 1 if space.startswith("Y") else rank


@lru_cache(maxsize=None)
def diagonal_coefficients(
    space: str, rank: int
) -> dict[SignedPartition, tuple[Fraction, ...]]:
    """Per class representative, the action's diagonal on the nbc basis."""
    ring = get_ring(space, rank)
    basis = ring.nbc_basis()
    n_act = acting_rank(space, rank)
    out: dict[SignedPartition, tuple[Fraction, ...]] = {}
    for lam in signed_partitions(n_act):
        sigma = standard_representative(lam)
        diag = []
        for m in basis:
            image = ring.act(sigma, ring.monomial(m))
            diag.append(image.coefficient(m))
        out[lam] = tuple(diag)
    return out


def _basis_buckets(space: str, rank: int, keyfn):
    ring = get_ring(space, rank)
    buckets: dict[object, list[int]] = {}
    for pos, m in enumerate(ring.nbc_basis()):
        buckets.setdefault(keyfn(m), []).append(pos)
    return buckets


def _bucket_character(space: str, rank: int, positions) -> ClassFunction:
    diag = diagonal_coefficients(space, rank)
    n_act = acting_rank(space, rank)
    vals = []
    for lam in signed_partitions(n_act):
        row = diag[lam]
        vals.append(sum((row[p] for p in positions), Fraction(0)))
    return ClassFunction(n_act, tuple(vals))


def graded_character(n: int, space: str) -> list[ClassFunction]:
    """Characters of the graded pieces, indexed by combinatorial degree.

    For the d = 3 spaces these are the cohomology degrees 0, 2, ..., 2n;
    for the d = 1 spaces the degrees of the associated graded ring.
    """
    buckets = _basis_buckets(space, n, len)
    return [
        _bucket_character(space, n, buckets.get(k, ())) for k in range(n + 1)
    ]


def bigraded_character(n: int) -> dict[tuple[int, int], ClassFunction]:
    """Characters of the (total degree, loop degree) pieces of the graded
    d = 3 ring."""
    buckets = _basis_buckets(
        "Z3", n, lambda m: (len(m), sum(1 for g in m if len(g) == 1))
    )
    return {key: _bucket_character("Z3", n, pos) for key, pos in buckets.items()}


def type_shape(m: Monomial, rank: int) -> SignedPartition:
    return set_partition_shape(type_of(m, rank))


def type_character(lam: SignedPartition) -> ClassFunction:
    """Character on the span of nbc monomials whose type has shape lam."""
    n = sum(lam[0]) + sum(lam[1])
    buckets = _basis_buckets("Z3", n, lambda m: type_shape(m, n))
    return _bucket_character("Z3", n, buckets.get(lam, ()))


def type_dimension(lam: SignedPartition) -> int:
    n = sum(lam[0]) + sum(lam[1])
    ring = get_ring("Z3", n)
    return sum(1 for m in ring.nbc_basis() if type_shape(m, n) == lam)


def bigraded_dimensions(n: int) -> dict[tuple[int, int], int]:
    ring = get_ring("Z3", n)
    out: dict[tuple[int, int], int] = {}
    for m in ring.nbc_basis():
        key = (len(m), sum(1 for g in m if len(g) == 1))
        out[key] = out.get(key, 0) + 1
    return out
