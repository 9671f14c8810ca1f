"""Circle-equivariant relation set and its two specializations.

The equivariant function ring is a free polynomial ring on the canonical
pair/loop generators together with one central degree-2 variable u.  Its
defining ideal is generated by the orbit, under the ambient group, of
four relation families:

  R0  g*(g - u)                          for every generator g
  R1  u^{-1}( z_ij+ z_jk+ (z_ik+ - u) - (z_ij+ - u)(z_jk+ - u) z_ik+ )
  R2  u^{-1}( z_ij+ z_i   (z_j   - u) - (z_ij+ - u)(z_i   - u) z_j   )
  R3  u^{-1}( z_j   z_ij- (z_ij+ - u) - (z_j   - u)(z_ij- - u) z_ij+ )

R3 is stated here with the loop z_j, matching the disjoint-support
argument that produces it (one checks the displayed alternative with z_i
does not specialize into either quotient, and the u -> 0 image below
forces the z_j form).  Setting u = 0 recovers, up to sign, generators of
the graded d = 3 ideal; setting u = 1 recovers generators of the d = 1
function-ring ideal.  This module is a symbolic checker: polynomials are
kept in the free ring (no straightening), and the specializations are
verified by reducing in the target rings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .permutations import SignedPerm, group_generators
from .rings import (
    Gen,
    PresentedRing,
    gen_rank_key,
    get_ring,
)

U: Gen = (0,)  # the central degree-2 variable

# free-ring polynomials: multiset monomial (sorted tuple of gens) -> coefficient
FreePoly = dict[tuple, Fraction]


def _msort(gens) -> tuple:
    return tuple(sorted(gens, key=gen_rank_key))


def _fadd(p: FreePoly, q: FreePoly) -> FreePoly:
    out = dict(p)
    for m, c in q.items():
        out[m] = out.get(m, Fraction(0)) + c
    return {m: c for m, c in out.items() if c}


def _fmul(p: FreePoly, q: FreePoly) -> FreePoly:
    out: FreePoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _msort(m1 + m2)
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return {m: c for m, c in out.items() if c}


def _gen(g: Gen) -> FreePoly:
    return {(g,): Fraction(1)}


def _u_shift(g: Gen) -> FreePoly:
    return {(g,): Fraction(1), (U,): Fraction(-1)}


def _divide_u(p: FreePoly) -> FreePoly:
    out: FreePoly = {}
    for m, c in p.items():
        if U not in m:
            raise ArithmeticError("polynomial is not divisible by u")
        idx = m.index(U)
        out[m[:idx] + m[idx + 1 :]] = c
    return out


def _normalize(p: FreePoly) -> tuple:
    """Hashable canonical form, scaled monic at the largest monomial."""
    if not p:
        return ()
    lead = max(p, key=lambda m: (len(m), tuple(sorted(map(gen_rank_key, m), reverse=True))))
    c0 = p[lead]
    return tuple(sorted((m, c / c0) for m, c in p.items()))


@dataclass(frozen=True)
class EquivariantRelationSet:
    rank: int
    relations: tuple[tuple, ...]  # normalized FreePoly items

    def polynomials(self) -> list[FreePoly]:
        return [dict(items) for items in self.relations]

    def __len__(self) -> int:
        return len(self.relations)


def _seed_relations(n: int) -> list[FreePoly]:
    rels: list[FreePoly] = []
    gens = [(i,) for i in range(1, n + 1)] + [
        (i, j, s) for j in range(2, n + 1) for i in range(1, j) for s in (1, -1)
    ]
    for g in gens:
        rels.append(_fmul(_gen(g), _u_shift(g)))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        zp, zm = (i, j, 1), (i, j, -1)
        rels.append(
            _divide_u(
                _fadd(
                    _fmul(_fmul(_gen(zp), _gen((i,))), _u_shift((j,))),
                    {
                        m: -c
                        for m, c in _fmul(
                            _fmul(_u_shift(zp), _u_shift((i,))), _gen((j,))
                        ).items()
                    },
                )
            )
        )
        rels.append(
            _divide_u(
                _fadd(
                    _fmul(_fmul(_gen((j,)), _gen(zm)), _u_shift(zp)),
                    {
                        m: -c
                        for m, c in _fmul(
                            _fmul(_u_shift((j,)), _u_shift(zm)), _gen(zp)
                        ).items()
                    },
                )
            )
        )
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        zij, zjk, zik = (i, j, 1), (j, k, 1), (i, k, 1)
        rels.append(
            _divide_u(
                _fadd(
                    _fmul(_fmul(_gen(zij), _gen(zjk)), _u_shift(zik)),
                    {
                        m: -c
                        for m, c in _fmul(
                            _fmul(_u_shift(zij), _u_shift(zjk)), _gen(zik)
                        ).items()
                    },
                )
            )
        )
    return rels


def _substitution(ring: PresentedRing, sigma: SignedPerm) -> dict[Gen, FreePoly]:
    """Generator images under sigma, homogenized: constants pick up a u.

    The generators and u all sit in cohomological degree 2, so the genuine
    equivariant action is the d = 1 action with each constant term c
    replaced by c*u; specializing u to 0 or 1 then reproduces the actions
    on the two quotients.
    """
    if ring.graded:
        raise ValueError("substitution homogenizes the d = 1 action")
    images: dict[Gen, FreePoly] = {U: _gen(U)}
    for g in ring.gens:
        img: FreePoly = {}
        for m, c in ring.act_on_generator(sigma, g).terms.items():
            key = (U,) if m == () else m
            img[key] = img.get(key, Fraction(0)) + c
        images[g] = img
    return images


def _apply_substitution(p: FreePoly, images: dict[Gen, FreePoly]) -> FreePoly:
    result: FreePoly = {}
    for m, c in p.items():
        term: FreePoly = {(): c}
        for g in m:
            term = _fmul(term, images[g])
        result = _fadd(result, term)
    return result


def equivariant_relations(n: int) -> EquivariantRelationSet:
    """Seed relations closed under the generator substitutions of B_n."""
    ring = get_ring("Z1", n)
    subs = [_substitution(ring, s) for s in group_generators(n)]
    seen: dict[tuple, FreePoly] = {}
    frontier: list[FreePoly] = []
    for p in _seed_relations(n):
        key = _normalize(p)
        if key not in seen:
            seen[key] = p
            frontier.append(p)
    while frontier:
        nxt: list[FreePoly] = []
        for p in frontier:
            for images in subs:
                q = _apply_substitution(p, images)
                key = _normalize(q)
                if key and key not in seen:
                    seen[key] = q
                    nxt.append(q)
        frontier = nxt
    return EquivariantRelationSet(n, tuple(sorted(seen)))


def specialize(relset: EquivariantRelationSet, u_value: int) -> list[FreePoly]:
    """Substitute u -> 0 or u -> 1, returning free polynomials over the z's."""
    if u_value not in (0, 1):
        raise ValueError("u specializes to 0 or 1")
    out = []
    for p in relset.polynomials():
        q: FreePoly = {}
        for m, c in p.items():
            if u_value == 0 and U in m:
                continue
            m2 = tuple(g for g in m if g != U)
            q[m2] = q.get(m2, Fraction(0)) + c
        q = {m: c for m, c in q.items() if c}
        if q:
            out.append(q)
    return out


def verify_specializations(n: int) -> tuple[int, int]:
    """Reduce every u->0 image in the graded ring and every u->1 image in
    the function ring; both must vanish.  Returns the two counts."""
    relset = equivariant_relations(n)
    graded = get_ring("Z3", n)
    unhomog = get_ring("Z1", n)
    count0 = count1 = 0
    for poly in specialize(relset, 0):
        if not graded.reduce_raw(poly).is_zero():
            raise AssertionError("u->0 image fails to vanish in the graded ring")
        count0 += 1
    for poly in specialize(relset, 1):
        if not unhomog.reduce_raw(poly).is_zero():
            raise AssertionError("u->1 image fails to vanish in the function ring")
        count1 += 1
    return count0, count1
