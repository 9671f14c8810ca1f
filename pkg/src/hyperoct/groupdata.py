"""Indexed enumeration of B_n with a precomputed Cayley table.

The table is the workhorse behind group-algebra convolution, conjugation
sweeps, and induced characters.  Elements are indexed in a fixed
deterministic order; ``table[i, j]`` is the index of ``elements[i] o
elements[j]`` (apply j first).  Sizes stay modest at desk scale
(|B_4| = 384, table 384 x 384), and instances are cached per n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .permutations import (
    SignedPerm,
    all_signed_perms,
    compose,
    identity,
    inverse,
)


@dataclass
class GroupData:
    n: int
    elements: tuple[SignedPerm, ...]
    index: dict[SignedPerm, int]
    table: np.ndarray  # int32, table[i, j] = index(elements[i] o elements[j])
    inv: np.ndarray  # int32
    _rows: list[list[int]] | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return self.index[identity(self.n)]

    def table_rows(self) -> list[list[int]]:
        """Cayley table as nested lists; faster for pure-Python inner loops."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def conjugates(self, g: int) -> np.ndarray:
        """Indices of x g x^{-1} for every x, as an array over x."""
        xs = np.arange(self.order, dtype=np.int32)
        return self.table[self.table[xs, g], self.inv[xs]]


@lru_cache(maxsize=None)
def get_group(n: int) -> GroupData:
    elements = tuple(sorted(all_signed_perms(n)))
    index = {g: i for i, g in enumerate(elements)}
    order = len(elements)
    table = np.empty((order, order), dtype=np.int32)
    for i, g in enumerate(elements):
        row = table[i]
        for j, h in enumerate(elements):
            row[j] = index[compose(g, h)]
    inv = np.array([index[inverse(g)] for g in elements], dtype=np.int32)
    return GroupData(n, elements, index, table, inv)
