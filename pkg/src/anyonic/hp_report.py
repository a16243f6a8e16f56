"""Periodic Hopf cyclic cohomology as parity sums of Lie algebra homology.

HP^p(U(g)) is the direct sum of H_i(g; C_delta) over i = p mod 2.  The sum is
infinite in general, so tables are truncations at a homological cutoff.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Optional

from .ce_homology import HomologyTable


@dataclass
class HPTable:
    parity: int
    max_i: int
    by_degree: dict  # Z_n degree -> total dimension over i = parity mod 2, i <= max_i
    focused: Optional[bool] = None
    truncated: bool = True

    @property
    def total(self) -> int:
        return sum(self.by_degree.values())

    @property
    def support(self) -> list[int]:
        return sorted(t for t, v in self.by_degree.items() if v)

    def rows(self) -> list[dict]:
        return [{"degree": t, "dim": v} for t, v in sorted(self.by_degree.items()) if v]


def assemble_hp(table: HomologyTable, parity: int, max_i: Optional[int] = None,
                m: Optional[int] = None) -> HPTable:
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    max_i = table.max_i if max_i is None else max_i
    if max_i > table.max_i:
        raise ValueError(f"homology table only reaches i={table.max_i}, asked for {max_i}")
    sums = defaultdict(int)
    for (i, t), v in table.dims.items():
        if i <= max_i and i % 2 == parity and v:
            sums[t] += v
    hp = HPTable(parity, max_i, dict(sorted(sums.items())))
    if m is not None:
        hp.focused = focusing_predicate(hp, m)
    return hp


def focusing_predicate(hp: HPTable, m: int) -> bool:
    """Every supported degree is a multiple of m whose quotient has the table's parity."""
    return all(t % m == 0 and (t // m) % 2 == hp.parity for t in hp.support)
