"""Braided exterior algebra and the Chevalley-Eilenberg type complex.

Wedge monomials are exponent vectors over the Lie algebra basis.  A
generator g with zeta^(|g|^2) != -1 squares to zero in the exterior algebra
(a (x) a + c a (x) a = 0 with 1 + c invertible); the others behave
polynomially.  The differential

    d(x_1 ^ ... ^ x_i) = sum_k (-1)^(k+1+alpha_k) delta(x_k) (... x_k omitted ...)
                       + sum_{k<l} (-1)^(k+l+beta_kl) [x_k, x_l] ^ (... x_k, x_l omitted ...)

is evaluated on the sorted ordered list of each monomial; results are
re-sorted with b ^ a = -zeta^(|b||a|) a ^ b.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from . import linalg
from .checks import Check
from .quantum_lie import Character, QuantumLieAlgebra, validate_character, zero_character
from .scalar import Cyclo


class NotFocusedError(ValueError):
    """Raised when sign exponents are not integers (degrees not multiples of m)."""


def caps(qla: QuantumLieAlgebra) -> list[Optional[int]]:
    """Maximal exponent per generator in the exterior algebra (None = unbounded)."""
    minus_one = -qla.ctx.one
    return [None if qla.braid(g, g) == minus_one else 1 for g in range(qla.dim)]


def expand(mono: tuple) -> tuple:
    """Exponent vector -> sorted ordered list of generator indices."""
    out = []
    for g, e in enumerate(mono):
        out.extend([g] * e)
    return tuple(out)


def collapse(dim: int, word) -> tuple:
    mono = [0] * dim
    for g in word:
        mono[g] += 1
    return tuple(mono)


@dataclass
class ChainSpace:
    degree: int  # homological degree i
    basis: list  # exponent vectors
    grading: list  # Z_n degree of each basis element
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {m: k for k, m in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def blocks(self) -> dict:
        out = defaultdict(list)
        for k, t in enumerate(self.grading):
            out[t].append(k)
        return dict(sorted(out.items()))


def wedge_basis(qla: QuantumLieAlgebra, i: int) -> ChainSpace:
    if i < 0:
        raise ValueError("homological degree must be non-negative")
    cap = caps(qla)
    d = qla.dim
    found = []

    def rec(g, left, prefix):
        if g == d:
            if left == 0:
                found.append(tuple(prefix))
            return
        top = left if cap[g] is None else min(left, cap[g])
        for e in range(top + 1):
            rec(g + 1, left - e, prefix + [e])

    rec(0, i, [])
    found.sort(key=expand)
    n = qla.ctx.n
    grading = [sum(e * qla.degree(g) for g, e in enumerate(m)) % n for m in found]
    return ChainSpace(i, found, grading)


def focus_m(qla: QuantumLieAlgebra) -> int:
    if qla.fp is not None:
        return qla.fp.m
    n = qla.ctx.n
    for m in range(2, n):
        if 2 * m * m == n:
            return m
    raise NotFocusedError(f"n={n} is not of the form 2 m^2")


def _div_m2(value: int, m: int) -> int:
    if value % (m * m):
        raise NotFocusedError(f"{value} is not a multiple of m^2={m * m}; the Lie algebra is not focused")
    return value // (m * m)


def alpha(degrees, k: int, m: int) -> int:
    """alpha_k for the ordered degrees x_1..x_i (k is 1-based)."""
    if k == 1:
        return 0
    return _div_m2(degrees[k - 1] * sum(degrees[: k - 1]), m)


def beta(degrees, k: int, l: int, m: int) -> int:
    if not 1 <= k < l <= len(degrees):
        raise ValueError(f"need 1 <= k < l <= {len(degrees)}, got k={k}, l={l}")
    return alpha(degrees, k, m) + alpha(degrees, l, m) - _div_m2(degrees[k - 1] * degrees[l - 1], m)


def sign_exponents(degrees, k: int, l: Optional[int], m: int):
    """(alpha_k, beta_{k,l}); beta is None when l is None."""
    a = alpha(degrees, k, m)
    return a, (beta(degrees, k, l, m) if l is not None else None)


def wedge_sort(qla: QuantumLieAlgebra, word, cap=None):
    """Bring an ordered wedge product into canonical order.

    Returns (coefficient, exponent vector), or None when the product is zero.
    """
    cap = caps(qla) if cap is None else cap
    w = list(word)
    coeff = qla.ctx.one
    # insertion sort, one adjacent transposition at a time
    for a in range(1, len(w)):
        b = a
        while b > 0 and w[b - 1] > w[b]:
            coeff = -coeff * qla.braid(w[b - 1], w[b])
            w[b - 1], w[b] = w[b], w[b - 1]
            b -= 1
    mono = collapse(qla.dim, w)
    if any(c is not None and e > c for e, c in zip(mono, cap)):
        return None
    return coeff, mono


@dataclass
class BoundaryMatrix:
    source: ChainSpace
    target: ChainSpace
    entries: dict  # (target index, source index) -> Cyclo

    def rows(self) -> list[dict]:
        out = [dict() for _ in range(self.target.dim)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def cross_block_entries(self) -> list:
        return [(r, c) for (r, c) in self.entries
                if self.target.grading[r] != self.source.grading[c]]

    def block_rank(self, t: int) -> int:
        cols = [c for c, g in enumerate(self.source.grading) if g == t]
        pos = {c: k for k, c in enumerate(cols)}
        rows = defaultdict(dict)
        for (r, c), v in self.entries.items():
            if c in pos and self.target.grading[r] == t:
                rows[r][pos[c]] = v
        return linalg.rank(list(rows.values()), len(cols))


def boundary(qla: QuantumLieAlgebra, delta: Optional[Character], i: int,
             validate: bool = True) -> BoundaryMatrix:
    """Matrix of d: Lambda^i -> Lambda^(i-1) in the canonical wedge bases."""
    delta = delta or zero_character()
    if validate:
        bad = [c for c in validate_character(qla, delta) if not c.ok]
        if bad:
            raise ValueError(f"invalid character: {bad[0].witness}")
    src = wedge_basis(qla, i)
    tgt = wedge_basis(qla, max(i - 1, 0)) if i > 0 else ChainSpace(-1, [], [])
    entries = {}
    if i == 0:
        return BoundaryMatrix(src, tgt, entries)
    m = focus_m(qla)
    cap = caps(qla)
    dvals = [delta.at(qla, g) for g in range(qla.dim)]

    def put(row, col, v):
        old = entries.get((row, col))
        v = v if old is None else old + v
        if v:
            entries[(row, col)] = v
        else:
            entries.pop((row, col), None)

    for col, mono in enumerate(src.basis):
        word = expand(mono)
        degs = [qla.degree(g) for g in word]
        alphas = [alpha(degs, k, m) for k in range(1, i + 1)]
        for k in range(1, i + 1):
            dv = dvals[word[k - 1]]
            if not dv:
                continue
            sign = -1 if (k + 1 + alphas[k - 1]) % 2 else 1
            rest = word[: k - 1] + word[k:]
            put(tgt.index[collapse(qla.dim, rest)], col, dv * sign)
        for k in range(1, i + 1):
            for l in range(k + 1, i + 1):
                br = qla.bracket_basis(word[k - 1], word[l - 1])
                if not br:
                    continue
                b = alphas[k - 1] + alphas[l - 1] - _div_m2(degs[k - 1] * degs[l - 1], m)
                sign = -1 if (k + l + b) % 2 else 1
                rest = word[: k - 1] + word[k: l - 1] + word[l:]
                for e, lam in br.items():
                    sorted_term = wedge_sort(qla, (e,) + rest, cap)
                    if sorted_term is None:
                        continue
                    c, target_mono = sorted_term
                    put(tgt.index[target_mono], col, lam * c * sign)
    return BoundaryMatrix(src, tgt, entries)


def d_squared_check(qla: QuantumLieAlgebra, delta: Optional[Character] = None,
                    max_i: int = 6) -> Check:
    """d_(i-1) d_i = 0 for 2 <= i <= max_i; the character is not pre-validated."""
    prev = boundary(qla, delta, 1, validate=False)
    for i in range(2, max_i + 1):
        cur = boundary(qla, delta, i, validate=False)
        comp = linalg.matmul(prev.rows(), cur.rows())
        if not linalg.is_zero(comp):
            return Check("d-squared-zero", False, f"d_{i - 1} d_{i} != 0")
        prev = cur
    return Check("d-squared-zero", True)


@dataclass
class HomologyTable:
    max_i: int
    dims: dict  # (i, Z_n degree) -> dim H_i in that degree
    chain_dims: dict  # (i, Z_n degree) -> dim Lambda^i in that degree
    zero_boundaries: list  # i for which d_i is the zero map

    def total(self, i: int) -> int:
        return sum(v for (j, _), v in self.dims.items() if j == i)

    def support(self, i: int) -> list[int]:
        return sorted(t for (j, t), v in self.dims.items() if j == i and v)

    def rows(self) -> list[dict]:
        return [{"i": i, "degree": t, "dim": v} for (i, t), v in sorted(self.dims.items())]


def homology_dims(qla: QuantumLieAlgebra, delta: Optional[Character] = None,
                  max_i: int = 6) -> HomologyTable:
    """dim H_i per Z_n degree via exact blockwise ranks."""
    delta = delta or zero_character()
    bad = [c for c in validate_character(qla, delta) if not c.ok]
    if bad:
        raise ValueError(f"invalid character: {bad[0].witness}")
    d2 = d_squared_check(qla, delta, max_i + 1)
    if not d2.ok:
        raise ValueError(f"not a complex: {d2.witness}")
    bounds = [boundary(qla, delta, i) for i in range(max_i + 2)]
    for bm in bounds:
        if bm.cross_block_entries():
            raise ValueError(f"d_{bm.source.degree} does not preserve degree")
    dims, chain = {}, {}
    for i in range(max_i + 1):
        space = bounds[i].source
        for t, idx in space.blocks().items():
            rank_out = bounds[i].block_rank(t)
            rank_in = bounds[i + 1].block_rank(t)
            chain[(i, t)] = len(idx)
            dims[(i, t)] = len(idx) - rank_out - rank_in
    zero = [i for i, bm in enumerate(bounds[: max_i + 1]) if bm.is_zero()]
    return HomologyTable(max_i, dims, chain, zero)
