"""Exact Gaussian elimination over Q(zeta_n).

Matrices are sparse: a list of rows, each row a dict column -> Cyclo.
"""

from __future__ import annotations

from .scalar import Cyclo, CycloContext


def _clean(row):
    return {j: c for j, c in row.items() if c}


def row_echelon(rows: list[dict], ncols: int):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    work = [_clean(r) for r in rows]
    work = [r for r in work if r]
    pivots = []
    done = []
    for col in range(ncols):
        pick = None
        for idx, r in enumerate(work):
            if col in r:
                # prefer rational pivots; inversion is cheaper
                if pick is None or (r[col].is_rational() and not work[pick][col].is_rational()):
                    pick = idx
        if pick is None:
            continue
        prow = work.pop(pick)
        inv = prow[col].inverse()
        prow = {j: c * inv for j, c in prow.items()}
        for others in (work, done):
            for idx, r in enumerate(others):
                f = r.get(col)
                if f:
                    new = dict(r)
                    for j, c in prow.items():
                        v = new.get(j)
                        v = -(f * c) if v is None else v - f * c
                        if v:
                            new[j] = v
                        else:
                            new.pop(j, None)
                    others[idx] = new
        work = [r for r in work if r]
        done.append(prow)
        pivots.append(col)
    return done, pivots


def rank(rows: list[dict], ncols: int) -> int:
    return len(row_echelon(rows, ncols)[1])


def nullspace(ctx: CycloContext, rows: list[dict], ncols: int) -> list[dict]:
    """Basis of {v : A v = 0}, one sparse vector per free column."""
    red, pivots = row_echelon(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: ctx.one}
        for r, p in zip(red, pivots):
            c = r.get(free)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def matmul(a: list[dict], b: list[dict]) -> list[dict]:
    """Sparse product a*b, with b given as rows."""
    out = []
    for row in a:
        acc = {}
        for k, c in row.items():
            for j, d in b[k].items():
                v = acc.get(j)
                acc[j] = c * d if v is None else v + c * d
        out.append(_clean(acc))
    return out


def is_zero(rows: list[dict]) -> bool:
    return not any(any(r.values()) for r in rows)


def apply(rows: list[dict], vec: dict) -> dict:
    """A v for sparse A (rows) and sparse v."""
    out = {}
    for i, row in enumerate(rows):
        acc = None
        for j, c in row.items():
            x = vec.get(j)
            if x:
                acc = c * x if acc is None else acc + c * x
        if acc:
            out[i] = acc
    return out
