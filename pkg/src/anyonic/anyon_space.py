"""Z_n-graded vector spaces with the anyonic braiding.

The braiding is kept in rule form: a coefficient zeta_n^(|v||w|) and a swap.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .scalar import Cyclo, CycloContext, context


@dataclass(frozen=True)
class DegreedGenerator:
    name: str
    degree: int

    def reduced(self, n: int) -> "DegreedGenerator":
        return DegreedGenerator(self.name, self.degree % n)


@dataclass(frozen=True)
class FocusParams:
    """Focus parameter m with n = 2 m^2."""

    m: int

    def __post_init__(self):
        if self.m <= 1:
            raise ValueError(f"focus parameter m must exceed 1, got {self.m}")

    @property
    def n(self) -> int:
        return 2 * self.m * self.m

    @classmethod
    def for_modulus(cls, n: int, m: int) -> "FocusParams":
        fp = cls(m)
        if fp.n != n:
            raise ValueError(f"n={n} is not 2*m^2 for m={m}")
        return fp


@dataclass(frozen=True)
class AnyonObject:
    ctx: CycloContext
    basis: tuple = field(default_factory=tuple)

    def __post_init__(self):
        basis = tuple(g.reduced(self.ctx.n) for g in self.basis)
        names = [g.name for g in basis]
        dup = [k for k, v in Counter(names).items() if v > 1]
        if dup:
            raise ValueError(f"duplicate basis names: {dup}")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def from_degrees(cls, n: int, degrees, prefix="e") -> "AnyonObject":
        return cls(context(n), tuple(DegreedGenerator(f"{prefix}{i}", d)
                                     for i, d in enumerate(degrees)))

    @property
    def degrees(self) -> list[int]:
        return [g.degree for g in self.basis]


def group_action(ctx: CycloContext, a: int, v: DegreedGenerator) -> tuple[Cyclo, DegreedGenerator]:
    """g^a acting on a homogeneous basis vector: zeta^(a|v|) v."""
    return ctx.root_power(a * v.degree), v


def braid_coefficient(ctx: CycloContext, d1: int, d2: int) -> Cyclo:
    return ctx.root_power(d1 * d2)


def braid_pair(ctx: CycloContext, v: DegreedGenerator, w: DegreedGenerator):
    """psi(v (x) w) as (coefficient, (w, v))."""
    return braid_coefficient(ctx, v.degree, w.degree), (w, v)


def braid_from_R(ctx: CycloContext, v: DegreedGenerator, w: DegreedGenerator):
    """psi(v (x) w) computed from the quasitriangular element of C[Z_n].

    Expands sum_{a,b} (1/n) zeta^(-ab) (g^b |> w) (x) (g^a |> v) term by
    term; exponents are tallied first so the double sum is one pass.
    """
    n = ctx.n
    dv, dw = v.degree % n, w.degree % n
    tally = Counter()
    for a in range(n):
        for b in range(n):
            # R coefficient zeta^(-ab), then g^b on w and g^a on v
            tally[(-a * b + b * dw + a * dv) % n] += 1
    acc = ctx.zero
    for k, count in sorted(tally.items()):
        acc = acc + ctx.root_power(k) * count
    return acc * Fraction(1, n), (w, v)


def is_focused(obj: AnyonObject, fp: FocusParams) -> bool:
    return all(d % fp.m == 0 for d in obj.degrees)


def psi_squared_is_identity(ctx: CycloContext, A: AnyonObject, B: AnyonObject):
    """Check psi_{B,A} psi_{A,B} = id degree by degree.

    Returns (ok, witness) where witness is the first failing degree pair.
    """
    for d1 in sorted(set(A.degrees)):
        for d2 in sorted(set(B.degrees)):
            c = braid_coefficient(ctx, d1, d2) * braid_coefficient(ctx, d2, d1)
            if c != 1:
                return False, (d1, d2)
    return True, None


def focused_sign(fp: FocusParams, d1: int, d2: int) -> int:
    """(-1)^(kl) for degrees km, lm; the focused-family closed form."""
    if d1 % fp.m or d2 % fp.m:
        raise ValueError(f"degrees {d1}, {d2} are not multiples of m={fp.m}")
    return -1 if (d1 // fp.m) * (d2 // fp.m) % 2 else 1
