"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored as coefficient tuples of length phi(n), reduced modulo
the n-th cyclotomic polynomial, so equality is coefficient comparison.
"""

from __future__ import annotations

import cmath
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


# -- polynomial helpers over Q, coefficient lists in ascending order ---------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return _trim(out)


def _poly_divmod(a, b):
    """Quotient and remainder of a by b (b nonzero)."""
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(r) - 1 < db:
        return [], r
    q = [Fraction(0)] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = c / lead
        q[k - db] = c
        for j in range(db + 1):
            r[k - db + j] -= c * b[j]
    return _trim(q), _trim(r[:db])


def _integral(coeffs):
    """(integer numerators, common denominator) of a Fraction sequence."""
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple:
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in _divisors(n)[:-1]:
        den = _poly_mul(den, list(_cyclotomic(d)))
    q, r = _poly_divmod(num, den)
    assert not r, "x^n - 1 must be divisible by the proper-divisor product"
    return tuple(q)


def cyclotomic_polynomial(n: int) -> list[Fraction]:
    """Coefficients of Phi_n in ascending order, e.g. n=2 gives [1, 1]."""
    return list(_cyclotomic(n))


# -- field -------------------------------------------------------------------

class CycloContext:
    """The field Q(zeta_n); one shared instance per n via :func:`context`."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        self.n = n
        self.phi_n = cyclotomic_polynomial(n)
        self.dim = len(self.phi_n) - 1
        self._powers = {}
        # x^dim = sum tail[j] x^j; Phi_n is monic with integer coefficients
        self._tail = [(j, -int(c)) for j, c in enumerate(self.phi_n[:-1]) if c]

    def __repr__(self):
        return f"CycloContext({self.n})"

    def __reduce__(self):
        return (context, (self.n,))

    def reduce(self, poly: Sequence[Number]) -> tuple:
        nums, den = _integral([Fraction(c) for c in poly])
        return self._fold(nums, den)

    def _fold(self, nums: list, den: int) -> tuple:
        """Reduce integer numerators over den modulo Phi_n (in place)."""
        d = self.dim
        for k in range(len(nums) - 1, d - 1, -1):
            c = nums[k]
            if c:
                for j, t in self._tail:
                    nums[k - d + j] += c * t
        nums = nums[:d] + [0] * (d - len(nums))
        return tuple(Fraction(c, den) for c in nums)

    def multiply(self, a: tuple, b: tuple) -> tuple:
        """Product of two reduced coefficient tuples, reduced again.

        Works on integer numerators over a common denominator; Fraction
        arithmetic in the inner loop is several times slower.
        """
        d = self.dim
        ia, da = _integral(a)
        ib, db = _integral(b)
        out = [0] * (2 * d - 1) if d else []
        for i, ai in enumerate(ia):
            if ai:
                for j, bj in enumerate(ib):
                    if bj:
                        out[i + j] += ai * bj
        return self._fold(out, da * db)

    def element(self, poly: Sequence[Number]) -> "Cyclo":
        return Cyclo(self, self.reduce(poly))

    def scalar(self, value: Number) -> "Cyclo":
        return Cyclo(self, (Fraction(value),) + (Fraction(0),) * (self.dim - 1))

    @property
    def zero(self) -> "Cyclo":
        return self.scalar(0)

    @property
    def one(self) -> "Cyclo":
        return self.scalar(1)

    def root_power(self, k: int) -> "Cyclo":
        k %= self.n
        c = self._powers.get(k)
        if c is None:
            c = self.element([0] * k + [1])
            self._powers[k] = c
        return c

    def parse(self, text: str) -> "Cyclo":
        return parse_scalar(self, text)


@lru_cache(maxsize=None)
def context(n: int) -> CycloContext:
    return CycloContext(n)


def root_power(ctx: CycloContext, k: int) -> "Cyclo":
    """zeta_n ** k in canonical form."""
    return ctx.root_power(k)


class Cyclo:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("ctx", "coeffs", "_hash")

    def __init__(self, ctx: CycloContext, coeffs: tuple):
        assert len(coeffs) == ctx.dim
        self.ctx = ctx
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.ctx.n != self.ctx.n:
                raise ValueError(f"mixing Q(zeta_{self.ctx.n}) and Q(zeta_{other.ctx.n})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            h = hash((self.ctx.n, self.coeffs))
            # keep hash(Cyclo(c)) == hash(c) for rational constants
            if not any(self.coeffs[1:]):
                h = hash(self.coeffs[0])
            self._hash = h
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclo(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.ctx, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_rational():
            return other * self.coeffs[0]
        if other.is_rational():
            return self * other.coeffs[0]
        return Cyclo(self.ctx, self.ctx.multiply(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return self.ctx.scalar(1 / self.coeffs[0])
        # a^-1 = (product of the other Galois conjugates) / norm(a)
        ctx, n = self.ctx, self.ctx.n
        prod = ctx.one
        for k in range(2, n):
            if gcd(k, n) == 1:
                prod = prod * self.conjugate(k)
        norm = self * prod
        assert norm.is_rational() and norm.coeffs[0], "norm of a nonzero element is a nonzero rational"
        return prod * (1 / norm.coeffs[0])

    def conjugate(self, k: int) -> "Cyclo":
        """Image under the automorphism zeta -> zeta^k (k coprime to n)."""
        ctx = self.ctx
        out = [Fraction(0)] * ctx.dim
        for i, c in enumerate(self.coeffs):
            if c:
                for j, r in enumerate(ctx.root_power(k * i).coeffs):
                    if r:
                        out[j] += c * r
        return Cyclo(ctx, tuple(out))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.ctx.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.ctx.n)
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Cyclo[{self.ctx.n}]({format_scalar(self)})"


def add(a: Cyclo, b: Cyclo) -> Cyclo:
    return a + b


def mul(a: Cyclo, b: Cyclo) -> Cyclo:
    return a * b


def negate(a: Cyclo) -> Cyclo:
    return -a


def invert(a: Cyclo) -> Cyclo:
    return a.inverse()


def total(ctx: CycloContext, items: Iterable[Cyclo]) -> Cyclo:
    acc = [Fraction(0)] * ctx.dim
    for item in items:
        for i, c in enumerate(item.coeffs):
            if c:
                acc[i] += c
    return Cyclo(ctx, tuple(acc))


# -- literal syntax: "-1/2*z^3 + 2" ------------------------------------------

_TERM = re.compile(
    r"""(?P<sign>[+-])?
        (?:
          (?P<coef>\d+(?:/\d+)?)(?:\*(?P<z1>z(?:\^(?P<p1>\d+))?))?
        | (?P<z2>z(?:\^(?P<p2>\d+))?)
        )""",
    re.VERBOSE,
)


def parse_scalar(ctx: CycloContext, text: str) -> Cyclo:
    """Parse a sum of terms ``c`` / ``c*z^k`` / ``z^k`` with rational c."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty scalar literal")
    poly = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ValueError(f"malformed scalar literal {text!r} at offset {pos}")
        first = False
        sign = -1 if m.group("sign") == "-" else 1
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("z1") or m.group("z2"):
            p = m.group("p1") or m.group("p2")
            power = int(p) if p is not None else 1
        else:
            power = 0
        poly[power] = poly.get(power, Fraction(0)) + sign * coef
        pos = m.end()
    size = max(poly) + 1
    return ctx.element([poly.get(k, 0) for k in range(size)])


def format_scalar(c: Cyclo) -> str:
    parts = []
    for k, q in enumerate(c.coeffs):
        if q == 0:
            continue
        mag = abs(q)
        if k == 0:
            body = str(mag)
        else:
            zpart = "z" if k == 1 else f"z^{k}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        if not parts:
            parts.append(("-" if q < 0 else "") + body)
        else:
            parts.append(("- " if q < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"
