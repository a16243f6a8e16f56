"""Braided Hopf structure on presented algebras with primitive generators.

Delta and epsilon are extended as braided algebra maps, S as a braided
anti-algebra map.  Tensor powers of H multiply with the braiding:
(a (x) b)(c (x) d) = zeta^(|b||c|) ac (x) bd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .algebra import Element, Presentation, Word
from .checks import Check
from .scalar import Cyclo


class TensorElement:
    """Element of H^(x)k: map from k-tuples of normal words to coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    def items(self):
        return self.terms.items()

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            out[k] = c if v is None else v + c
        return TensorElement(out)

    def __repr__(self):
        return f"TensorElement({self.terms!r})"


def _accumulate(out: dict, key, c):
    v = out.get(key)
    v = c if v is None else v + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def tensor_multiply(p: Presentation, a: TensorElement, b: TensorElement) -> TensorElement:
    """Braided product in H (x) H."""
    out = {}
    for (a1, a2), c in a.items():
        d2 = p.degree_of(a2)
        for (b1, b2), d in b.items():
            coeff = c * d * p.ctx.root_power(d2 * p.degree_of(b1))
            left = p.normal_form(a1 + b1)
            right = p.normal_form(a2 + b2)
            for u, cu in left.items():
                for v, cv in right.items():
                    _accumulate(out, (u, v), coeff * cu * cv)
    return TensorElement(out)


def format_tensor(p: Presentation, t: TensorElement) -> str:
    from .algebra import format_element

    as_elem = Element({k: c for k, c in t.terms.items()})
    return format_element(as_elem, lambda key: " (x) ".join(p.format_word(w) for w in key))


@dataclass
class HopfData:
    presentation: Presentation
    primitives: tuple = field(default=None)

    def __post_init__(self):
        if self.primitives is None:
            self.primitives = (True,) * len(self.presentation.generators)
        if not all(self.primitives):
            raise NotImplementedError("only primitive generators are supported")


def _as_element(h: HopfData, e) -> Element:
    p = h.presentation
    if not isinstance(e, Element):
        e = Element.word(p.ctx, tuple(e))
    return e


def _word_coproduct(h: HopfData, word: Word) -> TensorElement:
    p = h.presentation
    one = p.ctx.one
    acc = TensorElement({((), ()): one})
    for g in word:
        prim = TensorElement({((), (g,)): one, ((g,), ()): one})
        acc = tensor_multiply(p, acc, prim)
    return acc


def coproduct(h: HopfData, e) -> TensorElement:
    """Delta on the normal form of ``e``, by multiplicative extension."""
    p = h.presentation
    e = p.normal_form(_as_element(h, e))
    out = {}
    for w, c in e.items():
        for key, d in _word_coproduct(h, w).items():
            _accumulate(out, key, c * d)
    return TensorElement(out)


def raw_coproduct(h: HopfData, word: Word) -> TensorElement:
    """Delta(g_1) ... Delta(g_k) for a possibly non-normal word."""
    return _word_coproduct(h, tuple(word))


def counit(h: HopfData, e) -> Cyclo:
    p = h.presentation
    e = p.normal_form(_as_element(h, e))
    return e.coefficient(()) or p.ctx.zero


def _word_antipode(h: HopfData, word: Word) -> Element:
    p = h.presentation
    degs = [p.generators[g].degree for g in word]
    exponent = 0
    for a in range(len(degs)):
        for b in range(a + 1, len(degs)):
            exponent += degs[a] * degs[b]
    c = p.ctx.root_power(exponent)
    if len(word) % 2:
        c = -c
    return p.normal_form(Element.word(p.ctx, tuple(reversed(word)), c))


def antipode(h: HopfData, e) -> Element:
    """S extended linearly; on words S(vw) = zeta^(|v||w|) S(w) S(v)."""
    p = h.presentation
    e = p.normal_form(_as_element(h, e))
    out = Element()
    for w, c in e.items():
        out = out + _word_antipode(h, w).scale(c)
    return out


def _delta_left(h, t):
    """(Delta (x) id) on H (x) H."""
    out = {}
    for (u, v), c in t.items():
        for (u1, u2), d in _word_coproduct(h, u).items():
            _accumulate(out, (u1, u2, v), c * d)
    return TensorElement(out)


def _delta_right(h, t):
    out = {}
    for (u, v), c in t.items():
        for (v1, v2), d in _word_coproduct(h, v).items():
            _accumulate(out, (u, v1, v2), c * d)
    return TensorElement(out)


def _antipode_convolution(h: HopfData, word: Word, side: str) -> Element:
    p = h.presentation
    out = Element()
    for (u, v), c in _word_coproduct(h, word).items():
        if side == "left":
            term = p.multiply(_word_antipode(h, u), Element.word(p.ctx, v))
        else:
            term = p.multiply(Element.word(p.ctx, u), _word_antipode(h, v))
        out = out + term.scale(c)
    return out


@dataclass
class HopfReport:
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def by_name(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


AXIOMS = (
    "coassociativity",
    "counit",
    "coproduct-multiplicative",
    "counit-multiplicative",
    "antipode",
    "degree-preserving",
)


def verify_hopf_axioms(h: HopfData, max_len: int = 4) -> HopfReport:
    """Check the six braided Hopf axiom families on all normal words up to ``max_len``."""
    p = h.presentation
    fw = p.format_word
    basis = p.basis_up_to(max_len)
    found = {name: None for name in AXIOMS}

    def fail(name, witness):
        if found[name] is None:
            found[name] = witness

    for w in basis:
        delta = _word_coproduct(h, w)
        if _delta_left(h, delta) != _delta_right(h, delta):
            fail("coassociativity", fw(w))
        left = Element()
        right = Element()
        for (u, v), c in delta.items():
            if not u:
                left = left + Element.word(p.ctx, v, c)
            if not v:
                right = right + Element.word(p.ctx, u, c)
        target = Element.word(p.ctx, w)
        if left != target or right != target:
            fail("counit", fw(w))
        eps = p.scalar(1) if not w else Element()
        if (_antipode_convolution(h, w, "left") != eps
                or _antipode_convolution(h, w, "right") != eps):
            fail("antipode", fw(w))
        deg = p.degree_of(w)
        bad = any((p.degree_of(u) + p.degree_of(v)) % p.ctx.n != deg for u, v in delta.terms)
        bad = bad or any(p.degree_of(u) != deg for u in _word_antipode(h, w))
        if bad:
            fail("degree-preserving", fw(w))

    for a in basis:
        for b in basis:
            if len(a) + len(b) > max_len:
                continue
            prod = p.normal_form(a + b)
            if any(p.degree_of(u) != p.degree_of(a + b) for u in prod):
                fail("degree-preserving", f"{fw(a)} * {fw(b)}")
            lhs = coproduct(h, prod)
            rhs = tensor_multiply(p, _word_coproduct(h, a), _word_coproduct(h, b))
            if lhs != rhs:
                fail("coproduct-multiplicative", f"({fw(a)}, {fw(b)})")
            eps_ab = prod.coefficient(()) or p.ctx.zero
            eps_a = p.ctx.one if not a else p.ctx.zero
            eps_b = p.ctx.one if not b else p.ctx.zero
            if eps_ab != eps_a * eps_b:
                fail("counit-multiplicative", f"({fw(a)}, {fw(b)})")

    checks = [Check(name, found[name] is None, found[name]) for name in AXIOMS]
    return HopfReport(checks)


def antipode_squared_is_identity(h: HopfData, max_len: int = 4) -> Check:
    p = h.presentation
    for w in p.basis_up_to(max_len):
        if antipode(h, antipode(h, w)) != Element.word(p.ctx, w):
            return Check("antipode-squared", False, p.format_word(w))
    return Check("antipode-squared", True)


def counit_antipode(h: HopfData, max_len: int = 4) -> Check:
    p = h.presentation
    for w in p.basis_up_to(max_len):
        if counit(h, antipode(h, w)) != counit(h, w):
            return Check("counit-antipode", False, p.format_word(w))
    return Check("counit-antipode", True)


def psi_squared_on_tensor_square(h: HopfData, max_len: int = 4) -> Check:
    """psi^2 = id on H (x) H, degree pair by degree pair of basis words."""
    p = h.presentation
    degrees = sorted({p.degree_of(w) for w in p.basis_up_to(max_len)})
    for d1 in degrees:
        for d2 in degrees:
            if p.ctx.root_power(2 * d1 * d2) != 1:
                return Check("psi-squared-HxH", False, f"degrees ({d1}, {d2})")
    return Check("psi-squared-HxH", True)
