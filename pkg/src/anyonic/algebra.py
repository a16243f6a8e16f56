"""Presented Z_n-graded algebras and braided rewriting to normal form.

A presentation is a set of generators with degrees plus rewrite rules on
adjacent pairs: ``g_j g_i -> c g_i g_j + lower`` for j after i, and optional
power rules ``g g -> rhs``.  Normal words are those with no reducible
adjacent pair; with a complete set of swap rules these are the
non-decreasing (PBW) words.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .anyon_space import DegreedGenerator
from .scalar import Cyclo, CycloContext, format_scalar

Word = tuple


class Element:
    """Finite linear combination of words with nonzero Cyclo coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping] = None):
        self.terms = {tuple(w): c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, ctx: CycloContext, word: Sequence[int], coeff=None) -> "Element":
        return cls({tuple(word): ctx.one if coeff is None else coeff})

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word) -> Optional[Cyclo]:
        return self.terms.get(tuple(word))

    def __eq__(self, other):
        if not isinstance(other, Element):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            out[w] = c if v is None else v + c
        return Element(out)

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c) -> "Element":
        return Element({w: c * v for w, v in self.terms.items()})

    def __repr__(self):
        return f"Element({self.terms!r})"


def _deglex_less(u: Word, v: Word) -> bool:
    return (len(u), u) < (len(v), v)


@dataclass(frozen=True)
class PowerRule:
    kind: str  # "none" | "nilpotent" | "reduction"
    value: Optional[Element] = None


class Presentation:
    """Generators, swap rules and power rules of a graded algebra.

    ``swap_rules`` maps an ordered index pair (j, i) with j > i to
    ``(c, lower)`` meaning g_j g_i -> c g_i g_j + lower; a missing pair is
    left free.  ``power_rules`` maps an index to a PowerRule.
    ``eliminated`` records basis elements replaced by expressions in the
    kept generators (for U(g): a -> 2 x^2).
    """

    def __init__(
        self,
        ctx: CycloContext,
        generators: Sequence[DegreedGenerator],
        swap_rules: Optional[Mapping] = None,
        power_rules: Optional[Mapping] = None,
        eliminated: Optional[Mapping] = None,
    ):
        self.ctx = ctx
        self.generators = tuple(g.reduced(ctx.n) for g in generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self._index = {name: i for i, name in enumerate(names)}
        self.swap_rules = {}
        for (j, i), (c, lower) in (swap_rules or {}).items():
            if not j > i:
                raise ValueError(f"swap rule must rewrite a descent, got ({j}, {i})")
            self.swap_rules[(j, i)] = (c, lower if lower is not None else Element())
        self.power_rules = {}
        for i, rule in (power_rules or {}).items():
            if rule.kind == "none":
                continue
            if rule.kind == "nilpotent":
                rule = PowerRule("nilpotent", Element())
            elif rule.kind != "reduction" or rule.value is None:
                raise ValueError(f"bad power rule {rule!r}")
            self.power_rules[i] = rule
        self.eliminated = dict(eliminated or {})

        self.rules = {}
        for (j, i), (c, lower) in self.swap_rules.items():
            rhs = Element.word(ctx, (i, j), c) + lower
            self.rules[(j, i)] = rhs
        for i, rule in self.power_rules.items():
            self.rules[(i, i)] = rule.value
        self._validate()

    # -- structure ---------------------------------------------------------

    def _validate(self):
        for lhs, rhs in self.rules.items():
            deg = self.degree_of(lhs)
            for w in rhs:
                if any(k < 0 or k >= len(self.generators) for k in w):
                    raise ValueError(f"rule {self.format_word(lhs)} mentions an unknown generator")
                if self.degree_of(w) != deg:
                    raise ValueError(
                        f"rule for {self.format_word(lhs)} is not degree-homogeneous "
                        f"({self.format_word(w)} has degree {self.degree_of(w)}, expected {deg})")
                if not _deglex_less(w, lhs):
                    raise ValueError(
                        f"rule for {self.format_word(lhs)} does not decrease words: "
                        f"{self.format_word(w)}")
        for lhs, rhs in self.rules.items():
            for w in rhs:
                if not self.is_normal(w):
                    raise ValueError(
                        f"right side of {self.format_word(lhs)} is not in normal form: "
                        f"{self.format_word(w)}")

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.ctx.n == other.ctx.n and self.generators == other.generators
                and self.rules == other.rules)

    def __hash__(self):
        return hash((self.ctx.n, self.generators))

    def degree_of(self, word: Iterable[int]) -> int:
        return sum(self.generators[k].degree for k in word) % self.ctx.n

    def gen(self, name: str) -> Element:
        return Element.word(self.ctx, (self.index(name),))

    def word(self, *names: str) -> Element:
        return Element.word(self.ctx, tuple(self.index(s) for s in names))

    @property
    def one(self) -> Element:
        return Element.word(self.ctx, ())

    def scalar(self, c) -> Element:
        if not isinstance(c, Cyclo):
            c = self.ctx.scalar(c)
        return Element({(): c})

    # -- rewriting ---------------------------------------------------------

    def reducible_positions(self, word: Word) -> list[int]:
        return [k for k in range(len(word) - 1) if (word[k], word[k + 1]) in self.rules]

    def is_normal(self, word: Word) -> bool:
        rules = self.rules
        return not any((word[k], word[k + 1]) in rules for k in range(len(word) - 1))

    def rewrite_at(self, word: Word, pos: int) -> Element:
        """One rewrite step on ``word`` at adjacent pair (pos, pos+1)."""
        rhs = self.rules[(word[pos], word[pos + 1])]
        head, tail = word[:pos], word[pos + 2:]
        return Element({head + w + tail: c for w, c in rhs.items()})

    def normal_form(self, e, rng: Optional[random.Random] = None) -> Element:
        """Rewrite to the unique normal form.

        With ``rng`` the word and the position rewritten at each step are
        chosen at random; without it the leftmost redex of the last pending
        word is used.  Termination: every rule strictly lowers words in the
        degree-lexicographic order, which is compatible with concatenation.
        """
        if not isinstance(e, Element):
            e = Element.word(self.ctx, e)
        rules = self.rules
        pending = dict(e.terms)
        result = {}
        while pending:
            if rng is None:
                word, coeff = pending.popitem()
            else:
                word = rng.choice(sorted(pending))
                coeff = pending.pop(word)
            positions = [k for k in range(len(word) - 1) if (word[k], word[k + 1]) in rules]
            if not positions:
                v = result.get(word)
                v = coeff if v is None else v + coeff
                if v:
                    result[word] = v
                else:
                    result.pop(word, None)
                continue
            pos = positions[0] if rng is None else rng.choice(positions)
            head, tail = word[:pos], word[pos + 2:]
            for w, c in rules[(word[pos], word[pos + 1])].items():
                new = head + w + tail
                v = pending.get(new)
                v = coeff * c if v is None else v + coeff * c
                if v:
                    pending[new] = v
                else:
                    pending.pop(new, None)
        return Element(result)

    def multiply(self, a: Element, b: Element) -> Element:
        raw = {}
        for u, c in a.items():
            for v, d in b.items():
                w = u + v
                x = raw.get(w)
                raw[w] = c * d if x is None else x + c * d
        return self.normal_form(Element(raw))

    def power(self, a: Element, k: int) -> Element:
        acc = self.one
        for _ in range(k):
            acc = self.multiply(acc, a)
        return acc

    def basis_up_to(self, max_len: int) -> list[Word]:
        """All normal words of length <= max_len, by length then lexicographically."""
        if max_len < 0:
            raise ValueError("max_len must be non-negative")
        layer = [()]
        out = [()]
        gens = range(len(self.generators))
        for _ in range(max_len):
            nxt = []
            for w in layer:
                for g in gens:
                    if w and (w[-1], g) in self.rules:
                        continue
                    nxt.append(w + (g,))
            nxt.sort()
            out.extend(nxt)
            layer = nxt
        return out

    # -- display -----------------------------------------------------------

    def format_word(self, word: Word) -> str:
        if not word:
            return "1"
        parts = []
        for g, run in itertools.groupby(word):
            k = len(list(run))
            name = self.generators[g].name
            parts.append(name if k == 1 else f"{name}^{k}")
        return "*".join(parts)

    def format(self, e: Element) -> str:
        return format_element(e, self.format_word)

    def describe(self) -> list[str]:
        """Human-readable rule list, deterministic order."""
        lines = []
        for g in self.generators:
            lines.append(f"generator {g.name} degree {g.degree}")
        for lhs in sorted(self.rules):
            lines.append(f"{self.format_word(lhs)} -> {self.format(self.rules[lhs])}")
        for name in sorted(self.eliminated):
            lines.append(f"{name} := {self.format(self.eliminated[name])}")
        return lines


def format_element(e: Element, fmt_word) -> str:
    if e.is_zero():
        return "0"
    parts = []
    for w in sorted(e.terms, key=lambda w: (len(w), w)):
        c = e.terms[w]
        body = fmt_word(w)
        if c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            cs = format_scalar(c)
            if not c.is_rational():
                cs = f"({cs})"
            s = cs if body == "1" else f"{cs}*{body}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out


def braided_presentation(ctx: CycloContext, generators: Sequence[DegreedGenerator],
                         nilpotent: Iterable[str] = (), commute: bool = True) -> Presentation:
    """g_j g_i = zeta^(|g_j||g_i|) g_i g_j for every pair, plus g^2 = 0 rules.

    With ``commute=False`` no swap rules are added (free algebra).
    """
    gens = [g.reduced(ctx.n) for g in generators]
    swaps = {}
    if commute:
        for j, gj in enumerate(gens):
            for i in range(j):
                swaps[(j, i)] = (ctx.root_power(gj.degree * gens[i].degree), None)
    names = [g.name for g in gens]
    powers = {}
    for name in nilpotent:
        if name not in names:
            raise KeyError(f"unknown generator {name!r}")
        powers[names.index(name)] = PowerRule("nilpotent")
    return Presentation(ctx, gens, swaps, powers)


@dataclass
class ConfluenceReport:
    ok: bool
    overlaps_checked: int
    failures: list  # (word, left result, right result)


def confluence_check(p: Presentation, max_len: int = 3) -> ConfluenceReport:
    """Resolve every length-3 overlap g_a g_b g_c with both pairs reducible.

    For ``max_len`` above 3 every normal-form computation on words up to that
    length is additionally compared between leftmost and rightmost strategies.
    """
    failures = []
    checked = 0
    k = len(p.generators)
    for a, b, c in itertools.product(range(k), repeat=3):
        if (a, b) not in p.rules or (b, c) not in p.rules:
            continue
        checked += 1
        word = (a, b, c)
        left = p.normal_form(p.rewrite_at(word, 0))
        right = p.normal_form(p.rewrite_at(word, 1))
        if left != right:
            failures.append((word, left, right))
    for length in range(4, max_len + 1):
        for word in itertools.product(range(k), repeat=length):
            pos = p.reducible_positions(word)
            if len(pos) < 2:
                continue
            checked += 1
            left = p.normal_form(p.rewrite_at(word, pos[0]))
            right = p.normal_form(p.rewrite_at(word, pos[-1]))
            if left != right:
                failures.append((word, left, right))
    return ConfluenceReport(not failures, checked, failures)
