import itertools
import random
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anyonic.algebra import (
    Element,
    PowerRule,
    Presentation,
    braided_presentation,
    confluence_check,
)
from anyonic.anyon_space import DegreedGenerator
from anyonic.config import preset
from anyonic.scalar import context

ALL_PRESETS = ["z18-free", "z18-nilpotent", "z18-nonabelian", "z18-abelian",
               "z2m2-free(5)", "z2m2-nilpotent(5)", "z2m2-nonabelian(5)", "z2m2-abelian(5)"]


def all_path_normal_forms(p, word):
    """Oracle: every terminal state reachable by any sequence of single rewrites."""

    def freeze(terms):
        return tuple(sorted((w, c.coeffs) for w, c in terms.items() if c))

    ctx = p.ctx

    @lru_cache(maxsize=None)
    def explore(state):
        terms = {w: ctx.element(c) for w, c in state}
        moves = [(w, k) for w in terms for k in p.reducible_positions(w)]
        if not moves:
            return {state}
        out = set()
        for w, k in moves:
            new = dict(terms)
            coeff = new.pop(w)
            for u, c in p.rewrite_at(w, k).items():
                new[u] = new[u] + coeff * c if u in new else coeff * c
            out |= explore(freeze(new))
        return out

    return explore(freeze({tuple(word): ctx.one}))


def test_degree_of(nilpotent):
    assert nilpotent.degree_of(()) == 0
    assert nilpotent.degree_of(nilpotent.word("x", "y").terms.popitem()[0]) == 12
    assert nilpotent.degree_of((0, 1, 2)) == 9


def test_normal_form_examples(nilpotent, envelope_nonabelian):
    p = nilpotent
    assert p.normal_form(p.word("y", "x")) == -p.word("x", "y")
    assert p.normal_form(p.word("x", "x")).is_zero()
    q = envelope_nonabelian
    assert q.normal_form(q.word("x", "x")) == q.word("x", "x")
    assert q.eliminated["a"] == q.word("x", "x").scale(q.ctx.scalar(2))


def test_multiply(nilpotent):
    p = nilpotent
    x, y = p.gen("x"), p.gen("y")
    assert p.multiply(x, y) == p.word("x", "y")
    assert p.multiply(y, x) == -p.word("x", "y")
    assert p.multiply(x, p.one) == x


def test_basis_up_to(nilpotent, envelope_nonabelian):
    p = nilpotent
    assert [p.format_word(w) for w in p.basis_up_to(1)] == ["1", "x", "y", "z"]
    words = p.basis_up_to(3)
    # subsets of three nilpotent anticommuting generators
    assert len(words) == 8
    assert all(list(w) == sorted(set(w)) for w in words)
    q = envelope_nonabelian
    got = [q.format_word(w) for w in q.basis_up_to(2)]
    assert got == ["1", "x", "y", "z", "x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]


def test_free_algebra_words():
    ctx = context(18)
    gens = [DegreedGenerator("u", 0), DegreedGenerator("v", 3)]
    p = braided_presentation(ctx, gens, commute=False)
    assert len(p.basis_up_to(3)) == 1 + 2 + 4 + 8
    assert p.normal_form(p.word("v", "u")) == p.word("v", "u")


@pytest.mark.parametrize("name", ALL_PRESETS)
def test_presets_confluent(name):
    p = preset(name).to_presentation()
    rep = confluence_check(p, 4)
    assert rep.ok, rep.failures


def test_swap_only_presentation_is_confluent():
    ctx = context(18)
    gens = [DegreedGenerator(s, d) for s, d in [("a", 1), ("b", 4), ("c", 7), ("d", 0)]]
    assert confluence_check(braided_presentation(ctx, gens)).ok


def test_non_confluent_presentation_is_reported():
    ctx = context(18)
    gens = [DegreedGenerator("x", 0), DegreedGenerator("y", 0)]
    # y x -> x y, x x -> y: commutative, resolves
    p = Presentation(ctx, gens, {(1, 0): (ctx.one, None)},
                     {0: PowerRule("reduction", Element.word(ctx, (1,)))})
    assert confluence_check(p).ok
    # y x -> 2 x y, x x -> y: (xx)x = yx = 2xy but x(xx) = xy
    bad = Presentation(ctx, gens, {(1, 0): (ctx.scalar(2), None)},
                       {0: PowerRule("reduction", Element.word(ctx, (1,)))})
    rep = confluence_check(bad)
    assert not rep.ok
    word, left, right = rep.failures[0]
    assert word == (0, 0, 0)
    assert left == bad.word("x", "y").scale(ctx.scalar(2))
    assert right == bad.word("x", "y")


def test_rules_must_be_homogeneous_and_decreasing():
    ctx = context(18)
    gens = [DegreedGenerator("x", 3), DegreedGenerator("y", 9)]
    with pytest.raises(ValueError, match="homogeneous"):
        Presentation(ctx, gens, {(1, 0): (ctx.one, Element.word(ctx, (0,)))})
    with pytest.raises(ValueError, match="descent"):
        Presentation(ctx, gens, {(0, 1): (ctx.one, None)})
    gens = [DegreedGenerator("x", 0), DegreedGenerator("y", 0)]
    with pytest.raises(ValueError, match="decrease"):
        Presentation(ctx, gens, {}, {0: PowerRule("reduction", Element.word(ctx, (1, 1, 1)))})


@pytest.mark.parametrize("name", ALL_PRESETS[:4])
def test_normal_form_idempotent_and_homogeneous(name):
    p = preset(name).to_presentation()
    k = len(p.generators)
    for length in range(5):
        for w in itertools.product(range(k), repeat=length):
            nf = p.normal_form(w)
            assert p.normal_form(nf) == nf
            assert all(p.is_normal(u) for u in nf)
            assert all(p.degree_of(u) == p.degree_of(w) for u in nf)


@pytest.mark.parametrize("name", ALL_PRESETS[:4])
def test_all_rewrite_paths_agree_on_length_three(name):
    p = preset(name).to_presentation()
    k = len(p.generators)
    for w in itertools.product(range(k), repeat=3):
        finals = all_path_normal_forms(p, w)
        assert len(finals) == 1
        (state,) = finals
        assert {u: c for u, c in state} == {u: c.coeffs for u, c in p.normal_form(w).items()}


def test_rewrite_steps_decrease_measure(nilpotent, envelope_nonabelian):
    for p in (nilpotent, envelope_nonabelian):
        for lhs, rhs in p.rules.items():
            inversions = lambda w: sum(1 for a, b in itertools.combinations(w, 2) if a > b)  # noqa
            for w in rhs:
                assert (len(w), inversions(w)) < (len(lhs), inversions(lhs))


def _random_element(p, rng, max_len=3):
    e = Element()
    for _ in range(rng.randint(1, 3)):
        w = tuple(rng.randrange(len(p.generators)) for _ in range(rng.randint(0, max_len)))
        e = e + Element.word(p.ctx, w, p.ctx.root_power(rng.randrange(18)) * rng.randint(1, 3))
    return p.normal_form(e)


@pytest.mark.parametrize("name", ["z18-nilpotent", "z18-free"])
def test_multiply_associative(name):
    p = preset(name).to_presentation()
    rng = random.Random(7)
    for _ in range(40):
        a, b, c = (_random_element(p, rng) for _ in range(3))
        assert p.multiply(p.multiply(a, b), c) == p.multiply(a, p.multiply(b, c))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=5), st.integers(0, 2**32))
def test_random_rewrite_order(word, seed):
    p = preset("z18-nilpotent").to_presentation()
    assert p.normal_form(tuple(word), rng=random.Random(seed)) == p.normal_form(tuple(word))


def test_format(nilpotent, envelope_nonabelian):
    p = nilpotent
    assert p.format(p.normal_form(p.word("y", "x"))) == "-x*y"
    q = envelope_nonabelian
    assert q.format(q.eliminated["b"]) == "2*y^2"
    assert p.format(Element()) == "0"
