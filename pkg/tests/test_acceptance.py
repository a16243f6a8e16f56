"""Acceptance suite: one test (and one summary line) per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
happen; they are also repeated in the terminal summary.
"""

import cmath
import itertools
import random
from collections import Counter
from fractions import Fraction
from math import comb, gcd

import numpy as np

from anyonic.algebra import confluence_check
from anyonic.anyon_space import (
    AnyonObject,
    DegreedGenerator,
    braid_coefficient,
    braid_from_R,
    braid_pair,
    psi_squared_is_identity,
)
from anyonic.ce_homology import d_squared_check, homology_dims
from anyonic.config import preset
from anyonic.hopf import AXIOMS, HopfData, TensorElement, coproduct, verify_hopf_axioms
from anyonic.hp_report import assemble_hp, focusing_predicate
from anyonic.quantum_lie import enveloping_presentation, qla_checks
from anyonic.scalar import context, cyclotomic_polynomial, root_power

from test_algebra import ALL_PRESETS, all_path_normal_forms

FOCUSED_18 = [0, 3, 6, 9, 12, 15]


def test_ac1_psi_squared_on_focused_family(criterion):
    with criterion("AC1 psi^2 = id on the n=18 focused family", 1):
        ctx = context(18)
        for d1, d2 in itertools.product(FOCUSED_18, repeat=2):
            twice = braid_coefficient(ctx, d1, d2) * braid_coefficient(ctx, d2, d1)
            assert twice == root_power(ctx, 2 * d1 * d2) == ctx.one, (d1, d2)
        obj = AnyonObject.from_degrees(18, FOCUSED_18)
        assert psi_squared_is_identity(ctx, obj, obj)[0]
        off = AnyonObject.from_degrees(18, [1])
        ok, witness = psi_squared_is_identity(ctx, off, off)
        assert not ok and witness == (1, 1)
        assert braid_coefficient(ctx, 1, 1) ** 2 == root_power(ctx, 2) != ctx.one


def test_ac2_R_matrix_consistency(criterion):
    with criterion("AC2 braid_from_R = braid_pair for n in {2, 8, 18}", 5):
        for n in (2, 8, 18):
            ctx = context(n)
            for d1, d2 in itertools.product(range(n), repeat=2):
                v, w = DegreedGenerator("v", d1), DegreedGenerator("w", d2)
                assert braid_from_R(ctx, v, w) == braid_pair(ctx, v, w), (n, d1, d2)


def test_ac3_hopf_axioms(criterion):
    with criterion("AC3 Hopf axioms for z18-nilpotent and z18-free to length 4", 10):
        for name in ("z18-nilpotent", "z18-free"):
            h = HopfData(preset(name).to_presentation())
            report = verify_hopf_axioms(h, 4)
            assert sorted(c.name for c in report.checks) == sorted(AXIOMS)
            assert report.ok, [(c.name, c.witness) for c in report.checks if not c.ok]
        # four terms, the crossed one with a minus sign
        p = h.presentation
        x, y = p.index("x"), p.index("y")
        one = p.ctx.one
        expected = TensorElement({((), (x, y)): one, ((y,), (x,)): -one,
                                  ((x,), (y,)): one, ((x, y), ()): one})
        delta = coproduct(h, p.word("x", "y"))
        assert delta == expected
        assert len(delta.terms) == 4


def test_ac4_envelope_identification(criterion):
    with criterion("AC4 envelope(nonabelian) = free, envelope(abelian) = nilpotent", 5):
        for source, target in (("z18-nonabelian", "z18-free"), ("z18-abelian", "z18-nilpotent")):
            env = enveloping_presentation(preset(source).to_qla())
            other = preset(target).to_presentation()
            assert env == other, (source, target)
            for length in range(5):
                for w in itertools.product(range(len(env.generators)), repeat=length):
                    assert env.normal_form(w) == other.normal_form(w), w
        env = enveloping_presentation(preset("z18-nonabelian").to_qla())
        for name, gen in (("a", "x"), ("b", "y"), ("c", "z")):
            assert env.eliminated[name] == env.word(gen, gen).scale(env.ctx.scalar(2))
        assert env.describe()[-3:] == ["a := 2*x^2", "b := 2*y^2", "c := 2*z^2"]


def test_ac5_quantum_lie_checks(criterion):
    with criterion("AC5 quantum Lie checks on z18-nonabelian", 1):
        checks = {c.name: c for c in qla_checks(preset("z18-nonabelian").to_qla())}
        for name in ("degree-additivity", "bracket-kills-kernel", "nested-brackets-vanish"):
            assert checks[name].ok, (name, checks[name].witness)
        assert all(c.ok for c in checks.values())


def test_ac6_d_squared(criterion):
    with criterion("AC6 d^2 = 0 with delta = 0 up to i = 6", 10):
        for name in ("z18-nonabelian", "z18-abelian"):
            check = d_squared_check(preset(name).to_qla(), None, 6)
            assert check.ok, (name, check.witness)


def _multiset_degrees(degrees, i, n):
    """Oracle: Z_n degree histogram of size-i multisets (all generators odd-squared)."""
    return Counter(sum(c) % n for c in itertools.combinations_with_replacement(degrees, i))


def test_ac7_abelian_homology(criterion):
    with criterion("AC7 abelian homology C(i+2,2), zero boundaries, grading", 5):
        qla = preset("z18-abelian").to_qla()
        table = homology_dims(qla, None, 6)
        assert table.zero_boundaries == list(range(7))
        for i in range(7):
            assert table.total(i) == comb(i + 2, 2), i
            oracle = _multiset_degrees([3, 9, 15], i, 18)
            got = {t: v for (j, t), v in table.dims.items() if j == i and v}
            assert got == dict(oracle), i
            # 3k + 9l + 15p = 3(i + 2l + 4p)
            allowed = {3 * (i + 2 * e) % 18 for e in range(2 * i + 1)}
            assert set(table.support(i)) <= allowed


def test_ac8_hp_focusing(criterion):
    with criterion("AC8 HP focusing at cutoffs 6 and 12, counts increase", 10):
        qla = preset("z18-abelian").to_qla()
        table = homology_dims(qla, None, 12)
        for parity, degrees in ((0, {0, 6, 12}), (1, {3, 9, 15})):
            low = assemble_hp(table, parity, 6, 3)
            high = assemble_hp(table, parity, 12, 3)
            for hp in (low, high):
                assert hp.focused and focusing_predicate(hp, 3)
                assert set(hp.support) == degrees
                assert all((t // 3) % 2 == parity for t in hp.support)
            for t in degrees:
                assert high.by_degree[t] > low.by_degree[t], (parity, t)
            assert low.total == sum(comb(i + 2, 2) for i in range(parity, 7, 2))


def _leja(points):
    """Order points so each maximises the product of distances to earlier ones."""
    pts = np.array(points)
    score = np.zeros(len(pts))  # sum of log distances to the points taken so far
    used = np.zeros(len(pts), dtype=bool)
    out = []
    k = 0
    for _ in range(len(pts)):
        used[k] = True
        out.append(pts[k])
        with np.errstate(divide="ignore"):
            score += np.log(np.abs(pts - pts[k]))
        score[used] = -np.inf
        k = int(np.argmax(score))
    return out


def float_cyclotomic(n):
    """Oracle: prod (x - w) over primitive n-th roots, lowest degree first.

    Leja ordering keeps the partial products well conditioned; the naive
    angular order loses all precision around degree 90.
    """
    roots = [cmath.exp(2j * cmath.pi * k / n) for k in range(1, n + 1) if gcd(k, n) == 1]
    poly = np.array([1 + 0j])
    for r in _leja(roots):
        poly = np.convolve(poly, [1, -r])
    return poly[::-1]


def test_ac9_scalar_kernel(criterion):
    with criterion("AC9 cyclotomic oracle n <= 100 and field axioms on 1000 triples", 10):
        for n in range(1, 101):
            exact = cyclotomic_polynomial(n)
            approx = float_cyclotomic(n)
            assert len(exact) == len(approx), n
            for e, a in zip(exact, approx):
                assert abs(a - float(e)) < 1e-6, n
                assert round(a.real) == e, n
        ctx = context(18)
        rng = random.Random(18)

        def rand():
            return ctx.element([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(ctx.dim)])

        for _ in range(1000):
            a, b, c = rand(), rand(), rand()
            assert (a * b) * c == a * (b * c)
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
            for u in (a, b, c):
                if u:
                    assert u * u.inverse() == ctx.one


def test_ac10_confluence_and_determinism(criterion):
    with criterion("AC10 confluence of all presets, rewrite-order independence", 10):
        for name in ALL_PRESETS:
            p = preset(name).to_presentation()
            report = confluence_check(p, 3)
            assert report.ok, (name, report.failures[:1])
        for name in ("z18-nilpotent", "z18-nonabelian"):
            p = preset(name).to_presentation()
            k = len(p.generators)
            for w in itertools.product(range(k), repeat=3):
                forms = all_path_normal_forms(p, w)
                assert len(forms) == 1, (name, w)
                (terms,) = forms
                nf = p.normal_form(w)
                assert {u: c for u, c in terms} == {u: c.coeffs for u, c in nf.items()}
            rng = random.Random(500)
            for _ in range(500):
                w = tuple(rng.randrange(k) for _ in range(rng.randint(0, 5)))
                assert p.normal_form(w, rng=rng) == p.normal_form(w), w
