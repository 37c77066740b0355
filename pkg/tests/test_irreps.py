"""Dimensions, weight multiplicities and Casimir eigenvalues."""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from holoweitz.contexts import make_context
from holoweitz.errors import TrivialHolonomyRep
from holoweitz.irreps import (
    Irrep,
    casimir_base,
    casimir_lambda2,
    casimir_lambda2_ratio,
    dimension,
    full_weights,
    trivial_irrep,
    weight_system,
)
from holoweitz.roots import build_root_system, to_orthogonal, weyl_orbit

from helpers import kostant_multiplicity

G2 = build_root_system("G", 2)
B3 = build_root_system("B", 3)

G2_DIMS = {(1, 0): 7, (0, 1): 14, (2, 0): 27, (1, 1): 64, (3, 0): 77}
SPIN7_DIMS = {
    (1, 0, 0): 7,
    (0, 0, 1): 8,
    (0, 1, 0): 21,
    (2, 0, 0): 27,
    (0, 0, 2): 35,
    (1, 0, 1): 48,
    (1, 1, 0): 105,
    (0, 1, 1): 112,
    (0, 0, 3): 112,
    (2, 0, 1): 168,
    (1, 0, 2): 189,
}


def test_dimension_tables():
    for hw, want in G2_DIMS.items():
        assert dimension(Irrep(G2, hw)) == want
    for hw, want in SPIN7_DIMS.items():
        assert dimension(Irrep(B3, hw)) == want


def test_trivial_dimension_is_one():
    for rs in (G2, B3, build_root_system("A", 3), build_root_system("D", 4)):
        assert dimension(trivial_irrep(rs)) == 1


def test_highest_weight_multiplicity_is_one():
    for rs, hw in [(G2, (2, 1)), (B3, (1, 0, 1))]:
        irr = Irrep(rs, hw)
        assert weight_system(irr)[irr.hw_orthogonal] == 1


def test_g2_adjoint_zero_weight_multiplicity():
    ws = weight_system(Irrep(G2, (0, 1)))
    zero = (Fraction(0), Fraction(0))
    assert ws[zero] == 2


def test_b3_spin_rep_weight_system():
    ws = weight_system(Irrep(B3, (0, 0, 1)))
    half = Fraction(1, 2)
    assert ws == {(half, half, half): 1}
    assert len(weyl_orbit(B3, (half, half, half))) == 8


@pytest.mark.parametrize(
    "rs,hw",
    [
        (G2, (0, 1)),
        (G2, (2, 0)),
        (G2, (1, 1)),
        (B3, (0, 0, 1)),
        (B3, (1, 0, 1)),
        (B3, (0, 1, 0)),
    ],
)
def test_freudenthal_against_kostant_formula(rs, hw):
    irr = Irrep(rs, hw)
    lam = irr.hw_orthogonal
    for mu, mult in weight_system(irr).items():
        assert kostant_multiplicity(rs, lam, mu) == mult, (hw, mu)


def test_freudenthal_totals_match_weyl_dimension():
    cases = [Irrep(G2, hw) for hw in G2_DIMS] + [Irrep(B3, hw) for hw in SPIN7_DIMS]
    rng = random.Random(99)
    for _ in range(20):
        rs = rng.choice([G2, B3])
        hw = tuple(rng.randint(0, 2) for _ in range(rs.rank))
        cases.append(Irrep(rs, hw))
    for irr in cases:
        rs = irr.root_system
        total = sum(
            m * len(weyl_orbit(rs, w)) for w, m in weight_system(irr).items()
        )
        assert total == dimension(irr), irr
        assert len(full_weights(irr)) == dimension(irr)


def test_casimir_base_values():
    assert casimir_base(trivial_irrep(G2)) == 0
    assert casimir_base(Irrep(G2, (1, 0))) == -6
    assert casimir_base(Irrep(B3, (0, 0, 1))) == Fraction(-21, 4)


G2_CASIMIRS = {
    (2, 0): Fraction(-28, 3),
    (0, 1): -8,
    (1, 0): -4,
    (1, 1): -14,
    (3, 0): -16,
}
SPIN7_CASIMIRS = {
    (0, 1, 0): -10,
    (0, 0, 1): Fraction(-21, 4),
    (2, 0, 0): -14,
    (0, 0, 2): -12,
    (1, 0, 1): Fraction(-49, 4),
    (0, 1, 1): Fraction(-69, 4),
    (1, 1, 0): -18,
    (1, 0, 2): -20,
    (2, 0, 1): Fraction(-85, 4),
    (0, 0, 3): Fraction(-81, 4),
}


def test_casimir_lambda2_tables():
    g2 = make_context("g2")
    for hw, want in G2_CASIMIRS.items():
        assert casimir_lambda2(g2, Irrep(G2, hw)) == want
    s7 = make_context("spin7")
    for hw, want in SPIN7_CASIMIRS.items():
        assert casimir_lambda2(s7, Irrep(B3, hw)) == want


def test_casimir_lambda2_of_holonomy_rep_closed_form():
    # c_T = -2 dim(g) / dim(T)
    g2 = make_context("g2")
    assert casimir_lambda2(g2, g2.holonomy_rep) == Fraction(-2 * 14, 7)
    s7 = make_context("spin7")
    assert casimir_lambda2(s7, s7.holonomy_rep) == Fraction(-2 * 21, 8)


def test_g2_casimir_closed_form_grid():
    g2 = make_context("g2")
    for a in range(5):
        for b in range(5):
            want = Fraction(-2, 3) * (
                a * a + 3 * b * b + 3 * a * b + 5 * a + 9 * b
            )
            assert casimir_lambda2(g2, Irrep(G2, (a, b))) == want


def test_spin7_lambda2_equals_base_casimir():
    s7 = make_context("spin7")
    rng = random.Random(4)
    for _ in range(20):
        hw = tuple(rng.randint(0, 3) for _ in range(3))
        irr = Irrep(B3, hw)
        assert casimir_lambda2(s7, irr) == casimir_base(irr)


def test_casimir_lambda2_invariant_under_form_scaling():
    # rebuild G2 with the form scaled by c; the ratio formula must not move
    for c in (Fraction(2), Fraction(1, 3), Fraction(5)):
        scaled_form = tuple(tuple(c * x for x in row) for row in G2.base_form)
        scaled_coeff = tuple(tuple(x / c for x in row) for row in G2._root_coeff)
        rs = replace(G2, base_form=scaled_form, _root_coeff=scaled_coeff)
        t = Irrep(rs, (1, 0))
        for hw in G2_CASIMIRS:
            assert casimir_lambda2_ratio(t, 14, Irrep(rs, hw)) == G2_CASIMIRS[hw]


def test_trivial_holonomy_rep_rejected():
    with pytest.raises(TrivialHolonomyRep):
        casimir_lambda2_ratio(trivial_irrep(G2), 14, Irrep(G2, (1, 0)))
