"""Chain bounds, the exact minimizer and its brute-force oracle, condition
(P), lattice points."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bswidth.bscurve import BSInput, bs_input
from bswidth.errors import CapExceeded, InputError
from bswidth.gkpoly import (
    build_chain,
    check_condition_p,
    iter_lattice_points,
    lattice_points,
    min_affine_brute_force,
    min_affine_over_chain,
)
from bswidth.rootsys import build_root_system, positive_root_count
from bswidth.words import random_reduced_word

A1 = build_root_system("A1")
A2 = build_root_system("A2")
A3 = build_root_system("A3")


def test_chain_construction():
    chain = build_chain(bs_input(A2, (1, 2), (1, 1)))
    a1, a2 = chain.forms
    assert a2.is_constant and a2.constant == 1
    assert a1.constant == 1 and a1.coeff(2) == 1  # A_1 = 1 + x_2

    chain = build_chain(bs_input(A2, (1, 2, 1), (1, 1, 3)))
    a1, a2, a3 = chain.forms
    assert a3.constant == 3
    # constant of A_2 sums only the later coefficients on the same letter
    assert a2.constant == 1 and a2.coeff(3) == 1
    assert a1.constant == 4 and a1.coeff(2) == 1 and a1.coeff(3) == -2

    chain = build_chain(bs_input(A1, (1,), (Fraction(7, 2),)))
    assert chain.forms[0].constant == Fraction(7, 2)


def test_minimizer_examples():
    chain = build_chain(bs_input(A2, (1, 2), (1, 1)))
    res = min_affine_over_chain(chain, 1)
    assert res.value == 1 and res.point == (0,)

    chain = build_chain(bs_input(A2, (1, 2, 1), (1, 1, 3)))
    res = min_affine_over_chain(chain, 1)
    assert res.value == -2 and res.point == (0, 3)

    # constant bound: empty attaining point
    chain = build_chain(bs_input(A3, (1, 3), (4, 9)))
    res = min_affine_over_chain(chain, 1)
    assert res.value == 4 and res.point == ()


def test_minimizer_index_range():
    chain = build_chain(bs_input(A2, (1, 2), (1, 1)))
    with pytest.raises(InputError):
        min_affine_over_chain(chain, 2)
    with pytest.raises(InputError):
        min_affine_over_chain(chain, 0)


def test_condition_p_examples():
    assert check_condition_p(build_chain(bs_input(A2, (1, 2), (1, 1)))).holds

    rep = check_condition_p(build_chain(bs_input(A2, (1, 2, 1), (1, 1, 3))))
    assert not rep.holds
    assert rep.witness.k == 1
    assert rep.witness.point == (0, 3) and rep.witness.value == -2
    assert rep.not_evaluated == ()
    # the passing bound above the failure is still reported
    assert rep.minima[0][0] == 2 and rep.minima[0][1] >= 0

    assert check_condition_p(build_chain(bs_input(A3, (1, 3), (5, 2)))).holds
    assert check_condition_p(build_chain(bs_input(A1, (1,), (3,)))).holds


def test_b2_chain_by_hand():
    # (2,1,2) in B2: A_1 = m_1 + m_3 + 2 x_2 - 2 x_3, so condition (P)
    # holds exactly when m_1 >= m_3
    b2 = build_root_system("B2")
    failing = check_condition_p(build_chain(bs_input(b2, (2, 1, 2), (1, 2, 3))))
    assert not failing.holds
    assert failing.witness.k == 1
    assert failing.witness.point == (0, 3) and failing.witness.value == -2

    holding = check_condition_p(build_chain(bs_input(b2, (2, 1, 2), (5, 1, 2))))
    assert holding.holds


def test_b2_width_routes_when_condition_p_holds():
    from bswidth.bott import caseline_width, degenerate_bott_tower, toric_width
    from bswidth.bscurve import gromov_width

    b2 = build_root_system("B2")
    inp = bs_input(b2, (2, 1, 2), (5, 1, 2))
    assert gromov_width(inp).width == 2
    assert caseline_width(inp) == 2
    tower, divisor = degenerate_bott_tower(inp)
    assert toric_width(tower, divisor) == (2, 3)


def test_condition_p_failure_above_the_bottom_skips_lower_bounds():
    # B2 chain failing at k=2: the k=1 minimum is uncertified and skipped
    rs = build_root_system("B2")
    rep = check_condition_p(build_chain(bs_input(rs, (1, 2, 1, 2), (1, 1, 1, 5))))
    assert not rep.holds
    assert rep.witness.k == 2
    assert rep.witness.point == (0, 5) and rep.witness.value == -4
    assert rep.not_evaluated == (1,)
    assert [k for k, _, _ in rep.minima] == [3, 2]


def test_minimizer_flags_malformed_region():
    from bswidth.errors import ChainRegionError
    from bswidth.gkpoly import AffineForm, GKChain

    hand = GKChain(2, (AffineForm((2,), (Fraction(-1),), Fraction(0)),
                       AffineForm((), (), Fraction(-1))))
    with pytest.raises(ChainRegionError):
        min_affine_over_chain(hand, 1)


def test_lattice_points_examples():
    chain = build_chain(bs_input(A2, (1, 2), (1, 1)))
    count, pts = lattice_points(chain, cap=100, collect=True)
    assert count == 5
    assert pts == [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)]

    count, _ = lattice_points(build_chain(bs_input(A1, (1,), (3,))), cap=100)
    assert count == 4

    with pytest.raises(CapExceeded):
        lattice_points(chain, cap=3)


def _box_count(chain) -> int:
    """Independent lattice oracle: scan a bounding box and test the
    inequality system directly."""
    r = chain.r
    box = [0] * (r + 1)
    for j in range(r, 0, -1):
        f = chain.form(j)
        ub = f.constant + sum(c * box[v] for v, c in zip(f.variables, f.coeffs) if c > 0)
        box[j] = max(0, math.floor(ub))
    count = 0
    for pt in itertools.product(*(range(box[j] + 1) for j in range(1, r + 1))):
        values = {j: pt[j - 1] for j in range(1, r + 1)}
        if all(0 <= pt[j - 1] <= chain.form(j).evaluate(values) for j in range(1, r + 1)):
            count += 1
    return count


def test_lattice_points_without_condition_p():
    # negative upper bounds truncate to empty ranges; value frozen from the
    # box-scan oracle below
    chain = build_chain(bs_input(A2, (1, 2, 1), (1, 1, 3)))
    count, _ = lattice_points(chain, cap=10_000)
    assert count == 39
    assert count == _box_count(chain)


TRIAL_TYPES = ("A2", "A3", "B2", "B3", "C3", "G2", "D4")


@st.composite
def chain_inputs(draw, max_len=6, m_hi=8):
    rs = build_root_system(draw(st.sampled_from(TRIAL_TYPES)))
    r = draw(st.integers(1, min(max_len, positive_root_count(rs))))
    word = random_reduced_word(rs, r, seed=draw(st.integers(0, 2 ** 20)))
    m = tuple(Fraction(draw(st.integers(1, m_hi)), draw(st.integers(1, 3)))
              for _ in range(r))
    return BSInput(rs, word, m)


@settings(deadline=None, max_examples=80)
@given(chain_inputs())
def test_minimizer_agrees_with_pattern_oracle(inp):
    chain = build_chain(inp)
    for k in range(chain.r - 1, 0, -1):
        fast = min_affine_over_chain(chain, k)
        slow = min_affine_brute_force(chain, k)
        assert fast.value == slow.value
        if fast.value < 0:
            break  # region below is not certified


@settings(deadline=None, max_examples=60)
@given(chain_inputs(), st.integers(1, 9), st.integers(1, 9))
def test_condition_p_scale_invariant(inp, p, q):
    a = Fraction(p, q)
    base = check_condition_p(build_chain(inp))
    scaled = check_condition_p(
        build_chain(BSInput(inp.rs, inp.word, tuple(a * x for x in inp.m))))
    assert base.holds == scaled.holds
    if base.witness is not None:
        assert scaled.witness.k == base.witness.k
        assert scaled.witness.value == a * base.witness.value
        assert scaled.witness.point == tuple(a * x for x in base.witness.point)


@st.composite
def small_chain_inputs(draw, max_len=3, m_hi=3):
    # bound growth compounds through the chain, so keep these tiny
    rs = build_root_system(draw(st.sampled_from(("A2", "A3", "B2"))))
    r = draw(st.integers(1, max_len))
    word = random_reduced_word(rs, r, seed=draw(st.integers(0, 2 ** 20)))
    m = tuple(Fraction(draw(st.integers(1, m_hi))) for _ in range(r))
    return BSInput(rs, word, m)


@settings(deadline=None, max_examples=40)
@given(small_chain_inputs(), st.data())
def test_lattice_count_monotone_in_m(inp, data):
    bumps = tuple(Fraction(data.draw(st.integers(0, 2))) for _ in range(inp.r))
    bigger = BSInput(inp.rs, inp.word, tuple(x + b for x, b in zip(inp.m, bumps)))
    small, _ = lattice_points(build_chain(inp), cap=100_000)
    large, _ = lattice_points(build_chain(bigger), cap=100_000)
    assert small <= large


@settings(deadline=None, max_examples=30)
@given(small_chain_inputs())
def test_streaming_order_is_deterministic(inp):
    chain = build_chain(inp)
    pts = list(iter_lattice_points(chain))
    assert pts == list(iter_lattice_points(chain))
    # x_r varies slowest
    tails = [p[::-1] for p in pts]
    assert tails == sorted(tails)
