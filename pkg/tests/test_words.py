"""Word model: grammar, invariants, normal forms, and rewriting transforms.

Rewrites whose correctness the letters alone cannot show (tau conjugators,
two-generator rewriting, block decompositions) are checked against two
independent image oracles: the strand permutation and unreduced Burau with
random rational parameters.
"""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_braid_word, random_sm_word
from smbraid.phi import PhiParams, phi_image_equal
from smbraid.reps import burau_unreduced, permutation_rep
from smbraid.words import (
    BraidWord,
    SMWord,
    conjugate,
    decompose_tau_blocks,
    defining_relations,
    empty_word,
    enumerate_braid_words,
    free_reduce,
    parse_word,
    permutation_image,
    shape_form,
    sigma,
    sigma_exponent_sum,
    sigma_inv,
    sigma_power,
    sm2_normal_form,
    tau,
    tau_conjugator,
    tau_count,
    tau_power,
    to_s1x_generators,
    word,
)


def oracles(n):
    return (
        (permutation_rep(n), PhiParams.of(1, -1, 0)),
        (burau_unreduced(n), PhiParams.of(2, -3, 7)),
    )


def images_equal(w1: SMWord, w2: SMWord) -> bool:
    return all(phi_image_equal(rep, params, w1, w2) for rep, params in oracles(w1.n))


# --- parsing and serialization -------------------------------------------------


def test_parse_examples():
    assert parse_word("t1 s1", 2).letters == (tau(1), sigma(1))
    assert parse_word("x", 3).letters == (sigma(1), sigma(2))
    assert parse_word("X", 3).letters == (sigma_inv(2), sigma_inv(1))
    with pytest.raises(ValueError):
        parse_word("s3", 3)
    with pytest.raises(ValueError):
        parse_word("y2", 3)
    with pytest.raises(ValueError):
        parse_word("s1", 1)


def test_parse_round_trip_never_folds_x():
    w = parse_word("x t1 X", 4)
    assert w.text() == "s1 s2 s3 t1 S3 S2 S1"
    assert parse_word(w.text(), 4) == w


def test_braid_word_downcast_and_inverse():
    w = parse_word("s1 S2", 3)
    assert isinstance(w, BraidWord)
    assert w.inverse().text() == "s2 S1"
    assert not isinstance(parse_word("t1", 3), BraidWord)
    with pytest.raises(ValueError):
        BraidWord(3, (tau(1),))


def test_letter_inverse():
    assert sigma(2).inverse() == sigma_inv(2)
    with pytest.raises(ValueError):
        tau(1).inverse()


# --- invariants -----------------------------------------------------------------


def test_invariant_examples():
    assert tau_count(parse_word("t1 s1", 2)) == 1
    assert tau_count(empty_word(2)) == 0
    assert sigma_exponent_sum(parse_word("s1 S1", 2)) == 0
    assert sigma_exponent_sum(parse_word("t1 s1 s1", 2)) == 2
    assert permutation_image(parse_word("s1", 2)) == (1, 0)
    assert permutation_image(parse_word("t1 t1", 2)) == (0, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_invariants_agree_on_all_relations(n):
    for inst in defining_relations(n):
        assert tau_count(inst.lhs) == tau_count(inst.rhs)
        assert sigma_exponent_sum(inst.lhs) == sigma_exponent_sum(inst.rhs)
        assert permutation_image(inst.lhs) == permutation_image(inst.rhs)


def test_relation_6_preserves_tau_count():
    lhs, rhs = parse_word("s1 s2 t1", 3), parse_word("t2 s1 s2", 3)
    assert tau_count(lhs) == tau_count(rhs) == 1


# --- SM_2 normal form -------------------------------------------------------------


def test_normal_form_examples():
    assert sm2_normal_form(parse_word("t1 s1", 2)) == sm2_normal_form(parse_word("s1 t1", 2))
    assert (sm2_normal_form(parse_word("t1 s1", 2)).p, sm2_normal_form(parse_word("t1 s1", 2)).q) == (1, 1)
    nf = sm2_normal_form(parse_word("S1 t1 s1", 2))
    assert (nf.p, nf.q) == (1, 0)
    # the separating pair tau_1 sigma_1 vs tau_1
    assert sm2_normal_form(parse_word("t1 s1", 2)) != sm2_normal_form(parse_word("t1", 2))
    with pytest.raises(ValueError):
        sm2_normal_form(parse_word("t1", 3))


sm2_words = st.lists(
    st.sampled_from([sigma(1), sigma_inv(1), tau(1)]), max_size=12
).map(lambda ls: word(2, tuple(ls)))


@given(sm2_words, sm2_words)
def test_normal_form_is_homomorphism(w1, w2):
    nf1, nf2, nf12 = sm2_normal_form(w1), sm2_normal_form(w2), sm2_normal_form(w1 * w2)
    assert (nf12.p, nf12.q) == (nf1.p + nf2.p, nf1.q + nf2.q)


# --- tau conjugators ----------------------------------------------------------------


def test_tau_conjugator_base_cases():
    assert tau_conjugator(1, 4).text() == ""
    assert tau_conjugator(2, 3).text() == "s1 s2"
    assert tau_conjugator(3, 4).text() == "s2 s3 s1 s2"
    with pytest.raises(ValueError):
        tau_conjugator(3, 3)


@pytest.mark.parametrize("n,i", [(3, 2), (4, 2), (4, 3), (5, 4)])
def test_tau_conjugator_images(n, i):
    w_i = tau_conjugator(i, n)
    rewritten = w_i * tau_power(n, 1, 1) * w_i.inverse()
    assert permutation_image(rewritten) == permutation_image(word(n, (tau(i),)))
    assert images_equal(word(n, (tau(i),)), rewritten)


# --- two-generator alphabet ----------------------------------------------------------


def test_s1x_examples():
    assert to_s1x_generators(parse_word("s1", 3)) == ("s1",)
    assert to_s1x_generators(parse_word("s2", 3)) == ("x", "s1", "X")
    toks = to_s1x_generators(parse_word("t2", 3))
    assert set(toks) <= {"s1", "S1", "x", "X", "t1"}


@pytest.mark.parametrize("n", [3, 4])
def test_s1x_preserves_images(n):
    rng = random.Random(7)
    for _ in range(25):
        w = random_sm_word(rng, n, 6)
        back = parse_word(" ".join(to_s1x_generators(w)), n)
        assert images_equal(w, back)
        assert tau_count(back) == tau_count(w)
        assert sigma_exponent_sum(back) == sigma_exponent_sum(w)


# --- block decomposition ----------------------------------------------------------------


def test_decompose_examples():
    form = decompose_tau_blocks(parse_word("s1 t1", 2))
    assert form.assemble() == parse_word("s1 t1", 2)
    assert form.tau_total() == 1

    form = decompose_tau_blocks(parse_word("t2", 3))
    assert form.prefix.text() == "s1 s2"
    assert [(r, u.text()) for r, u in form.blocks] == [(1, "S2 S1")]
    assert images_equal(parse_word("t2", 3), form.assemble())

    form = decompose_tau_blocks(empty_word(3))
    assert form.blocks == ()
    assert form.assemble() == empty_word(3)


@pytest.mark.parametrize("n", [2, 3])
def test_decompose_preserves_images_and_tau_count(n):
    rng = random.Random(11)
    for _ in range(30):
        w = random_sm_word(rng, n, 8)
        form = decompose_tau_blocks(w)
        assert form.tau_total() == tau_count(w)
        assert all(isinstance(u, BraidWord) for _, u in form.blocks)
        assert all(r >= 1 for r, _ in form.blocks)
        assert images_equal(w, form.assemble())


# --- kernel-power shape --------------------------------------------------------------------


def test_shape_examples():
    sf = shape_form(word(2, (tau(1),) * 3), 2, 0)
    assert [(r, m, u.text()) for r, m, u in sf.blocks] == [(1, 1, "")]

    sf = shape_form(tau_power(2, 1, 5) * sigma_power(2, 1, -10), 1, -2)
    assert [(r, m, u.text()) for r, m, u in sf.blocks] == [(0, 5, "")]

    sf = shape_form(word(2, (sigma(1),)), 3, 1)
    assert [(r, m, u.text()) for r, m, u in sf.blocks] == [(0, 0, "s1")]

    with pytest.raises(ValueError):
        shape_form(word(2, (tau(1),)), 0, 1)


@pytest.mark.parametrize("n,p,q", [(2, 1, -2), (2, 2, 0), (3, 2, 1), (3, 3, -1)])
def test_shape_preserves_images(n, p, q):
    rng = random.Random(5)
    for _ in range(20):
        w = random_sm_word(rng, n, 8)
        sf = shape_form(w, p, q)
        for r, m, _ in sf.blocks:
            assert 0 <= r < p and m >= 0
        assert images_equal(w, sf.assemble())


def test_strip_examples():
    sf = shape_form(word(2, (tau(1),) * 3), 2, 0)
    assert sf.strip() == word(2, (tau(1),))
    sf = shape_form(tau_power(2, 1, 5) * sigma_power(2, 1, -10), 1, -2)
    assert sf.strip() == empty_word(2)
    sf = shape_form(tau_power(3, 1, 2) * word(3, (sigma(2),)), 1, 0)
    assert sf.strip() == word(3, (sigma(2),))


# --- conjugation -------------------------------------------------------------------------------


def test_conjugate_examples():
    t1 = word(2, (tau(1),))
    assert conjugate(t1, empty_word(2)) == t1
    c = conjugate(t1, word(2, (sigma(1),)))
    assert c.text() == "s1 t1 S1"
    nf = sm2_normal_form(c)
    assert (nf.p, nf.q) == (1, 0)
    with pytest.raises(ValueError):
        conjugate(t1, empty_word(3))


def test_conjugate_image_is_conjugated_image():
    rep, params = oracles(3)[1]
    w = parse_word("t1 S1 S1", 3)
    u = word(3, (sigma(2),))
    from smbraid.phi import phi_eval
    from smbraid.reps import rep_eval

    conjugated = phi_eval(rep, params, conjugate(w, u))
    expected = rep_eval(rep, u) * phi_eval(rep, params, w) * rep_eval(rep, u.inverse())
    assert conjugated == expected


def test_conjugate_round_trip_up_to_free_reduction():
    rng = random.Random(3)
    for _ in range(25):
        w = random_sm_word(rng, 3, 6)
        u = random_braid_word(rng, 3, 4)
        back = conjugate(conjugate(w, u), u.inverse())
        assert free_reduce(back) == free_reduce(w)


def test_free_reduce_blocks_at_tau():
    w = parse_word("s1 t1 S1", 2)
    assert free_reduce(w) == w
    assert free_reduce(parse_word("s1 S1", 2)) == empty_word(2)
    assert free_reduce(parse_word("s1 s2 S2 S1 t1", 3)) == parse_word("t1", 3)


# --- enumeration -------------------------------------------------------------------------------


def test_enumeration_small_balls():
    ball1 = [w.text() for w in enumerate_braid_words(2, 1)]
    assert ball1 == ["", "s1", "S1"]
    ball2 = list(enumerate_braid_words(2, 2))
    assert [w.text() for w in ball2[3:]] == ["s1 s1", "S1 S1"]


def test_enumeration_count_matches_brute_force():
    # independent count: all words over 4 letters whose free reduction has full length
    import itertools

    from smbraid.words import braid_letters

    alphabet = braid_letters(3)
    expected = 0
    for length in range(3):
        for combo in itertools.product(alphabet, repeat=length):
            if len(free_reduce(BraidWord(3, combo))) == length:
                expected += 1
    assert expected == 17
    assert sum(1 for _ in enumerate_braid_words(3, 2)) == 17


def test_enumeration_is_freely_reduced_and_shortest_first():
    lengths = [len(w) for w in enumerate_braid_words(3, 3)]
    assert lengths == sorted(lengths)
    for w in enumerate_braid_words(3, 3):
        assert free_reduce(w) == w
