"""Kernel searches, unfaithfulness witnesses, and structure checks."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import random_braid_word
from smbraid.algebra import Matrix
from smbraid.analysis import (
    KernelReport,
    compare_matrix_cyclic_kernels,
    conjugation_kernel_check,
    distinctness_certificate,
    find_scalar_witness,
    kernel_search_sm2,
    nonscalar_power_check,
    root_of_unity_order,
    scalar_kernel_criterion,
    scalar_kernel_hits,
    scalar_power_witness,
    sm3_word_equality,
    unit_power_witness,
    verify_cyclic_structure,
)
from smbraid.phi import PhiParams, phi_eval
from smbraid.reps import burau_reduced, burau_unreduced, permutation_rep, scalar_char
from smbraid.scalars import T, scalar_neg
from smbraid.words import (
    defining_relations,
    empty_word,
    parse_word,
    sigma_power,
    tau_power,
)


def scalar_hits_oracle(a, b, c, d, p_max, q_max):
    """Independent grid scan: (a d + b d^-1 + c)^p d^q == 1 by plain Fractions."""
    base = a * d + b / d + c
    hits = set()
    for p in range(1, p_max + 1):
        for q in range(-q_max, q_max + 1):
            if base**p * Fraction(d) ** q == 1:
                hits.add((p, q))
    return hits


# --- roots of unity and witnesses ----------------------------------------------


def test_root_of_unity_order():
    assert root_of_unity_order(Fraction(-1)) == 2
    assert root_of_unity_order(Fraction(1)) == 1
    assert root_of_unity_order(Fraction(2)) is None
    assert root_of_unity_order(scalar_neg(T)) is None
    with pytest.raises(ValueError):
        root_of_unity_order(Fraction(0))


def test_unit_power_witness_a_mode():
    w = unit_power_witness(burau_reduced(3), "a00", Fraction(-1), 2)
    assert w.w1 == tau_power(3, 1, 2)
    assert w.w2 == sigma_power(3, 1, 2)
    assert w.certificate.kind == "tau-count"
    # both images equal rho(sigma_1^2) since (-1)^2 == 1
    from smbraid.reps import rep_eval

    assert w.image == rep_eval(burau_reduced(3), sigma_power(3, 1, 2))


def test_unit_power_witness_b_and_c_modes():
    wb = unit_power_witness(burau_reduced(3), "0b0", Fraction(-1), 2)
    assert wb.w2 == sigma_power(3, 1, -2)
    wc = unit_power_witness(burau_reduced(3), "00c", Fraction(1), 1)
    assert wc.w1 == tau_power(3, 1, 1)
    assert wc.w2 == empty_word(3)
    assert wc.image.is_identity()


def test_unit_power_witness_on_permutation_rep():
    w = unit_power_witness(permutation_rep(3), "a00", Fraction(-1), 2)
    assert w.image.is_identity()


def test_unit_power_witness_reduced_n2_image():
    # (-1)^2 * (-t)^2 == t^2 times the 1x1 identity
    w = unit_power_witness(burau_reduced(2), "a00", Fraction(-1), 2)
    assert w.image == Matrix([[T**2]])


def test_unit_power_witness_trivial_root():
    # a == 1 already collapses tau_1 onto sigma_1
    w = unit_power_witness(scalar_char(5, 2), "a00", Fraction(1), 1)
    assert w.w1 == tau_power(2, 1, 1) and w.w2 == sigma_power(2, 1, 1)


def test_unit_power_witness_rejects_non_root():
    with pytest.raises(ValueError):
        unit_power_witness(burau_reduced(3), "a00", Fraction(2), 2)
    with pytest.raises(ValueError):
        unit_power_witness(burau_reduced(3), "a00", Fraction(-1), 0)


def test_find_scalar_witness_scalar_char():
    hit = find_scalar_witness(scalar_char(2, 2), "a00", Fraction(2), 4, 4)
    assert hit is not None
    v, s = hit
    assert v == sigma_power(2, 1, -1) and s == 1


def test_find_scalar_witness_absent_on_burau():
    assert find_scalar_witness(burau_unreduced(2), "a00", Fraction(2), 4, 6) is None


def test_find_scalar_witness_absent_on_mismatched_bases():
    # 2^-s never equals a power of 3
    assert find_scalar_witness(scalar_char(3, 2), "a00", Fraction(2), 4, 8) is None


def test_scalar_power_witness_examples():
    rep = scalar_char(2, 2)
    w = scalar_power_witness(rep, "a00", Fraction(2), sigma_power(2, 1, -1), 1)
    assert w.w1 == parse_word("t1 S1", 2)
    assert w.w2 == sigma_power(2, 1, 1)
    assert w.image == rep.one().scale(2)

    w = scalar_power_witness(rep, "a00", Fraction(2), sigma_power(2, 1, -2), 2)
    assert w.w1 == parse_word("t1 t1 S1 S1", 2)
    assert w.image == rep.one().scale(4)


def test_scalar_power_witness_normalizes_negative_s():
    rep = scalar_char(2, 2)
    # rho(sigma_1) = 2 = 2^-(-1): the (v, s) = (s1, -1) arrangement
    w = scalar_power_witness(rep, "a00", Fraction(2), sigma_power(2, 1, 1), -1)
    assert w.w1 == parse_word("t1 S1", 2)


def test_scalar_power_witness_c_mode():
    rep = scalar_char(Fraction(1, 2), 2)
    w = scalar_power_witness(rep, "00c", Fraction(2), sigma_power(2, 1, 1), 1)
    assert w.w1 == parse_word("t1 s1", 2)
    assert w.w2 == empty_word(2)
    assert w.image.is_identity()


def test_scalar_power_witness_rejects_bad_precondition():
    rep = scalar_char(2, 2)
    with pytest.raises(ValueError):
        scalar_power_witness(rep, "a00", Fraction(2), empty_word(2), 1)
    with pytest.raises(ValueError):
        scalar_power_witness(rep, "a00", Fraction(2), sigma_power(2, 1, -1), 0)


def test_distinctness_certificate_kinds():
    assert distinctness_certificate(parse_word("t1", 2), empty_word(2)).kind == "tau-count"
    assert distinctness_certificate(parse_word("s1", 3), empty_word(3)).kind == "sigma-exponent"
    assert (
        distinctness_certificate(parse_word("s1 S2", 3), parse_word("s2 S1", 3)).kind
        == "permutation"
    )
    assert distinctness_certificate(parse_word("s1 s1", 2), parse_word("s1 s1", 2)) is None


# --- kernel searches ----------------------------------------------------------------


def test_kernel_search_geometric_progression():
    report = kernel_search_sm2(scalar_char(2, 2), PhiParams.of(2, 0, 0), 6, 12)
    assert set(report.hits) == scalar_hits_oracle(2, 0, 0, Fraction(2), 6, 12)
    assert report.hits == tuple((m, -2 * m) for m in range(1, 7))
    assert report.minimal_generator == (1, -2)
    assert report.cyclic_structure_verified is True


def test_kernel_search_even_powers():
    report = kernel_search_sm2(scalar_char(2, 2), PhiParams.of(1, 0, -3), 6, 12)
    assert set(report.hits) == scalar_hits_oracle(1, 0, -3, Fraction(2), 6, 12)
    assert report.hits == ((2, 0), (4, 0), (6, 0))
    assert report.minimal_generator == (2, 0)
    assert report.cyclic_structure_verified is True


def test_kernel_search_birman_instance_empty():
    report = kernel_search_sm2(burau_reduced(2), PhiParams.of(1, -1, 0), 4, 8)
    assert report.hits == ()
    assert report.minimal_generator is None
    assert report.cyclic_structure_verified is None
    assert report.bounded


def test_kernel_search_p0_row_flags_unfaithful_rho():
    report = kernel_search_sm2(permutation_rep(2), PhiParams.of(2, 3, -4), 2, 3)
    assert (0, 2) in report.hits and (0, -2) in report.hits


def test_kernel_search_requires_n2():
    with pytest.raises(ValueError):
        kernel_search_sm2(scalar_char(2, 3), PhiParams.of(1, 0, 0), 2, 2)


def test_kernel_hits_closed_under_addition():
    report = kernel_search_sm2(scalar_char(2, 2), PhiParams.of(2, 0, 0), 6, 12)
    hits = set(report.hits)
    for p1, q1 in hits:
        for p2, q2 in hits:
            if p1 + p2 <= 6 and abs(q1 + q2) <= 12:
                assert (p1 + p2, q1 + q2) in hits


def test_verify_cyclic_structure():
    ok = KernelReport(6, 12, ((1, -2), (2, -4), (3, -6)), (1, -2), None)
    assert verify_cyclic_structure(ok)
    ok2 = KernelReport(6, 12, ((2, 0), (4, 0)), (2, 0), None)
    assert verify_cyclic_structure(ok2)
    bad = KernelReport(6, 12, ((2, 0), (3, 0)), (2, 0), None)
    assert not verify_cyclic_structure(bad)
    with pytest.raises(ValueError):
        verify_cyclic_structure(KernelReport(6, 12, (), None, None))


def test_nonscalar_power_check():
    assert nonscalar_power_check(burau_unreduced(2), 8)
    from smbraid.reps import matrix_rep_from_images

    rep = matrix_rep_from_images(2, [Matrix([[0, -2], [1, 0]])])
    assert not nonscalar_power_check(rep, 2)
    ident = matrix_rep_from_images(2, [Matrix.identity(2)])
    assert not nonscalar_power_check(ident, 1)
    with pytest.raises(ValueError):
        nonscalar_power_check(permutation_rep(2), 2)


def test_scalar_kernel_criterion_examples():
    assert scalar_kernel_criterion(PhiParams.of(2, 0, 0), Fraction(2), 6, 12) == (1, -2)
    assert scalar_kernel_criterion(PhiParams.of(1, 0, -3), Fraction(2), 6, 12) == (2, 0)
    assert scalar_kernel_criterion(PhiParams.of(1, -1, 0), scalar_neg(T), 6, 12) is None


def test_scalar_criterion_agrees_with_kernel_search():
    rng = random.Random(43)
    ds = [Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(-3, 2)]
    for _ in range(6):
        params = PhiParams.of(
            Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4))
        )
        for d in ds:
            hits = scalar_kernel_hits(params, d, 4, 6)
            report = kernel_search_sm2(scalar_char(d, 2), params, 4, 6)
            assert hits == tuple(h for h in report.hits if h[0] >= 1)
            assert scalar_kernel_criterion(params, d, 4, 6) == report.minimal_generator


# --- matrix vs cyclic comparison -------------------------------------------------------


def test_compare_backends_identity_instance():
    m = Matrix([[0, -2], [1, 0]])
    mr, cr, equal = compare_matrix_cyclic_kernels(m, 2, Fraction(-2), PhiParams.of(1, 2, 1), 5, 6)
    assert equal
    assert mr.minimal_generator == (1, 0) and cr.minimal_generator == (1, 0)


def test_compare_backends_empty_instance():
    m = Matrix([[0, -2], [1, 0]])
    mr, cr, equal = compare_matrix_cyclic_kernels(m, 2, Fraction(-2), PhiParams.of(1, -1, 0), 5, 6)
    assert equal and mr.hits == () and cr.hits == ()


def test_compare_backends_pure_c_instance():
    m = Matrix([[0, -2], [1, 0]])
    mr, cr, equal = compare_matrix_cyclic_kernels(m, 2, Fraction(-2), PhiParams.of(0, 0, 1), 5, 6)
    assert equal and (1, 0) in mr.hits


def test_compare_backends_validates_hypotheses():
    m = Matrix([[0, -2], [1, 0]])
    with pytest.raises(ValueError):
        compare_matrix_cyclic_kernels(m, 2, Fraction(5), PhiParams.of(1, 0, 0), 3, 3)
    with pytest.raises(ValueError):
        compare_matrix_cyclic_kernels(Matrix.identity(2).scale(2), 1, Fraction(2), PhiParams.of(1, 0, 0), 3, 3)
    with pytest.raises(ValueError):
        # s not minimal: m^2 = -2 I already scalar, so s = 4 must be rejected
        compare_matrix_cyclic_kernels(m, 4, Fraction(4), PhiParams.of(1, 0, 0), 3, 3)


# --- conjugation closure ------------------------------------------------------------------


def test_conjugation_keeps_kernel_scalar_char():
    rng = random.Random(47)
    rep = scalar_char(2, 3)
    params = PhiParams.of(2, 0, 0)
    v = parse_word("t1 S1 S1", 3)
    conjugators = [random_braid_word(rng, 3, 6) for _ in range(50)]
    assert conjugation_kernel_check(rep, params, v, conjugators)
    assert conjugation_kernel_check(rep, params, v, [empty_word(3)])


def test_conjugation_check_rejects_non_kernel_word():
    rep = scalar_char(2, 3)
    params = PhiParams.of(2, 0, 0)
    assert phi_eval(rep, params, parse_word("t1", 3)) == rep.one().scale(4)
    with pytest.raises(ValueError):
        conjugation_kernel_check(rep, params, parse_word("t1", 3), [empty_word(3)])


# --- SM_3 oracle -------------------------------------------------------------------------


def test_sm3_oracle_validates_defining_relations():
    for inst in defining_relations(3):
        assert sm3_word_equality(inst.lhs, inst.rhs)


def test_sm3_oracle_separates_invariant_distinguished_pairs():
    pairs = [
        ("t1", "s1"),
        ("t1", ""),
        ("s1", "s2"),
        ("s1 s1", "s1"),
        ("t1 s1", "t1"),
        ("t2", "t1 t1"),
        ("x", "X"),
        ("s1 s2", "s2 s1"),
    ]
    for a, b in pairs:
        w1, w2 = parse_word(a, 3), parse_word(b, 3)
        assert distinctness_certificate(w1, w2) is not None
        assert not sm3_word_equality(w1, w2)


def test_sm3_oracle_equal_after_rewriting():
    w = parse_word("t2 s1", 3)
    from smbraid.words import decompose_tau_blocks

    assert sm3_word_equality(w, decompose_tau_blocks(w).assemble())


def test_sm3_oracle_rejects_other_n():
    with pytest.raises(ValueError):
        sm3_word_equality(parse_word("t1", 2), parse_word("t1", 2))


def test_sm3_oracle_confirms_rewrites_on_random_words():
    from conftest import random_sm_word
    from smbraid.words import decompose_tau_blocks, shape_form

    rng = random.Random(53)
    for _ in range(10):
        w = random_sm_word(rng, 3, 5)
        assert sm3_word_equality(w, decompose_tau_blocks(w).assemble())
        assert sm3_word_equality(w, shape_form(w, 2, -1).assemble())


# --- worker configuration -----------------------------------------------------------------


def test_thread_cap_preserves_results(monkeypatch):
    baseline = kernel_search_sm2(scalar_char(2, 2), PhiParams.of(2, 0, 0), 6, 12)
    monkeypatch.setenv("SMBRAID_THREADS", "3")
    threaded = kernel_search_sm2(scalar_char(2, 2), PhiParams.of(2, 0, 0), 6, 12)
    assert threaded == baseline


def test_thread_cap_rejects_garbage(monkeypatch):
    monkeypatch.setenv("SMBRAID_THREADS", "lots")
    with pytest.raises(ValueError):
        kernel_search_sm2(scalar_char(2, 2), PhiParams.of(2, 0, 0), 1, 1)
