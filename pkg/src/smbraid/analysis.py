"""Mechanized faithfulness and kernel analysis for the extension family.

Everything here is bounded, exact evidence: the searches enumerate a finite
grid or word ball and report what they saw.  Absence of a hit is never a
proof, and every report carries its bounds and a `bounded` flag.

The kernel of a monoid homomorphism into an algebra is taken to be the
preimage of the algebra identity.  For monoids this can be trivial even when
the map is not injective, which is why unfaithfulness witnesses (two distinct
words with one image) are handled separately from kernel hits.

A witness is only ever constructed together with a machine-checked
distinctness certificate: one of the relation invariants (tau count, sigma
exponent sum, strand permutation, or the SM_2 normal form) must differ
between the two words, and their images must be exactly equal.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraElement, Matrix, element_key
from .phi import PhiParams, in_kernel, phi_eval, phi_image_equal, tau_image, tau_power_expand
from .reps import BraidRep, as_formal, burau_reduced, cyclic_rep, matrix_rep_from_images, rep_eval
from .scalars import (
    ScalarValue,
    as_scalar,
    format_scalar,
    is_one,
    is_unit,
    scalar_pow,
    unit_root_order,
)
from .words import (
    BraidWord,
    SMWord,
    conjugate,
    empty_word,
    enumerate_braid_words,
    permutation_image,
    sigma_exponent_sum,
    sigma_power,
    sm2_normal_form,
    tau_count,
    tau_power,
)

MODES = ("a00", "0b0", "00c")


def worker_count() -> int:
    """Worker cap for grid searches, from SMBRAID_THREADS (default 1)."""
    raw = os.environ.get("SMBRAID_THREADS", "1")
    try:
        count = int(raw)
    except ValueError as exc:
        raise ValueError(f"SMBRAID_THREADS must be an integer, got {raw!r}") from exc
    return max(1, count)


# --- distinctness certificates ---------------------------------------------------


@dataclass(frozen=True)
class DistinctnessCertificate:
    """An invariant that separates two words, proving them distinct in SM_n."""

    kind: str  # tau-count | sigma-exponent | permutation | sm2-normal-form
    left: object
    right: object

    def text(self) -> str:
        return f"{self.kind}: {self.left} != {self.right}"


def distinctness_certificate(w1: SMWord, w2: SMWord) -> DistinctnessCertificate | None:
    """First relation invariant separating w1 and w2, or None if all agree."""
    if w1.n != w2.n:
        raise ValueError(f"strand counts differ: {w1.n} vs {w2.n}")
    t1, t2 = tau_count(w1), tau_count(w2)
    if t1 != t2:
        return DistinctnessCertificate("tau-count", t1, t2)
    e1, e2 = sigma_exponent_sum(w1), sigma_exponent_sum(w2)
    if e1 != e2:
        return DistinctnessCertificate("sigma-exponent", e1, e2)
    p1, p2 = permutation_image(w1), permutation_image(w2)
    if p1 != p2:
        return DistinctnessCertificate("permutation", p1, p2)
    if w1.n == 2:
        n1, n2 = sm2_normal_form(w1), sm2_normal_form(w2)
        if n1 != n2:
            return DistinctnessCertificate("sm2-normal-form", (n1.p, n1.q), (n2.p, n2.q))
    return None


@dataclass(frozen=True)
class UnfaithfulnessWitness:
    """Two distinct words with exactly equal images under the given extension."""

    w1: SMWord
    w2: SMWord
    certificate: DistinctnessCertificate
    image: AlgebraElement
    params: PhiParams


def _make_witness(rep: BraidRep, params: PhiParams, w1: SMWord, w2: SMWord) -> UnfaithfulnessWitness:
    cert = distinctness_certificate(w1, w2)
    if cert is None:
        raise ValueError("words are not separated by any invariant; no distinctness certificate")
    img1 = phi_eval(rep, params, w1)
    img2 = phi_eval(rep, params, w2)
    if img1 != img2:
        raise ValueError("images differ; the pair is not a witness")
    return UnfaithfulnessWitness(w1, w2, cert, img1, params)


def _mode_params(mode: str, value: ScalarValue) -> PhiParams:
    if mode == "a00":
        return PhiParams.of(value, 0, 0)
    if mode == "0b0":
        return PhiParams.of(0, value, 0)
    if mode == "00c":
        return PhiParams.of(0, 0, value)
    raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _mode_braid_side(mode: str, n: int, r: int) -> BraidWord:
    # The braid word whose image matches tau_1^r when value**r == 1:
    # sigma_1^r for the a-slot, sigma_1^-r for the b-slot, the empty word
    # for the c-slot.
    if mode == "a00":
        return sigma_power(n, 1, r)
    if mode == "0b0":
        return sigma_power(n, 1, -r)
    return empty_word(n)


def root_of_unity_order(a: ScalarValue | int, r_max: int = 8) -> int | None:
    """Smallest 1 <= r <= r_max with a**r == 1, or None.

    For this scalar ring the answer is exact regardless of r_max (only 1 and
    -1 are roots of unity); the bound is kept for interface symmetry with the
    bounded searches.
    """
    a = as_scalar(a)
    if a == 0:
        raise ValueError("need a nonzero scalar")
    r = unit_root_order(a)
    if r is not None and r <= r_max:
        return r
    return None


def unit_power_witness(rep: BraidRep, mode: str, value: ScalarValue | int, r: int) -> UnfaithfulnessWitness:
    """Witness pair for a root-of-unity parameter: tau_1^r against the braid
    word with the same image (value**r == 1 required)."""
    value = as_scalar(value)
    if r < 1:
        raise ValueError("need r >= 1")
    if not is_one(scalar_pow(value, r)):
        raise ValueError(f"{format_scalar(value)}**{r} != 1")
    params = _mode_params(mode, value)
    w1 = tau_power(rep.n, 1, r)
    w2 = _mode_braid_side(mode, rep.n, r)
    return _make_witness(rep, params, w1, w2)


def find_scalar_witness(
    rep: BraidRep,
    mode: str,
    value: ScalarValue | int,
    s_max: int,
    len_max: int,
) -> tuple[BraidWord, int] | None:
    """Bounded search for a braid word v with rho(v) == value**(-s) * identity.

    Words are enumerated shortest first and deduplicated by the canonical key
    of their image (equal images explore identical futures, so pruning is
    complete).  Exponents are tried s = 1..s_max, then s = -1..-s_max, so the
    returned exponent is positive whenever a positive one exists in bounds.
    Absence of a hit is evidence only; the search is bounded.
    """
    value = as_scalar(value)
    if not is_unit(value):
        raise ValueError(f"need a unit, got {format_scalar(value)}")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    states: list[tuple[BraidWord, AlgebraElement]] = []
    seen: set[str] = set()
    for v in enumerate_braid_words(rep.n, len_max):
        img = rep_eval(rep, v)
        key = element_key(img)
        if key in seen:
            continue
        seen.add(key)
        states.append((v, img))
    one = rep.one()
    for s in list(range(1, s_max + 1)) + list(range(-1, -s_max - 1, -1)):
        target = one.scale(scalar_pow(value, -s))
        for v, img in states:
            if img == target:
                return v, s
    return None


def scalar_power_witness(
    rep: BraidRep,
    mode: str,
    value: ScalarValue | int,
    v: BraidWord,
    s: int,
) -> UnfaithfulnessWitness:
    """Witness pair built from rho(v) == value**(-s) * identity: tau_1^s v
    against the braid word with the same image.  A negative s is normalized
    by replacing (v, s) with (v^-1, -s)."""
    value = as_scalar(value)
    if s == 0:
        raise ValueError("need s != 0")
    if s < 0:
        v, s = v.inverse(), -s
    expected = rep.one().scale(scalar_pow(value, -s))
    if rep_eval(rep, v) != expected:
        raise ValueError("rho(v) is not the required scalar multiple of the identity")
    params = _mode_params(mode, value)
    w1 = tau_power(rep.n, 1, s) * v
    w2 = _mode_braid_side(mode, rep.n, s)
    return _make_witness(rep, params, w1, w2)


# --- SM_2 kernel searches ---------------------------------------------------------


@dataclass(frozen=True)
class KernelReport:
    """Bounded grid search over tau_1^p sigma_1^q, 0 <= p <= p_max, |q| <= q_max.

    Hits with p == 0 (possible only for an unfaithful rho) are recorded too;
    the minimal generator requires p >= 1, ties broken by smallest |q|, then
    positive q.  `cyclic_structure_verified` is None when there is no minimal
    generator to verify against.
    """

    p_max: int
    q_max: int
    hits: tuple[tuple[int, int], ...]
    minimal_generator: tuple[int, int] | None
    cyclic_structure_verified: bool | None
    bounded: bool = True

    def to_dict(self) -> dict:
        return {
            "bounds": {"p_max": self.p_max, "q_max": self.q_max},
            "bounded": self.bounded,
            "hits": [list(h) for h in self.hits],
            "minimal_generator": list(self.minimal_generator) if self.minimal_generator else None,
            "cyclic_ok": self.cyclic_structure_verified,
        }


def _hit_order(hit: tuple[int, int]) -> tuple[int, int, int]:
    p, q = hit
    return (p, abs(q), 0 if q > 0 else 1)


def kernel_search_sm2(rep: BraidRep, params: PhiParams, p_max: int, q_max: int) -> KernelReport:
    """All (p, q) in bounds with Phi(tau_1^p sigma_1^q) equal to the identity.

    The p = 0 row (q != 0) is scanned as well: any hit there is a braid word
    in the kernel and flags an unfaithful rho.  The trivial pair (0, 0) is
    never reported.  Rows are independent and may be scanned by several
    workers (SMBRAID_THREADS); the merged result is sorted by (p, |q|).
    """
    if rep.n != 2:
        raise ValueError(f"SM_2 kernel search needs n=2, got n={rep.n}")
    if p_max < 0 or q_max < 0:
        raise ValueError("bounds must be nonnegative")
    s_img = rep.image(1)
    s_inv = rep.image_inv(1)
    t_img = tau_image(rep, params, 1)

    row_heads = [rep.one()]
    for _ in range(p_max):
        row_heads.append(row_heads[-1] * t_img)

    def scan_row(p: int) -> list[tuple[int, int]]:
        row_hits = []
        cur = row_heads[p]
        if cur.is_identity() and p != 0:
            row_hits.append((p, 0))
        pos = cur
        neg = cur
        for q in range(1, q_max + 1):
            pos = pos * s_img
            neg = neg * s_inv
            if pos.is_identity():
                row_hits.append((p, q))
            if neg.is_identity():
                row_hits.append((p, -q))
        return row_hits

    workers = worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(scan_row, range(p_max + 1)))
    else:
        rows = [scan_row(p) for p in range(p_max + 1)]

    hits = tuple(sorted((h for row in rows for h in row), key=_hit_order))
    positive = [h for h in hits if h[0] >= 1]
    minimal = min(positive, key=_hit_order) if positive else None
    report = KernelReport(p_max, q_max, hits, minimal, None)
    if minimal is not None:
        report = KernelReport(p_max, q_max, hits, minimal, verify_cyclic_structure(report))
    return report


def verify_cyclic_structure(report: KernelReport) -> bool:
    """Desk-scale cyclicity: every hit must be a positive multiple of the
    minimal generator."""
    if report.minimal_generator is None:
        raise ValueError("report has no minimal generator")
    p0, q0 = report.minimal_generator
    for p, q in report.hits:
        if p == 0 or p % p0 != 0:
            return False
        m = p // p0
        if m < 1 or q != m * q0:
            return False
    return True


def nonscalar_power_check(rep: BraidRep, s_max: int) -> bool:
    """True iff no power rho(sigma_1)^s, 1 <= s <= s_max, is a scalar multiple
    of the identity.  (Negative exponents need no separate scan: the inverse
    of a scalar matrix is scalar.)"""
    if rep.backend != "matrix":
        raise ValueError(f"scalar-power check needs the matrix backend, got {rep.backend!r}")
    m: Matrix = rep.image(1)
    acc = Matrix.identity(m.dim)
    for _ in range(s_max):
        acc = acc * m
        if acc.scalar_multiple_of_identity() is not None:
            return False
    return True


def scalar_kernel_hits(params: PhiParams, d: ScalarValue | int, p_max: int, q_max: int) -> tuple[tuple[int, int], ...]:
    """All (p, q) in bounds, p >= 1, whose multinomial character value is 1."""
    d = as_scalar(d)
    if not is_unit(d):
        raise ValueError(f"need a unit d, got {format_scalar(d)}")
    hits = []
    for p in range(1, p_max + 1):
        for q in range(-q_max, q_max + 1):
            if is_one(tau_power_expand(params, d, p, q)):
                hits.append((p, q))
    return tuple(sorted(hits, key=_hit_order))


def scalar_kernel_criterion(params: PhiParams, d: ScalarValue | int, p_max: int, q_max: int) -> tuple[int, int] | None:
    """Smallest (p, q) with the multinomial sum equal to 1, ordered by
    (p, |q|, positive q first); None if no hit in bounds."""
    hits = scalar_kernel_hits(params, d, p_max, q_max)
    return hits[0] if hits else None


def compare_matrix_cyclic_kernels(
    m: Matrix,
    s: int,
    d_s: ScalarValue | int,
    params: PhiParams,
    p_max: int,
    q_max: int,
) -> tuple[KernelReport, KernelReport, bool]:
    """Run the SM_2 kernel search twice, with sigma_1 -> m as a matrix and
    with sigma_1 -> X in the twisted cyclic algebra X^s = d_s, and compare.

    Requires m^s == d_s * I with s minimal and m itself non-scalar, i.e. the
    hypotheses under which the cyclic algebra is the subalgebra generated by
    the image.
    """
    d_s = as_scalar(d_s)
    if s < 1:
        raise ValueError("need s >= 1")
    if m.scalar_multiple_of_identity() is not None:
        raise ValueError("generator image is already scalar; use a scalar character instead")
    acc = Matrix.identity(m.dim)
    for k in range(1, s + 1):
        acc = acc * m
        scalar = acc.scalar_multiple_of_identity()
        if k < s and scalar is not None:
            raise ValueError(f"m**{k} is already scalar; s={s} is not minimal")
        if k == s and (scalar is None or scalar != d_s):
            raise ValueError(f"m**{s} != d_s * identity")
    matrix_report = kernel_search_sm2(matrix_rep_from_images(2, [m]), params, p_max, q_max)
    cyclic_report = kernel_search_sm2(cyclic_rep(s, d_s), params, p_max, q_max)
    return matrix_report, cyclic_report, matrix_report.hits == cyclic_report.hits


def conjugation_kernel_check(
    rep: BraidRep,
    params: PhiParams,
    kernel_word: SMWord,
    conjugators: list[BraidWord] | tuple[BraidWord, ...],
) -> bool:
    """Whether every braid conjugate u w u^-1 of a kernel word stays in the
    kernel.  Raises if the input word is not in the kernel to begin with."""
    if not in_kernel(rep, params, kernel_word):
        raise ValueError("input word is not in the kernel")
    return all(in_kernel(rep, params, conjugate(kernel_word, u)) for u in conjugators)


# --- SM_3 equality oracle -----------------------------------------------------------


@lru_cache(maxsize=1)
def _sm3_oracle() -> tuple[BraidRep, PhiParams]:
    return as_formal(burau_reduced(3)), PhiParams.of(1, -1, 0)


def sm3_word_equality(w1: SMWord, w2: SMWord) -> bool:
    """Decide equality of SM_3 words through a faithful instance.

    Images are compared in the formal group algebra over the reduced Burau
    matrix group at parameters (1, -1, 0).  "False implies distinct" is
    unconditional; "true implies equal" rests on the cited faithfulness of
    this instance (Paris) and of reduced Burau for three strands.
    """
    if w1.n != 3 or w2.n != 3:
        raise ValueError(f"oracle is for n=3 words, got n={w1.n} and n={w2.n}")
    rep, params = _sm3_oracle()
    return phi_image_equal(rep, params, w1, w2)
