"""The extension family Phi_{a,b,c} of a braid representation to SM_n.

Given a braid representation rho and scalars a, b, c, the extension sends
sigma letters to their rho-images and every singular generator to

    tau_i  ->  a * rho(sigma_i) + b * rho(sigma_i)^-1 + c * 1,

where 1 is the algebra identity of the backend.  Evaluation is a strict
left-to-right product with no reordering, so a failed comparison localizes to
a letter position.

`check_relations` verifies all seven defining relation families on a given
(representation, parameters) pair by exact evaluation of both sides, and the
two `tau_power_*` functions compute the scalar value of tau_1^p sigma_1^q
under a scalar character d by multinomial expansion and by direct powering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraElement
from .reps import BraidRep
from .scalars import (
    ScalarValue,
    as_scalar,
    format_scalar,
    is_unit,
    multinomial_coeff,
    parse_scalar,
    scalar_add,
    scalar_invert,
    scalar_mul,
    scalar_pow,
)
from .words import LetterKind, SMWord, defining_relations


@dataclass(frozen=True)
class PhiParams:
    a: ScalarValue
    b: ScalarValue
    c: ScalarValue

    @staticmethod
    def of(a: ScalarValue | int, b: ScalarValue | int, c: ScalarValue | int) -> "PhiParams":
        return PhiParams(as_scalar(a), as_scalar(b), as_scalar(c))

    @staticmethod
    def parse(a: str, b: str, c: str) -> "PhiParams":
        return PhiParams(parse_scalar(a), parse_scalar(b), parse_scalar(c))

    def text(self) -> str:
        return f"({format_scalar(self.a)}, {format_scalar(self.b)}, {format_scalar(self.c)})"


def tau_image(rep: BraidRep, params: PhiParams, i: int) -> AlgebraElement:
    """a * rho(sigma_i) + b * rho(sigma_i)^-1 + c * identity."""
    return (
        rep.image(i).scale(params.a)
        + rep.image_inv(i).scale(params.b)
        + rep.one().scale(params.c)
    )


def phi_eval(rep: BraidRep, params: PhiParams, w: SMWord) -> AlgebraElement:
    if w.n != rep.n:
        raise ValueError(f"word has n={w.n}, representation has n={rep.n}")
    acc = rep.one()
    for letter in w:
        if letter.kind is LetterKind.SIGMA:
            acc = acc * rep.image(letter.index)
        elif letter.kind is LetterKind.SIGMA_INV:
            acc = acc * rep.image_inv(letter.index)
        else:
            acc = acc * tau_image(rep, params, letter.index)
    return acc


def phi_image_equal(rep: BraidRep, params: PhiParams, w1: SMWord, w2: SMWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"strand counts differ: {w1.n} vs {w2.n}")
    return phi_eval(rep, params, w1) == phi_eval(rep, params, w2)


def in_kernel(rep: BraidRep, params: PhiParams, w: SMWord) -> bool:
    """Whether the image of w is the algebra identity."""
    return phi_eval(rep, params, w).is_identity()


@dataclass(frozen=True)
class RelationCheck:
    family: int
    name: str
    indices: tuple[int, ...]
    lhs: SMWord
    rhs: SMWord
    passed: bool


@dataclass(frozen=True)
class RelationReport:
    n: int
    rep_name: str
    params: PhiParams
    checks: tuple[RelationCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def families_passed(self) -> int:
        """Number of relation families (out of 7) with no failing instance;
        families with no instance at this n pass vacuously."""
        bad = {c.family for c in self.failures()}
        return 7 - len(bad)

    def format_text(self) -> str:
        lines = [f"{self.families_passed()}/7 relation families pass"]
        for c in self.checks:
            status = "ok" if c.passed else "FAIL"
            lines.append(
                f"  ({c.family}) {c.name} {c.indices}: "
                f"{c.lhs.text()!r} vs {c.rhs.text()!r} ... {status}"
            )
        return "\n".join(lines)


def check_relations(rep: BraidRep, params: PhiParams) -> RelationReport:
    """Evaluate both sides of every defining relation instance, exactly."""
    checks = []
    for inst in defining_relations(rep.n):
        passed = phi_image_equal(rep, params, inst.lhs, inst.rhs)
        checks.append(
            RelationCheck(inst.family, inst.name, inst.indices, inst.lhs, inst.rhs, passed)
        )
    return RelationReport(rep.n, rep.name, params, tuple(checks))


def tau_power_expand(params: PhiParams, d: ScalarValue | int, p: int, q: int) -> ScalarValue:
    """Scalar image of tau_1^p sigma_1^q under the character sigma_1 -> d:

        sum over i+j+k = p of  p!/(i! j! k!) * a^i b^j c^k * d^(i - j + q).
    """
    d = as_scalar(d)
    if p < 0:
        raise ValueError("need p >= 0")
    if not is_unit(d):
        raise ValueError(f"need a unit d, got {format_scalar(d)}")
    total: ScalarValue = as_scalar(0)
    for i in range(p + 1):
        for j in range(p - i + 1):
            k = p - i - j
            coeff = multinomial_coeff(p, i, j, k)
            term = scalar_mul(
                coeff,
                scalar_mul(
                    scalar_mul(scalar_pow(params.a, i), scalar_pow(params.b, j)),
                    scalar_mul(scalar_pow(params.c, k), scalar_pow(d, i - j + q)),
                ),
            )
            total = scalar_add(total, term)
    return total


def tau_power_direct(params: PhiParams, d: ScalarValue | int, p: int, q: int) -> ScalarValue:
    """Independent evaluation of the same scalar: (a d + b d^-1 + c)^p d^q by
    repeated multiplication."""
    d = as_scalar(d)
    if p < 0:
        raise ValueError("need p >= 0")
    if not is_unit(d):
        raise ValueError(f"need a unit d, got {format_scalar(d)}")
    base = scalar_add(
        scalar_add(scalar_mul(params.a, d), scalar_mul(params.b, scalar_invert(d))),
        params.c,
    )
    acc: ScalarValue = as_scalar(1)
    for _ in range(p):
        acc = scalar_mul(acc, base)
    return scalar_mul(acc, scalar_pow(d, q))
