"""Words in the braid group B_n and the singular braid monoid SM_n.

B_n is generated by sigma_1 .. sigma_{n-1} subject to the braid relation
``sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}`` and far
commutation; SM_n adds the singular generators tau_1 .. tau_{n-1} (which have
no inverses) and five more relation families mixing sigma and tau letters.

Words are immutable letter sequences and are never normalized behind the
caller's back: every rewriting operation returns a new word whose letter
sequence documents the rewrite, except for explicit `free_reduce` calls and
the freely-reduced enumeration stream.

Token grammar (whitespace separated): ``s<k>`` = sigma_k, ``S<k>`` =
sigma_k^-1, ``t<k>`` = tau_k, ``x`` = sigma_1 ... sigma_{n-1}, ``X`` = its
inverse.  `x`/`X` expand at parse time; serialization never re-folds them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class LetterKind(Enum):
    SIGMA = "s"
    SIGMA_INV = "S"
    TAU = "t"


@dataclass(frozen=True)
class GenLetter:
    """One generator occurrence: a sigma (either sign) or a tau at a strand index."""

    kind: LetterKind
    index: int  # 1-based strand position, valid range 1 .. n-1

    def inverse(self) -> "GenLetter":
        if self.kind is LetterKind.SIGMA:
            return GenLetter(LetterKind.SIGMA_INV, self.index)
        if self.kind is LetterKind.SIGMA_INV:
            return GenLetter(LetterKind.SIGMA, self.index)
        raise ValueError("tau letters have no inverse")

    @property
    def is_tau(self) -> bool:
        return self.kind is LetterKind.TAU

    def token(self) -> str:
        return f"{self.kind.value}{self.index}"


def sigma(i: int) -> GenLetter:
    return GenLetter(LetterKind.SIGMA, i)


def sigma_inv(i: int) -> GenLetter:
    return GenLetter(LetterKind.SIGMA_INV, i)


def tau(i: int) -> GenLetter:
    return GenLetter(LetterKind.TAU, i)


@dataclass(frozen=True)
class SMWord:
    """A word in SM_n: ambient strand count plus a finite letter sequence."""

    n: int
    letters: tuple[GenLetter, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        for letter in self.letters:
            if not 1 <= letter.index <= self.n - 1:
                raise ValueError(f"letter {letter.token()} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GenLetter]:
        return iter(self.letters)

    def __mul__(self, other: "SMWord") -> "SMWord":
        if not isinstance(other, SMWord):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"strand counts differ: {self.n} vs {other.n}")
        return word(self.n, self.letters + other.letters)

    @property
    def is_braid(self) -> bool:
        return not any(letter.is_tau for letter in self.letters)

    def text(self) -> str:
        return " ".join(letter.token() for letter in self.letters)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {self.text()!r})"


@dataclass(frozen=True)
class BraidWord(SMWord):
    """An SMWord with no tau letters; closed under inversion."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_braid:
            raise ValueError("braid word contains a tau letter")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(l.inverse() for l in reversed(self.letters)))


def word(n: int, letters: Iterable[GenLetter] = ()) -> SMWord:
    """Build an SMWord, downcasting to BraidWord when tau-free."""
    letters = tuple(letters)
    if any(l.is_tau for l in letters):
        return SMWord(n, letters)
    return BraidWord(n, letters)


def empty_word(n: int) -> BraidWord:
    return BraidWord(n, ())


def sigma_power(n: int, i: int, e: int) -> BraidWord:
    """sigma_i**e as a literal word (inverse letters for e < 0)."""
    letter = sigma(i) if e >= 0 else sigma_inv(i)
    return BraidWord(n, (letter,) * abs(e))


def tau_power(n: int, i: int, e: int) -> SMWord:
    if e < 0:
        raise ValueError("tau letters have no inverse")
    return word(n, (tau(i),) * e)


def parse_word(text: str, n: int) -> SMWord:
    """Parse the token grammar; `x`/`X` expand to the full twist word."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    letters: list[GenLetter] = []
    for token in text.split():
        if token == "x":
            letters.extend(sigma(i) for i in range(1, n))
            continue
        if token == "X":
            letters.extend(sigma_inv(i) for i in range(n - 1, 0, -1))
            continue
        head, tail = token[0], token[1:]
        if head not in ("s", "S", "t") or not tail.isdigit():
            raise ValueError(f"unknown token {token!r}")
        index = int(tail)
        if not 1 <= index <= n - 1:
            raise ValueError(f"index out of range in token {token!r} for n={n}")
        letters.append(GenLetter(LetterKind(head), index))
    return word(n, letters)


# --- relation-invariant statistics ------------------------------------------


def tau_count(w: SMWord) -> int:
    """Number of tau letters; invariant under all seven relation families."""
    return sum(1 for letter in w if letter.is_tau)


def sigma_exponent_sum(w: SMWord) -> int:
    """Signed sigma letter count; a second relation invariant."""
    total = 0
    for letter in w:
        if letter.kind is LetterKind.SIGMA:
            total += 1
        elif letter.kind is LetterKind.SIGMA_INV:
            total -= 1
    return total


def permutation_image(w: SMWord) -> tuple[int, ...]:
    """Image in the symmetric group; every letter (tau included) acts as the
    transposition of its two strands.  Letters act left to right."""
    perm = list(range(w.n))
    for letter in w:
        i = letter.index - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    return tuple(perm)


@dataclass(frozen=True)
class SM2NormalForm:
    """The complete invariant of SM_2 = N x Z: (tau count, sigma exponent)."""

    p: int
    q: int


def sm2_normal_form(w: SMWord) -> SM2NormalForm:
    """Normal form tau_1^p sigma_1^q of an SM_2 word.

    sigma_1 and tau_1 commute, so SM_2 is the free commutative product of one
    N-generator and one Z-generator and the pair (p, q) decides word equality.
    """
    if w.n != 2:
        raise ValueError(f"normal form is defined for n=2 only, got n={w.n}")
    return SM2NormalForm(tau_count(w), sigma_exponent_sum(w))


# --- rewriting ---------------------------------------------------------------


def tau_conjugator(i: int, n: int) -> BraidWord:
    """The braid word w_i with tau_i = w_i tau_1 w_i^-1.

    w_1 is empty; sliding tau through crossings gives the recursion
    tau_{i+1} = (sigma_i sigma_{i+1}) tau_i (sigma_i sigma_{i+1})^-1, hence
    w_{i+1} = sigma_i sigma_{i+1} w_i.
    """
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range for n={n}")
    letters: list[GenLetter] = []
    for j in range(i - 1, 0, -1):
        letters.extend((sigma(j), sigma(j + 1)))
    return BraidWord(n, tuple(letters))


def _sigma_to_s1x(letter: GenLetter) -> list[str]:
    i = letter.index
    core = "s1" if letter.kind is LetterKind.SIGMA else "S1"
    return ["x"] * (i - 1) + [core] + ["X"] * (i - 1)


def to_s1x_generators(w: SMWord) -> tuple[str, ...]:
    """Rewrite over the two-generator-plus-singular alphabet {s1, S1, x, X, t1}.

    Uses sigma_i = x^(i-1) sigma_1 x^-(i-1) and tau_i = w_i tau_1 w_i^-1 with
    the conjugator's own sigma letters re-expressed the same way.  Parsing the
    returned tokens back (at the same n) yields a word with the same image
    under every representation.
    """
    tokens: list[str] = []
    for letter in w:
        if not letter.is_tau:
            tokens.extend(_sigma_to_s1x(letter))
            continue
        conj = tau_conjugator(letter.index, w.n)
        for braid_letter in conj:
            tokens.extend(_sigma_to_s1x(braid_letter))
        tokens.append("t1")
        for braid_letter in conj.inverse():
            tokens.extend(_sigma_to_s1x(braid_letter))
    return tuple(tokens)


def free_reduce(w: SMWord) -> SMWord:
    """Cancel adjacent sigma/sigma^-1 pairs; tau letters block cancellation."""
    stack: list[GenLetter] = []
    for letter in w:
        if stack and not letter.is_tau and not stack[-1].is_tau and stack[-1] == letter.inverse():
            stack.pop()
        else:
            stack.append(letter)
    return word(w.n, stack)


def conjugate(w: SMWord, u: BraidWord) -> SMWord:
    """u * w * u^-1, literally concatenated."""
    if w.n != u.n:
        raise ValueError(f"strand counts differ: {w.n} vs {u.n}")
    return u * w * u.inverse()


@dataclass(frozen=True)
class TauBlockForm:
    """A word rewritten as  prefix . tau_1^{r_1} u_1 ... tau_1^{r_k} u_k.

    `prefix` collects any leading braid letters (kept explicit rather than
    conjugated away, so the rewrite is total and image-preserving); each block
    is a run of tau_1 letters followed by a braid tail, so every r_i >= 1.
    """

    n: int
    prefix: BraidWord
    blocks: tuple[tuple[int, BraidWord], ...]

    def assemble(self) -> SMWord:
        out: SMWord = self.prefix
        for r, u in self.blocks:
            out = out * tau_power(self.n, 1, r) * u
        return out

    def tau_total(self) -> int:
        return sum(r for r, _ in self.blocks)


def decompose_tau_blocks(w: SMWord) -> TauBlockForm:
    """Rewrite w so the only singular letter is tau_1, grouped into blocks.

    Each tau_i is replaced by w_i tau_1 w_i^-1 (an equality that follows from
    the sliding relations), so the assembled form has the same image as w
    under every representation and the same tau count.
    """
    expanded: list[GenLetter] = []
    for letter in w:
        if not letter.is_tau:
            expanded.append(letter)
            continue
        conj = tau_conjugator(letter.index, w.n)
        expanded.extend(conj.letters)
        expanded.append(tau(1))
        expanded.extend(conj.inverse().letters)

    pos = 0
    while pos < len(expanded) and not expanded[pos].is_tau:
        pos += 1
    prefix = BraidWord(w.n, tuple(expanded[:pos]))

    blocks: list[tuple[int, BraidWord]] = []
    while pos < len(expanded):
        r = 0
        while pos < len(expanded) and expanded[pos].is_tau:
            r += 1
            pos += 1
        start = pos
        while pos < len(expanded) and not expanded[pos].is_tau:
            pos += 1
        blocks.append((r, BraidWord(w.n, tuple(expanded[start:pos]))))
    return TauBlockForm(w.n, prefix, tuple(blocks))


@dataclass(frozen=True)
class ShapeForm:
    """Kernel-power shape  tau_1^{r_i} v^{m_i} u_i ...  with
    v = tau_1^p sigma_1^q and 0 <= r_i < p; a leading braid segment appears
    as a (0, 0, u) block."""

    n: int
    p: int
    q: int
    blocks: tuple[tuple[int, int, BraidWord], ...]

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("reference pair needs p >= 1")
        for r, m, _ in self.blocks:
            if not (0 <= r < self.p and m >= 0):
                raise ValueError(f"block ({r}, {m}) violates 0 <= r < p, m >= 0")

    def generator_word(self) -> SMWord:
        return tau_power(self.n, 1, self.p) * sigma_power(self.n, 1, self.q)

    def assemble(self) -> SMWord:
        v = self.generator_word()
        out: SMWord = empty_word(self.n)
        for r, m, u in self.blocks:
            out = out * tau_power(self.n, 1, r)
            for _ in range(m):
                out = out * v
            out = out * u
        return out

    def strip(self) -> SMWord:
        """Drop every v^{m_i} factor.

        When v lies in the kernel of the representation under test, the
        stripped word has the same image as the assembled one.
        """
        out: SMWord = empty_word(self.n)
        for r, _, u in self.blocks:
            out = out * tau_power(self.n, 1, r) * u
        return out


def shape_form(w: SMWord, p: int, q: int) -> ShapeForm:
    """Split each tau_1 run of the block form of w against v = tau_1^p sigma_1^q.

    A run tau_1^s becomes tau_1^{s mod p} v^{s div p} sigma_1^{-(s div p) q},
    with the sigma correction merged (freely reduced) into the block's braid
    tail.  The result assembles to a word with the same image as w under
    every representation, because tau_1 and sigma_1 commute.
    """
    if p < 1:
        raise ValueError("need p >= 1")
    form = decompose_tau_blocks(w)
    blocks: list[tuple[int, int, BraidWord]] = []
    if len(form.prefix):
        blocks.append((0, 0, form.prefix))
    for s, u in form.blocks:
        m, r = divmod(s, p)
        merged = free_reduce(sigma_power(w.n, 1, -m * q) * u)
        blocks.append((r, m, BraidWord(w.n, merged.letters)))
    return ShapeForm(w.n, p, q, tuple(blocks))


def braid_letters(n: int) -> tuple[GenLetter, ...]:
    """Alphabet sigma_1, sigma_1^-1, ..., sigma_{n-1}, sigma_{n-1}^-1."""
    out: list[GenLetter] = []
    for i in range(1, n):
        out.append(sigma(i))
        out.append(sigma_inv(i))
    return tuple(out)


def enumerate_braid_words(n: int, max_len: int) -> Iterator[BraidWord]:
    """All freely reduced braid words of length <= max_len, shortest first."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    alphabet = braid_letters(n)
    level: list[tuple[GenLetter, ...]] = [()]
    yield BraidWord(n, ())
    for _ in range(max_len):
        next_level: list[tuple[GenLetter, ...]] = []
        for prefix in level:
            for letter in alphabet:
                if prefix and prefix[-1] == letter.inverse():
                    continue
                letters = prefix + (letter,)
                next_level.append(letters)
                yield BraidWord(n, letters)
        level = next_level


# --- defining relations -------------------------------------------------------


@dataclass(frozen=True)
class RelationInstance:
    family: int
    name: str
    indices: tuple[int, ...]
    lhs: SMWord
    rhs: SMWord


_FAMILY_NAMES = {
    1: "braid",
    2: "sigma far commutation",
    3: "tau far commutation",
    4: "tau-sigma far commutation",
    5: "tau-sigma same-index commutation",
    6: "left slide",
    7: "right slide",
}

RELATION_FAMILIES = tuple(sorted(_FAMILY_NAMES))


def defining_relations(n: int, families: Iterable[int] = RELATION_FAMILIES) -> Iterator[RelationInstance]:
    """All instances of the seven defining relation families at strand count n."""
    for family in families:
        name = _FAMILY_NAMES[family]
        if family == 1:
            for i in range(1, n - 1):
                yield RelationInstance(
                    1, name, (i,),
                    word(n, (sigma(i), sigma(i + 1), sigma(i))),
                    word(n, (sigma(i + 1), sigma(i), sigma(i + 1))),
                )
        elif family == 2:
            for i, j in itertools.combinations(range(1, n), 2):
                if j - i >= 2:
                    yield RelationInstance(
                        2, name, (i, j),
                        word(n, (sigma(i), sigma(j))),
                        word(n, (sigma(j), sigma(i))),
                    )
        elif family == 3:
            for i, j in itertools.combinations(range(1, n), 2):
                if j - i >= 2:
                    yield RelationInstance(
                        3, name, (i, j),
                        word(n, (tau(i), tau(j))),
                        word(n, (tau(j), tau(i))),
                    )
        elif family == 4:
            for i, j in itertools.permutations(range(1, n), 2):
                if abs(i - j) >= 2:
                    yield RelationInstance(
                        4, name, (i, j),
                        word(n, (tau(i), sigma(j))),
                        word(n, (sigma(j), tau(i))),
                    )
        elif family == 5:
            for i in range(1, n):
                yield RelationInstance(
                    5, name, (i,),
                    word(n, (tau(i), sigma(i))),
                    word(n, (sigma(i), tau(i))),
                )
        elif family == 6:
            for i in range(1, n - 1):
                yield RelationInstance(
                    6, name, (i,),
                    word(n, (sigma(i), sigma(i + 1), tau(i))),
                    word(n, (tau(i + 1), sigma(i), sigma(i + 1))),
                )
        elif family == 7:
            for i in range(1, n - 1):
                yield RelationInstance(
                    7, name, (i,),
                    word(n, (sigma(i + 1), sigma(i), tau(i + 1))),
                    word(n, (tau(i), sigma(i + 1), sigma(i))),
                )
        else:
            raise ValueError(f"unknown relation family {family}")
