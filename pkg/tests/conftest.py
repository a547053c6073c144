"""Shared test helpers: seeded random word generators."""

from __future__ import annotations

import random

from smbraid.words import BraidWord, SMWord, braid_letters, tau, word


def random_braid_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    length = rng.randint(0, max_len)
    alphabet = braid_letters(n)
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(length)))


def random_sm_word(rng: random.Random, n: int, max_len: int) -> SMWord:
    length = rng.randint(0, max_len)
    alphabet = list(braid_letters(n)) + [tau(i) for i in range(1, n)]
    return word(n, tuple(rng.choice(alphabet) for _ in range(length)))
