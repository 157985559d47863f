"""Seeded random morphism builders shared across test modules.

Everything here takes an explicit random.Random so failures reproduce
from the seed alone.
"""

from __future__ import annotations

import random

from atlq import Morphism, crossing, gen_d, gen_id, gen_u


def random_single_diagram(rng: random.Random, n: int, length: int) -> Morphism:
    """A one-term morphism: a product of circle-free generators on n strands.

    Uses only U_i and D^{+-1}, whose products stay single diagrams (up to
    a scalar from inessential circles), so the result is suitable for
    factorize round-trips.  Skips any step that would create an essential
    circle by rebuilding until the term survives the quotient.
    """
    out = gen_id(n)
    steps = rng.randrange(length + 1)
    for _ in range(steps):
        if n >= 2 and rng.random() < 0.6:
            letter = gen_u(n, rng.randrange(n))
        else:
            letter = gen_d(n, rng.choice((1, -1)))
        nxt = out * letter
        if not nxt.is_zero():
            out = nxt
    return out


def random_word(rng: random.Random, n: int, length: int) -> list[Morphism]:
    """A list of generator letters (possibly multi-term crossings) on n strands."""
    word = []
    for _ in range(rng.randrange(1, length + 1)):
        kind = rng.random()
        if n >= 2 and kind < 0.45:
            word.append(gen_u(n, rng.randrange(n)))
        elif n >= 2 and kind < 0.6:
            word.append(crossing(n, rng.randrange(n)))
        else:
            word.append(gen_d(n, rng.choice((1, -1))))
    return word


def compose_word(word: list[Morphism], n: int) -> Morphism:
    out = gen_id(n)
    for letter in word:
        out = out * letter
    return out
