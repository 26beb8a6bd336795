"""Shared builders for the test suite."""

from __future__ import annotations

import random

from trielang import Alphabet, Lang, Word, make


def even_odd() -> tuple[Lang, Lang]:
    """The even/odd length pair, tied by hand."""
    even = None
    odd = make(False, lambda _a: even)
    even = make(True, lambda _a: odd)
    return even, odd


def flagged(alphabet: Alphabet) -> tuple:
    """The doubled-alphabet letters, in a fixed order."""
    return tuple((a, flag) for a in alphabet for flag in (True, False))


def random_word_set(rng: random.Random, alphabet: Alphabet, max_len: int,
                    max_size: int) -> frozenset[Word]:
    symbols = tuple(alphabet)
    out = set()
    for _ in range(rng.randrange(max_size + 1)):
        length = rng.randrange(max_len + 1)
        out.add(tuple(rng.choice(symbols) for _ in range(length)))
    return frozenset(out)


def set_pred(words: frozenset[Word]):
    return lambda w: tuple(w) in words


class CountingPred:
    """A membership predicate that records how often it is consulted."""

    def __init__(self, pred):
        self.pred = pred
        self.calls = 0

    def __call__(self, word):
        self.calls += 1
        return self.pred(word)
